#pragma once

#include <array>
#include <string>
#include <vector>

#include "octa/gluing.hpp"

namespace octa {

struct ScalingParams {
    Mode mode = Mode::Z;
    std::vector<cx> square;  // p_i^2 or q_i^2 per crossing index, 1 at c_1
    int root = 0;
    std::vector<int> tree_segments;
};

cx sigma_at_crossing(const ZFrame& f, const Assignment& a);
cx sigma_at_crossing(const WFrame& f, const Assignment& a);
cx sigma_at_crossing(const Diagram& d, const Assignment& a, int crossing);
std::vector<cx> sigmas(const Diagram& d, const Assignment& a);  // in PD crossing order

// w_b w_d - w_a w_c at a positive crossing, its negative at a negative one
cx eta_at_crossing(const Diagram& d, const Assignment& a, int crossing);

// the two sides of one segment relation: square(tail) * lhs = square(head) * rhs
std::pair<cx, cx> scaling_relation(const Diagram& d, const Assignment& a, int segment_id);

// breadth-first from start (c_1 by default)
ScalingParams scaling_parameters(const Diagram& d, const Assignment& a, int start = -1);

// labels a..x
std::array<cx, 24> short_edge_table(const Diagram& d, const Assignment& a, const ScalingParams& sp, int crossing);

struct GraphParams {
    std::vector<cx> vertical;          // per crossing
    std::vector<cx> horizontal;        // per segment id-1
    std::vector<SegmentCase> kase;     // per segment id-1
};

GraphParams graph_parameters(const Diagram& d, const Assignment& a);

// first columns of the decoration at v_inf, v_0, v_a, v_b, v_c, v_d
enum Vertex { VInf = 0, V0 = 1, VA = 2, VB = 3, VC = 4, VD = 5 };
using Column = std::array<cx, 2>;
std::array<Column, 6> decoration_columns(const Diagram& d, const Assignment& a, cx square, int crossing);

cx ptolemy_coordinate(const Column& x, const Column& y);
// [p,q,r,s] = (p-s)(q-r)/((p-r)(q-s)) from decoration columns
cx cross_ratio(const std::array<Column, 6>& cols, const std::array<int, 4>& t);

// tetrahedra of the octahedron subdivision, each positively ordered
const std::vector<std::array<int, 4>>& t4_tetrahedra();
const std::vector<std::array<int, 4>>& t5_tetrahedra();
// positively ordered (p, q, r, s) with p, q the given edge
std::array<int, 4> oriented_at_edge(const std::array<int, 4>& tet, int p, int q);

struct ConsistencyReport {
    bool ok = true;
    std::vector<std::string> failures;
    cx sigma_product;
    double max_hypotenuse_error = 0;
    double max_tau_error = 0;
};

ConsistencyReport ptolemy_consistency_check(const Diagram& d, const Assignment& a, const ScalingParams& sp);

}  // namespace octa
