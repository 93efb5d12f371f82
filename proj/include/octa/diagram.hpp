#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "octa/types.hpp"

namespace octa {

// PD slots are counterclockwise from the incoming under-strand:
// 0 = under in, 2 = under out, 1 and 3 carry the over-strand.
struct End {
    int crossing = -1;
    int slot = -1;
};

struct Crossing {
    std::array<int, 4> seg{};  // segment ids in PD order
    int sign = 0;
    int over_in = -1;   // slot of the incoming over segment
    int over_out = -1;
};

struct Segment {
    int id = 0;
    End tail, head;
    bool tail_over = false;
    bool head_over = false;
    int left_region = 0;
    int right_region = 0;
};

enum class Side { Left, Right };

struct Corner {
    int crossing;
    int pos;  // corner between slots pos and pos+1
};

struct Region {
    int id = 0;
    std::vector<Corner> corners;
    std::vector<std::pair<int, Side>> sides;
};

struct Diagram {
    std::vector<Crossing> crossings;
    std::vector<Segment> segments;              // index id-1
    std::vector<Region> regions;                // index id-1
    std::vector<std::array<int, 4>> corner_region;  // [crossing][pos] -> region id
    std::vector<std::vector<int>> arcs;         // index id-1, segment ids along the orientation
    std::vector<int> arc_of_segment;            // index id-1
    int writhe = 0;
    int default_start = 0;

    int n() const { return static_cast<int>(crossings.size()); }
    bool has_kink() const;
    const Segment& segment(int id) const { return segments.at(id - 1); }
};

Diagram parse_pd(std::string_view text);
std::string to_pd(const Diagram& d);

struct UnderPassOrder {
    std::vector<int> crossings;  // c_1..c_n as crossing indices
    std::vector<int> arcs;       // a_i runs from c_i to c_{i+1}
    std::vector<int> over_arc;   // arc over-passing c_i
};

// start < 0 selects the default c_1
UnderPassOrder under_pass_order(const Diagram& d, int start = -1);

struct ZFrame {
    std::array<int, 4> seg{};  // positions a,b,c,d
};

struct WFrame {
    std::array<int, 4> region{};  // positions a,b,c,d
    bool kink = false;
};

enum class SegmentCase { A, B, C, D };

struct SegmentFrame {
    int segment = 0;
    int tail_crossing = -1;  // "left" octahedron
    int head_crossing = -1;  // "right" octahedron
    SegmentCase kase = SegmentCase::A;
    int a = 0, b = 0, d = 0, e = 0;  // a,d on the segment's left, b,e on its right
};

char case_letter(SegmentCase c);

ZFrame z_frame(const Diagram& d, int crossing);
WFrame w_frame(const Diagram& d, int crossing);
SegmentFrame segment_frame(const Diagram& d, int segment_id);

std::vector<ZFrame> z_frames(const Diagram& d);
std::vector<WFrame> w_frames(const Diagram& d);
std::vector<SegmentFrame> segment_frames(const Diagram& d);

}  // namespace octa
