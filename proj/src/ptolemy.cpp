#include "octa/ptolemy.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

#include "octa/special.hpp"

namespace octa {

namespace {

void require_nondegenerate(const Diagram& d, const Assignment& a) {
    if (auto v = check_nondegenerate(d, a)) throw Error(ErrorKind::NonDegeneracy, *v);
}

std::array<cx, 4> frame_values(const Diagram& d, const Assignment& a, int crossing) {
    std::array<int, 4> ids = a.mode == Mode::Z ? d.crossings.at(crossing).seg : d.corner_region.at(crossing);
    return {a[ids[0]], a[ids[1]], a[ids[2]], a[ids[3]]};
}

constexpr double kModel[6][3] = {
    {0, 0, 1}, {0, 0, -1}, {1, 0, 0.2}, {0, 1, -0.2}, {-1, 0, 0.2}, {0, -1, -0.2},
};

bool positive(const std::array<int, 4>& t) {
    double m[3][3];
    for (int r = 0; r < 3; ++r)
        for (int k = 0; k < 3; ++k) m[r][k] = kModel[t[r + 1]][k] - kModel[t[0]][k];
    double det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                 m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    return det > 0;
}

}  // namespace

cx sigma_at_crossing(const ZFrame& f, const Assignment& a) { return a[f.seg[0]] / a[f.seg[2]]; }

cx sigma_at_crossing(const WFrame& f, const Assignment& a) {
    return (a[f.region[0]] - a[f.region[3]]) / (a[f.region[1]] - a[f.region[2]]);
}

cx sigma_at_crossing(const Diagram& d, const Assignment& a, int crossing) {
    return a.mode == Mode::Z ? sigma_at_crossing(z_frame(d, crossing), a) : sigma_at_crossing(w_frame(d, crossing), a);
}

std::vector<cx> sigmas(const Diagram& d, const Assignment& a) {
    require_nondegenerate(d, a);
    std::vector<cx> out;
    for (int c = 0; c < d.n(); ++c) out.push_back(sigma_at_crossing(d, a, c));
    return out;
}

cx eta_at_crossing(const Diagram& d, const Assignment& a, int crossing) {
    auto [wa, wb, wc, wd] = frame_values(d, a, crossing);
    cx eta = wb * wd - wa * wc;
    return d.crossings[crossing].sign > 0 ? eta : -eta;
}

std::pair<cx, cx> scaling_relation(const Diagram& d, const Assignment& a, int segment_id) {
    const Segment& s = d.segment(segment_id);
    if (a.mode == Mode::Z) {
        SegmentFrame f = segment_frame(d, segment_id);
        const cx c = a[segment_id], b = a[f.b], e = a[f.e];
        cx lhs = s.tail_over ? 1.0 - b / c : 1.0 - c / b;
        cx rhs = s.head_over ? 1.0 - e / c : 1.0 - c / e;
        return {lhs, rhs};
    }
    cx gap = a[s.left_region] - a[s.right_region];
    cx xt = s.tail_over ? gap * gap : eta_at_crossing(d, a, s.tail.crossing);
    cx xh = s.head_over ? gap * gap : eta_at_crossing(d, a, s.head.crossing);
    return {1.0 / xt, 1.0 / xh};
}

ScalingParams scaling_parameters(const Diagram& d, const Assignment& a, int start) {
    require_nondegenerate(d, a);
    const int n = d.n();
    ScalingParams sp;
    sp.mode = a.mode;
    sp.root = under_pass_order(d, start).crossings.front();
    sp.square.assign(n, cx(0));
    std::vector<bool> known(n, false), tree(2 * n, false);
    std::vector<std::vector<int>> incident(n);
    for (const Segment& s : d.segments) {
        incident[s.tail.crossing].push_back(s.id);
        if (s.head.crossing != s.tail.crossing) incident[s.head.crossing].push_back(s.id);
    }
    for (auto& v : incident) std::sort(v.begin(), v.end());

    std::deque<int> queue{sp.root};
    known[sp.root] = true;
    sp.square[sp.root] = 1.0;
    while (!queue.empty()) {
        int c = queue.front();
        queue.pop_front();
        for (int id : incident[c]) {
            const Segment& s = d.segment(id);
            auto [lhs, rhs] = scaling_relation(d, a, id);
            int t = s.tail.crossing, h = s.head.crossing;
            if (!known[h]) {
                sp.square[h] = sp.square[t] * lhs / rhs;
                known[h] = true;
                tree[id - 1] = true;
                queue.push_back(h);
            } else if (!known[t]) {
                sp.square[t] = sp.square[h] * rhs / lhs;
                known[t] = true;
                tree[id - 1] = true;
                queue.push_back(t);
            }
        }
    }
    for (const Segment& s : d.segments) {
        if (tree[s.id - 1]) {
            sp.tree_segments.push_back(s.id);
            continue;
        }
        auto [lhs, rhs] = scaling_relation(d, a, s.id);
        cx left = sp.square[s.tail.crossing] * lhs, right = sp.square[s.head.crossing] * rhs;
        if (!(std::abs(left - right) <= 1e-8 * std::max(std::abs(left), std::abs(right))))
            throw Error(ErrorKind::Verification,
                        "scaling-parameter relation fails on segment " + std::to_string(s.id) +
                            " (relative gap " + std::to_string(std::abs(left - right) / std::abs(right)) + ")");
    }
    return sp;
}

std::array<cx, 24> short_edge_table(const Diagram& d, const Assignment& a, const ScalingParams& sp, int crossing) {
    require_nondegenerate(d, a);
    auto [A, B, C, D] = frame_values(d, a, crossing);
    const cx p2 = sp.square.at(crossing);
    std::array<cx, 24> t;
    const bool neg = d.crossings[crossing].sign < 0;
    if (a.mode == Mode::Z) {
        const cx s = C - A;
        t = {(A - D) / s,
             (B - A) / s,
             (C - B) / s,
             (D - C) / s,
             B / (p2 * A * (B - A)),
             D / (p2 * A * (A - D)),
             1.0 / (p2 * (D - A)),
             1.0 / (p2 * (A - B)),
             A * B / (p2 * (A - B)),
             B * C / (p2 * (B - C)),
             B * B / (p2 * (C - B)),
             B * B / (p2 * (B - A)),
             D * (C - B) / (C * (B - D)),
             B * (D - C) / (C * (B - D)),
             B * (A - D) / (A * (B - D)),
             D * (B - A) / (A * (B - D)),
             B / (p2 * C * (B - C)),
             D / (p2 * C * (C - D)),
             1.0 / (p2 * (D - C)),
             1.0 / (p2 * (C - B)),
             A * D / (p2 * (A - D)),
             C * D / (p2 * (D - C)),
             D * D / (p2 * (C - D)),
             D * D / (p2 * (D - A))};
        if (neg)
            for (int k = 0; k < 4; ++k) t[k] = -t[k];
    } else {
        const cx h = B * D - A * C;
        t = {D / (C - D),
             A / (A - B),
             B / (B - A),
             C / (D - C),
             h / (p2 * A * (A - D)),
             h / (p2 * D * (D - A)),
             (D - C) / (p2 * D),
             (B - A) / (p2 * A),
             p2 * (D - A) / (A * h),
             p2 * (B - C) / (B * h),
             p2 / (B * (B - A)),
             p2 / (A * (A - B)),
             B / (C - B),
             C / (B - C),
             D / (D - A),
             A / (A - D),
             h / (p2 * B * (B - C)),
             h / (p2 * C * (C - B)),
             (D - C) / (p2 * C),
             (B - A) / (p2 * B),
             p2 * (D - A) / (D * h),
             p2 * (B - C) / (C * h),
             p2 / (C * (C - D)),
             p2 / (D * (D - C))};
        if (neg)
            for (int k = 0; k < 24; ++k)
                if (k < 12 || k >= 16) t[k] = -t[k];
    }
    return t;
}

GraphParams graph_parameters(const Diagram& d, const Assignment& a) {
    if (a.mode != Mode::Z) throw Error(ErrorKind::Config, "graph G parameters are defined for segment variables");
    require_nondegenerate(d, a);
    GraphParams g;
    for (int c = 0; c < d.n(); ++c) {
        auto [A, B, C, D] = frame_values(d, a, c);
        cx inner = d.crossings[c].sign > 0 ? 1.0 / D - 1.0 / B : 1.0 / B - 1.0 / D;
        g.vertical.push_back(principal_sqrt((A - C) * inner));
    }
    for (const SegmentFrame& f : segment_frames(d)) {
        const cx za = a[f.a], zb = a[f.b], zc = a[f.segment], zd = a[f.d], ze = a[f.e];
        cx tail = (f.kase == SegmentCase::A || f.kase == SegmentCase::C) ? zc / (za - zb) : za / (za - zb);
        cx head = (f.kase == SegmentCase::A || f.kase == SegmentCase::D) ? zd / (zd - ze) : zc / (zd - ze);
        g.horizontal.push_back(tail - head);
        g.kase.push_back(f.kase);
    }
    return g;
}

std::array<Column, 6> decoration_columns(const Diagram& d, const Assignment& a, cx square, int crossing) {
    auto [A, B, C, D] = frame_values(d, a, crossing);
    const cx p = principal_sqrt(square);
    std::array<Column, 6> col;
    col[VInf] = {1.0, 0.0};
    if (a.mode == Mode::Z) {
        const cx s = C - A;
        const cx r = principal_sqrt(d.crossings[crossing].sign > 0 ? s : -s);
        const cx lambda = s * (1.0 / B - 1.0 / D);
        col[VA] = {p / r * A, p / r * s};
        col[VC] = {p / r * C, p / r * s};
        col[VB] = {p * r / s, p * r / B};
        col[VD] = {p * r / s, p * r / D};
        col[V0] = {0.0, -principal_sqrt(-lambda)};
    } else {
        const cx eta = B * D - A * C;
        const cx re = principal_sqrt(eta);
        col[VA] = {0.0, p};
        col[VC] = {p, p};
        col[VB] = {A / p, (A - B) / p};
        col[VD] = {D / p, (D - C) / p};
        col[V0] = {(A - D) / re, (A - B + C - D) / re};
    }
    return col;
}

cx ptolemy_coordinate(const Column& x, const Column& y) { return x[0] * y[1] - x[1] * y[0]; }

cx cross_ratio(const std::array<Column, 6>& c, const std::array<int, 4>& t) {
    const auto& [p, q, r, s] = t;
    return ptolemy_coordinate(c[p], c[s]) * ptolemy_coordinate(c[q], c[r]) /
           (ptolemy_coordinate(c[p], c[r]) * ptolemy_coordinate(c[q], c[s]));
}

const std::vector<std::array<int, 4>>& t4_tetrahedra() {
    static const std::vector<std::array<int, 4>> t = {
        {V0, VInf, VA, VB}, {V0, VInf, VB, VC}, {V0, VInf, VC, VD}, {V0, VInf, VD, VA}};
    return t;
}

const std::vector<std::array<int, 4>>& t5_tetrahedra() {
    static const std::vector<std::array<int, 4>> t = {
        {VInf, VA, VC, VB}, {VInf, VA, VD, VC}, {V0, VB, VC, VD}, {V0, VB, VD, VA}, {VA, VB, VD, VC}};
    return t;
}

std::array<int, 4> oriented_at_edge(const std::array<int, 4>& tet, int p, int q) {
    std::array<int, 4> out{p, q, -1, -1};
    int k = 2;
    for (int v : tet)
        if (v != p && v != q) out[k++] = v;
    if (!positive(out)) std::swap(out[2], out[3]);
    return out;
}

ConsistencyReport ptolemy_consistency_check(const Diagram& d, const Assignment& a, const ScalingParams& sp) {
    require_nondegenerate(d, a);
    ConsistencyReport rep;
    rep.sigma_product = 1.0;
    for (int c = 0; c < d.n(); ++c) {
        const std::string at = " at crossing " + std::to_string(c + 1);
        const cx sigma = sigma_at_crossing(d, a, c);
        rep.sigma_product *= sigma;
        auto col = decoration_columns(d, a, sp.square.at(c), c);
        cx ratio = ptolemy_coordinate(col[V0], col[VA]) / ptolemy_coordinate(col[V0], col[VC]);
        double err = std::min(std::abs(ratio - sigma), std::abs(ratio + sigma)) / std::abs(sigma);
        rep.max_hypotenuse_error = std::max(rep.max_hypotenuse_error, err);
        if (!(err < 1e-9)) {
            rep.ok = false;
            rep.failures.push_back("hypotenuse ratio differs from sigma" + at);
        }
        if (a.mode == Mode::W) {
            auto [A, B, C, D] = frame_values(d, a, c);
            const cx tau[4] = {(B - A) * (D - A) / (B * D - A * C), (A * C - B * D) / ((A - B) * (C - B)),
                               (B - C) * (D - C) / (B * D - A * C), (A * C - B * D) / ((A - D) * (C - D))};
            for (int k = 0; k < 4; ++k) {
                const int p = VA + k, q = VA + (k + 1) % 4;
                cx prod = 1.0;
                for (const auto& tet : t5_tetrahedra())
                    if (std::count(tet.begin(), tet.end(), p) && std::count(tet.begin(), tet.end(), q))
                        prod /= cross_ratio(col, oriented_at_edge(tet, p, q));
                double e = std::abs(prod - tau[k]) / std::max(1.0, std::abs(tau[k]));
                rep.max_tau_error = std::max(rep.max_tau_error, e);
                if (!(e < 1e-9)) {
                    rep.ok = false;
                    rep.failures.push_back(std::string("tau value at corner ") + "abcd"[k] + " not recovered" + at);
                }
            }
        }
    }
    double dist = std::min(std::abs(rep.sigma_product - 1.0), std::abs(rep.sigma_product + 1.0));
    if (!(dist < 1e-8)) {
        rep.ok = false;
        rep.failures.push_back("product of sigma values is not +-1");
    }
    return rep;
}

}  // namespace octa
