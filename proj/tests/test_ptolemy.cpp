#include <doctest.h>

#include <random>
#include <set>

#include "helpers.hpp"

using namespace octa;
using namespace testing_support;

namespace {

// values for every variable, with the frame of `crossing` set to (1,2,3,4)
Assignment frame_1234(const Diagram& d, Mode mode, int crossing) {
    const int nv = mode == Mode::Z ? 2 * d.n() : d.n() + 2;
    Assignment a;
    a.mode = mode;
    for (int k = 0; k < nv; ++k) a.values.push_back(cx(7.3 + 1.9 * k, 0.4 * k + 0.1));
    std::array<int, 4> ids = mode == Mode::Z ? z_frame(d, crossing).seg : w_frame(d, crossing).region;
    for (int k = 0; k < 4; ++k) a.values[ids[k] - 1] = k + 1.0;
    REQUIRE_FALSE(check_nondegenerate(d, a).has_value());
    return a;
}

ScalingParams unit_squares(const Diagram& d, Mode mode) {
    ScalingParams sp;
    sp.mode = mode;
    sp.square.assign(d.n(), cx(1));
    return sp;
}

}  // namespace

TEST_CASE("sigma on the figure-eight is a ratio of consecutive segments") {
    Diagram f = parse_pd(kFig8Pd);
    Assignment z = fig8_solution();
    auto rep = compute_invariants(f, z);
    REQUIRE(rep.sigma.size() == 4);
    cx prod = 1;
    for (int i = 0; i < 4; ++i) {
        CHECK(cdist(rep.sigma[i], z.values[2 * i] / z.values[2 * i + 1]) < 1e-14);
        prod *= rep.sigma[i];
    }
    CHECK(cdist(prod, -1.0) < 1e-9);
}

TEST_CASE("sigma on the trefoil") {
    Diagram t = parse_pd(kTrefoilPd);
    auto rep = compute_invariants(t, trefoil_solution());
    std::vector<cx> expect = {-2.0, 1.0 / 3, 1.0, 1.5};
    for (int i = 0; i < 4; ++i) CHECK(cdist(rep.sigma[i], expect[i]) < 1e-14);
    auto sp = scaling_parameters(t, trefoil_solution());
    auto report = ptolemy_consistency_check(t, trefoil_solution(), sp);
    CHECK(report.ok);
    CHECK(cdist(report.sigma_product, -1.0) < 1e-12);
}

TEST_CASE("short edges, z-mode example") {
    Diagram f = parse_pd(kFig8Pd);
    const int c = 2;
    REQUIRE(f.crossings[c].sign > 0);
    Assignment a = frame_1234(f, Mode::Z, c);
    auto t = short_edge_table(f, a, unit_squares(f, Mode::Z), c);
    CHECK(cdist(t[1], 0.5) < 1e-15);
    CHECK(cdist(t[0], (1.0 - 4.0) / 2.0) < 1e-15);
}

TEST_CASE("short edges, w-mode example") {
    Diagram f = parse_pd(kFig8Pd);
    const int c = 2;
    Assignment a = frame_1234(f, Mode::W, c);
    auto t = short_edge_table(f, a, unit_squares(f, Mode::W), c);
    CHECK(cdist(t[0], -4.0) < 1e-15);
    CHECK(cdist(t[1], 1.0 / (1.0 - 2.0)) < 1e-15);
}

TEST_CASE("negative crossings flip the sign of the outer labels") {
    Diagram f = parse_pd(kFig8Pd);
    const int c = 1;
    REQUIRE(f.crossings[c].sign < 0);
    Assignment a = frame_1234(f, Mode::Z, c);
    auto t = short_edge_table(f, a, unit_squares(f, Mode::Z), c);
    CHECK(cdist(t[1], -0.5) < 1e-15);
    CHECK(cdist(t[4], 2.0 / (1.0 * (2.0 - 1.0))) < 1e-15);
}

TEST_CASE("vertical parameter") {
    Diagram f = parse_pd(kFig8Pd);
    Assignment a = frame_1234(f, Mode::Z, 2);
    auto g = graph_parameters(f, a);
    cx v = g.vertical[2];
    CHECK(cdist(v * v, 0.5) < 1e-15);
    CHECK(std::abs(std::abs(v) - std::sqrt(0.5)) < 1e-15);
    CHECK_THROWS_AS(graph_parameters(parse_pd(kTrefoilPd), trefoil_solution()), Error);
}

TEST_CASE("horizontal parameter of a both-over segment") {
    bool found = false;
    for (const Diagram& d : random_diagrams(50, 31)) {
        for (const Segment& s : d.segments) {
            SegmentFrame fr = segment_frame(d, s.id);
            if (fr.kase != SegmentCase::C) continue;
            std::set<int> ids = {fr.a, fr.b, s.id, fr.d, fr.e};
            if (ids.size() != 5) continue;
            Assignment a;
            a.mode = Mode::Z;
            for (int k = 0; k < 2 * d.n(); ++k) a.values.push_back(cx(10.0 + k, 1.0 + 0.3 * k));
            a.values[fr.a - 1] = 1;
            a.values[fr.b - 1] = 2;
            a.values[s.id - 1] = 3;
            a.values[fr.d - 1] = 4;
            a.values[fr.e - 1] = 5;
            if (check_nondegenerate(d, a)) continue;
            auto g = graph_parameters(d, a);
            CHECK(cdist(g.horizontal[s.id - 1], 0.0) < 1e-15);
            CHECK(g.kase[s.id - 1] == SegmentCase::C);
            found = true;
            break;
        }
        if (found) break;
    }
    CHECK(found);
}

TEST_CASE("consistency check at the golden points") {
    Diagram f = parse_pd(kFig8Pd);
    auto spf = scaling_parameters(f, fig8_solution());
    CHECK(spf.square[spf.root] == cx(1));
    CHECK(spf.tree_segments.size() == 3);
    auto rf = ptolemy_consistency_check(f, fig8_solution(), spf);
    CHECK(rf.ok);
    CHECK(cdist(rf.sigma_product, -1.0) < 1e-9);
    CHECK(rf.max_hypotenuse_error < 1e-9);

    Diagram t = parse_pd(kTrefoilPd);
    auto rt = ptolemy_consistency_check(t, trefoil_solution(), scaling_parameters(t, trefoil_solution()));
    CHECK(rt.ok);
    CHECK(rt.max_tau_error < 1e-9);
}

TEST_CASE("scaling parameters do not depend on the root beyond a constant") {
    for (auto [pd, a] : {std::pair{kFig8Pd, fig8_solution()}, std::pair{kTrefoilPd, trefoil_solution()}}) {
        Diagram d = parse_pd(pd);
        auto base = scaling_parameters(d, a);
        for (int c = 0; c < d.n(); ++c) {
            auto other = scaling_parameters(d, a, c);
            CHECK(other.root == c);
            cx ratio = other.square[0] / base.square[0];
            for (int k = 0; k < d.n(); ++k) CHECK(cdist(other.square[k], ratio * base.square[k]) < 1e-10 * std::abs(other.square[k]));
            CHECK(ptolemy_consistency_check(d, a, other).ok);
        }
    }
}

TEST_CASE("off the gluing variety the checks fail") {
    std::mt19937_64 rng(8);
    std::normal_distribution<double> g(0, 1e-2);
    for (auto [pd, base] : {std::pair{kFig8Pd, fig8_solution()}, std::pair{kTrefoilPd, trefoil_solution()}}) {
        Diagram d = parse_pd(pd);
        for (int trial = 0; trial < 20; ++trial) {
            Assignment a = base;
            for (cx& v : a.values) v *= cx(1 + g(rng), g(rng));
            try {
                auto sp = scaling_parameters(d, a);
                CHECK_FALSE(ptolemy_consistency_check(d, a, sp).ok);
            } catch (const Error& e) {
                CHECK(e.kind() == ErrorKind::Verification);
                CHECK(std::string(e.what()).find("segment") != std::string::npos);
            }
        }
    }
}

TEST_CASE("sigma is invariant under global scaling") {
    Diagram f = parse_pd(kFig8Pd);
    Assignment z = fig8_solution();
    auto s0 = sigmas(f, z);
    auto s1 = sigmas(f, scaled(z, cx(-0.7, 3.1)));
    for (std::size_t k = 0; k < s0.size(); ++k) CHECK(cdist(s0[k], s1[k]) < 1e-12);
}

TEST_CASE("decoration columns give nondegenerate tetrahedra") {
    Diagram t = parse_pd(kTrefoilPd);
    Assignment w = trefoil_solution();
    auto sp = scaling_parameters(t, w);
    for (int c = 0; c < t.n(); ++c) {
        if (w_frame(t, c).kink) continue;
        auto cols = decoration_columns(t, w, sp.square[c], c);
        for (const auto& tet : t5_tetrahedra()) {
            cx z = cross_ratio(cols, tet);
            CHECK(std::isfinite(std::abs(z)));
            CHECK(std::abs(z) > 0);
        }
        auto o = oriented_at_edge(t5_tetrahedra()[4], VB, VD);
        CHECK(o[0] == VB);
        CHECK(o[1] == VD);
    }
}
