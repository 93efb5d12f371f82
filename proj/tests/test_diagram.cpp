#include <doctest.h>

#include <algorithm>
#include <set>

#include "helpers.hpp"

using namespace octa;
using namespace testing_support;

namespace {

ErrorKind parse_error_kind(const std::string& pd) {
    try {
        parse_pd(pd);
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("parse_pd accepted " << pd);
    return ErrorKind::Config;
}

std::vector<int> signs_in_order(const Diagram& d, const UnderPassOrder& o) {
    std::vector<int> out;
    for (int c : o.crossings) out.push_back(d.crossings[c].sign);
    return out;
}

}  // namespace

TEST_CASE("figure-eight diagram counts") {
    Diagram d = parse_pd(kFig8Pd);
    CHECK(d.n() == 4);
    CHECK(d.segments.size() == 8);
    CHECK(d.regions.size() == 6);
    CHECK(d.writhe == 0);
    CHECK_FALSE(d.has_kink());
    CHECK(d.arcs.size() == 4);
    CHECK(to_pd(d) == kFig8Pd);
}

TEST_CASE("trefoil with kink") {
    Diagram d = parse_pd(kTrefoilPd);
    CHECK(d.n() == 4);
    CHECK(d.regions.size() == 6);
    CHECK(d.writhe == 2);
    CHECK(d.has_kink());
    auto o = under_pass_order(d);
    CHECK(signs_in_order(d, o) == std::vector<int>{1, 1, -1, 1});
    CHECK(w_frame(d, 2).kink);
    CHECK_FALSE(w_frame(d, 0).kink);
}

TEST_CASE("single kink") {
    Diagram d = parse_pd("X[1,2,2,1]");
    CHECK(d.n() == 1);
    CHECK(d.segments.size() == 2);
    CHECK(d.regions.size() == 3);
    CHECK(d.has_kink());
    CHECK(std::abs(d.writhe) == 1);
}

TEST_CASE("whitespace and trailing separators") {
    Diagram d = parse_pd(" X[5, 1,6,8] ; X[7,2,8,3];X[1,5,2,4];\nX[3,6,4,7];");
    CHECK(to_pd(d) == kFig8Pd);
}

TEST_CASE("malformed PD codes") {
    CHECK(parse_error_kind("") == ErrorKind::Parse);
    CHECK(parse_error_kind("X[1,2,3]") == ErrorKind::Parse);
    CHECK(parse_error_kind("Y[1,2,3,4]") == ErrorKind::Parse);
    CHECK(parse_error_kind("X[1,2,3,4]") == ErrorKind::Parse);
    CHECK(parse_error_kind("X[5,1,6,8];;X[7,2,8,3];X[1,5,2,4];X[3,6,4,7]") == ErrorKind::Parse);
    CHECK(parse_error_kind("X[5,1,6,8];X[7,2,8,3];X[1,5,2,4];X[3,6,4,9]") == ErrorKind::Parse);
    CHECK(parse_error_kind("X[5,1,6,8];X[7,2,8,3];X[1,5,2,4];X[3,6,4,6]") == ErrorKind::Parse);
    // under-strand labels must be consecutive
    CHECK(parse_error_kind("X[1,5,3,4];X[3,1,4,8];X[5,6,6,7];X[7,3,8,2]") == ErrorKind::Parse);
}

TEST_CASE("links and disconnected codes are rejected") {
    CHECK(parse_error_kind("X[4,1,3,2];X[2,3,1,4]") == ErrorKind::Topology);
    CHECK(parse_error_kind("X[1,2,2,1];X[3,4,4,3]") == ErrorKind::Topology);
}

TEST_CASE("z-frame is the PD tuple") {
    Diagram d = parse_pd(kFig8Pd);
    for (int c = 0; c < d.n(); ++c) CHECK(z_frame(d, c).seg == d.crossings[c].seg);
}

TEST_CASE("crossing signs from the over-strand direction") {
    Diagram d = parse_pd(kFig8Pd);
    std::vector<int> signs;
    for (const auto& x : d.crossings) signs.push_back(x.sign);
    CHECK(signs == std::vector<int>{1, -1, 1, -1});
    for (const auto& x : d.crossings) {
        CHECK(x.over_in == (x.sign > 0 ? 3 : 1));
        CHECK(x.over_out == (x.sign > 0 ? 1 : 3));
    }
}

TEST_CASE("rotated start gives a cyclic shift") {
    Diagram d = parse_pd(kFig8Pd);
    auto base = under_pass_order(d);
    REQUIRE(base.crossings.size() == 4);
    for (int k = 0; k < 4; ++k) {
        auto o = under_pass_order(d, base.crossings[k]);
        for (int i = 0; i < 4; ++i) CHECK(o.crossings[i] == base.crossings[(i + k) % 4]);
    }
    CHECK_THROWS_AS(under_pass_order(d, 4), Error);
}

TEST_CASE("regions, corners and sides on random diagrams") {
    for (const Diagram& d : random_diagrams(100, 11)) {
        const int n = d.n();
        CHECK(static_cast<int>(d.regions.size()) == n + 2);
        std::size_t corners = 0, sides = 0;
        for (const Region& r : d.regions) {
            corners += r.corners.size();
            sides += r.sides.size();
            CHECK(r.corners.size() == r.sides.size());
        }
        CHECK(corners == 4 * static_cast<std::size_t>(n));
        CHECK(sides == 2 * d.segments.size());
        int writhe = 0;
        for (const auto& x : d.crossings) writhe += x.sign;
        CHECK(writhe == d.writhe);
        CHECK(parse_pd(to_pd(d)).writhe == d.writhe);
        for (const Segment& s : d.segments) CHECK(s.left_region != s.right_region);
        // every segment runs along the under-pass arcs exactly once
        std::multiset<int> seen;
        for (const auto& arc : d.arcs) seen.insert(arc.begin(), arc.end());
        CHECK(seen.size() == d.segments.size());
        CHECK(std::set<int>(seen.begin(), seen.end()).size() == d.segments.size());
    }
}

TEST_CASE("w-frame corners match the region table") {
    for (const Diagram& d : random_diagrams(30, 12)) {
        for (int c = 0; c < d.n(); ++c) {
            WFrame f = w_frame(d, c);
            for (int k = 0; k < 4; ++k) CHECK(f.region[k] == d.corner_region[c][k]);
            CHECK_FALSE(f.kink);
        }
    }
}

TEST_CASE("segment frames") {
    for (const Diagram& d : random_diagrams(30, 13)) {
        for (const Segment& s : d.segments) {
            SegmentFrame f = segment_frame(d, s.id);
            CHECK(f.tail_crossing == s.tail.crossing);
            CHECK(f.head_crossing == s.head.crossing);
            char expect = s.tail_over ? (s.head_over ? 'c' : 'a') : (s.head_over ? 'b' : 'd');
            CHECK(case_letter(f.kase) == expect);
            const auto& t = d.crossings[s.tail.crossing].seg;
            const auto& h = d.crossings[s.head.crossing].seg;
            CHECK(f.a == t[(s.tail.slot + 1) % 4]);
            CHECK(f.b == t[(s.tail.slot + 3) % 4]);
            CHECK(f.e == h[(s.head.slot + 1) % 4]);
            CHECK(f.d == h[(s.head.slot + 3) % 4]);
        }
    }
}
