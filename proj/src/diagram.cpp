#include "octa/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <regex>
#include <sstream>

namespace octa {

const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::Parse: return "parse";
        case ErrorKind::Topology: return "topology";
        case ErrorKind::Degenerate: return "degenerate";
        case ErrorKind::NonDegeneracy: return "nondegeneracy";
        case ErrorKind::Verification: return "verification";
        case ErrorKind::Config: return "config";
        case ErrorKind::Domain: return "domain";
    }
    return "unknown";
}

namespace {

struct Dsu {
    std::vector<int> p;
    explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    void join(int a, int b) { p[find(a)] = find(b); }
    int count() {
        int c = 0;
        for (int i = 0; i < static_cast<int>(p.size()); ++i) c += find(i) == i;
        return c;
    }
};

std::vector<std::array<int, 4>> tokenize(std::string_view text) {
    static const std::regex tok(R"(^\s*X\[\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\]\s*$)");
    std::vector<std::array<int, 4>> out;
    std::string s(text);
    std::size_t pos = 0;
    while (pos <= s.size()) {
        auto next = s.find(';', pos);
        if (next == std::string::npos) next = s.size();
        std::string piece = s.substr(pos, next - pos);
        bool blank = std::all_of(piece.begin(), piece.end(), [](unsigned char ch) { return std::isspace(ch); });
        if (!blank) {
            std::smatch m;
            if (!std::regex_match(piece, m, tok))
                throw Error(ErrorKind::Parse, "malformed PD token: '" + piece + "'");
            std::array<int, 4> x{};
            for (int k = 0; k < 4; ++k) {
                const std::string digits = m[k + 1].str();
                if (digits.size() > 9) throw Error(ErrorKind::Parse, "PD label out of range: " + digits);
                x[k] = std::stoi(digits);
            }
            out.push_back(x);
        } else if (next != s.size()) {
            throw Error(ErrorKind::Parse, "empty PD token");
        }
        pos = next + 1;
    }
    if (out.empty()) throw Error(ErrorKind::Parse, "empty PD code");
    return out;
}

}  // namespace

bool Diagram::has_kink() const {
    return std::any_of(segments.begin(), segments.end(),
                       [](const Segment& s) { return s.tail.crossing == s.head.crossing; });
}

Diagram parse_pd(std::string_view text) {
    auto quads = tokenize(text);
    const int n = static_cast<int>(quads.size());
    const int m = 2 * n;

    std::vector<std::vector<End>> occ(m + 1);
    for (int c = 0; c < n; ++c)
        for (int s = 0; s < 4; ++s) {
            int l = quads[c][s];
            if (l < 1 || l > m)
                throw Error(ErrorKind::Parse, "label " + std::to_string(l) + " outside 1.." + std::to_string(m));
            occ[l].push_back({c, s});
        }
    for (int l = 1; l <= m; ++l)
        if (occ[l].size() != 2)
            throw Error(ErrorKind::Parse, "label " + std::to_string(l) + " appears " +
                                              std::to_string(occ[l].size()) + " times (expected 2)");

    // strands: under pair and over pair at each crossing
    Dsu strands(m + 1), graph(n);
    for (int c = 0; c < n; ++c) {
        strands.join(quads[c][0], quads[c][2]);
        strands.join(quads[c][1], quads[c][3]);
    }
    for (int l = 1; l <= m; ++l) graph.join(occ[l][0].crossing, occ[l][1].crossing);
    if (strands.count() - 1 > 1) {
        if (graph.count() > 1) throw Error(ErrorKind::Topology, "disconnected PD code");
        throw Error(ErrorKind::Topology, "multi-component PD code (links are not supported)");
    }

    auto next = [m](int l) { return l % m + 1; };
    Diagram d;
    d.crossings.resize(n);
    for (int c = 0; c < n; ++c) {
        Crossing& x = d.crossings[c];
        x.seg = quads[c];
        if (next(x.seg[0]) != x.seg[2])
            throw Error(ErrorKind::Parse, "crossing " + std::to_string(c + 1) +
                                              ": under-strand labels are not consecutive");
        bool pos = next(x.seg[3]) == x.seg[1];
        bool neg = next(x.seg[1]) == x.seg[3];
        if (pos && neg) {
            pos = x.seg[3] == x.seg[2];
            neg = !pos;
        }
        if (!pos && !neg)
            throw Error(ErrorKind::Parse, "crossing " + std::to_string(c + 1) +
                                              ": over-strand labels are not consecutive");
        x.sign = pos ? 1 : -1;
        x.over_in = pos ? 3 : 1;
        x.over_out = pos ? 1 : 3;
        d.writhe += x.sign;
    }

    d.segments.resize(m);
    for (int l = 1; l <= m; ++l) d.segments[l - 1].id = l;
    for (int c = 0; c < n; ++c) {
        const Crossing& x = d.crossings[c];
        auto set_tail = [&](int slot, bool over) {
            Segment& s = d.segments[x.seg[slot] - 1];
            if (s.tail.crossing >= 0) throw Error(ErrorKind::Parse, "segment " + std::to_string(s.id) + " leaves two crossings");
            s.tail = {c, slot};
            s.tail_over = over;
        };
        auto set_head = [&](int slot, bool over) {
            Segment& s = d.segments[x.seg[slot] - 1];
            if (s.head.crossing >= 0) throw Error(ErrorKind::Parse, "segment " + std::to_string(s.id) + " enters two crossings");
            s.head = {c, slot};
            s.head_over = over;
        };
        set_head(0, false);
        set_tail(2, false);
        set_head(x.over_in, true);
        set_tail(x.over_out, true);
    }

    // faces: from dart (c,s) walk the segment to its other end (c',s'), record
    // the corner (c', s'-1) and continue from slot s'-1
    auto other_end = [&](int c, int s) {
        const auto& o = occ[quads[c][s]];
        return (o[0].crossing == c && o[0].slot == s) ? o[1] : o[0];
    };
    std::vector<std::array<bool, 4>> seen(n, {false, false, false, false});
    d.corner_region.assign(n, {0, 0, 0, 0});
    for (int c = 0; c < n; ++c)
        for (int s = 0; s < 4; ++s) {
            if (seen[c][s]) continue;
            Region r;
            r.id = static_cast<int>(d.regions.size()) + 1;
            int cc = c, ss = s;
            for (int guard = 0; !seen[cc][ss]; ++guard) {
                if (guard > 4 * n) throw Error(ErrorKind::Topology, "face traversal did not close");
                seen[cc][ss] = true;
                int l = quads[cc][ss];
                End e = other_end(cc, ss);
                const Segment& sg = d.segments[l - 1];
                bool along = sg.head.crossing == e.crossing && sg.head.slot == e.slot;
                r.sides.push_back({l, along ? Side::Left : Side::Right});
                int corner = (e.slot + 3) % 4;
                r.corners.push_back({e.crossing, corner});
                cc = e.crossing;
                ss = corner;
            }
            if (cc != c || ss != s) throw Error(ErrorKind::Topology, "face traversal did not return to its start");
            d.regions.push_back(std::move(r));
        }
    if (static_cast<int>(d.regions.size()) != n + 2)
        throw Error(ErrorKind::Topology, "non-planar PD code: " + std::to_string(d.regions.size()) +
                                             " faces for " + std::to_string(n) + " crossings");
    for (const Region& r : d.regions) {
        for (const Corner& k : r.corners) d.corner_region[k.crossing][k.pos] = r.id;
        for (auto [l, side] : r.sides) {
            Segment& sg = d.segments[l - 1];
            (side == Side::Left ? sg.left_region : sg.right_region) = r.id;
        }
    }

    // default c_1: first under-pass reached from segment 1
    int l = 1;
    for (int k = 0; k < m; ++k) {
        const Segment& sg = d.segments[l - 1];
        if (!sg.head_over) {
            d.default_start = sg.head.crossing;
            break;
        }
        l = next(l);
    }

    d.arc_of_segment.assign(m, 0);
    {
        int c = d.default_start;
        for (int i = 0; i < n; ++i) {
            std::vector<int> arc;
            int seg = d.crossings[c].seg[2];
            while (true) {
                arc.push_back(seg);
                const Segment& sg = d.segments[seg - 1];
                if (!sg.head_over) {
                    c = sg.head.crossing;
                    break;
                }
                seg = next(seg);
            }
            for (int s : arc) d.arc_of_segment[s - 1] = static_cast<int>(d.arcs.size()) + 1;
            d.arcs.push_back(std::move(arc));
        }
        if (c != d.default_start) throw Error(ErrorKind::Topology, "under-pass traversal did not close");
    }
    return d;
}

std::string to_pd(const Diagram& d) {
    std::ostringstream os;
    for (std::size_t c = 0; c < d.crossings.size(); ++c) {
        const auto& x = d.crossings[c].seg;
        if (c) os << ';';
        os << "X[" << x[0] << ',' << x[1] << ',' << x[2] << ',' << x[3] << ']';
    }
    return os.str();
}

UnderPassOrder under_pass_order(const Diagram& d, int start) {
    const int n = d.n();
    if (start < 0) start = d.default_start;
    if (start >= n) throw Error(ErrorKind::Config, "base crossing " + std::to_string(start + 1) + " out of range");
    UnderPassOrder ord;
    int c = start;
    for (int i = 0; i < n; ++i) {
        ord.crossings.push_back(c);
        int arc = d.arc_of_segment[d.crossings[c].seg[2] - 1];
        ord.arcs.push_back(arc);
        ord.over_arc.push_back(d.arc_of_segment[d.crossings[c].seg[1] - 1]);
        int last = d.arcs[arc - 1].back();
        c = d.segment(last).head.crossing;
    }
    std::vector<int> sorted = ord.crossings;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < n; ++i)
        if (sorted[i] != i) throw Error(ErrorKind::Topology, "under-pass order is not a permutation");
    return ord;
}

char case_letter(SegmentCase c) { return "abcd"[static_cast<int>(c)]; }

ZFrame z_frame(const Diagram& d, int crossing) { return {d.crossings.at(crossing).seg}; }

WFrame w_frame(const Diagram& d, int crossing) {
    WFrame f;
    f.region = d.corner_region.at(crossing);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) f.kink |= f.region[i] == f.region[j];
    return f;
}

SegmentFrame segment_frame(const Diagram& d, int segment_id) {
    const Segment& s = d.segment(segment_id);
    const auto& t = d.crossings[s.tail.crossing].seg;
    const auto& h = d.crossings[s.head.crossing].seg;
    SegmentFrame f;
    f.segment = segment_id;
    f.tail_crossing = s.tail.crossing;
    f.head_crossing = s.head.crossing;
    f.a = t[(s.tail.slot + 1) % 4];
    f.b = t[(s.tail.slot + 3) % 4];
    f.e = h[(s.head.slot + 1) % 4];
    f.d = h[(s.head.slot + 3) % 4];
    if (s.tail_over)
        f.kase = s.head_over ? SegmentCase::C : SegmentCase::A;
    else
        f.kase = s.head_over ? SegmentCase::B : SegmentCase::D;
    return f;
}

std::vector<ZFrame> z_frames(const Diagram& d) {
    std::vector<ZFrame> out;
    for (int c = 0; c < d.n(); ++c) out.push_back(z_frame(d, c));
    return out;
}

std::vector<WFrame> w_frames(const Diagram& d) {
    std::vector<WFrame> out;
    for (int c = 0; c < d.n(); ++c) out.push_back(w_frame(d, c));
    return out;
}

std::vector<SegmentFrame> segment_frames(const Diagram& d) {
    std::vector<SegmentFrame> out;
    for (const Segment& s : d.segments) out.push_back(segment_frame(d, s.id));
    return out;
}

}  // namespace octa
