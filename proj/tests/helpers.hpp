#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "octa/io.hpp"

namespace testing_support {

using octa::cx;

inline const double kSqrt3 = std::sqrt(3.0);
inline const double kPi = 3.14159265358979323846;

inline const char* kFig8Pd = "X[5,1,6,8];X[7,2,8,3];X[1,5,2,4];X[3,6,4,7]";
inline const char* kTrefoilPd = "X[1,5,2,4];X[3,1,4,8];X[5,6,6,7];X[7,3,8,2]";

// segment variables written in closed form
inline octa::Assignment fig8_solution() {
    const cx i(0, 1);
    const double s = kSqrt3;
    octa::Assignment a;
    a.mode = octa::Mode::Z;
    a.values = {1.0 + i,           i * (1.0 + s), (-1.0 + i * s) / (-1.0 + s), 2.0 * i,
                -1.0 + i,          i,             (1.0 + i * s) / (-1.0 + s),  -2.0 * i / (-1.0 + s)};
    return a;
}

// the region variables (5,3,7,2,1,8) as drawn, attached to library region ids
inline octa::Assignment trefoil_solution() {
    const std::vector<double> drawn = {5, 3, 7, 2, 1, 8};
    const std::vector<int> drawn_index_of_region = {0, 3, 4, 2, 1, 5};
    octa::Assignment a;
    a.mode = octa::Mode::W;
    for (int k : drawn_index_of_region) a.values.push_back(drawn[k]);
    return a;
}

// 2 Cl2(pi/3), the regular ideal octahedron volume split into two tetrahedra
inline double fig8_volume_reference() {
    // Cl2(t) = t - t log t - int_0^t log(2 sin(u/2) / u) du, smooth integrand, Simpson
    const double t = kPi / 3;
    const int n = 4000;
    const double h = t / n;
    auto f = [](double u) { return u == 0 ? 0.0 : std::log(2 * std::sin(u / 2) / u); };
    double acc = f(0) + f(t);
    for (int k = 1; k < n; ++k) acc += (k % 2 ? 4 : 2) * f(k * h);
    double cl2 = t - t * std::log(t) - acc * h / 3;
    return 2 * cl2;
}

inline constexpr double kFig8VolumeMp = 2.029883212819307250042405108549040571883;

inline double cdist(cx a, cx b) { return std::abs(a - b); }

// PD code of the closure of a braid word on `strands` strands, generators +-1..+-(strands-1);
// empty when the closure is not a knot
inline std::string braid_closure_pd(int strands, const std::vector<int>& word) {
    int next_id = strands;
    std::vector<int> pos(strands);
    std::iota(pos.begin(), pos.end(), 0);
    struct X {
        std::array<int, 4> slot;
        int in_under, out_under, in_over, out_over;
    };
    std::vector<X> xs;
    for (int g : word) {
        int k = std::abs(g) - 1;
        int p = pos[k], q = pos[k + 1];
        int out_left = next_id++, out_right = next_id++;
        if (g > 0)  // left strand over
            xs.push_back({{q, out_right, out_left, p}, q, out_left, p, out_right});
        else
            xs.push_back({{p, q, out_right, out_left}, p, out_right, q, out_left});
        pos[k] = out_left;
        pos[k + 1] = out_right;
    }
    std::map<int, int> closes;
    for (int j = 0; j < strands; ++j) closes[pos[j]] = j;
    auto resolve = [&](int id) {
        auto it = closes.find(id);
        return it == closes.end() ? id : it->second;
    };
    std::map<int, int> next;
    for (const X& x : xs) {
        next[resolve(x.in_under)] = resolve(x.out_under);
        next[resolve(x.in_over)] = resolve(x.out_over);
    }
    if (next.size() != 2 * xs.size()) return {};
    std::map<int, int> label;
    int cur = next.begin()->first;
    for (std::size_t k = 0; k < next.size(); ++k) {
        if (label.count(cur)) return {};
        label[cur] = static_cast<int>(k) + 1;
        cur = next.at(cur);
    }
    std::string pd;
    for (const X& x : xs) {
        if (!pd.empty()) pd += ";";
        pd += "X[";
        for (int s = 0; s < 4; ++s) pd += (s ? "," : "") + std::to_string(label.at(resolve(x.slot[s])));
        pd += "]";
    }
    return pd;
}

// random knot diagrams without kinks, 3 or 4 strands, 5 to 8 crossings
inline std::vector<octa::Diagram> random_diagrams(int count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<octa::Diagram> out;
    while (static_cast<int>(out.size()) < count) {
        int strands = std::uniform_int_distribution<int>(3, 4)(rng);
        int len = std::uniform_int_distribution<int>(5, 8)(rng);
        std::vector<int> word;
        for (int k = 0; k < len; ++k) {
            int g = std::uniform_int_distribution<int>(1, strands - 1)(rng);
            word.push_back(rng() % 2 ? g : -g);
        }
        std::string pd = braid_closure_pd(strands, word);
        if (pd.empty()) continue;
        try {
            octa::Diagram d = octa::parse_pd(pd);
            if (!d.has_kink()) out.push_back(d);
        } catch (const octa::Error&) {
        }
    }
    return out;
}

struct SolvedPoint {
    octa::Diagram diagram;
    octa::Assignment assignment;
};

// solutions of random diagrams in the given mode, at most `per_diagram` from each
inline std::vector<SolvedPoint> random_solutions(octa::Mode mode, int wanted, std::uint64_t seed,
                                                 int per_diagram = 4) {
    std::vector<SolvedPoint> out;
    auto diagrams = random_diagrams(200, seed);
    octa::SolverConfig cfg;
    cfg.restarts = 30;
    for (std::size_t k = 0; k < diagrams.size() && static_cast<int>(out.size()) < wanted; ++k) {
        cfg.seed = seed + k;
        auto set = octa::search_solutions(octa::build_system(diagrams[k], mode), cfg);
        int taken = 0;
        for (const auto& s : set.solutions) {
            if (taken == per_diagram) break;
            out.push_back({diagrams[k], s.assignment});
            ++taken;
        }
    }
    return out;
}

// solver output on the two worked diagrams plus random braid closures, both modes
inline std::vector<SolvedPoint> solution_pool(std::uint64_t seed) {
    std::vector<SolvedPoint> out;
    auto add = [&](const char* pd, octa::Mode m, int restarts) {
        octa::Diagram d = octa::parse_pd(pd);
        octa::SolverConfig cfg;
        cfg.seed = seed;
        cfg.restarts = restarts;
        for (const auto& s : octa::search_solutions(octa::build_system(d, m), cfg).solutions)
            out.push_back({d, s.assignment});
    };
    add(kFig8Pd, octa::Mode::Z, 40);
    add(kFig8Pd, octa::Mode::W, 40);
    add(kTrefoilPd, octa::Mode::W, 40);
    for (octa::Mode m : {octa::Mode::Z, octa::Mode::W})
        for (auto& p : random_solutions(m, 40, seed + (m == octa::Mode::Z ? 101 : 202))) out.push_back(std::move(p));
    return out;
}

inline octa::Assignment random_assignment(octa::Mode mode, int n, std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    octa::Assignment a;
    a.mode = mode;
    for (int k = 0; k < n; ++k) a.values.emplace_back(g(rng), g(rng));
    return a;
}

inline octa::Assignment scaled(const octa::Assignment& a, cx t) {
    octa::Assignment b = a;
    for (cx& v : b.values) v *= t;
    return b;
}

}  // namespace testing_support
