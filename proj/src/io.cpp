#include "octa/io.hpp"

#include <cmath>
#include <cstdio>

namespace octa {

namespace {

void write(const json& j, std::string& out, int indent) {
    const std::string pad(indent, ' '), inner(indent + 2, ' ');
    switch (j.type()) {
        case json::value_t::number_float: {
            double x = j.get<double>();
            if (!std::isfinite(x)) {
                out += "null";
                break;
            }
            char buf[40];
            std::snprintf(buf, sizeof buf, "%.17g", x);
            std::string s(buf);
            if (s.find_first_of(".en") == std::string::npos) s += ".0";
            out += s;
            break;
        }
        case json::value_t::array: {
            if (j.empty()) {
                out += "[]";
                break;
            }
            bool flat = std::all_of(j.begin(), j.end(), [](const json& e) { return e.is_primitive(); });
            if (flat) {
                out += '[';
                for (std::size_t i = 0; i < j.size(); ++i) {
                    if (i) out += ", ";
                    write(j[i], out, indent);
                }
                out += ']';
                break;
            }
            out += "[\n";
            for (std::size_t i = 0; i < j.size(); ++i) {
                out += inner;
                write(j[i], out, indent + 2);
                out += i + 1 < j.size() ? ",\n" : "\n";
            }
            out += pad + "]";
            break;
        }
        case json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                break;
            }
            out += "{\n";
            std::size_t i = 0;
            for (auto it = j.begin(); it != j.end(); ++it, ++i) {
                out += inner + json(it.key()).dump() + ": ";
                write(it.value(), out, indent + 2);
                out += i + 1 < j.size() ? ",\n" : "\n";
            }
            out += pad + "}";
            break;
        }
        default:
            out += j.dump();
    }
}

}  // namespace

std::string dump17(const json& j) {
    std::string out;
    write(j, out, 0);
    return out;
}

json to_json(cx z) { return json::array({z.real() + 0.0, z.imag() + 0.0}); }

cx complex_from_json(const json& j) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw Error(ErrorKind::Parse, "complex value must be [re, im]");
    return {j[0].get<double>(), j[1].get<double>()};
}

json assignment_to_json(const Assignment& a) {
    json values = json::object();
    for (std::size_t i = 0; i < a.values.size(); ++i) values[std::to_string(i + 1)] = to_json(a.values[i]);
    return json{{"mode", mode_name(a.mode)}, {"values", values}};
}

Assignment assignment_from_json(const json& j, std::optional<int> expected_size) {
    if (!j.is_object() || !j.contains("mode") || !j.contains("values"))
        throw Error(ErrorKind::Parse, "assignment must be an object with \"mode\" and \"values\"");
    Assignment a;
    const std::string mode = j.at("mode").get<std::string>();
    if (mode == "z")
        a.mode = Mode::Z;
    else if (mode == "w")
        a.mode = Mode::W;
    else
        throw Error(ErrorKind::Parse, "assignment mode must be \"z\" or \"w\"");
    const json& vals = j.at("values");
    if (!vals.is_object()) throw Error(ErrorKind::Parse, "assignment values must be an object keyed by id");
    const int n = static_cast<int>(vals.size());
    if (expected_size && *expected_size != n)
        throw Error(ErrorKind::Parse, "assignment has " + std::to_string(n) + " values, expected " +
                                          std::to_string(*expected_size));
    a.values.assign(n, cx(0));
    std::vector<bool> seen(n, false);
    for (auto it = vals.begin(); it != vals.end(); ++it) {
        int id = 0;
        try {
            std::size_t used = 0;
            id = std::stoi(it.key(), &used);
            if (used != it.key().size()) id = 0;
        } catch (const std::exception&) {
            id = 0;
        }
        if (id < 1 || id > n || seen[id - 1])
            throw Error(ErrorKind::Parse, "assignment ids must be 1.." + std::to_string(n) + ", got '" + it.key() + "'");
        seen[id - 1] = true;
        a.values[id - 1] = complex_from_json(it.value());
    }
    return a;
}

json matrix_to_json(const ProjMat2& m) {
    json out = json::array();
    for (const cx& v : m.m) out.push_back(to_json(v));
    return out;
}

json diagram_to_json(const Diagram& d) {
    json crossings = json::array();
    for (const Crossing& c : d.crossings) crossings.push_back({{"pd", c.seg}, {"sign", c.sign}});
    json regions = json::array();
    for (const Region& r : d.regions) {
        json sides = json::array();
        for (auto [s, side] : r.sides) sides.push_back({s, side == Side::Left ? "left" : "right"});
        regions.push_back({{"id", r.id}, {"sides", sides}});
    }
    json arcs = json::array();
    for (const auto& a : d.arcs) arcs.push_back(a);
    UnderPassOrder ord = under_pass_order(d);
    json order = json::array();
    for (int c : ord.crossings) order.push_back(c + 1);
    return json{{"pd", to_pd(d)},       {"crossings", crossings}, {"writhe", d.writhe},
                {"regions", regions},   {"arcs", arcs},           {"underPassOrder", order},
                {"arcOrder", ord.arcs}, {"kink", d.has_kink()}};
}

json solution_set_to_json(const SolutionSet& s, const SolverConfig& cfg) {
    json sols = json::array();
    for (const Solution& x : s.solutions)
        sols.push_back({{"restart", x.restart},
                        {"iterations", x.iterations},
                        {"maxResidual", x.max_residual},
                        {"minSingularValue", x.min_singular_value},
                        {"assignment", assignment_to_json(x.assignment)}});
    return json{{"status", s.solutions.empty() ? "empty" : "ok"},
                {"seed", cfg.seed},
                {"restarts", s.restarts},
                {"converged", s.converged},
                {"gauge", "lowest id = 1"},
                {"solutions", sols}};
}

json ptolemy_to_json(const Diagram& d, const Assignment& a, const ScalingParams& sp) {
    static const char* labels = "abcdefghijklmnopqrstuvwx";
    std::optional<GraphParams> g;
    if (a.mode == Mode::Z) g = graph_parameters(d, a);
    json out = json::array();
    for (int c = 0; c < d.n(); ++c) {
        json e = json::object();
        e["crossing"] = c + 1;
        e["sigma"] = to_json(sigma_at_crossing(d, a, c));
        if (a.mode == Mode::W) e["eta"] = to_json(eta_at_crossing(d, a, c));
        e[a.mode == Mode::Z ? "pSquared" : "qSquared"] = to_json(sp.square[c]);
        json se = json::object();
        auto t = short_edge_table(d, a, sp, c);
        for (int k = 0; k < 24; ++k) se[std::string(1, labels[k])] = to_json(t[k]);
        e["shortEdges"] = se;
        if (g) {
            e["vertical"] = to_json(g->vertical[c]);
            json hs = json::array();
            for (int s : d.crossings[c].seg) {
                bool dup = false;
                for (const auto& h : hs) dup |= h["segment"] == s;
                if (dup) continue;
                hs.push_back({{"segment", s},
                              {"case", std::string(1, case_letter(g->kase[s - 1]))},
                              {"value", to_json(g->horizontal[s - 1])}});
            }
            e["horizontals"] = hs;
        }
        out.push_back(e);
    }
    return out;
}

json invariant_report_to_json(const InvariantReport& r) {
    json lam = json::array(), lamp = json::array(), sig = json::array(), order = json::array();
    for (cx v : r.cusp.lambda) lam.push_back(to_json(v));
    for (cx v : r.cusp.lambda_prime) lamp.push_back(to_json(v));
    for (cx v : r.sigma) sig.push_back(to_json(v));
    for (int c : r.order) order.push_back(c + 1);
    json wir = json::array(), mats = json::array(), mue = json::array();
    for (const auto& m : r.wirtinger.mu) wir.push_back(matrix_to_json(m.normalized()));
    for (const auto& m : r.wirtinger.M) mats.push_back(matrix_to_json(m.normalized()));
    for (const auto& m : r.wirtinger.mu_e) mue.push_back(matrix_to_json(m.normalized()));
    return json{{"mode", mode_name(r.mode)},
                {"obstruction", r.obstruction},
                {"cuspShape", to_json(r.cusp.shape)},
                {"underPassOrder", order},
                {"sigma", sig},
                {"lambda", lam},
                {"lambdaPrime", lamp},
                {"wirtinger", wir},
                {"crossingMatrices", mats},
                {"signedGenerators", mue},
                {"wirtingerCheck",
                 {{"ok", r.wirtinger_check.ok},
                  {"trivial", r.wirtinger_check.trivial},
                  {"maxRelationError", r.wirtinger_check.max_relation_error},
                  {"maxTraceError", r.wirtinger_check.max_trace_error},
                  {"failures", r.wirtinger_check.failures}}},
                {"complexVolume", {{"vol", r.volume.vol}, {"cs", r.volume.cs}}},
                {"latticeTerms", r.volume.lattice},
                {"oracleVolume", r.oracle.volume},
                {"oracleWarnings", r.oracle.warnings},
                {"volumeAgrees", r.volume_agrees},
                {"maxResidual", r.max_residual}};
}

std::optional<Assignment> Builtin::solution(Mode m) const {
    for (const Assignment& a : solutions)
        if (a.mode == m) return a;
    return std::nullopt;
}

}  // namespace octa
