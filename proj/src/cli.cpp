#include "octa/cli.hpp"

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "octa/io.hpp"

namespace octa {

namespace {

struct Options {
    std::string pd;
    std::string builtin;
    std::string mode = "z";
    std::string solution;
    std::uint64_t seed = 0;
    int restarts = 100;
    double tol = 0;
    std::string out;
    int base_crossing = 0;
    int max_iters = 100;
};

struct UsageError : Error {
    explicit UsageError(const std::string& m) : Error(ErrorKind::Config, m) {}
};

int exit_code(ErrorKind k) {
    switch (k) {
        case ErrorKind::NonDegeneracy:
        case ErrorKind::Verification:
        case ErrorKind::Domain: return 1;
        default: return 2;
    }
}

void emit_error(std::ostream& err, const std::string& kind, const std::string& msg) {
    json j{{"error", {{"kind", kind}, {"message", msg}}}};
    err << j.dump() << '\n';
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void add_common(CLI::App* sub, Options& o) {
    sub->add_option("--pd", o.pd, "PD code, inline (X[1,5,2,4];...) or a path to a file containing one");
    sub->add_option("--builtin", o.builtin, "builtin example: fig8 | trefoil-kink");
    sub->add_option("--mode", o.mode, "variables: z (segments, T4) or w (regions, T5)")
        ->check(CLI::IsMember({"z", "w"}))
        ->capture_default_str();
    sub->add_option("--solution", o.solution, "Assignment JSON file");
    sub->add_option("--seed", o.seed, "solver seed")->capture_default_str();
    sub->add_option("--restarts", o.restarts, "solver restarts")->capture_default_str();
    sub->add_option("--tol", o.tol,
                    "residual tolerance (solver default 1e-11, verification default 1e-9)");
    sub->add_option("--out", o.out, "write JSON here instead of stdout");
    sub->add_option("--base-crossing", o.base_crossing,
                    "crossing (1-based, PD order) used as c_1; default: where segment 1 first under-passes");
}

Diagram load_diagram(const Options& o, const Builtin** b) {
    if (o.pd.empty() == o.builtin.empty()) throw UsageError("give exactly one of --pd and --builtin");
    *b = nullptr;
    if (!o.builtin.empty()) {
        *b = &builtin(o.builtin);
        return parse_pd((*b)->pd);
    }
    std::error_code ec;
    if (std::filesystem::is_regular_file(o.pd, ec)) return parse_pd(read_file(o.pd));
    return parse_pd(o.pd);
}

Assignment load_solution(const std::string& path, Mode mode, int nvars) {
    json j;
    try {
        j = json::parse(read_file(path));
    } catch (const json::exception& e) {
        throw Error(ErrorKind::Parse, std::string("invalid JSON in solution file: ") + e.what());
    }
    Assignment a = assignment_from_json(j, nvars);
    if (a.mode != mode) throw UsageError("solution mode does not match --mode");
    return a;
}

void write_output(const Options& o, const json& j, std::ostream& out) {
    std::string text = dump17(j) + "\n";
    if (o.out.empty()) {
        out << text;
        return;
    }
    std::ofstream f(o.out, std::ios::binary);
    if (!f) throw UsageError("cannot write '" + o.out + "'");
    f << text;
}

json invariants_json(const Diagram& d, const Assignment& a, int start, double tol, bool* clean) {
    InvariantReport r = compute_invariants(d, a, start, tol);
    json j = invariant_report_to_json(r);
    bool ok = r.volume_agrees && r.wirtinger_check.ok;
    try {
        ScalingParams sp = scaling_parameters(d, a, start);
        ConsistencyReport cr = ptolemy_consistency_check(d, a, sp);
        j["ptolemyCheck"] = {{"ok", cr.ok},
                             {"sigmaProduct", to_json(cr.sigma_product)},
                             {"maxHypotenuseError", cr.max_hypotenuse_error},
                             {"maxTauError", cr.max_tau_error},
                             {"failures", cr.failures}};
        j["ptolemy"] = ptolemy_to_json(d, a, sp);
        ok = ok && cr.ok;
    } catch (const Error& e) {
        j["ptolemyCheck"] = {{"ok", false}, {"failures", json::array({e.what()})}};
        ok = false;
    }
    *clean = ok;
    return j;
}

int run_check(const Options& o, const Diagram& d, const Builtin* b, Mode mode, std::ostream& out) {
    GluingSystem sys = build_system(d, mode);
    Assignment a;
    if (!o.solution.empty())
        a = load_solution(o.solution, mode, sys.nvars);
    else if (b && b->solution(mode))
        a = *b->solution(mode);
    else
        throw UsageError("check needs --solution (or a builtin with a stored solution for this mode)");
    const double tol = o.tol > 0 ? o.tol : 1e-9;
    json j{{"mode", mode_name(mode)}, {"tolerance", tol}};
    bool ok = true;
    if (auto v = check_nondegenerate(d, a)) {
        j["nondegenerate"] = false;
        j["violation"] = *v;
        ok = false;
    } else {
        j["nondegenerate"] = true;
        auto r = residuals(sys, a);
        json res = json::array();
        for (cx x : r) res.push_back(to_json(x));
        double m = max_norm(r);
        j["residuals"] = res;
        j["maxResidual"] = m;
        ok = ok && m < tol;
        cx prod = 1.0;
        for (cx s : sigmas(d, a)) prod *= s;
        j["sigmaProduct"] = to_json(prod);
        double dist = std::min(std::abs(prod - 1.0), std::abs(prod + 1.0));
        bool pm1 = dist < 1e-8;
        j["sigmaProductIsUnit"] = pm1;
        if (pm1) j["obstruction"] = std::abs(prod - 1.0) < std::abs(prod + 1.0) ? 1 : -1;
        ok = ok && pm1;
    }
    j["ok"] = ok;
    write_output(o, j, out);
    return ok ? 0 : 1;
}

int run_solve(const Options& o, const Diagram& d, Mode mode, std::ostream& out) {
    if (!o.solution.empty()) throw UsageError("solve does not take --solution");
    GluingSystem sys = build_system(d, mode);
    SolverConfig cfg;
    cfg.seed = o.seed;
    cfg.restarts = o.restarts;
    cfg.max_iters = o.max_iters;
    if (o.tol > 0) cfg.tol_residual = o.tol;
    SolutionSet set = search_solutions(sys, cfg);
    json j = solution_set_to_json(set, cfg);
    j["mode"] = mode_name(mode);
    j["pd"] = to_pd(d);
    write_output(o, j, out);
    return 0;
}

int run_invariants(const Options& o, const Diagram& d, const Builtin* b, Mode mode, int start, bool solver_flags,
                   std::ostream& out) {
    if (!o.solution.empty() && solver_flags)
        throw UsageError("invariants takes either --solution or solver flags (--seed/--restarts), not both");
    GluingSystem sys = build_system(d, mode);
    const double verify_tol = o.tol > 0 ? o.tol : 1e-9;
    std::optional<Assignment> given;
    if (!o.solution.empty())
        given = load_solution(o.solution, mode, sys.nvars);
    else if (b && !solver_flags)
        given = b->solution(mode);
    if (given) {
        bool clean = false;
        json j = invariants_json(d, *given, start, verify_tol, &clean);
        write_output(o, j, out);
        return clean ? 0 : 1;
    }
    SolverConfig cfg;
    cfg.seed = o.seed;
    cfg.restarts = o.restarts;
    cfg.max_iters = o.max_iters;
    SolutionSet set = search_solutions(sys, cfg);
    json reports = json::array();
    for (const Solution& s : set.solutions) {
        json entry;
        try {
            bool clean = false;
            entry = invariants_json(d, s.assignment, start, verify_tol, &clean);
        } catch (const Error& e) {
            entry = {{"error", {{"kind", error_kind_name(e.kind())}, {"message", e.what()}}}};
        }
        entry["restart"] = s.restart;
        entry["assignment"] = assignment_to_json(s.assignment);
        reports.push_back(entry);
    }
    json j{{"status", set.solutions.empty() ? "empty" : "ok"},
           {"mode", mode_name(mode)},
           {"seed", cfg.seed},
           {"restarts", cfg.restarts},
           {"reports", reports}};
    write_output(o, j, out);
    return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Gluing equations, Ptolemy data and invariants from knot diagrams", "octa-ptolemy"};
    app.require_subcommand(1);
    Options o;
    CLI::App* check = app.add_subcommand("check", "verify an assignment: residuals, non-degeneracy, product of sigma");
    CLI::App* solve = app.add_subcommand("solve", "search for solutions of the gluing equations");
    CLI::App* inv = app.add_subcommand("invariants", "obstruction, cusp shape, Wirtinger matrices, complex volume");
    for (CLI::App* s : {check, solve, inv}) add_common(s, o);
    solve->add_option("--max-iters", o.max_iters, "Newton iterations per restart")->capture_default_str();
    inv->add_option("--max-iters", o.max_iters, "Newton iterations per restart")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        emit_error(err, "usage", e.what());
        return 2;
    }

    try {
        CLI::App* sub = app.get_subcommands().front();
        const Builtin* b = nullptr;
        Diagram d = load_diagram(o, &b);
        const Mode mode = o.mode == "w" ? Mode::W : Mode::Z;
        if (o.base_crossing < 0 || o.base_crossing > d.n())
            throw UsageError("--base-crossing must be between 1 and " + std::to_string(d.n()));
        const int start = o.base_crossing - 1;
        const bool solver_flags = sub->count("--seed") > 0 || sub->count("--restarts") > 0;
        if (sub == check) return run_check(o, d, b, mode, out);
        if (sub == solve) return run_solve(o, d, mode, out);
        return run_invariants(o, d, b, mode, start, solver_flags, out);
    } catch (const UsageError& e) {
        emit_error(err, "usage", e.what());
        return 2;
    } catch (const Error& e) {
        emit_error(err, error_kind_name(e.kind()), e.what());
        return exit_code(e.kind());
    } catch (const std::exception& e) {
        emit_error(err, "internal", e.what());
        return 2;
    }
}

}  // namespace octa
