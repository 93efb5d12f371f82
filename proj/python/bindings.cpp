#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "octa/io.hpp"
#include "octa/special.hpp"

namespace py = pybind11;
using namespace octa;

namespace {

Mode parse_mode(const std::string& m) {
    if (m == "z") return Mode::Z;
    if (m == "w") return Mode::W;
    throw Error(ErrorKind::Config, "mode must be z or w, got " + m);
}

Assignment make_assignment(const std::string& mode, const std::vector<cx>& values) {
    Assignment a;
    a.mode = parse_mode(mode);
    a.values = values;
    return a;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    static py::exception<Error> error(m, "OctaError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::set_error(error, (std::string(error_kind_name(e.kind())) + ": " + e.what()).c_str());
        }
    });

    m.def("builtin_names", [] {
        std::vector<std::string> names;
        for (const Builtin& b : builtins()) names.push_back(b.name);
        return names;
    });
    m.def("builtin_pd", [](const std::string& name) { return builtin(name).pd; });
    m.def(
        "builtin_solution",
        [](const std::string& name, const std::string& mode) -> std::optional<std::vector<cx>> {
            auto a = builtin(name).solution(parse_mode(mode));
            if (!a) return std::nullopt;
            return a->values;
        },
        py::arg("name"), py::arg("mode"));

    m.def("diagram_json", [](const std::string& pd) { return dump17(diagram_to_json(parse_pd(pd))); },
          py::arg("pd"));
    m.def(
        "residuals",
        [](const std::string& pd, const std::string& mode, const std::vector<cx>& values) {
            Diagram d = parse_pd(pd);
            return residuals(build_system(d, parse_mode(mode)), make_assignment(mode, values));
        },
        py::arg("pd"), py::arg("mode"), py::arg("values"));
    m.def(
        "solve_json",
        [](const std::string& pd, const std::string& mode, std::uint64_t seed, int restarts, double tol) {
            Diagram d = parse_pd(pd);
            SolverConfig cfg;
            cfg.seed = seed;
            cfg.restarts = restarts;
            cfg.tol_residual = tol;
            cfg.validate();
            SolutionSet set;
            {
                py::gil_scoped_release release;
                set = search_solutions(build_system(d, parse_mode(mode)), cfg);
            }
            return dump17(solution_set_to_json(set, cfg));
        },
        py::arg("pd"), py::arg("mode") = "z", py::arg("seed") = 0, py::arg("restarts") = 1,
        py::arg("tol") = SolverConfig{}.tol_residual);
    m.def(
        "invariants_json",
        [](const std::string& pd, const std::string& mode, const std::vector<cx>& values, int base_crossing) {
            Diagram d = parse_pd(pd);
            return dump17(invariant_report_to_json(compute_invariants(d, make_assignment(mode, values), base_crossing)));
        },
        py::arg("pd"), py::arg("mode"), py::arg("values"), py::arg("base_crossing") = -1);

    m.def("dilog", &dilog, py::arg("z"));
    m.def("bloch_wigner", &bloch_wigner, py::arg("z"));
}
