#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "octa/invariants.hpp"
#include "octa/solver.hpp"

namespace octa {

using json = nlohmann::ordered_json;

// numbers with 17 significant digits, two-space indent
std::string dump17(const json& j);

json to_json(cx z);
cx complex_from_json(const json& j);

json assignment_to_json(const Assignment& a);
Assignment assignment_from_json(const json& j, std::optional<int> expected_size = std::nullopt);

json matrix_to_json(const ProjMat2& m);
json diagram_to_json(const Diagram& d);
json solution_set_to_json(const SolutionSet& s, const SolverConfig& cfg);
json ptolemy_to_json(const Diagram& d, const Assignment& a, const ScalingParams& sp);
json invariant_report_to_json(const InvariantReport& r);

struct Builtin {
    std::string name;
    std::string pd;
    std::vector<Assignment> solutions;

    std::optional<Assignment> solution(Mode m) const;
};

const std::vector<Builtin>& builtins();
const Builtin& builtin(const std::string& name);

}  // namespace octa
