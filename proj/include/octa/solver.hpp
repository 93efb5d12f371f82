#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "octa/gluing.hpp"

namespace octa {

struct SolverConfig {
    std::uint64_t seed = 0;
    int restarts = 1;
    int max_iters = 100;
    double tol_residual = 1e-11;
    double damping = 0.5;
    double dedup_tol = 1e-7;
    int threads = 0;  // 0: hardware concurrency, capped by OCTA_PTOLEMY_THREADS

    void validate() const;
};

struct NewtonResult {
    bool converged = false;
    Assignment solution;
    int iterations = 0;
    double max_residual = 0;
    std::string failure;
};

struct Solution {
    Assignment assignment;
    double max_residual = 0;
    int restart = 0;
    int iterations = 0;
    double min_singular_value = 0;
};

struct SolutionSet {
    std::vector<Solution> solutions;
    int restarts = 0;
    int converged = 0;
};

// divide by the lowest-id value
Assignment gauge_fixed(const Assignment& a);

NewtonResult newton_solve(const GluingSystem& s, const Assignment& start, const SolverConfig& cfg);
Assignment random_start(const GluingSystem& s, std::uint64_t seed, int restart);
SolutionSet search_solutions(const GluingSystem& s, const SolverConfig& cfg);
double min_singular_value(const GluingSystem& s, const Assignment& a);
int worker_count(const SolverConfig& cfg, int jobs);

}  // namespace octa
