#include "octa/solver.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <random>
#include <thread>

namespace octa {

namespace {

constexpr double kMaxSpread = 1e8;
// solution sets are positive-dimensional; directions this flat are treated as null
constexpr double kRankThreshold = 1e-8;

Eigen::VectorXcd log_values(const std::vector<cx>& eq) {
    Eigen::VectorXcd f(static_cast<Eigen::Index>(eq.size()));
    for (std::size_t i = 0; i < eq.size(); ++i) f(static_cast<Eigen::Index>(i)) = std::log(eq[i]);
    return f;
}

bool degenerate(const GluingSystem& s, const std::vector<cx>& x) {
    return first_violation(s.constraints, x).has_value();
}

// Newton can creep along a solution curve towards the boundary, where log residuals stay small
bool escaped(const std::vector<cx>& x) {
    double lo = std::abs(x[0]), hi = lo;
    for (const cx& v : x) {
        lo = std::min(lo, std::abs(v));
        hi = std::max(hi, std::abs(v));
    }
    return hi > kMaxSpread * lo;
}

}  // namespace

void SolverConfig::validate() const {
    if (restarts < 1) throw Error(ErrorKind::Config, "restarts must be at least 1");
    if (max_iters < 1) throw Error(ErrorKind::Config, "max_iters must be at least 1");
    if (!(tol_residual > 0)) throw Error(ErrorKind::Config, "tol_residual must be positive");
    if (!(dedup_tol > 0)) throw Error(ErrorKind::Config, "dedup_tol must be positive");
    if (!(damping > 0 && damping < 1)) throw Error(ErrorKind::Config, "damping must lie in (0, 1)");
    if (threads < 0) throw Error(ErrorKind::Config, "threads must be non-negative");
}

Assignment gauge_fixed(const Assignment& a) {
    Assignment out = a;
    cx g = a.values.at(0);
    for (cx& v : out.values) v /= g;
    out.values[0] = 1.0;
    return out;
}

NewtonResult newton_solve(const GluingSystem& s, const Assignment& start, const SolverConfig& cfg) {
    cfg.validate();
    if (auto v = first_violation(s.constraints, start.values))
        throw Error(ErrorKind::NonDegeneracy, "start point is degenerate: " + *v);

    NewtonResult res;
    res.solution = gauge_fixed(start);
    std::vector<cx>& x = res.solution.values;
    const Eigen::Index nfree = s.nvars - 1;

    for (int it = 0;; ++it) {
        auto eq = equation_values(s, res.solution);
        double r = 0;
        for (const cx& e : eq) r = std::max(r, std::abs(e - 1.0));
        res.max_residual = r;
        res.iterations = it;
        if (r < cfg.tol_residual) {
            res.converged = true;
            return res;
        }
        if (it == cfg.max_iters) {
            res.failure = "no convergence after " + std::to_string(cfg.max_iters) + " iterations";
            return res;
        }
        Eigen::VectorXcd f = log_values(eq);
        Eigen::MatrixXcd J = log_derivatives(s, res.solution).rightCols(nfree);
        Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXcd> cod(J.rows(), J.cols());
        cod.setThreshold(kRankThreshold);
        cod.compute(J);
        Eigen::VectorXcd du = cod.solve(-f);
        double big = du.cwiseAbs().maxCoeff();
        if (!std::isfinite(big)) {
            res.failure = "singular Newton step";
            return res;
        }
        if (big > 3.0) du *= 3.0 / big;

        const double f0 = f.norm();
        double t = 1.0;
        bool accepted = false;
        std::vector<cx> trial(x.size());
        while (t > 1e-10) {
            trial[0] = 1.0;
            for (Eigen::Index k = 0; k < nfree; ++k) trial[k + 1] = x[k + 1] * std::exp(t * du(k));
            if (!degenerate(s, trial)) {
                Assignment ta{s.mode, trial};
                Eigen::VectorXcd ft = log_values(equation_values(s, ta));
                if (ft.allFinite() && ft.norm() < f0) {
                    accepted = true;
                    break;
                }
            }
            t *= cfg.damping;
        }
        if (!accepted) {
            res.failure = "step underflow";
            return res;
        }
        x = trial;
    }
}

Assignment random_start(const GluingSystem& s, std::uint64_t seed, int restart) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(restart)};
    std::mt19937_64 rng(seq);
    std::uniform_real_distribution<double> ux(-1.0, 1.0), uy(-std::numbers::pi, std::numbers::pi);
    Assignment a;
    a.mode = s.mode;
    for (int v = 0; v < s.nvars; ++v) {
        double x = ux(rng), y = uy(rng);
        a.values.push_back(std::exp(cx(x, y)));
    }
    return a;
}

double min_singular_value(const GluingSystem& s, const Assignment& a) {
    Eigen::MatrixXcd J = log_derivatives(s, a).rightCols(s.nvars - 1);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(J);
    return svd.singularValues().minCoeff();
}

int worker_count(const SolverConfig& cfg, int jobs) {
    int n = cfg.threads > 0 ? cfg.threads : static_cast<int>(std::thread::hardware_concurrency());
    if (const char* env = std::getenv("OCTA_PTOLEMY_THREADS")) {
        int cap = std::atoi(env);
        if (cap > 0) n = std::min(n, cap);
    }
    return std::clamp(n, 1, std::max(1, jobs));
}

SolutionSet search_solutions(const GluingSystem& s, const SolverConfig& cfg) {
    cfg.validate();
    std::vector<NewtonResult> runs(cfg.restarts);
    std::atomic<int> next{0};
    auto work = [&] {
        for (int r; (r = next++) < cfg.restarts;) {
            Assignment start = random_start(s, cfg.seed, r);
            if (degenerate(s, start.values)) {
                runs[r].failure = "degenerate start";
                continue;
            }
            try {
                runs[r] = newton_solve(s, start, cfg);
            } catch (const Error& e) {
                runs[r].failure = e.what();
            }
        }
    };
    const int nthreads = worker_count(cfg, cfg.restarts);
    if (nthreads == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < nthreads; ++i) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }

    SolutionSet out;
    out.restarts = cfg.restarts;
    for (int r = 0; r < cfg.restarts; ++r) {
        const NewtonResult& nr = runs[r];
        if (!nr.converged) continue;
        ++out.converged;
        Solution sol;
        sol.assignment = gauge_fixed(nr.solution);
        if (degenerate(s, sol.assignment.values) || escaped(sol.assignment.values)) continue;
        sol.max_residual = max_norm(residuals(s, sol.assignment));
        if (!(sol.max_residual < cfg.tol_residual)) continue;
        sol.restart = r;
        sol.iterations = nr.iterations;
        bool dup = false;
        for (Solution& kept : out.solutions) {
            double dist = 0;
            for (std::size_t k = 0; k < kept.assignment.values.size(); ++k) {
                const cx y = kept.assignment.values[k];
                dist = std::max(dist, std::abs(sol.assignment.values[k] - y) / std::max(1.0, std::abs(y)));
            }
            if (dist < cfg.dedup_tol) {
                if (sol.max_residual < kept.max_residual) kept = sol;
                dup = true;
                break;
            }
        }
        if (!dup) out.solutions.push_back(sol);
    }
    for (Solution& sol : out.solutions) sol.min_singular_value = min_singular_value(s, sol.assignment);
    return out;
}

}  // namespace octa
