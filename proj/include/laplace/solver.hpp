#pragma once

#include <string>
#include <vector>

#include "laplace/grid.hpp"

namespace laplace {

enum class Method { Jacobi, GaussSeidel, Sor, SlorA, SlorB, Adi, Multigrid };

/// CLI token for a method: jacobi, gs, sor, slora, slorb, adi, mg.
std::string method_name(Method method);

/// Inverse of method_name. Throws Error for unknown tokens.
Method parse_method(const std::string& token);

struct SolverConfig {
    Method method = Method::GaussSeidel;
    double omega = 1.0;   // ignored by Jacobi/GS
    double tol = 1e-9;    // infinity-norm stopping threshold
    int max_iter = 100000;

    // multigrid only
    int mg_levels = 3;
    int mg_smooth_iters = 3;      // GS iterations per level visit
    double mg_coarse_tol = 1e-10; // coarsest-level convergence threshold
    int mg_coarse_max_iter = 10000;
    int mg_max_cycles = 1000;

    void validate() const; // throws Error on out-of-range settings
};

/// Per-iteration record of one solver run. For multigrid, "iteration"
/// means one full V-cycle.
struct ConvergenceHistory {
    std::string method;
    double omega = 1.0;
    std::vector<double> errors; // one infinity-norm error per iteration
    int iterations = 0;         // always equals errors.size()
    double wall_time_ms = 0.0;
    bool converged = false;

    bool diverged = false;      // aborted on non-finite or exploding error
    int diverged_iteration = 0; // sweep at which divergence was detected
    std::string warning;        // e.g. omega >= 2 stability note

    double final_error() const { return errors.empty() ? 0.0 : errors.back(); }
};

struct SolveResult {
    ScalarField field;
    ConvergenceHistory history;
};

/// Iterates the configured method from `initial` (default: zero field with
/// the Dirichlet values applied) until the infinity-norm change of one full
/// sweep drops to config.tol, the iteration cap is reached, or divergence
/// is detected (error above 1e12 or non-finite). On divergence the last
/// finite field is returned and history.diverged is set; the result field
/// is always finite.
SolveResult solve(const ProblemSpec& problem, const SolverConfig& config,
                  const ScalarField* initial = nullptr);

} // namespace laplace
