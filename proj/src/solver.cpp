#include "laplace/solver.hpp"

#include <chrono>
#include <cmath>
#include <sstream>

#include "laplace/line_solvers.hpp"
#include "laplace/multigrid.hpp"
#include "laplace/point_solvers.hpp"
#include "laplace/stencil.hpp"

namespace laplace {

std::string method_name(Method method) {
    switch (method) {
        case Method::Jacobi: return "jacobi";
        case Method::GaussSeidel: return "gs";
        case Method::Sor: return "sor";
        case Method::SlorA: return "slora";
        case Method::SlorB: return "slorb";
        case Method::Adi: return "adi";
        case Method::Multigrid: return "mg";
    }
    return "?";
}

Method parse_method(const std::string& token) {
    if (token == "jacobi") return Method::Jacobi;
    if (token == "gs") return Method::GaussSeidel;
    if (token == "sor") return Method::Sor;
    if (token == "slora") return Method::SlorA;
    if (token == "slorb") return Method::SlorB;
    if (token == "adi") return Method::Adi;
    if (token == "mg") return Method::Multigrid;
    throw Error("unknown method \"" + token +
                "\" (expected jacobi|gs|sor|slora|slorb|adi|mg)");
}

void SolverConfig::validate() const {
    if (!(tol > 0.0)) throw Error("solver config: tol must be > 0");
    if (max_iter < 1) throw Error("solver config: max_iter must be >= 1");
    switch (method) {
        case Method::Sor:
        case Method::SlorA:
        case Method::Adi:
            if (!(omega > 0.0)) throw Error("solver config: omega must be > 0");
            break;
        case Method::SlorB:
            if (!(omega > 0.0 && omega < 2.0)) {
                throw Error("solver config: slorb requires omega in (0, 2)");
            }
            break;
        default:
            break; // omega ignored
    }
    if (method == Method::Multigrid) {
        if (mg_levels < 2) throw Error("solver config: mg_levels must be >= 2");
        if (mg_smooth_iters < 1) throw Error("solver config: mg_smooth_iters must be >= 1");
        if (mg_max_cycles < 1) throw Error("solver config: mg_max_cycles must be >= 1");
    }
}

namespace {

constexpr double kDivergenceThreshold = 1e12;

} // namespace

SolveResult solve(const ProblemSpec& problem, const SolverConfig& config,
                  const ScalarField* initial) {
    problem.validate();
    config.validate();

    if (config.method == Method::Multigrid) {
        MultigridResult mg = solve_multigrid(problem, config, initial);
        return {std::move(mg.field), std::move(mg.history)};
    }

    ScalarField field = initial ? *initial : problem.initial_field();
    if (field.spec() != problem.grid) throw Error("solve: initial field dimensions do not match");
    if (!field.all_finite()) throw Error("solve: initial field contains non-finite values");
    problem.mask.apply_to(field);

    ConvergenceHistory history;
    history.method = method_name(config.method);
    history.omega = config.omega;
    if (config.method == Method::Sor && config.omega >= 2.0) {
        history.warning = "omega >= 2: the solution might be unstable";
    }

    auto start = std::chrono::steady_clock::now();
    ScalarField previous(problem.grid);
    for (int iter = 1; iter <= config.max_iter; ++iter) {
        double err;
        if (config.method == Method::Jacobi) {
            ScalarField next = jacobi_sweep(field, problem.mask);
            err = infinity_error(next, field);
            previous = std::move(field);
            field = std::move(next);
        } else {
            previous = field;
            switch (config.method) {
                case Method::GaussSeidel: gauss_seidel_sweep(field, problem.mask); break;
                case Method::Sor: sor_sweep(field, problem.mask, config.omega); break;
                case Method::SlorA: slora_sweep(field, problem.mask, config.omega); break;
                case Method::SlorB: slorb_sweep(field, problem.mask, config.omega); break;
                case Method::Adi: adi_cycle(field, problem.mask, config.omega); break;
                default: throw Error("solve: unhandled method");
            }
            err = infinity_error(field, previous);
        }

        if (!std::isfinite(err) || err > kDivergenceThreshold) {
            // roll back to the last finite iterate
            field = std::move(previous);
            history.diverged = true;
            history.diverged_iteration = iter;
            std::ostringstream msg;
            msg << "diverged at iteration " << iter << " (error " << err << ")";
            history.warning = history.warning.empty() ? msg.str()
                                                      : history.warning + "; " + msg.str();
            break;
        }

        history.errors.push_back(err);
        if (err <= config.tol) {
            history.converged = true;
            break;
        }
    }
    auto stop = std::chrono::steady_clock::now();

    history.iterations = static_cast<int>(history.errors.size());
    history.wall_time_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    return {std::move(field), std::move(history)};
}

} // namespace laplace
