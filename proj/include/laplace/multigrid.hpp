#pragma once

#include <string>
#include <vector>

#include "laplace/grid.hpp"
#include "laplace/solver.hpp"
#include "laplace/stencil.hpp"

namespace laplace {

/// Grid/mask pairs from finest (level 1) to coarsest. Every coarser level
/// has m' = (m+1)/2, n' = (n+1)/2, so coarse points coincide with
/// even-index fine points. Coarse levels solve correction equations, so
/// their Dirichlet values are all zero; the classification is sampled from
/// the fine mask at coincident points.
struct MeshHierarchy {
    struct Level {
        GridSpec spec;
        BoundaryMask mask;
    };
    std::vector<Level> levels;

    int level_count() const { return static_cast<int>(levels.size()); }
};

/// Builds `levels` grids by repeated 2:1 coarsening. Requires m-1 and n-1
/// divisible by 2^(levels-1) and every level at least 3x3; throws
/// SizingError otherwise.
MeshHierarchy build_hierarchy(const ProblemSpec& problem, int levels = 3);

/// Injection: coarse(I, J) = fine(2I, 2J); forced 0 at coarse Dirichlet points.
ResidualField restrict_injection(const ResidualField& fine, const BoundaryMask& coarse_mask);

/// Bilinear interpolation: coincident points copy, edge midpoints average
/// two coarse neighbors, cell centers average four. Forced 0 at fine
/// Dirichlet points, so adding a prolonged correction never touches
/// boundary values.
ScalarField prolong_bilinear(const ScalarField& coarse, const BoundaryMask& fine_mask);

/// Diagnostics of one V-cycle, one residual-norm sample per level visit.
struct VCycleRecord {
    struct Sample {
        int level;         // 1-based, 1 = finest
        std::string phase; // "pre" (after descent smoothing), "coarse_solve", "post"
        double residual_norm;
    };
    int cycle = 0;
    std::vector<Sample> samples;
    int coarsest_iterations = 0;
    double cycle_error = 0.0; // infinity error between cycle start and end
};

struct VCycleTrace {
    std::vector<VCycleRecord> records;
};

/// One V-cycle on `field`: descend smoothing nu Gauss-Seidel iterations per
/// level and restricting the defect, solve the coarsest correction equation
/// to convergence, then ascend adding prolonged corrections and smoothing nu
/// iterations per level. Throws Error if the coarsest solve exceeds its
/// iteration cap.
VCycleRecord v_cycle(const MeshHierarchy& hierarchy, ScalarField& field, int nu = 3,
                     double coarse_tol = 1e-10, int coarse_max_iter = 10000);

struct MultigridResult {
    ScalarField field;
    ConvergenceHistory history; // one error entry per V-cycle
    VCycleTrace trace;
};

/// Repeats v_cycle until the cycle-end field change drops to config.tol or
/// config.mg_max_cycles is reached.
MultigridResult solve_multigrid(const ProblemSpec& problem, const SolverConfig& config,
                                const ScalarField* initial = nullptr);

} // namespace laplace
