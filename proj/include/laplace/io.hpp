#pragma once

#include <string>

#include "laplace/grid.hpp"
#include "laplace/multigrid.hpp"
#include "laplace/solver.hpp"

namespace laplace {

/// Problem file: JSON with keys name, grid{m,n,dx,dy} and dirichlet, a list
/// of {i,j,value} entries. save/load round-trip bit-exactly for finite
/// values.
void save_problem(const ProblemSpec& problem, const std::string& path);
ProblemSpec load_problem(const std::string& path);

/// Field file: CSV with header i,j,x,y,psi, one row per grid point,
/// row-major in j then i, shortest round-trip formatting for doubles.
void save_field(const ScalarField& field, const std::string& path);
ScalarField load_field(const std::string& path);

/// History file: one `# method=...,omega=...,time_ms=...,converged=...`
/// metadata line followed by iter,error rows.
void save_history(const ConvergenceHistory& history, const std::string& path);

/// V-cycle trace: cycle,level,phase,residual_norm rows.
void save_trace(const VCycleTrace& trace, const std::string& path);

/// Shortest decimal form of a double that parses back to the same bits.
std::string format_double(double v);

} // namespace laplace
