#pragma once

#include <vector>

#include "laplace/grid.hpp"

namespace laplace {

/// Tridiagonal system A x = rhs. Row k reads
///   lower[k-1] * x[k-1] + diag[k] * x[k] + upper[k] * x[k+1] = rhs[k].
struct TridiagonalSystem {
    std::vector<double> lower; // size N-1
    std::vector<double> diag;  // size N
    std::vector<double> upper; // size N-1
    std::vector<double> rhs;   // size N

    int size() const { return static_cast<int>(diag.size()); }
};

/// Minimum over rows of |diag| - (|lower| + |upper|). Positive means the
/// system is strictly diagonally dominant and Thomas runs pivot-free.
double dominance_margin(const TridiagonalSystem& sys);

/// Thomas forward-elimination / back-substitution. The input is not
/// modified. Throws SingularSystemError when a pivot falls below
/// 1e-14 times the row scale.
std::vector<double> thomas_solve(const TridiagonalSystem& sys);

/// Line relaxation with the relaxation applied after the row solve:
/// each row's interior runs are solved implicitly
///   -psiW + 2(1+beta^2) psiP - psiE = beta^2 (psiN_old + psiS_new)
/// and the row is then blended, psi = (1-omega) old + omega solved.
/// Rows sweep bottom-to-top; interior Dirichlet points split a row into
/// independently solved maximal runs.
void slora_sweep(ScalarField& field, const BoundaryMask& mask, double omega);

/// Line relaxation with the relaxation folded into the row system:
///   -w psiW + 2(1+beta^2) psiP - w psiE
///       = 2(1+beta^2)(1-w) psiP_old + w beta^2 (psiN_old + psiS_new),
/// the Thomas solution becoming the new row directly. At omega = 1 the
/// system reduces to the unrelaxed row system of slora_sweep.
void slorb_sweep(ScalarField& field, const BoundaryMask& mask, double omega);

/// One alternating-direction cycle: a row-implicit sweep followed by a
/// column-implicit sweep with the transposed line system (off-diagonals
/// -beta^2 unrelaxed, x-neighbor terms on the right-hand side). Relaxation
/// is folded into each half's line system the same way as slorb_sweep, so
/// at omega = 1 the row half matches slora_sweep/slorb_sweep exactly.
/// Columns sweep left-to-right.
void adi_cycle(ScalarField& field, const BoundaryMask& mask, double omega);

} // namespace laplace
