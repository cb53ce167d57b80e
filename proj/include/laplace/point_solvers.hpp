#pragma once

#include "laplace/grid.hpp"

namespace laplace {

/// One Jacobi sweep: every interior point recomputed from the old field only,
/// (psiE + psiW + beta^2 (psiN + psiS)) / (2 (1 + beta^2)). Returns a new
/// field; Dirichlet points carry the mask values. The input is not modified.
ScalarField jacobi_sweep(const ScalarField& old_field, const BoundaryMask& mask);

/// One Gauss-Seidel sweep in place, rows bottom-to-top, left-to-right within
/// each row, so the W and S neighbors are read post-update. The optional
/// forcing solves L(u) + f = 0 instead of L(u) = 0 (used by the multigrid
/// correction equations).
void gauss_seidel_sweep(ScalarField& field, const BoundaryMask& mask,
                        const ScalarField* forcing = nullptr);

/// One SOR sweep in place: Gauss-Seidel order, each interior point set to
/// (1 - omega) * old + omega * (Gauss-Seidel candidate). omega = 1 reproduces
/// gauss_seidel_sweep bit for bit; omega = 0 leaves the field unchanged.
void sor_sweep(ScalarField& field, const BoundaryMask& mask, double omega);

} // namespace laplace
