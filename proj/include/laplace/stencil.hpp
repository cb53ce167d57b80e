#pragma once

#include "laplace/grid.hpp"

namespace laplace {

/// Residual of the discrete operator; zero at Dirichlet points by definition
/// so whole-array norms need no masking.
using ResidualField = ScalarField;

/// Five-point discrete Laplacian at interior point (i, j):
/// (psiW - 2 psiP + psiE)/dx^2 + (psiS - 2 psiP + psiN)/dy^2.
double laplace_apply(const ScalarField& field, const BoundaryMask& mask, int i, int j);

/// Residual R = L(field) + forcing at interior points, 0 at Dirichlet points.
/// With a null forcing this is the plain residual of L(psi) = 0; with a
/// forcing it is the defect of the correction equation L(u) + f = 0.
ResidualField residual(const ScalarField& field, const BoundaryMask& mask,
                       const ScalarField* forcing = nullptr);

/// max |a - b| over all points.
double infinity_error(const ScalarField& a, const ScalarField& b);

/// max |f| over all points.
double max_abs(const ScalarField& f);

} // namespace laplace
