#pragma once

#include "laplace/grid.hpp"

namespace laplace {

/// The 25x17 chamber on a 6m x 4m domain with 0.25m spacing.
///
/// Wall values: psi = 0 on the bottom wall, psi = top_value on the top and
/// side walls. The inlet/outlet gaps span exactly one grid interval on the
/// side walls adjacent to the bottom corners; the side-wall point one row
/// above each bottom corner (j = 1) carries the mean of the two adjoining
/// wall values.
ProblemSpec chamber_problem(double top_value = 1.0);

/// Chamber variant whose top wall carries the bottom wall's condition,
/// with the side-wall gap points mirrored at j = n-2. The mask is exactly
/// mirror-symmetric about the horizontal midline, so converged solutions
/// satisfy psi(i, j) = psi(i, n-1-j) up to solver tolerance.
ProblemSpec symmetric_chamber_problem(double top_value = 1.0);

} // namespace laplace
