#pragma once

#include <utility>
#include <vector>

#include "laplace/grid.hpp"

namespace laplace {

/// Dense N x N system over the interior points of a problem, ordered
/// row-major in j then i. Test oracle only; never on the production solve
/// path.
struct DenseSystem {
    int n = 0;
    std::vector<double> a; // row-major n*n
    std::vector<double> b;
    std::vector<std::pair<int, int>> points; // unknown index -> (i, j)
    ProblemSpec problem;

    double at(int row, int col) const { return a[static_cast<size_t>(row) * n + col]; }
    double& at(int row, int col) { return a[static_cast<size_t>(row) * n + col]; }
};

/// Assembles the five-point stencil equations: diagonal 2(1+beta^2),
/// x-neighbors -1, y-neighbors -beta^2, Dirichlet neighbor contributions
/// moved to b. Guards against more than 10000 interior points.
DenseSystem assemble_dense(const ProblemSpec& problem);

/// Gaussian elimination with partial pivoting on a row-major n x n matrix.
/// Throws SingularSystemError when no usable pivot remains.
std::vector<double> solve_linear_system(std::vector<double> a, std::vector<double> b, int n);

/// Solves the assembled system and scatters the unknowns back into a field
/// with the Dirichlet values applied.
ScalarField dense_solve(const DenseSystem& sys);

/// assemble_dense + dense_solve.
ScalarField dense_solve(const ProblemSpec& problem);

} // namespace laplace
