#include "laplace/direct_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace laplace {

DenseSystem assemble_dense(const ProblemSpec& problem) {
    problem.validate();
    const GridSpec& g = problem.grid;
    const BoundaryMask& mask = problem.mask;

    const int unknowns = mask.interior_count();
    if (unknowns > 10000) {
        std::ostringstream msg;
        msg << "assemble_dense: " << unknowns << " interior points exceeds the 10000 guard";
        throw Error(msg.str());
    }

    DenseSystem sys;
    sys.n = unknowns;
    sys.a.assign(static_cast<size_t>(unknowns) * unknowns, 0.0);
    sys.b.assign(unknowns, 0.0);
    sys.problem = problem;

    std::vector<int> index(static_cast<size_t>(g.total_points()), -1);
    for (int j = 0; j < g.n; ++j) {
        for (int i = 0; i < g.m; ++i) {
            if (mask.is_interior(i, j)) {
                index[static_cast<size_t>(j) * g.m + i] = static_cast<int>(sys.points.size());
                sys.points.emplace_back(i, j);
            }
        }
    }

    const double b2 = g.beta() * g.beta();
    for (int p = 0; p < sys.n; ++p) {
        auto [i, j] = sys.points[p];
        sys.at(p, p) = 2.0 * (1.0 + b2);
        // (di, dj, coefficient) of the four neighbors
        const int di[4] = {-1, 1, 0, 0};
        const int dj[4] = {0, 0, -1, 1};
        for (int k = 0; k < 4; ++k) {
            int ni = i + di[k];
            int nj = j + dj[k];
            double coeff = dj[k] == 0 ? 1.0 : b2;
            if (mask.is_interior(ni, nj)) {
                sys.at(p, index[static_cast<size_t>(nj) * g.m + ni]) = -coeff;
            } else {
                sys.b[p] += coeff * mask.dirichlet_value(ni, nj);
            }
        }
    }
    return sys;
}

std::vector<double> solve_linear_system(std::vector<double> a, std::vector<double> b, int n) {
    if (static_cast<int>(b.size()) != n || a.size() != static_cast<size_t>(n) * n) {
        throw Error("solve_linear_system: inconsistent sizes");
    }
    auto at = [&](int r, int c) -> double& { return a[static_cast<size_t>(r) * n + c]; };

    double scale = 0.0;
    for (double v : a) scale = std::max(scale, std::abs(v));

    for (int col = 0; col < n; ++col) {
        int pivot_row = col;
        double pivot = std::abs(at(col, col));
        for (int r = col + 1; r < n; ++r) {
            if (std::abs(at(r, col)) > pivot) {
                pivot = std::abs(at(r, col));
                pivot_row = r;
            }
        }
        if (pivot == 0.0 || pivot < 1e-14 * scale) {
            std::ostringstream msg;
            msg << "singular matrix: no usable pivot in column " << col;
            throw SingularSystemError(msg.str());
        }
        if (pivot_row != col) {
            for (int c = col; c < n; ++c) std::swap(at(col, c), at(pivot_row, c));
            std::swap(b[col], b[pivot_row]);
        }
        for (int r = col + 1; r < n; ++r) {
            double factor = at(r, col) / at(col, col);
            if (factor == 0.0) continue;
            at(r, col) = 0.0;
            for (int c = col + 1; c < n; ++c) at(r, c) -= factor * at(col, c);
            b[r] -= factor * b[col];
        }
    }

    std::vector<double> x(n);
    for (int r = n - 1; r >= 0; --r) {
        double sum = b[r];
        for (int c = r + 1; c < n; ++c) sum -= at(r, c) * x[c];
        x[r] = sum / at(r, r);
    }
    return x;
}

ScalarField dense_solve(const DenseSystem& sys) {
    std::vector<double> x = solve_linear_system(sys.a, sys.b, sys.n);
    ScalarField field = sys.problem.initial_field();
    for (int p = 0; p < sys.n; ++p) {
        field(sys.points[p].first, sys.points[p].second) = x[p];
    }
    return field;
}

ScalarField dense_solve(const ProblemSpec& problem) {
    return dense_solve(assemble_dense(problem));
}

} // namespace laplace
