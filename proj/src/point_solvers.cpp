#include "laplace/point_solvers.hpp"

namespace laplace {

ScalarField jacobi_sweep(const ScalarField& old_field, const BoundaryMask& mask) {
    const GridSpec& g = old_field.spec();
    if (mask.spec() != g) throw Error("jacobi_sweep: dimensions do not match");

    const double b2 = g.beta() * g.beta();
    const double inv_denom = 1.0 / (2.0 * (1.0 + b2));

    ScalarField out(g, 0.0);
    for (int j = 0; j < g.n; ++j) {
        for (int i = 0; i < g.m; ++i) {
            if (mask.is_interior(i, j)) {
                out(i, j) = (old_field(i + 1, j) + old_field(i - 1, j) +
                             b2 * (old_field(i, j + 1) + old_field(i, j - 1))) *
                            inv_denom;
            } else {
                out(i, j) = mask.dirichlet_value(i, j);
            }
        }
    }
    return out;
}

void gauss_seidel_sweep(ScalarField& field, const BoundaryMask& mask,
                        const ScalarField* forcing) {
    const GridSpec& g = field.spec();
    if (mask.spec() != g || (forcing && forcing->spec() != g)) {
        throw Error("gauss_seidel_sweep: dimensions do not match");
    }

    const double b2 = g.beta() * g.beta();
    const double dx2 = g.dx * g.dx;
    const double inv_denom = 1.0 / (2.0 * (1.0 + b2));

    for (int j = 0; j < g.n; ++j) {
        for (int i = 0; i < g.m; ++i) {
            if (!mask.is_interior(i, j)) continue;
            double num = field(i + 1, j) + field(i - 1, j) +
                         b2 * (field(i, j + 1) + field(i, j - 1));
            if (forcing) num += dx2 * (*forcing)(i, j);
            field(i, j) = num * inv_denom;
        }
    }
}

void sor_sweep(ScalarField& field, const BoundaryMask& mask, double omega) {
    const GridSpec& g = field.spec();
    if (mask.spec() != g) throw Error("sor_sweep: dimensions do not match");

    const double b2 = g.beta() * g.beta();
    const double inv_denom = 1.0 / (2.0 * (1.0 + b2));

    for (int j = 0; j < g.n; ++j) {
        for (int i = 0; i < g.m; ++i) {
            if (!mask.is_interior(i, j)) continue;
            double candidate = (field(i + 1, j) + field(i - 1, j) +
                                b2 * (field(i, j + 1) + field(i, j - 1))) *
                               inv_denom;
            field(i, j) = (1.0 - omega) * field(i, j) + omega * candidate;
        }
    }
}

} // namespace laplace
