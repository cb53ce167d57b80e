#include "laplace/stencil.hpp"

#include <cmath>

namespace laplace {

double laplace_apply(const ScalarField& field, [[maybe_unused]] const BoundaryMask& mask,
                     int i, int j) {
    assert(mask.is_interior(i, j));
    const GridSpec& g = field.spec();
    double ddx = (field(i - 1, j) - 2.0 * field(i, j) + field(i + 1, j)) / (g.dx * g.dx);
    double ddy = (field(i, j - 1) - 2.0 * field(i, j) + field(i, j + 1)) / (g.dy * g.dy);
    return ddx + ddy;
}

ResidualField residual(const ScalarField& field, const BoundaryMask& mask,
                       const ScalarField* forcing) {
    const GridSpec& g = field.spec();
    if (mask.spec() != g || (forcing && forcing->spec() != g)) {
        throw Error("residual: dimensions do not match");
    }
    ResidualField r(g, 0.0);
    for (int j = 0; j < g.n; ++j) {
        for (int i = 0; i < g.m; ++i) {
            if (mask.is_interior(i, j)) {
                r(i, j) = laplace_apply(field, mask, i, j) + (forcing ? (*forcing)(i, j) : 0.0);
            }
        }
    }
    return r;
}

double infinity_error(const ScalarField& a, const ScalarField& b) {
    if (a.spec() != b.spec()) {
        throw Error("infinity_error: dimensions do not match");
    }
    // NaN differences stick so divergence is never masked by a later max.
    double worst = 0.0;
    const auto& va = a.values();
    const auto& vb = b.values();
    for (size_t k = 0; k < va.size(); ++k) {
        double d = std::abs(va[k] - vb[k]);
        if (d > worst || std::isnan(d)) worst = d;
    }
    return worst;
}

double max_abs(const ScalarField& f) {
    double worst = 0.0;
    for (double v : f.values()) {
        double d = std::abs(v);
        if (d > worst || std::isnan(d)) worst = d;
    }
    return worst;
}

} // namespace laplace
