#include "laplace/grid.hpp"

#include <cmath>
#include <sstream>

namespace laplace {

GridSpec::GridSpec(int m_, int n_, double dx_, double dy_)
    : m(m_), n(n_), dx(dx_), dy(dy_) {
    if (m < 3 || n < 3) {
        std::ostringstream msg;
        msg << "grid must be at least 3x3 (one interior point per direction), got "
            << m << "x" << n;
        throw SizingError(msg.str());
    }
    if (!(dx > 0.0) || !(dy > 0.0) || !std::isfinite(dx) || !std::isfinite(dy)) {
        throw SizingError("grid spacings must be finite and positive");
    }
}

namespace {

int points_along(double length, double spacing, const char* axis) {
    if (!(length > 0.0)) {
        throw SizingError(std::string("domain length in ") + axis + " must be positive");
    }
    double q = length / spacing;
    double r = std::round(q);
    if (std::abs(q - r) > 1e-9) {
        std::ostringstream msg;
        msg << axis << " length " << length << " is not an integer multiple of spacing "
            << spacing;
        throw SizingError(msg.str());
    }
    return static_cast<int>(r) + 1;
}

} // namespace

GridSpec make_grid(double lx, double ly, double dx, double dy) {
    if (!(dx > 0.0) || !(dy > 0.0)) {
        throw SizingError("grid spacings must be positive");
    }
    return GridSpec(points_along(lx, dx, "x"), points_along(ly, dy, "y"), dx, dy);
}

bool ScalarField::all_finite() const {
    for (double v : values_) {
        if (!std::isfinite(v)) return false;
    }
    return true;
}

void ScalarField::add(const ScalarField& other) {
    if (other.spec_ != spec_) {
        throw Error("field addition: dimensions do not match");
    }
    for (size_t k = 0; k < values_.size(); ++k) {
        values_[k] += other.values_[k];
    }
}

void BoundaryMask::set_dirichlet(int i, int j, double value) {
    assert(spec_.contains(i, j));
    size_t k = static_cast<size_t>(j) * spec_.m + i;
    dirichlet_[k] = 1;
    value_[k] = value;
}

void BoundaryMask::set_interior(int i, int j) {
    assert(spec_.contains(i, j));
    size_t k = static_cast<size_t>(j) * spec_.m + i;
    dirichlet_[k] = 0;
    value_[k] = 0.0;
}

int BoundaryMask::dirichlet_count() const {
    int count = 0;
    for (uint8_t d : dirichlet_) count += d != 0;
    return count;
}

int BoundaryMask::interior_count() const {
    return spec_.total_points() - dirichlet_count();
}

void BoundaryMask::apply_to(ScalarField& field) const {
    if (field.spec() != spec_) {
        throw Error("boundary mask: field dimensions do not match");
    }
    for (int j = 0; j < spec_.n; ++j) {
        for (int i = 0; i < spec_.m; ++i) {
            if (is_dirichlet(i, j)) field(i, j) = dirichlet_value(i, j);
        }
    }
}

void BoundaryMask::validate() const {
    for (int j = 0; j < spec_.n; ++j) {
        for (int i = 0; i < spec_.m; ++i) {
            if (spec_.on_edge(i, j) && !is_dirichlet(i, j)) {
                std::ostringstream msg;
                msg << "outer-rectangle point (" << i << ", " << j << ") is not Dirichlet";
                throw Error(msg.str());
            }
            if (is_dirichlet(i, j) && !std::isfinite(dirichlet_value(i, j))) {
                std::ostringstream msg;
                msg << "Dirichlet value at (" << i << ", " << j << ") is not finite";
                throw Error(msg.str());
            }
        }
    }
    if (interior_count() == 0) {
        throw Error("mask has no interior points");
    }
}

bool BoundaryMask::operator==(const BoundaryMask& other) const {
    if (spec_ != other.spec_ || dirichlet_ != other.dirichlet_) return false;
    for (size_t k = 0; k < value_.size(); ++k) {
        if (dirichlet_[k] && value_[k] != other.value_[k]) return false;
    }
    return true;
}

ScalarField ProblemSpec::initial_field() const {
    ScalarField field(grid, 0.0);
    mask.apply_to(field);
    return field;
}

void ProblemSpec::validate() const {
    if (mask.spec() != grid) {
        throw Error("problem \"" + name + "\": mask dimensions do not match grid");
    }
    mask.validate();
}

} // namespace laplace
