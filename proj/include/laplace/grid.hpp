#pragma once

#include <cassert>
#include <cstdint>
#include <string>
#include <vector>

#include "laplace/errors.hpp"

namespace laplace {

/// Uniform rectangular grid: m points along x, n points along y,
/// spacings dx and dy. Indexing is (i, j) = (column, row) with the
/// origin at the bottom-left corner.
struct GridSpec {
    int m = 0;
    int n = 0;
    double dx = 0.0;
    double dy = 0.0;

    GridSpec() = default;
    GridSpec(int m_, int n_, double dx_, double dy_);

    /// Grid aspect ratio dx/dy.
    double beta() const { return dx / dy; }

    double lx() const { return (m - 1) * dx; }
    double ly() const { return (n - 1) * dy; }
    int total_points() const { return m * n; }

    double x(int i) const { return i * dx; }
    double y(int j) const { return j * dy; }

    bool contains(int i, int j) const { return i >= 0 && i < m && j >= 0 && j < n; }
    bool on_edge(int i, int j) const { return i == 0 || i == m - 1 || j == 0 || j == n - 1; }

    bool operator==(const GridSpec&) const = default;
};

/// Builds a grid for a domain of lx x ly with the given spacings.
/// Lengths must be integer multiples of the spacings (within 1e-9).
GridSpec make_grid(double lx, double ly, double dx, double dy);

/// An m x n array of values over a grid, stored row-major in j.
class ScalarField {
public:
    ScalarField() = default;
    explicit ScalarField(const GridSpec& spec, double fill = 0.0)
        : spec_(spec), values_(static_cast<size_t>(spec.total_points()), fill) {}

    const GridSpec& spec() const { return spec_; }

    double operator()(int i, int j) const {
        assert(spec_.contains(i, j));
        return values_[static_cast<size_t>(j) * spec_.m + i];
    }
    double& operator()(int i, int j) {
        assert(spec_.contains(i, j));
        return values_[static_cast<size_t>(j) * spec_.m + i];
    }

    const std::vector<double>& values() const { return values_; }

    bool all_finite() const;

    /// Elementwise a += b. Dimensions must agree.
    void add(const ScalarField& other);

    bool operator==(const ScalarField&) const = default;

private:
    GridSpec spec_;
    std::vector<double> values_;
};

/// Per-point classification of a grid: interior unknowns vs. Dirichlet
/// points carrying a prescribed value. Any point may be Dirichlet, not
/// just the outer rectangle, so interior wall segments are expressible
/// as data.
class BoundaryMask {
public:
    BoundaryMask() = default;
    explicit BoundaryMask(const GridSpec& spec)
        : spec_(spec),
          dirichlet_(static_cast<size_t>(spec.total_points()), 0),
          value_(static_cast<size_t>(spec.total_points()), 0.0) {}

    const GridSpec& spec() const { return spec_; }

    void set_dirichlet(int i, int j, double value);
    void set_interior(int i, int j);

    bool is_dirichlet(int i, int j) const {
        assert(spec_.contains(i, j));
        return dirichlet_[static_cast<size_t>(j) * spec_.m + i] != 0;
    }
    bool is_interior(int i, int j) const { return !is_dirichlet(i, j); }

    double dirichlet_value(int i, int j) const {
        assert(is_dirichlet(i, j));
        return value_[static_cast<size_t>(j) * spec_.m + i];
    }

    int dirichlet_count() const;
    int interior_count() const;

    /// Overwrites field values at Dirichlet points with the prescribed values.
    void apply_to(ScalarField& field) const;

    /// Checks the mask invariants: the outer rectangle is fully Dirichlet,
    /// at least one interior point exists, all prescribed values are finite.
    /// Throws Error on violation.
    void validate() const;

    bool operator==(const BoundaryMask& other) const;

private:
    GridSpec spec_;
    std::vector<uint8_t> dirichlet_;
    std::vector<double> value_;
};

/// A named grid + boundary mask pair, the input to every solver.
struct ProblemSpec {
    GridSpec grid;
    BoundaryMask mask;
    std::string name;

    /// Zero field with the Dirichlet values applied.
    ScalarField initial_field() const;

    void validate() const;
};

} // namespace laplace
