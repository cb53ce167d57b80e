#pragma once

#include <iosfwd>
#include <vector>

#include "laplace/grid.hpp"

namespace laplace {

struct ContourSegment {
    double x1, y1, x2, y2;
};

struct ContourLevel {
    double value = 0.0;
    std::vector<ContourSegment> segments;
};

/// Iso-lines of the field at `levels` evenly spaced values strictly between
/// the field minimum and maximum: value_k = min + k (max - min) / (levels + 1)
/// for k = 1..levels. Marching squares with linear edge interpolation;
/// saddle cells are resolved by the sign of the cell average. A constant
/// field yields empty levels. Deterministic for identical input.
std::vector<ContourLevel> compute_contours(const ScalarField& field, int levels);

/// SVG 1.1 document in physical coordinates (y up), one <g> per level with
/// one <polyline> per segment.
void write_contour_svg(std::ostream& os, const GridSpec& spec,
                       const std::vector<ContourLevel>& contours);

} // namespace laplace
