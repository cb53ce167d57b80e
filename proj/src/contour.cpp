#include "laplace/contour.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iterator>
#include <ostream>

namespace laplace {

namespace {

struct Point {
    double x, y;
};

// Crossing of a level along the edge from (xa, ya, va) to (xb, yb, vb).
Point edge_crossing(double level, double xa, double ya, double va, double xb, double yb,
                    double vb) {
    double t = (level - va) / (vb - va);
    return {xa + t * (xb - xa), ya + t * (yb - ya)};
}

} // namespace

std::vector<ContourLevel> compute_contours(const ScalarField& field, int levels) {
    if (levels < 1) throw Error("compute_contours: levels must be >= 1");
    const GridSpec& g = field.spec();

    double lo = field(0, 0);
    double hi = field(0, 0);
    for (double v : field.values()) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }

    std::vector<ContourLevel> out(levels);
    for (int k = 0; k < levels; ++k) {
        out[k].value = lo + (k + 1) * (hi - lo) / (levels + 1);
    }
    if (!(hi > lo)) return out; // constant field: no crossings

    for (auto& contour : out) {
        const double level = contour.value;
        for (int j = 0; j < g.n - 1; ++j) {
            for (int i = 0; i < g.m - 1; ++i) {
                double v0 = field(i, j);         // bottom-left
                double v1 = field(i + 1, j);     // bottom-right
                double v2 = field(i + 1, j + 1); // top-right
                double v3 = field(i, j + 1);     // top-left
                int idx = (v0 >= level ? 1 : 0) | (v1 >= level ? 2 : 0) |
                          (v2 >= level ? 4 : 0) | (v3 >= level ? 8 : 0);
                if (idx == 0 || idx == 15) continue;

                double x0 = g.x(i), x1 = g.x(i + 1);
                double y0 = g.y(j), y1 = g.y(j + 1);
                auto bottom = [&] { return edge_crossing(level, x0, y0, v0, x1, y0, v1); };
                auto right = [&] { return edge_crossing(level, x1, y0, v1, x1, y1, v2); };
                auto top = [&] { return edge_crossing(level, x0, y1, v3, x1, y1, v2); };
                auto left = [&] { return edge_crossing(level, x0, y0, v0, x0, y1, v3); };

                auto emit = [&](Point a, Point b) {
                    if (std::hypot(b.x - a.x, b.y - a.y) < 1e-12) return;
                    contour.segments.push_back({a.x, a.y, b.x, b.y});
                };

                switch (idx) {
                    case 1: emit(left(), bottom()); break;
                    case 2: emit(bottom(), right()); break;
                    case 3: emit(left(), right()); break;
                    case 4: emit(right(), top()); break;
                    case 6: emit(bottom(), top()); break;
                    case 7: emit(left(), top()); break;
                    case 8: emit(top(), left()); break;
                    case 9: emit(top(), bottom()); break;
                    case 11: emit(top(), right()); break;
                    case 12: emit(right(), left()); break;
                    case 13: emit(right(), bottom()); break;
                    case 14: emit(bottom(), left()); break;
                    case 5: // saddle: bottom-left and top-right inside
                        if (0.25 * (v0 + v1 + v2 + v3) >= level) {
                            emit(left(), top());
                            emit(bottom(), right());
                        } else {
                            emit(left(), bottom());
                            emit(right(), top());
                        }
                        break;
                    case 10: // saddle: bottom-right and top-left inside
                        if (0.25 * (v0 + v1 + v2 + v3) >= level) {
                            emit(left(), bottom());
                            emit(right(), top());
                        } else {
                            emit(left(), top());
                            emit(bottom(), right());
                        }
                        break;
                    default: break;
                }
            }
        }
    }
    return out;
}

namespace {

const char* kPalette[] = {
    "#1b6ca8", "#2a9d8f", "#e9c46a", "#f4a261", "#e76f51",
    "#9b5de5", "#00b4d8", "#588157", "#bc4749", "#6c757d",
};

void write_number(std::ostream& os, double v) {
    char buf[48];
    int len = std::snprintf(buf, sizeof(buf), "%.6g", v);
    os.write(buf, len);
}

} // namespace

void write_contour_svg(std::ostream& os, const GridSpec& spec,
                       const std::vector<ContourLevel>& contours) {
    const double lx = spec.lx();
    const double ly = spec.ly();
    const double margin = 0.05 * std::max(lx, ly);
    const double scale = 160.0; // px per physical unit
    // SVG y points down; flip about the domain height
    auto flip = [&](double y) { return ly - y; };

    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
       << static_cast<int>((lx + 2 * margin) * scale) << "\" height=\""
       << static_cast<int>((ly + 2 * margin) * scale) << "\" viewBox=\"";
    write_number(os, -margin);
    os << ' ';
    write_number(os, -margin);
    os << ' ';
    write_number(os, lx + 2 * margin);
    os << ' ';
    write_number(os, ly + 2 * margin);
    os << "\">\n";

    os << "  <rect x=\"0\" y=\"0\" width=\"";
    write_number(os, lx);
    os << "\" height=\"";
    write_number(os, ly);
    os << "\" fill=\"none\" stroke=\"#333333\" stroke-width=\"";
    write_number(os, 0.012 * std::max(lx, ly));
    os << "\"/>\n";

    const double stroke = 0.008 * std::max(lx, ly);
    for (size_t k = 0; k < contours.size(); ++k) {
        const auto& contour = contours[k];
        os << "  <g id=\"level-" << k << "\" data-level=\"";
        write_number(os, contour.value);
        os << "\" fill=\"none\" stroke=\"" << kPalette[k % std::size(kPalette)]
           << "\" stroke-width=\"";
        write_number(os, stroke);
        os << "\">\n";
        for (const auto& s : contour.segments) {
            os << "    <polyline points=\"";
            write_number(os, s.x1);
            os << ',';
            write_number(os, flip(s.y1));
            os << ' ';
            write_number(os, s.x2);
            os << ',';
            write_number(os, flip(s.y2));
            os << "\"/>\n";
        }
        os << "  </g>\n";
    }
    os << "</svg>\n";
}

} // namespace laplace
