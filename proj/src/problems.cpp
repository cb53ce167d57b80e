#include "laplace/problems.hpp"

namespace laplace {

namespace {

// Both chamber variants share the side-wall layout: a one-interval gap next
// to each corner, realized as a transition point carrying the mean of the
// two adjoining wall values.
ProblemSpec build_chamber(double top_wall, double side_wall, bool mirror_gaps,
                          const std::string& name) {
    GridSpec grid = make_grid(6.0, 4.0, 0.25, 0.25); // 25x17
    BoundaryMask mask(grid);

    for (int i = 0; i < grid.m; ++i) {
        mask.set_dirichlet(i, 0, 0.0);
        mask.set_dirichlet(i, grid.n - 1, top_wall);
    }

    const double bottom_gap = 0.5 * (0.0 + side_wall);
    const double top_gap = 0.5 * (top_wall + side_wall);
    for (int j = 1; j < grid.n - 1; ++j) {
        double v = side_wall;
        if (j == 1) v = bottom_gap;
        if (mirror_gaps && j == grid.n - 2) v = top_gap;
        mask.set_dirichlet(0, j, v);
        mask.set_dirichlet(grid.m - 1, j, v);
    }

    ProblemSpec problem{grid, std::move(mask), name};
    problem.validate();
    return problem;
}

} // namespace

ProblemSpec chamber_problem(double top_value) {
    return build_chamber(top_value, top_value, false, "chamber");
}

ProblemSpec symmetric_chamber_problem(double top_value) {
    return build_chamber(0.0, top_value, true, "symmetric-chamber");
}

} // namespace laplace
