#include <doctest.h>

#include <cmath>
#include <random>

#include "laplace/problems.hpp"
#include "laplace/solver.hpp"
#include "laplace/stencil.hpp"
#include "test_util.hpp"

using namespace laplace;

namespace {

ScalarField random_field(const GridSpec& g, std::mt19937& rng) {
    std::uniform_real_distribution<double> value(-1.0, 1.0);
    ScalarField f(g, 0.0);
    for (int j = 0; j < g.n; ++j) {
        for (int i = 0; i < g.m; ++i) f(i, j) = value(rng);
    }
    return f;
}

} // namespace

TEST_SUITE("stencil") {

TEST_CASE("constant and linear fields are annihilated") {
    std::mt19937 rng(3);
    ProblemSpec p = testing::random_rect_problem(7, 6, 0.5, 0.25, rng);

    ScalarField constant(p.grid, 4.75);
    ScalarField linear(p.grid, 0.0);
    for (int j = 0; j < p.grid.n; ++j) {
        for (int i = 0; i < p.grid.m; ++i) {
            linear(i, j) = 2.0 * p.grid.x(i) - 0.75 * p.grid.y(j);
        }
    }
    for (int j = 1; j < p.grid.n - 1; ++j) {
        for (int i = 1; i < p.grid.m - 1; ++i) {
            CHECK(laplace_apply(constant, p.mask, i, j) == doctest::Approx(0.0).epsilon(1e-12));
            CHECK(laplace_apply(linear, p.mask, i, j) == doctest::Approx(0.0).epsilon(1e-12));
        }
    }
}

TEST_CASE("quadratic x^2 on unit spacing gives exactly 2") {
    GridSpec g(5, 5, 1.0, 1.0);
    BoundaryMask mask(g);
    for (int j = 0; j < 5; ++j) {
        for (int i = 0; i < 5; ++i) {
            if (g.on_edge(i, j)) mask.set_dirichlet(i, j, 0.0);
        }
    }
    ScalarField f(g, 0.0);
    for (int j = 0; j < 5; ++j) {
        for (int i = 0; i < 5; ++i) f(i, j) = g.x(i) * g.x(i);
    }
    for (int j = 1; j < 4; ++j) {
        for (int i = 1; i < 4; ++i) CHECK(laplace_apply(f, mask, i, j) == 2.0);
    }
}

TEST_CASE("laplace_apply is linear") {
    std::mt19937 rng(17);
    ProblemSpec p = testing::random_rect_problem(9, 7, 0.25, 0.5, rng);
    for (int trial = 0; trial < 20; ++trial) {
        ScalarField u = random_field(p.grid, rng);
        ScalarField v = random_field(p.grid, rng);
        std::uniform_real_distribution<double> coeff(-2.0, 2.0);
        double alpha = coeff(rng);
        double beta = coeff(rng);

        ScalarField combo(p.grid, 0.0);
        for (int j = 0; j < p.grid.n; ++j) {
            for (int i = 0; i < p.grid.m; ++i) {
                combo(i, j) = alpha * u(i, j) + beta * v(i, j);
            }
        }
        for (int j = 1; j < p.grid.n - 1; ++j) {
            for (int i = 1; i < p.grid.m - 1; ++i) {
                double lhs = laplace_apply(combo, p.mask, i, j);
                double rhs = alpha * laplace_apply(u, p.mask, i, j) +
                             beta * laplace_apply(v, p.mask, i, j);
                double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
                CHECK(std::abs(lhs - rhs) <= 1e-12 * scale);
            }
        }
    }
}

TEST_CASE("residual is zero at Dirichlet points and equals forcing on a zero field") {
    std::mt19937 rng(23);
    ProblemSpec p = testing::random_rect_problem(8, 8, 1.0, 1.0, rng);

    ScalarField forcing = random_field(p.grid, rng);
    ScalarField zero(p.grid, 0.0);
    ResidualField r = residual(zero, p.mask, &forcing);
    for (int j = 0; j < p.grid.n; ++j) {
        for (int i = 0; i < p.grid.m; ++i) {
            if (p.mask.is_dirichlet(i, j)) {
                CHECK(r(i, j) == 0.0);
            } else {
                CHECK(r(i, j) == forcing(i, j));
            }
        }
    }
}

TEST_CASE("residual of a converged solve obeys the tolerance-scaled bound") {
    SolverConfig config;
    config.method = Method::GaussSeidel;
    ProblemSpec p = chamber_problem(1.0);
    SolveResult result = solve(p, config);
    REQUIRE(result.history.converged);
    double dmin = std::min(p.grid.dx * p.grid.dx, p.grid.dy * p.grid.dy);
    CHECK(max_abs(residual(result.field, p.mask)) <= 1e-6 / dmin);
}

TEST_CASE("infinity_error is a metric") {
    GridSpec g(4, 4, 1.0, 1.0);
    ScalarField a(g, 1.0);
    ScalarField b(g, 1.0);
    CHECK(infinity_error(a, b) == 0.0);

    b(2, 1) += 3.5;
    CHECK(infinity_error(a, b) == 3.5);
    CHECK(infinity_error(b, a) == 3.5);

    std::mt19937 rng(5);
    ScalarField u = random_field(g, rng);
    ScalarField v = random_field(g, rng);
    CHECK(infinity_error(u, v) == infinity_error(v, u));
    CHECK(infinity_error(u, v) >= 0.0);
    CHECK(infinity_error(u, u) == 0.0);
}

TEST_CASE("dimension mismatches are rejected") {
    ScalarField a(GridSpec(4, 4, 1.0, 1.0), 0.0);
    ScalarField b(GridSpec(4, 5, 1.0, 1.0), 0.0);
    CHECK_THROWS_AS(infinity_error(a, b), Error);
    std::mt19937 rng(1);
    ProblemSpec p = testing::random_rect_problem(4, 5, 1.0, 1.0, rng);
    CHECK_THROWS_AS(residual(a, p.mask), Error);
}

} // TEST_SUITE
