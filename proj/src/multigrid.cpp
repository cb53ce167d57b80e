#include "laplace/multigrid.hpp"

#include <chrono>
#include <sstream>

#include "laplace/point_solvers.hpp"

namespace laplace {

MeshHierarchy build_hierarchy(const ProblemSpec& problem, int levels) {
    problem.validate();
    if (levels < 2) throw SizingError("hierarchy needs at least 2 levels");

    MeshHierarchy hier;
    hier.levels.push_back({problem.grid, problem.mask});

    for (int level = 2; level <= levels; ++level) {
        const MeshHierarchy::Level& fine = hier.levels.back();
        if ((fine.spec.m - 1) % 2 != 0 || (fine.spec.n - 1) % 2 != 0) {
            std::ostringstream msg;
            msg << "grid " << fine.spec.m << "x" << fine.spec.n
                << " cannot be coarsened to level " << level
                << " (point counts must stay odd)";
            throw SizingError(msg.str());
        }
        int cm = (fine.spec.m + 1) / 2;
        int cn = (fine.spec.n + 1) / 2;
        GridSpec coarse(cm, cn, 2.0 * fine.spec.dx, 2.0 * fine.spec.dy);

        // classification sampled at coincident points; correction values are 0
        BoundaryMask mask(coarse);
        for (int J = 0; J < cn; ++J) {
            for (int I = 0; I < cm; ++I) {
                if (fine.mask.is_dirichlet(2 * I, 2 * J)) mask.set_dirichlet(I, J, 0.0);
            }
        }
        mask.validate();
        hier.levels.push_back({coarse, std::move(mask)});
    }
    return hier;
}

ResidualField restrict_injection(const ResidualField& fine, const BoundaryMask& coarse_mask) {
    const GridSpec& cg = coarse_mask.spec();
    if (fine.spec().m != 2 * cg.m - 1 || fine.spec().n != 2 * cg.n - 1) {
        throw Error("restrict_injection: grids are not a 2:1 pair");
    }
    ResidualField coarse(cg, 0.0);
    for (int J = 0; J < cg.n; ++J) {
        for (int I = 0; I < cg.m; ++I) {
            if (coarse_mask.is_interior(I, J)) coarse(I, J) = fine(2 * I, 2 * J);
        }
    }
    return coarse;
}

ScalarField prolong_bilinear(const ScalarField& coarse, const BoundaryMask& fine_mask) {
    const GridSpec& fg = fine_mask.spec();
    const GridSpec& cg = coarse.spec();
    if (fg.m != 2 * cg.m - 1 || fg.n != 2 * cg.n - 1) {
        throw Error("prolong_bilinear: grids are not a 2:1 pair");
    }
    ScalarField fine(fg, 0.0);
    for (int j = 0; j < fg.n; ++j) {
        for (int i = 0; i < fg.m; ++i) {
            if (fine_mask.is_dirichlet(i, j)) continue;
            const int I = i / 2;
            const int J = j / 2;
            double v;
            if (i % 2 == 0 && j % 2 == 0) {
                v = coarse(I, J);
            } else if (j % 2 == 0) {
                v = 0.5 * (coarse(I, J) + coarse(I + 1, J));
            } else if (i % 2 == 0) {
                v = 0.5 * (coarse(I, J) + coarse(I, J + 1));
            } else {
                v = 0.25 * ((coarse(I, J) + coarse(I + 1, J)) +
                            (coarse(I, J + 1) + coarse(I + 1, J + 1)));
            }
            fine(i, j) = v;
        }
    }
    return fine;
}

namespace {

// Gauss-Seidel on L(u) + f = 0 until the iterate change reaches tol.
// Returns the iteration count; throws when the cap is exceeded.
int smooth_to_convergence(ScalarField& u, const BoundaryMask& mask, const ScalarField& f,
                          double tol, int max_iter) {
    ScalarField previous(u.spec());
    for (int iter = 1; iter <= max_iter; ++iter) {
        previous = u;
        gauss_seidel_sweep(u, mask, &f);
        if (infinity_error(u, previous) <= tol) return iter;
    }
    std::ostringstream msg;
    msg << "coarsest-level solve did not converge within " << max_iter << " iterations";
    throw Error(msg.str());
}

} // namespace

VCycleRecord v_cycle(const MeshHierarchy& hierarchy, ScalarField& field, int nu,
                     double coarse_tol, int coarse_max_iter) {
    const int depth = hierarchy.level_count();
    if (depth < 2) throw Error("v_cycle: hierarchy needs at least 2 levels");
    if (nu < 1) throw Error("v_cycle: nu must be >= 1");
    if (field.spec() != hierarchy.levels.front().spec) {
        throw Error("v_cycle: field dimensions do not match the finest level");
    }

    VCycleRecord record;
    const ScalarField start = field;

    // Level 0 works on the solution field itself; deeper levels work on
    // corrections with homogeneous Dirichlet data. f[l] is the forcing of
    // L(u) + f = 0.
    std::vector<ScalarField> corrections(depth);
    std::vector<ScalarField> f(depth);
    f[0] = ScalarField(hierarchy.levels[0].spec, 0.0);
    auto level_field = [&](int l) -> ScalarField& {
        return l == 0 ? field : corrections[l];
    };

    for (int l = 0; l < depth - 1; ++l) {
        const auto& level = hierarchy.levels[l];
        ScalarField& u = level_field(l);
        for (int s = 0; s < nu; ++s) gauss_seidel_sweep(u, level.mask, &f[l]);
        ResidualField defect = residual(u, level.mask, &f[l]);
        record.samples.push_back({l + 1, "pre", max_abs(defect)});

        const auto& next = hierarchy.levels[l + 1];
        f[l + 1] = restrict_injection(defect, next.mask);
        corrections[l + 1] = ScalarField(next.spec, 0.0);
    }

    {
        const auto& coarsest = hierarchy.levels[depth - 1];
        ScalarField& u = level_field(depth - 1);
        record.coarsest_iterations =
            smooth_to_convergence(u, coarsest.mask, f[depth - 1], coarse_tol,
                                  coarse_max_iter);
        ResidualField defect = residual(u, coarsest.mask, &f[depth - 1]);
        record.samples.push_back({depth, "coarse_solve", max_abs(defect)});
    }

    for (int l = depth - 2; l >= 0; --l) {
        const auto& level = hierarchy.levels[l];
        ScalarField& u = level_field(l);
        u.add(prolong_bilinear(level_field(l + 1), level.mask));
        for (int s = 0; s < nu; ++s) gauss_seidel_sweep(u, level.mask, &f[l]);
        ResidualField defect = residual(u, level.mask, &f[l]);
        record.samples.push_back({l + 1, "post", max_abs(defect)});
    }

    record.cycle_error = infinity_error(field, start);
    return record;
}

MultigridResult solve_multigrid(const ProblemSpec& problem, const SolverConfig& config,
                                const ScalarField* initial) {
    problem.validate();
    MeshHierarchy hierarchy = build_hierarchy(problem, config.mg_levels);

    ScalarField field = initial ? *initial : problem.initial_field();
    if (field.spec() != problem.grid) {
        throw Error("solve_multigrid: initial field dimensions do not match");
    }
    problem.mask.apply_to(field);

    MultigridResult result;
    result.history.method = method_name(Method::Multigrid);
    result.history.omega = config.omega;

    auto start = std::chrono::steady_clock::now();
    for (int cycle = 1; cycle <= config.mg_max_cycles; ++cycle) {
        VCycleRecord record = v_cycle(hierarchy, field, config.mg_smooth_iters,
                                      config.mg_coarse_tol, config.mg_coarse_max_iter);
        record.cycle = cycle;
        result.history.errors.push_back(record.cycle_error);
        result.trace.records.push_back(std::move(record));
        if (result.history.errors.back() <= config.tol) {
            result.history.converged = true;
            break;
        }
    }
    auto stop = std::chrono::steady_clock::now();

    result.history.iterations = static_cast<int>(result.history.errors.size());
    result.history.wall_time_ms =
        std::chrono::duration<double, std::milli>(stop - start).count();
    result.field = std::move(field);
    return result;
}

} // namespace laplace
