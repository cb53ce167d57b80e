// Command-line workbench: single solves, method comparison, relaxation
// sweeps, timing benchmarks and contour export for the 2D Laplace solvers.
//
// Exit codes: 0 success/converged, 1 usage or input error, 2 numerical
// failure (divergence or no convergence within the iteration cap).

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "laplace/bench.hpp"
#include "laplace/contour.hpp"
#include "laplace/io.hpp"
#include "laplace/multigrid.hpp"
#include "laplace/problems.hpp"
#include "laplace/solver.hpp"
#include "laplace/stencil.hpp"

namespace {

struct ProblemFlags {
    std::string problem_path;
    std::string preset = "chamber";
    double top_value = 1.0;
};

void add_problem_flags(CLI::App* cmd, ProblemFlags& flags) {
    auto* problem = cmd->add_option("--problem", flags.problem_path,
                                    "Problem JSON file (see README for the schema)")
                        ->check(CLI::ExistingFile);
    cmd->add_option("--preset", flags.preset, "Built-in problem: chamber|symmetric")
        ->check(CLI::IsMember({"chamber", "symmetric"}))
        ->excludes(problem);
    cmd->add_option("--top-value", flags.top_value,
                    "Wall value for the preset problems (default 1.0)");
}

laplace::ProblemSpec resolve_problem(const ProblemFlags& flags) {
    if (!flags.problem_path.empty()) return laplace::load_problem(flags.problem_path);
    if (flags.preset == "symmetric") return laplace::symmetric_chamber_problem(flags.top_value);
    return laplace::chamber_problem(flags.top_value);
}

std::vector<laplace::Method> parse_methods(const std::vector<std::string>& tokens) {
    std::vector<laplace::Method> methods;
    methods.reserve(tokens.size());
    for (const auto& token : tokens) methods.push_back(laplace::parse_method(token));
    return methods;
}

const std::vector<std::string> kAllMethods = {"jacobi", "gs", "sor", "slora",
                                              "slorb", "adi", "mg"};

void write_to(const std::string& path, const auto& writer) {
    if (path.empty()) {
        writer(std::cout);
    } else {
        std::ofstream out(path);
        if (!out) throw laplace::Error("cannot open \"" + path + "\" for writing");
        writer(out);
    }
}

int cmd_solve(const ProblemFlags& problem_flags, const laplace::SolverConfig& config,
              const std::string& method_token, const std::string& out_field,
              const std::string& out_history, const std::string& out_trace) {
    laplace::SolverConfig cfg = config;
    cfg.method = laplace::parse_method(method_token);
    if (!out_trace.empty() && cfg.method != laplace::Method::Multigrid) {
        throw laplace::Error("--out-trace is only available with --method mg");
    }

    laplace::ProblemSpec problem = resolve_problem(problem_flags);

    laplace::SolveResult result;
    if (cfg.method == laplace::Method::Multigrid && !out_trace.empty()) {
        laplace::MultigridResult mg = laplace::solve_multigrid(problem, cfg);
        laplace::save_trace(mg.trace, out_trace);
        result = {std::move(mg.field), std::move(mg.history)};
    } else {
        result = laplace::solve(problem, cfg);
    }

    if (!out_field.empty()) laplace::save_field(result.field, out_field);
    if (!out_history.empty()) laplace::save_history(result.history, out_history);

    const auto& h = result.history;
    if (!h.warning.empty()) std::cerr << "warning: " << h.warning << '\n';
    std::cout << "method=" << h.method << " omega=" << laplace::format_double(h.omega)
              << " iterations=" << h.iterations
              << " converged=" << (h.converged ? "true" : "false")
              << " final_error=" << laplace::format_double(h.final_error())
              << " max_residual="
              << laplace::format_double(
                     laplace::max_abs(laplace::residual(result.field, problem.mask)))
              << " time_ms=" << laplace::format_double(h.wall_time_ms) << '\n';
    return h.converged ? 0 : 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"2D Laplace-equation solver workbench"};
    app.require_subcommand(1);

    // solve
    auto* solve_cmd = app.add_subcommand("solve", "Solve one problem with one method");
    ProblemFlags solve_problem;
    add_problem_flags(solve_cmd, solve_problem);
    std::string solve_method = "gs";
    laplace::SolverConfig solve_config;
    std::string out_field, out_history, out_trace;
    solve_cmd->add_option("--method", solve_method, "jacobi|gs|sor|slora|slorb|adi|mg");
    solve_cmd->add_option("--omega", solve_config.omega, "Relaxation factor (default 1.0)");
    solve_cmd->add_option("--tol", solve_config.tol, "Convergence tolerance (default 1e-9)");
    solve_cmd->add_option("--max-iter", solve_config.max_iter,
                          "Iteration cap (default 100000)");
    solve_cmd->add_option("--mg-levels", solve_config.mg_levels,
                          "Multigrid levels (default 3)");
    solve_cmd->add_option("--mg-nu", solve_config.mg_smooth_iters,
                          "Smoothing iterations per level (default 3)");
    solve_cmd->add_option("--out-field", out_field, "Write the final field CSV here");
    solve_cmd->add_option("--out-history", out_history, "Write the convergence CSV here");
    solve_cmd->add_option("--out-trace", out_trace, "Write the V-cycle trace CSV (mg only)");

    // compare
    auto* compare_cmd = app.add_subcommand("compare", "Run several methods on one problem");
    ProblemFlags compare_problem;
    add_problem_flags(compare_cmd, compare_problem);
    std::vector<std::string> compare_methods = kAllMethods;
    std::vector<double> compare_omegas;
    std::string compare_out;
    laplace::SolverConfig compare_config;
    compare_cmd->add_option("--methods", compare_methods, "Comma-separated method list")
        ->delimiter(',');
    compare_cmd->add_option("--omegas", compare_omegas, "Matching relaxation factors")
        ->delimiter(',');
    compare_cmd->add_option("--tol", compare_config.tol, "Convergence tolerance");
    compare_cmd->add_option("--max-iter", compare_config.max_iter, "Iteration cap");
    compare_cmd->add_option("--out", compare_out, "Report CSV path (default stdout)");

    // sweep
    auto* sweep_cmd = app.add_subcommand("sweep", "Relaxation-parameter sweep");
    ProblemFlags sweep_problem;
    add_problem_flags(sweep_cmd, sweep_problem);
    std::string sweep_method;
    double omega_from = 1.0, omega_to = 1.95, omega_step = 0.05;
    std::string sweep_out;
    laplace::SolverConfig sweep_config;
    sweep_cmd->add_option("--method", sweep_method, "sor|slora|slorb|adi")->required();
    sweep_cmd->add_option("--omega-from", omega_from, "First omega (default 1.0)");
    sweep_cmd->add_option("--omega-to", omega_to, "Last omega (default 1.95)");
    sweep_cmd->add_option("--omega-step", omega_step, "Omega increment (default 0.05)");
    sweep_cmd->add_option("--tol", sweep_config.tol, "Convergence tolerance");
    sweep_cmd->add_option("--max-iter", sweep_config.max_iter, "Iteration cap");
    sweep_cmd->add_option("--out", sweep_out, "Sweep CSV path (default stdout)");

    // contour
    auto* contour_cmd = app.add_subcommand("contour", "Render iso-lines of a field CSV");
    std::string contour_field, contour_out;
    int contour_levels = 11;
    contour_cmd->add_option("--field", contour_field, "Field CSV produced by solve")
        ->required();
    contour_cmd->add_option("--out", contour_out, "SVG output path")->required();
    contour_cmd->add_option("--levels", contour_levels, "Number of iso-levels (default 11)");

    // bench
    auto* bench_cmd = app.add_subcommand("bench", "Median-of-N timing benchmark");
    ProblemFlags bench_problem;
    add_problem_flags(bench_cmd, bench_problem);
    std::vector<std::string> bench_methods = kAllMethods;
    std::vector<double> bench_omegas;
    int bench_repeat = 10;
    std::string bench_out;
    laplace::SolverConfig bench_config;
    bench_cmd->add_option("--methods", bench_methods, "Comma-separated method list")
        ->delimiter(',');
    bench_cmd->add_option("--omegas", bench_omegas, "Matching relaxation factors")
        ->delimiter(',');
    bench_cmd->add_option("--repeat", bench_repeat, "Repeats per method (default 10)");
    bench_cmd->add_option("--tol", bench_config.tol, "Convergence tolerance");
    bench_cmd->add_option("--max-iter", bench_config.max_iter, "Iteration cap");
    bench_cmd->add_option("--out", bench_out, "Report CSV path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (solve_cmd->parsed()) {
            return cmd_solve(solve_problem, solve_config, solve_method, out_field,
                             out_history, out_trace);
        }
        if (compare_cmd->parsed()) {
            laplace::RunReport report =
                laplace::run_compare(resolve_problem(compare_problem),
                                     parse_methods(compare_methods), compare_omegas,
                                     compare_config);
            write_to(compare_out,
                     [&](std::ostream& os) { laplace::write_report_csv(os, report); });
            for (const auto& row : report.rows) {
                if (!row.converged) return 2;
            }
            return 0;
        }
        if (sweep_cmd->parsed()) {
            laplace::SweepResult sweep =
                laplace::run_sweep(resolve_problem(sweep_problem),
                                   laplace::parse_method(sweep_method), omega_from,
                                   omega_to, omega_step, sweep_config);
            write_to(sweep_out,
                     [&](std::ostream& os) { laplace::write_sweep_csv(os, sweep); });
            if (!sweep.has_best) {
                std::cerr << "no omega in the sweep converged\n";
                return 2;
            }
            std::cout << "# best_omega=" << laplace::format_double(sweep.best_omega)
                      << " iterations=" << sweep.best_iterations << '\n';
            return 0;
        }
        if (contour_cmd->parsed()) {
            laplace::ScalarField field = laplace::load_field(contour_field);
            auto contours = laplace::compute_contours(field, contour_levels);
            std::ofstream out(contour_out);
            if (!out) throw laplace::Error("cannot open \"" + contour_out + "\" for writing");
            laplace::write_contour_svg(out, field.spec(), contours);
            return 0;
        }
        if (bench_cmd->parsed()) {
            laplace::BenchReport report =
                laplace::run_bench(resolve_problem(bench_problem),
                                   parse_methods(bench_methods), bench_omegas,
                                   bench_repeat, bench_config);
            write_to(bench_out,
                     [&](std::ostream& os) { laplace::write_bench_csv(os, report); });
            for (const auto& row : report.rows) {
                if (!row.converged) return 2;
            }
            return 0;
        }
    } catch (const laplace::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
