// Acceptance suite: runs every workbench requirement end to end and prints
// one PASS/FAIL line per criterion. Exits non-zero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>
#include <unistd.h>

#include "laplace/bench.hpp"
#include "laplace/direct_oracle.hpp"
#include "laplace/line_solvers.hpp"
#include "laplace/multigrid.hpp"
#include "laplace/problems.hpp"
#include "laplace/solver.hpp"
#include "laplace/stencil.hpp"

using namespace laplace;

namespace {

int g_failures = 0;
std::string g_cli_path;

void report(int number, const std::string& name, bool pass, const std::string& detail) {
    std::printf("[%2d/14] %s  %s (%s)\n", number, pass ? "PASS" : "FAIL", name.c_str(),
                detail.c_str());
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

void criterion(int number, const std::string& name,
               const std::function<std::pair<bool, std::string>()>& body) {
    try {
        auto [pass, detail] = body();
        report(number, name, pass, detail);
    } catch (const std::exception& e) {
        report(number, name, false, std::string("exception: ") + e.what());
    }
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(4);
    os << v;
    return os.str();
}

ProblemSpec random_rect(int m, int n, double dx, double dy, std::mt19937& rng) {
    GridSpec grid(m, n, dx, dy);
    BoundaryMask mask(grid);
    std::uniform_real_distribution<double> value(-1.0, 1.0);
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < m; ++i) {
            if (grid.on_edge(i, j)) mask.set_dirichlet(i, j, value(rng));
        }
    }
    return ProblemSpec{grid, std::move(mask), "random"};
}

SolveResult run(const ProblemSpec& p, Method method, double omega = 1.0) {
    SolverConfig config;
    config.method = method;
    config.omega = omega;
    if (method == Method::Multigrid) config.mg_levels = p.grid.m >= 17 ? 3 : 2;
    return solve(p, config);
}

double max_asymmetry(const ScalarField& f) {
    const int n = f.spec().n;
    double worst = 0.0;
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < f.spec().m; ++i) {
            worst = std::max(worst, std::abs(f(i, j) - f(i, n - 1 - j)));
        }
    }
    return worst;
}

// ---- criteria ----

std::pair<bool, std::string> oracle_equivalence() {
    auto start = std::chrono::steady_clock::now();
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> size(5, 9);
    const double spacings[] = {0.25, 0.5, 1.0};

    double worst = 0.0;
    int runs = 0;
    for (int trial = 0; trial < 20; ++trial) {
        int m = size(rng);
        int n = size(rng);
        double spacing = spacings[trial % 3];
        ProblemSpec p = random_rect(m, n, spacing, spacing, rng);
        ScalarField exact = dense_solve(p);

        struct Entry {
            Method method;
            double omega;
        };
        std::vector<Entry> entries = {{Method::Jacobi, 1.0}, {Method::GaussSeidel, 1.0},
                                      {Method::Sor, 1.5},    {Method::SlorA, 1.2},
                                      {Method::SlorB, 1.2},  {Method::Adi, 1.2}};
        if (m % 2 == 1 && n % 2 == 1) entries.push_back({Method::Multigrid, 1.0});

        for (const Entry& e : entries) {
            SolveResult result = run(p, e.method, e.omega);
            ++runs;
            if (!result.history.converged) {
                return {false, method_name(e.method) + " failed to converge on " +
                                   std::to_string(m) + "x" + std::to_string(n)};
            }
            worst = std::max(worst, infinity_error(result.field, exact));
        }
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool pass = worst <= 1e-6 && elapsed < 10.0;
    return {pass, std::to_string(runs) + " solves, worst |field - dense| = " + fmt(worst) +
                      ", " + fmt(elapsed) + " s"};
}

std::pair<bool, std::string> jacobi_gs_ratio() {
    ProblemSpec p = chamber_problem(1.0);
    int jacobi = run(p, Method::Jacobi).history.iterations;
    int gs = run(p, Method::GaussSeidel).history.iterations;
    double ratio = static_cast<double>(jacobi) / gs;
    return {ratio >= 1.8 && ratio <= 2.2,
            "jacobi " + std::to_string(jacobi) + " / gs " + std::to_string(gs) + " = " +
                fmt(ratio)};
}

std::pair<bool, std::string> gs_equals_sor_at_one() {
    ProblemSpec p = chamber_problem(1.0);
    SolveResult gs = run(p, Method::GaussSeidel);
    SolveResult sor = run(p, Method::Sor, 1.0);
    bool equal = gs.history.errors == sor.history.errors;
    return {equal, std::to_string(gs.history.iterations) +
                       " iterations, error sequences bitwise equal: " +
                       (equal ? "yes" : "no")};
}

std::pair<bool, std::string> line_beats_point() {
    ProblemSpec p = chamber_problem(1.0);
    int slorb = run(p, Method::SlorB, 1.0).history.iterations;
    int gs = run(p, Method::GaussSeidel).history.iterations;
    return {slorb < 0.75 * gs,
            "slorb " + std::to_string(slorb) + " vs gs " + std::to_string(gs)};
}

std::pair<bool, std::string> optimal_omega_windows() {
    ProblemSpec p = chamber_problem(1.0);
    SolverConfig base;
    struct Window {
        Method method;
        double lo, hi;
    };
    const Window windows[] = {{Method::Sor, 1.6, 1.95},
                              {Method::SlorA, 1.0, 2.0},
                              {Method::SlorB, 1.1, 1.4},
                              {Method::Adi, 1.15, 1.45}};
    std::string detail;
    bool pass = true;
    for (const Window& w : windows) {
        SweepResult sweep = run_sweep(p, w.method, 1.0, 1.95, 0.05, base);
        if (!sweep.has_best) return {false, method_name(w.method) + ": nothing converged"};
        double best = sweep.best_omega;
        bool inside = best > 1.0 + 1e-9 && best < 2.0 - 1e-9 && best >= w.lo - 1e-9 &&
                      best <= w.hi + 1e-9;
        pass = pass && inside;
        detail += method_name(w.method) + "=" + fmt(best) + " ";
    }
    return {pass, detail + "(windows sor[1.6,1.95] slorb[1.1,1.4] adi[1.15,1.45])"};
}

std::pair<bool, std::string> relaxation_acceleration() {
    ProblemSpec p = chamber_problem(1.0);
    SweepResult sweep = run_sweep(p, Method::Sor, 1.0, 1.95, 0.05, SolverConfig{});
    int plain = run(p, Method::Sor, 1.0).history.iterations;
    if (!sweep.has_best) return {false, "sweep found no converged omega"};
    return {sweep.best_iterations < 0.25 * plain,
            "sor(" + fmt(sweep.best_omega) + ") " + std::to_string(sweep.best_iterations) +
                " vs sor(1.0) " + std::to_string(plain)};
}

std::pair<bool, std::string> adi_vs_slorb_at_optima() {
    ProblemSpec p = chamber_problem(1.0);
    SweepResult adi = run_sweep(p, Method::Adi, 1.0, 1.95, 0.05, SolverConfig{});
    SweepResult slorb = run_sweep(p, Method::SlorB, 1.0, 1.95, 0.05, SolverConfig{});
    if (!adi.has_best || !slorb.has_best) return {false, "sweep found no converged omega"};
    bool pass = adi.best_iterations < slorb.best_iterations && adi.best_iterations < 100 &&
                slorb.best_iterations < 100;
    return {pass, "adi " + std::to_string(adi.best_iterations) + " @ " + fmt(adi.best_omega) +
                      " vs slorb " + std::to_string(slorb.best_iterations) + " @ " +
                      fmt(slorb.best_omega)};
}

std::pair<bool, std::string> multigrid_cycles() {
    ProblemSpec p = chamber_problem(1.0);
    SolveResult mg = run(p, Method::Multigrid);
    SolveResult gs = run(p, Method::GaussSeidel);
    double diff = infinity_error(mg.field, gs.field);
    bool pass = mg.history.converged && mg.history.iterations <= 10 && diff <= 1e-7;
    return {pass, std::to_string(mg.history.iterations) + " cycles, |mg - gs| = " + fmt(diff)};
}

std::pair<bool, std::string> residual_certificate() {
    ProblemSpec p = chamber_problem(1.0);
    const double bound = 1e-6 / std::min(p.grid.dx * p.grid.dx, p.grid.dy * p.grid.dy);
    struct Entry {
        Method method;
        double omega;
    };
    const Entry entries[] = {{Method::Jacobi, 1.0}, {Method::GaussSeidel, 1.0},
                             {Method::Sor, 1.5},    {Method::SlorA, 1.2},
                             {Method::SlorB, 1.2},  {Method::Adi, 1.2},
                             {Method::Multigrid, 1.0}};
    double worst = 0.0;
    for (const Entry& e : entries) {
        SolveResult result = run(p, e.method, e.omega);
        if (!result.history.converged) {
            return {false, method_name(e.method) + " did not converge"};
        }
        worst = std::max(worst, max_abs(residual(result.field, p.mask)));
    }
    return {worst <= bound, "worst max|L(psi)| = " + fmt(worst) + " <= " + fmt(bound)};
}

std::pair<bool, std::string> transfer_identities() {
    MeshHierarchy h = build_hierarchy(chamber_problem(1.0), 2);
    std::mt19937 rng(77);
    std::uniform_real_distribution<double> value(-1.0, 1.0);

    for (int trial = 0; trial < 100; ++trial) {
        ScalarField coarse(h.levels[1].spec, 0.0);
        for (int J = 0; J < coarse.spec().n; ++J) {
            for (int I = 0; I < coarse.spec().m; ++I) {
                if (h.levels[1].mask.is_interior(I, J)) coarse(I, J) = value(rng);
            }
        }
        ScalarField fine = prolong_bilinear(coarse, h.levels[0].mask);
        if (!(restrict_injection(fine, h.levels[1].mask) == coarse)) {
            return {false, "restrict(prolong(c)) != c at trial " + std::to_string(trial)};
        }
    }

    ScalarField constant(h.levels[1].spec, 0.8125);
    ScalarField fine = prolong_bilinear(constant, h.levels[0].mask);
    for (int j = 0; j < fine.spec().n; ++j) {
        for (int i = 0; i < fine.spec().m; ++i) {
            if (h.levels[0].mask.is_interior(i, j) && fine(i, j) != 0.8125) {
                return {false, "constant not reproduced at interior point"};
            }
        }
    }
    return {true, "100 random identities exact, constants exact"};
}

std::pair<bool, std::string> thomas_vs_dense() {
    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> size(1, 200);
    std::uniform_real_distribution<double> off(-1.0, 1.0);
    std::uniform_real_distribution<double> bump(0.1, 2.0);

    double worst = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = size(rng);
        TridiagonalSystem sys;
        sys.lower.resize(n - 1);
        sys.upper.resize(n - 1);
        sys.diag.resize(n);
        sys.rhs.resize(n);
        for (int k = 0; k < n - 1; ++k) {
            sys.lower[k] = off(rng);
            sys.upper[k] = off(rng);
        }
        for (int k = 0; k < n; ++k) {
            double row_off = (k > 0 ? std::abs(sys.lower[k - 1]) : 0.0) +
                             (k < n - 1 ? std::abs(sys.upper[k]) : 0.0);
            sys.diag[k] = (off(rng) < 0 ? -1.0 : 1.0) * (row_off + bump(rng));
            sys.rhs[k] = 5.0 * off(rng);
        }

        std::vector<double> x = thomas_solve(sys);

        std::vector<double> a(static_cast<size_t>(n) * n, 0.0);
        for (int k = 0; k < n; ++k) {
            a[static_cast<size_t>(k) * n + k] = sys.diag[k];
            if (k > 0) a[static_cast<size_t>(k) * n + k - 1] = sys.lower[k - 1];
            if (k < n - 1) a[static_cast<size_t>(k) * n + k + 1] = sys.upper[k];
        }
        std::vector<double> ref = solve_linear_system(std::move(a), sys.rhs, n);

        double scale = 1.0;
        for (double v : ref) scale = std::max(scale, std::abs(v));
        for (int k = 0; k < n; ++k) {
            worst = std::max(worst, std::abs(x[k] - ref[k]) / scale);
        }
    }
    if (worst > 1e-10) return {false, "worst relative error " + fmt(worst)};

    // zero pivots must raise, not return garbage
    TridiagonalSystem zero_head;
    zero_head.diag = {0.0, 1.0};
    zero_head.lower = {1.0};
    zero_head.upper = {1.0};
    zero_head.rhs = {1.0, 1.0};
    TridiagonalSystem singular;
    singular.diag = {1.0, 1.0};
    singular.lower = {1.0};
    singular.upper = {1.0};
    singular.rhs = {1.0, 2.0};
    for (const TridiagonalSystem* sys : {&zero_head, &singular}) {
        try {
            thomas_solve(*sys);
            return {false, "singular system did not raise"};
        } catch (const SingularSystemError&) {
        }
    }
    return {true, "1000 systems, worst relative error " + fmt(worst) +
                      "; singular inputs raise"};
}

std::pair<bool, std::string> symmetry() {
    ProblemSpec p = symmetric_chamber_problem(1.0);
    struct Entry {
        Method method;
        double omega;
    };
    const Entry entries[] = {{Method::Jacobi, 1.0}, {Method::GaussSeidel, 1.0},
                             {Method::Sor, 1.5},    {Method::SlorA, 1.2},
                             {Method::SlorB, 1.2},  {Method::Adi, 1.2},
                             {Method::Multigrid, 1.0}};
    double worst = 0.0;
    for (const Entry& e : entries) {
        SolveResult result = run(p, e.method, e.omega);
        if (!result.history.converged) {
            return {false, method_name(e.method) + " did not converge"};
        }
        worst = std::max(worst, max_asymmetry(result.field));
    }
    return {worst <= 1e-8, "worst asymmetry = " + fmt(worst)};
}

std::pair<bool, std::string> divergence_handling() {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() /
                   ("laplace_acceptance_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    std::string field = (dir / "field.csv").string();
    std::string history = (dir / "history.csv").string();

    std::string cmd = g_cli_path +
                      " solve --preset chamber --method sor --omega 2.5 --out-field " +
                      field + " --out-history " + history + " > " +
                      (dir / "out.txt").string() + " 2>&1";
    int status = std::system(cmd.c_str());
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    if (code != 2) return {false, "exit code " + std::to_string(code) + ", expected 2"};

    for (const std::string& path : {field, history}) {
        std::ifstream in(path);
        if (!in) return {false, path + " was not written"};
        std::stringstream buffer;
        buffer << in.rdbuf();
        std::string text = buffer.str();
        if (text.find("nan") != std::string::npos || text.find("inf") != std::string::npos) {
            return {false, path + " contains non-finite values"};
        }
    }

    // terminated by divergence detection, far below the iteration cap
    std::ifstream in(history);
    std::string line;
    int rows = -2; // discount metadata + header
    while (std::getline(in, line)) ++rows;
    if (rows >= 100000) return {false, "history has " + std::to_string(rows) + " rows"};
    return {true, "exit 2 after " + std::to_string(rows) + " recorded iterations, files finite"};
}

std::pair<bool, std::string> multigrid_fastest() {
    ProblemSpec p = chamber_problem(1.0);
    BenchReport report =
        run_bench(p, {Method::Multigrid, Method::Jacobi}, {}, 10, SolverConfig{});
    double mg = report.rows[0].median_time_ms;
    double jacobi = report.rows[1].median_time_ms;
    return {mg < jacobi,
            "median mg " + fmt(mg) + " ms vs median jacobi " + fmt(jacobi) + " ms"};
}

} // namespace

int main(int argc, char** argv) {
    g_cli_path = argc > 1 ? argv[1] : LAPLACE_CLI_PATH;

    criterion(1, "oracle equivalence on randomized problems", oracle_equivalence);
    criterion(2, "jacobi/gs iteration ratio in [1.8, 2.2]", jacobi_gs_ratio);
    criterion(3, "gs and sor(1.0) produce identical error sequences", gs_equals_sor_at_one);
    criterion(4, "unrelaxed line method beats gs by 25%", line_beats_point);
    criterion(5, "optimal omega windows", optimal_omega_windows);
    criterion(6, "sor at its optimum is 4x faster than unrelaxed", relaxation_acceleration);
    criterion(7, "adi beats slorb at their optima", adi_vs_slorb_at_optima);
    criterion(8, "multigrid converges within 10 cycles and matches gs", multigrid_cycles);
    criterion(9, "residual certificate for every converged field", residual_certificate);
    criterion(10, "transfer-operator identities", transfer_identities);
    criterion(11, "thomas matches dense elimination", thomas_vs_dense);
    criterion(12, "symmetric chamber yields symmetric fields", symmetry);
    criterion(13, "divergence exits with the numerical-failure code", divergence_handling);
    criterion(14, "multigrid outruns jacobi", multigrid_fastest);

    if (g_failures == 0) {
        std::printf("all 14 criteria passed\n");
        return 0;
    }
    std::printf("%d criteria FAILED\n", g_failures);
    return 1;
}
