#include "laplace/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <ostream>
#include <thread>

#include <sys/utsname.h>

#include "laplace/io.hpp"
#include "laplace/stencil.hpp"

namespace laplace {

namespace {

std::vector<double> resolve_omegas(const std::vector<Method>& methods,
                                   std::vector<double> omegas) {
    if (omegas.empty()) omegas.assign(methods.size(), 1.0);
    if (omegas.size() != methods.size()) {
        throw Error("omega list length does not match method list length");
    }
    return omegas;
}

RunRow solve_row(const ProblemSpec& problem, Method method, double omega,
                 const SolverConfig& base) {
    SolverConfig config = base;
    config.method = method;
    config.omega = omega;
    SolveResult result = solve(problem, config);

    RunRow row;
    row.method = method_name(method);
    row.omega = omega;
    row.iterations = result.history.iterations;
    row.half_sweeps = (method == Method::Adi ? 2 : 1) * result.history.iterations;
    row.converged = result.history.converged;
    row.wall_time_ms = result.history.wall_time_ms;
    row.final_error = result.history.final_error();
    row.max_residual = max_abs(residual(result.field, problem.mask));
    return row;
}

} // namespace

RunReport run_compare(const ProblemSpec& problem, const std::vector<Method>& methods,
                      std::vector<double> omegas, const SolverConfig& base) {
    omegas = resolve_omegas(methods, std::move(omegas));
    RunReport report;
    for (size_t k = 0; k < methods.size(); ++k) {
        report.rows.push_back(solve_row(problem, methods[k], omegas[k], base));
    }
    std::stable_sort(report.rows.begin(), report.rows.end(),
                     [](const RunRow& a, const RunRow& b) { return a.iterations < b.iterations; });
    return report;
}

void write_report_csv(std::ostream& os, const RunReport& report) {
    os << "method,omega,iterations,half_sweeps,converged,wall_time_ms,final_error,max_residual\n";
    for (const RunRow& r : report.rows) {
        os << r.method << ',' << format_double(r.omega) << ',' << r.iterations << ','
           << r.half_sweeps << ',' << (r.converged ? "true" : "false") << ','
           << format_double(r.wall_time_ms) << ',' << format_double(r.final_error) << ','
           << format_double(r.max_residual) << '\n';
    }
}

namespace {

int sweep_thread_count(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("LAPLACE_THREADS")) {
        int n = std::atoi(env);
        if (n > 0) return n;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

} // namespace

SweepResult run_sweep(const ProblemSpec& problem, Method method, double from, double to,
                      double step, const SolverConfig& base, int threads) {
    if (!(step > 0.0)) throw Error("sweep: omega step must be > 0");
    if (to < from) throw Error("sweep: omega range is empty");

    std::vector<double> omegas;
    for (int k = 0;; ++k) {
        double omega = from + k * step;
        if (omega > to + 1e-9 * step) break;
        omegas.push_back(omega);
    }

    SweepResult sweep;
    sweep.method = method_name(method);
    sweep.points.resize(omegas.size());

    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (;;) {
            size_t k = next.fetch_add(1);
            if (k >= omegas.size()) return;
            SolverConfig config = base;
            config.method = method;
            config.omega = omegas[k];
            SolveResult result = solve(problem, config);
            sweep.points[k] = {omegas[k],
                               result.history.converged ? result.history.iterations
                                                        : base.max_iter,
                               result.history.converged};
        }
    };

    int workers = std::min<int>(sweep_thread_count(threads), static_cast<int>(omegas.size()));
    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    for (const SweepPoint& p : sweep.points) {
        if (!p.converged) continue;
        if (!sweep.has_best || p.iterations < sweep.best_iterations) {
            sweep.has_best = true;
            sweep.best_omega = p.omega;
            sweep.best_iterations = p.iterations;
        }
    }
    return sweep;
}

void write_sweep_csv(std::ostream& os, const SweepResult& sweep) {
    os << "omega,iterations,converged\n";
    for (const SweepPoint& p : sweep.points) {
        os << format_double(p.omega) << ',' << p.iterations << ','
           << (p.converged ? "true" : "false") << '\n';
    }
}

BenchReport run_bench(const ProblemSpec& problem, const std::vector<Method>& methods,
                      std::vector<double> omegas, int repeats, const SolverConfig& base) {
    if (repeats < 1) throw Error("bench: repeats must be >= 1");
    omegas = resolve_omegas(methods, std::move(omegas));

    BenchReport report;
    report.repeats = repeats;
    utsname uts{};
    if (uname(&uts) == 0) {
        report.machine = std::string(uts.sysname) + " " + uts.release + " " + uts.machine;
    } else {
        report.machine = "unknown";
    }
    report.machine += ", hardware_threads=" +
                      std::to_string(std::thread::hardware_concurrency());

    for (size_t k = 0; k < methods.size(); ++k) {
        SolverConfig config = base;
        config.method = methods[k];
        config.omega = omegas[k];

        std::vector<double> times;
        times.reserve(repeats);
        BenchRow row;
        for (int r = 0; r < repeats; ++r) {
            SolveResult result = solve(problem, config);
            times.push_back(result.history.wall_time_ms);
            row.iterations = result.history.iterations;
            row.converged = result.history.converged;
        }
        std::sort(times.begin(), times.end());
        size_t mid = times.size() / 2;
        row.median_time_ms = times.size() % 2 == 1
                                 ? times[mid]
                                 : 0.5 * (times[mid - 1] + times[mid]);
        row.method = method_name(methods[k]);
        row.omega = omegas[k];
        report.rows.push_back(row);
    }
    return report;
}

void write_bench_csv(std::ostream& os, const BenchReport& report) {
    os << "# machine=" << report.machine << ", repeats=" << report.repeats << '\n';
    os << "method,omega,iterations,converged,median_time_ms\n";
    for (const BenchRow& r : report.rows) {
        os << r.method << ',' << format_double(r.omega) << ',' << r.iterations << ','
           << (r.converged ? "true" : "false") << ',' << format_double(r.median_time_ms)
           << '\n';
    }
}

} // namespace laplace
