#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "laplace/solver.hpp"

namespace laplace {

/// One solved (method, omega) pair of a comparison run.
struct RunRow {
    std::string method;
    double omega = 1.0;
    int iterations = 0;   // ADI iterations are full cycles
    int half_sweeps = 0;  // 2x iterations for ADI, otherwise iterations
    bool converged = false;
    double wall_time_ms = 0.0;
    double final_error = 0.0;
    double max_residual = 0.0;
};

struct RunReport {
    std::vector<RunRow> rows; // sorted by iterations ascending
};

/// Solves the problem once per (method, omega) pair, sequentially so the
/// timing column stays meaningful. omegas may be empty (all 1.0) or must
/// match methods in length.
RunReport run_compare(const ProblemSpec& problem, const std::vector<Method>& methods,
                      std::vector<double> omegas, const SolverConfig& base);

void write_report_csv(std::ostream& os, const RunReport& report);

struct SweepPoint {
    double omega = 0.0;
    int iterations = 0; // max_iter when not converged
    bool converged = false;
};

struct SweepResult {
    std::string method;
    std::vector<SweepPoint> points; // omegas strictly increasing
    bool has_best = false;
    double best_omega = 0.0; // minimal converged iterations, ties toward smaller omega
    int best_iterations = 0;
};

/// Solves at omega = from, from+step, ... up to `to`. Independent solves run
/// on up to `threads` workers (0 = LAPLACE_THREADS env var, falling back to
/// the machine parallelism).
SweepResult run_sweep(const ProblemSpec& problem, Method method, double from, double to,
                      double step, const SolverConfig& base, int threads = 0);

void write_sweep_csv(std::ostream& os, const SweepResult& sweep);

struct BenchRow {
    std::string method;
    double omega = 1.0;
    int iterations = 0;
    bool converged = false;
    double median_time_ms = 0.0;
};

struct BenchReport {
    std::string machine; // metadata line content
    int repeats = 0;
    std::vector<BenchRow> rows;
};

/// Runs each (method, omega) pair `repeats` times and reports the median
/// wall time. Timing covers the solve loop only, never I/O.
BenchReport run_bench(const ProblemSpec& problem, const std::vector<Method>& methods,
                      std::vector<double> omegas, int repeats, const SolverConfig& base);

void write_bench_csv(std::ostream& os, const BenchReport& report);

} // namespace laplace
