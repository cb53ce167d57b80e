#include "laplace/line_solvers.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <sstream>

namespace laplace {

double dominance_margin(const TridiagonalSystem& sys) {
    const int n = sys.size();
    double margin = std::numeric_limits<double>::infinity();
    for (int k = 0; k < n; ++k) {
        double off = 0.0;
        if (k > 0) off += std::abs(sys.lower[k - 1]);
        if (k < n - 1) off += std::abs(sys.upper[k]);
        margin = std::min(margin, std::abs(sys.diag[k]) - off);
    }
    return margin;
}

std::vector<double> thomas_solve(const TridiagonalSystem& sys) {
    const int n = sys.size();
    if (n == 0) return {};
    if (static_cast<int>(sys.lower.size()) != n - 1 ||
        static_cast<int>(sys.upper.size()) != n - 1 ||
        static_cast<int>(sys.rhs.size()) != n) {
        throw Error("thomas_solve: inconsistent band sizes");
    }

    auto row_scale = [&](int k) {
        double s = std::abs(sys.diag[k]);
        if (k > 0) s += std::abs(sys.lower[k - 1]);
        if (k < n - 1) s += std::abs(sys.upper[k]);
        return s;
    };
    auto check_pivot = [&](double pivot, int k) {
        if (pivot == 0.0 || std::abs(pivot) < 1e-14 * row_scale(k)) {
            std::ostringstream msg;
            msg << "thomas_solve: zero/near-zero pivot " << pivot << " at row " << k;
            throw SingularSystemError(msg.str());
        }
    };

    std::vector<double> cp(n - 1), dp(n);
    double pivot = sys.diag[0];
    check_pivot(pivot, 0);
    if (n > 1) cp[0] = sys.upper[0] / pivot;
    dp[0] = sys.rhs[0] / pivot;
    for (int k = 1; k < n; ++k) {
        pivot = sys.diag[k] - sys.lower[k - 1] * cp[k - 1];
        check_pivot(pivot, k);
        if (k < n - 1) cp[k] = sys.upper[k] / pivot;
        dp[k] = (sys.rhs[k] - sys.lower[k - 1] * dp[k - 1]) / pivot;
    }

    std::vector<double> x(n);
    x[n - 1] = dp[n - 1];
    for (int k = n - 2; k >= 0; --k) {
        x[k] = dp[k] - cp[k] * x[k + 1];
    }
    return x;
}

namespace {

// Maximal run of consecutive interior points along a grid line.
struct Run {
    int lo;
    int hi; // inclusive
};

// Collects interior runs along row j (axis = 0, positions are i) or
// column i (axis = 1, positions are j).
std::vector<Run> interior_runs(const BoundaryMask& mask, int fixed, int axis) {
    const GridSpec& g = mask.spec();
    const int len = axis == 0 ? g.m : g.n;
    std::vector<Run> runs;
    int start = -1;
    for (int p = 0; p < len; ++p) {
        bool inter = axis == 0 ? mask.is_interior(p, fixed) : mask.is_interior(fixed, p);
        if (inter && start < 0) start = p;
        if (!inter && start >= 0) {
            runs.push_back({start, p - 1});
            start = -1;
        }
    }
    // outer ring is Dirichlet, so a run never reaches the line's end
    assert(start < 0);
    return runs;
}

enum class LineMode { RowA, RowB, ColumnA, ColumnB };

// Assembles and solves the implicit line systems for one sweep direction.
// The A modes solve the unrelaxed line system and blend afterwards (omega
// outside); the B modes fold the relaxation into the system (omega inside).
void line_sweep(ScalarField& field, const BoundaryMask& mask, double omega, LineMode mode) {
    const GridSpec& g = field.spec();
    if (mask.spec() != g) throw Error("line sweep: dimensions do not match");

    const double b2 = g.beta() * g.beta();
    const double diag = 2.0 * (1.0 + b2);
    const bool along_x = mode == LineMode::RowA || mode == LineMode::RowB;
    const bool relax_inside = mode == LineMode::RowB || mode == LineMode::ColumnB;
    const double coupling = along_x ? 1.0 : b2;  // in-line neighbor weight
    const double side = along_x ? b2 : 1.0;      // perpendicular neighbor weight
    const double off = relax_inside ? -omega * coupling : -coupling;
    const int lines = along_x ? g.n : g.m;

    TridiagonalSystem sys;
    for (int line = 1; line < lines - 1; ++line) {
        for (const Run& run : interior_runs(mask, line, along_x ? 0 : 1)) {
            const int len = run.hi - run.lo + 1;
            sys.diag.assign(len, diag);
            sys.lower.assign(len - 1, off);
            sys.upper.assign(len - 1, off);
            sys.rhs.resize(len);

            for (int k = 0; k < len; ++k) {
                int p = run.lo + k;
                int i = along_x ? p : line;
                int j = along_x ? line : p;
                double perp = side * (along_x ? field(i, j + 1) + field(i, j - 1)
                                              : field(i + 1, j) + field(i - 1, j));
                if (relax_inside) {
                    sys.rhs[k] = diag * (1.0 - omega) * field(i, j) + omega * perp;
                } else {
                    sys.rhs[k] = perp;
                }
            }
            // Dirichlet values at the run ends move to the right-hand side.
            auto end_value = [&](int p) {
                return along_x ? field(p, line) : field(line, p);
            };
            sys.rhs[0] -= off * end_value(run.lo - 1);
            sys.rhs[len - 1] -= off * end_value(run.hi + 1);

            // The unrelaxed systems are strictly dominant for every beta; the
            // relaxed ones lose dominance once omega exceeds 1 + beta^2 (rows)
            // and Thomas's own pivot check takes over as the guard.
            assert(relax_inside || dominance_margin(sys) > 0.0);
            std::vector<double> solved = thomas_solve(sys);

            for (int k = 0; k < len; ++k) {
                int p = run.lo + k;
                int i = along_x ? p : line;
                int j = along_x ? line : p;
                if (relax_inside) {
                    field(i, j) = solved[k];
                } else {
                    field(i, j) = (1.0 - omega) * field(i, j) + omega * solved[k];
                }
            }
        }
    }
}

} // namespace

void slora_sweep(ScalarField& field, const BoundaryMask& mask, double omega) {
    line_sweep(field, mask, omega, LineMode::RowA);
}

void slorb_sweep(ScalarField& field, const BoundaryMask& mask, double omega) {
    line_sweep(field, mask, omega, LineMode::RowB);
}

void adi_cycle(ScalarField& field, const BoundaryMask& mask, double omega) {
    line_sweep(field, mask, omega, LineMode::RowB);
    line_sweep(field, mask, omega, LineMode::ColumnB);
}

} // namespace laplace
