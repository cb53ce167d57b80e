#include "laplace/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace laplace {

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open \"" + path + "\" for writing");
    return out;
}

std::ifstream open_in(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open \"" + path + "\" for reading");
    return in;
}

double parse_double(const std::string& text, const std::string& context) {
    double v;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw ParseError("bad number \"" + text + "\" in " + context);
    }
    return v;
}

long parse_int(const std::string& text, const std::string& context) {
    long v;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw ParseError("bad integer \"" + text + "\" in " + context);
    }
    return v;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, ',')) fields.push_back(field);
    return fields;
}

} // namespace

std::string format_double(double v) {
    char buf[48];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, ptr);
}

void save_problem(const ProblemSpec& problem, const std::string& path) {
    problem.validate();
    nlohmann::json doc;
    doc["name"] = problem.name;
    doc["grid"] = {{"m", problem.grid.m},
                   {"n", problem.grid.n},
                   {"dx", problem.grid.dx},
                   {"dy", problem.grid.dy}};
    nlohmann::json entries = nlohmann::json::array();
    for (int j = 0; j < problem.grid.n; ++j) {
        for (int i = 0; i < problem.grid.m; ++i) {
            if (problem.mask.is_dirichlet(i, j)) {
                entries.push_back({{"i", i}, {"j", j}, {"value", problem.mask.dirichlet_value(i, j)}});
            }
        }
    }
    doc["dirichlet"] = std::move(entries);

    auto out = open_out(path);
    out << doc.dump(2) << '\n';
}

ProblemSpec load_problem(const std::string& path) {
    auto in = open_in(path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("problem file \"" + path + "\": " + e.what());
    }

    try {
        const auto& jg = doc.at("grid");
        int m = jg.at("m").get<int>();
        int n = jg.at("n").get<int>();
        if (!jg.at("dx").is_number() || !jg.at("dy").is_number()) {
            throw ParseError("grid dx/dy must be numbers");
        }
        GridSpec grid(m, n, jg.at("dx").get<double>(), jg.at("dy").get<double>());

        BoundaryMask mask(grid);
        for (const auto& entry : doc.at("dirichlet")) {
            int i = entry.at("i").get<int>();
            int j = entry.at("j").get<int>();
            if (!grid.contains(i, j)) {
                std::ostringstream msg;
                msg << "dirichlet entry (" << i << ", " << j << ") is outside the "
                    << grid.m << "x" << grid.n << " grid";
                throw ParseError(msg.str());
            }
            if (!entry.at("value").is_number()) {
                std::ostringstream msg;
                msg << "dirichlet entry (" << i << ", " << j << ") has a non-numeric value";
                throw ParseError(msg.str());
            }
            double value = entry.at("value").get<double>();
            if (!std::isfinite(value)) {
                std::ostringstream msg;
                msg << "dirichlet entry (" << i << ", " << j << ") has non-finite value "
                    << value;
                throw ParseError(msg.str());
            }
            mask.set_dirichlet(i, j, value);
        }

        ProblemSpec problem{grid, std::move(mask),
                            doc.value("name", std::string("unnamed"))};
        try {
            problem.validate();
        } catch (const Error& e) {
            throw ParseError("problem file \"" + path + "\": " + e.what());
        }
        return problem;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("problem file \"" + path + "\": " + e.what());
    }
}

void save_field(const ScalarField& field, const std::string& path) {
    const GridSpec& g = field.spec();
    auto out = open_out(path);
    out << "i,j,x,y,psi\n";
    for (int j = 0; j < g.n; ++j) {
        for (int i = 0; i < g.m; ++i) {
            out << i << ',' << j << ',' << format_double(g.x(i)) << ','
                << format_double(g.y(j)) << ',' << format_double(field(i, j)) << '\n';
        }
    }
}

ScalarField load_field(const std::string& path) {
    auto in = open_in(path);
    std::string line;
    if (!std::getline(in, line) || split_csv_line(line) != std::vector<std::string>{"i", "j", "x", "y", "psi"}) {
        throw ParseError("field file \"" + path + "\": expected header i,j,x,y,psi");
    }

    struct Row {
        int i, j;
        double x, y, psi;
    };
    std::vector<Row> rows;
    int max_i = -1;
    int max_j = -1;
    size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        auto fields = split_csv_line(line);
        std::string context = path + ":" + std::to_string(line_no);
        if (fields.size() != 5) throw ParseError("expected 5 columns in " + context);
        Row r;
        r.i = static_cast<int>(parse_int(fields[0], context));
        r.j = static_cast<int>(parse_int(fields[1], context));
        r.x = parse_double(fields[2], context);
        r.y = parse_double(fields[3], context);
        r.psi = parse_double(fields[4], context);
        if (r.i < 0 || r.j < 0) throw ParseError("negative index in " + context);
        if (!std::isfinite(r.psi)) throw ParseError("non-finite psi in " + context);
        max_i = std::max(max_i, r.i);
        max_j = std::max(max_j, r.j);
        rows.push_back(r);
    }

    const int m = max_i + 1;
    const int n = max_j + 1;
    if (m < 3 || n < 3 || rows.size() != static_cast<size_t>(m) * n) {
        std::ostringstream msg;
        msg << "field file \"" << path << "\": " << rows.size() << " rows do not cover a "
            << m << "x" << n << " grid";
        throw ParseError(msg.str());
    }

    // spacings recovered from the farthest points to minimize rounding
    double dx = 0.0, dy = 0.0;
    for (const Row& r : rows) {
        if (r.i == m - 1 && r.j == 0) dx = r.x / (m - 1);
        if (r.i == 0 && r.j == n - 1) dy = r.y / (n - 1);
    }
    GridSpec grid;
    try {
        grid = GridSpec(m, n, dx, dy);
    } catch (const Error& e) {
        throw ParseError("field file \"" + path + "\": " + e.what());
    }

    ScalarField field(grid, 0.0);
    std::vector<uint8_t> seen(static_cast<size_t>(m) * n, 0);
    for (const Row& r : rows) {
        size_t k = static_cast<size_t>(r.j) * m + r.i;
        if (seen[k]) {
            std::ostringstream msg;
            msg << "field file \"" << path << "\": duplicate point (" << r.i << ", " << r.j
                << ")";
            throw ParseError(msg.str());
        }
        seen[k] = 1;
        field(r.i, r.j) = r.psi;
    }
    return field;
}

void save_history(const ConvergenceHistory& history, const std::string& path) {
    auto out = open_out(path);
    out << "# method=" << history.method << ",omega=" << format_double(history.omega)
        << ",time_ms=" << format_double(history.wall_time_ms)
        << ",converged=" << (history.converged ? "true" : "false");
    if (!history.warning.empty()) out << ",warning=\"" << history.warning << '"';
    out << '\n';
    out << "iter,error\n";
    for (size_t k = 0; k < history.errors.size(); ++k) {
        out << (k + 1) << ',' << format_double(history.errors[k]) << '\n';
    }
}

void save_trace(const VCycleTrace& trace, const std::string& path) {
    auto out = open_out(path);
    out << "cycle,level,phase,residual_norm\n";
    for (const auto& record : trace.records) {
        for (const auto& sample : record.samples) {
            out << record.cycle << ',' << sample.level << ',' << sample.phase << ','
                << format_double(sample.residual_norm) << '\n';
        }
    }
}

} // namespace laplace
