#include "irp/harness/csv.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <optional>
#include <stdexcept>

namespace irp::harness {

std::string format_number(double value)
{
    if (std::isnan(value))
        return "nan";
    if (std::isinf(value))
        return value > 0 ? "inf" : "-inf";
    char buffer[64];
    const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
    if (ec != std::errc{})
        throw std::runtime_error("format_number: conversion failed");
    return std::string(buffer, ptr);
}

std::string resolve_output_path(const std::string& path)
{
    const char* dir = std::getenv("IRP_DG_OUTPUT_DIR");
    if (dir == nullptr || *dir == '\0' || std::filesystem::path(path).is_absolute())
        return path;
    return (std::filesystem::path(dir) / path).string();
}

namespace {

std::ofstream open_output(const std::string& path)
{
    const std::string resolved = resolve_output_path(path);
    const auto parent = std::filesystem::path(resolved).parent_path();
    if (!parent.empty()) {
        std::error_code ec;
        std::filesystem::create_directories(parent, ec);
    }
    std::ofstream out(resolved);
    if (!out)
        throw std::runtime_error("cannot open output file " + resolved);
    return out;
}

void finish(std::ofstream& out, const std::string& path)
{
    out.flush();
    if (!out)
        throw std::runtime_error("write failed for " + resolve_output_path(path));
}

std::string optional_number(const std::optional<double>& v) { return v ? format_number(*v) : std::string(); }

} // namespace

void write_solution_csv(std::ostream& out, const DGSpace& space, const DGField& field,
                        const InvariantRegion& region, const std::vector<CellLimiterReport>& reports)
{
    out << "x,rho,u,p,E,s,q,theta_last\n";
    const Mesh1D& mesh = space.mesh();
    const QuadratureRule& rule = space.test_rule();
    const double nan = std::numeric_limits<double>::quiet_NaN();
    for (int i = 0; i < field.n_cells(); ++i) {
        const NodeValues values = space.test_node_values(field, i);
        const double theta = i < static_cast<int>(reports.size()) ? reports[i].theta : 1.0;
        for (int q = 0; q < rule.size(); ++q) {
            const ConservedState w = values.row(q).transpose();
            const double rho = w[kDensity];
            const double u = rho != 0.0 ? w[kMomentum] / rho : nan;
            const double p = rho != 0.0 ? pressure(w, region.gamma) : nan;
            double s = nan;
            double qv = nan;
            if (rho > 0.0 && p > 0.0) {
                s = specific_entropy(w, region.gamma);
                qv = q_functional(w, region);
            }
            out << format_number(mesh.to_physical(i, rule.nodes[q])) << ',' << format_number(rho) << ','
                << format_number(u) << ',' << format_number(p) << ',' << format_number(w[kEnergy]) << ','
                << format_number(s) << ',' << format_number(qv) << ',' << format_number(theta) << '\n';
        }
    }
}

void emit_solution_csv(const std::string& path, const DGSpace& space, const DGField& field,
                       const InvariantRegion& region, const std::vector<CellLimiterReport>& reports)
{
    auto out = open_output(path);
    write_solution_csv(out, space, field, region, reports);
    finish(out, path);
}

void write_table_csv(std::ostream& out, const std::vector<ConvergenceRow>& rows)
{
    out << "n_cells,error_linf,order_linf,error_l1,order_l1,failure\n";
    for (const auto& row : rows) {
        out << row.n_cells << ',';
        if (row.failure.empty()) {
            out << format_number(row.error_linf) << ',' << optional_number(row.order_linf) << ','
                << format_number(row.error_l1) << ',' << optional_number(row.order_l1) << ',';
        } else {
            std::string note = row.failure;
            for (char& c : note)
                if (c == ',' || c == '\n')
                    c = ';';
            out << ",,,," << note;
        }
        out << '\n';
    }
}

void emit_table_csv(const std::string& path, const std::vector<ConvergenceRow>& rows)
{
    auto out = open_output(path);
    write_table_csv(out, rows);
    finish(out, path);
}

void write_diagnostics_csv(std::ostream& out, const std::vector<StepDiagnostics>& diagnostics)
{
    out << "step,t,dt,cfl_number,min_theta,activated_cells,theta3_active,deferred,fallback_halvings,"
           "total_rho,total_m,total_E,min_average_entropy\n";
    for (const auto& d : diagnostics) {
        out << d.step << ',' << format_number(d.t) << ',' << format_number(d.dt) << ',' << format_number(d.cfl_number)
            << ',' << format_number(d.min_theta) << ',' << d.activated_cells << ',' << d.theta3_active << ','
            << d.deferred << ',' << d.fallback_halvings << ',' << format_number(d.totals[kDensity]) << ','
            << format_number(d.totals[kMomentum]) << ',' << format_number(d.totals[kEnergy]) << ','
            << format_number(d.min_average_entropy) << '\n';
    }
}

void emit_diagnostics_csv(const std::string& path, const std::vector<StepDiagnostics>& diagnostics)
{
    auto out = open_output(path);
    write_diagnostics_csv(out, diagnostics);
    finish(out, path);
}

void write_riemann_csv(std::ostream& out, const RiemannProblem& problem, double t, const std::vector<double>& xs)
{
    const StarState star = solve_star(problem);
    out << "x,rho,u,p,E\n";
    for (const double x : xs) {
        const PrimitiveState v = exact_state(problem, star, x, t);
        const ConservedState w = to_conserved(v, problem.gamma);
        out << format_number(x) << ',' << format_number(v.rho) << ',' << format_number(v.u) << ','
            << format_number(v.p) << ',' << format_number(w[kEnergy]) << '\n';
    }
}

CsvTable read_csv(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot read " + path);
    CsvTable table;
    std::string line;
    auto split = [](const std::string& text) {
        std::vector<std::string> fields;
        size_t start = 0;
        while (true) {
            const auto pos = text.find(',', start);
            fields.push_back(text.substr(start, pos == std::string::npos ? std::string::npos : pos - start));
            if (pos == std::string::npos)
                break;
            start = pos + 1;
        }
        return fields;
    };
    if (!std::getline(in, line))
        return table;
    table.header = split(line);
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        std::vector<double> row;
        for (const auto& field : split(line)) {
            if (field.empty() || field == "nan") {
                row.push_back(std::numeric_limits<double>::quiet_NaN());
            } else if (field == "inf" || field == "-inf") {
                row.push_back(field[0] == '-' ? -std::numeric_limits<double>::infinity()
                                              : std::numeric_limits<double>::infinity());
            } else {
                double v = 0.0;
                const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
                if (ec != std::errc{} || ptr != field.data() + field.size())
                    v = std::numeric_limits<double>::quiet_NaN();
                row.push_back(v);
            }
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

} // namespace irp::harness
