#include "irp/limiter.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "irp/errors.hpp"

namespace irp {

namespace {

// Tolerance on q when re-checking a contracted cell; below the 1e-12 slack
// the containment checks use.
constexpr double kEntropyRoundoff = 1e-13;
constexpr int kMaxHalvings = 5;
constexpr int kMaxPasses = 3;

bool constraints_hold(const NodeValues& values, const InvariantRegion& region, LimiterKind kind)
{
    for (int q = 0; q < values.rows(); ++q) {
        const ConservedState w = values.row(q).transpose();
        if (!(w[kDensity] >= region.eps))
            return false;
        if (!(pressure(w, region.gamma) >= region.eps))
            return false;
        if (kind == LimiterKind::irp && !(q_functional(w, region) <= kEntropyRoundoff))
            return false;
    }
    return true;
}

} // namespace

std::string_view to_string(LimiterKind kind)
{
    switch (kind) {
    case LimiterKind::none: return "none";
    case LimiterKind::positivity: return "positivity";
    case LimiterKind::irp: return "irp";
    }
    return "unknown";
}

LimiterKind limiter_kind_from_string(std::string_view name)
{
    if (name == "none")
        return LimiterKind::none;
    if (name == "positivity" || name == "pp")
        return LimiterKind::positivity;
    if (name == "irp")
        return LimiterKind::irp;
    throw ConfigError("unknown limiter '" + std::string(name) + "'");
}

TestSetExtrema node_extrema(const NodeValues& values, const InvariantRegion& region)
{
    TestSetExtrema ext;
    for (int q = 0; q < values.rows(); ++q) {
        const ConservedState w = values.row(q).transpose();
        ext.rho_min = std::min(ext.rho_min, w[kDensity]);
        if (!(w[kDensity] > 0.0)) {
            // p and q are undefined here.
            ext.p_min = -kInactive;
            ext.q_max = kInactive;
            continue;
        }
        const double p = pressure(w, region.gamma);
        ext.p_min = std::min(ext.p_min, p);
        if (p > 0.0)
            ext.q_max = std::max(ext.q_max, q_functional(w, region));
        else
            ext.q_max = kInactive;
    }
    return ext;
}

TestSetExtrema test_set_extrema(const DGSpace& space, const DGField& field, int cell,
                                const InvariantRegion& region)
{
    return node_extrema(space.test_node_values(field, cell), region);
}

CellLimiterReport compute_theta(const ConservedState& average, const TestSetExtrema& extrema,
                                const InvariantRegion& region, LimiterKind kind, int cell)
{
    CellLimiterReport report;
    report.rho_min = extrema.rho_min;
    report.p_min = extrema.p_min;
    report.q_max = extrema.q_max;
    if (kind == LimiterKind::none)
        return report;

    const double eps = region.eps;
    const double rho_avg = average[kDensity];
    const double p_avg = rho_avg != 0.0 ? pressure(average, region.gamma) : 0.0;
    if (!(rho_avg > eps) || !(p_avg > eps))
        throw RegionViolation("average outside interior region (density or pressure) in cell "
                                  + std::to_string(cell),
                              cell);
    double q_avg = 0.0;
    if (kind == LimiterKind::irp) {
        q_avg = q_functional(average, region);
        if (!(q_avg <= kEntropyAverageSlack))
            throw RegionViolation("average outside interior region (entropy) in cell " + std::to_string(cell),
                                  cell);
    }

    // The precondition makes every active denominator strictly positive. An
    // average sitting on q = 0 (a uniform cell at the minimum entropy) gives
    // theta3 = 0 whenever some node overshoots.
    if (extrema.rho_min < eps)
        report.theta1 = (rho_avg - eps) / (rho_avg - extrema.rho_min);
    if (std::isfinite(extrema.p_min)) {
        if (extrema.p_min < eps)
            report.theta2 = (p_avg - eps) / (p_avg - extrema.p_min);
    } else {
        report.deferred = true;
    }
    if (kind == LimiterKind::irp) {
        if (std::isfinite(extrema.q_max)) {
            if (extrema.q_max > 0.0)
                report.theta3 = std::max(0.0, -q_avg) / (extrema.q_max - q_avg);
        } else {
            report.deferred = true;
        }
    }
    report.theta = std::min({1.0, report.theta1, report.theta2, report.theta3});
    report.activated = report.theta < 1.0;
    return report;
}

void apply_limiter(DGField& field, int cell, double theta)
{
    if (theta == 1.0 || field.n_modes() == 1)
        return;
    field.cell(cell).bottomRows(field.n_modes() - 1) *= theta;
}

CellLimiterReport limit_cell(const DGSpace& space, DGField& field, int cell, const InvariantRegion& region,
                             LimiterKind kind)
{
    if (kind == LimiterKind::none)
        return {};

    const ConservedState average = field.average(cell);
    CellLimiterReport report;
    double theta = 1.0;
    // Undefined p or q at some node defers theta2/theta3 to a further pass on
    // the already contracted polynomial; each pass is the same explicit formula.
    for (int pass = 0; pass < kMaxPasses; ++pass) {
        const CellLimiterReport current =
            compute_theta(average, test_set_extrema(space, field, cell, region), region, kind, cell);
        if (pass == 0) {
            report = current;
        } else {
            report.theta2 = std::min(report.theta2, current.theta2);
            report.theta3 = std::min(report.theta3, current.theta3);
        }
        apply_limiter(field, cell, current.theta);
        theta *= current.theta;
        if (!current.deferred)
            break;
        report.deferred = true;
    }

    while (!constraints_hold(space.test_node_values(field, cell), region, kind)) {
        if (report.fallback_halvings == kMaxHalvings)
            throw SolverError("limiter could not restore admissibility in cell " + std::to_string(cell));
        apply_limiter(field, cell, 0.5);
        theta *= 0.5;
        ++report.fallback_halvings;
    }

    report.theta = theta;
    report.activated = theta < 1.0;
    return report;
}

LimiterSummary summarize(const std::vector<CellLimiterReport>& reports)
{
    LimiterSummary s;
    for (const auto& r : reports) {
        s.activated_cells += r.activated ? 1 : 0;
        s.theta1_active += r.theta1 < 1.0 ? 1 : 0;
        s.theta2_active += r.theta2 < 1.0 ? 1 : 0;
        s.theta3_active += r.theta3 < 1.0 ? 1 : 0;
        s.deferred += r.deferred ? 1 : 0;
        s.fallback_halvings += r.fallback_halvings;
        s.min_theta = std::min(s.min_theta, r.theta);
    }
    return s;
}

std::vector<CellLimiterReport> limit_field_in_place(const DGSpace& space, DGField& field,
                                                    const InvariantRegion& region, LimiterKind kind)
{
    std::vector<CellLimiterReport> reports(field.n_cells());
    if (kind == LimiterKind::none)
        return reports;
    for (int i = 0; i < field.n_cells(); ++i)
        reports[i] = limit_cell(space, field, i, region, kind);
    return reports;
}

LimitResult limit_field(const DGSpace& space, const DGField& field, const InvariantRegion& region,
                        LimiterKind kind)
{
    LimitResult result{field, {}};
    result.reports = limit_field_in_place(space, result.field, region, kind);
    return result;
}

bool test_nodes_admissible(const DGSpace& space, const DGField& field, const InvariantRegion& region,
                           LimiterKind kind, double q_slack)
{
    for (int i = 0; i < field.n_cells(); ++i) {
        const NodeValues values = space.test_node_values(field, i);
        for (int q = 0; q < values.rows(); ++q) {
            const ConservedState w = values.row(q).transpose();
            if (!(w[kDensity] >= region.eps) || !(pressure(w, region.gamma) >= region.eps))
                return false;
            if (kind == LimiterKind::irp && !(q_functional(w, region) <= q_slack))
                return false;
        }
    }
    return true;
}

} // namespace irp
