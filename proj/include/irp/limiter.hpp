#pragma once

// Explicit invariant-region-preserving limiter.
//
// Each cell polynomial is contracted toward its average,
//     w~(x) = theta w(x) + (1 - theta) avg,   theta = min{1, theta1, theta2, theta3},
// with one theta shared by all three conserved variables. The thetas are
// computed from the average and from extrema over the Gauss-Lobatto test set:
//     theta1 = (avg_rho - eps) / (avg_rho - rho_min)
//     theta2 = (p(avg) - eps) / (p(avg) - p_min)
//     theta3 = -q(avg) / (q_max - q(avg))
// and each is active only when its constraint is violated on the test set.

#include <limits>
#include <string_view>
#include <vector>

#include "irp/dg_field.hpp"
#include "irp/dg_space.hpp"
#include "irp/euler.hpp"

namespace irp {

/// Round-off allowance on q at a cell average. A uniform cell whose state
/// carries the minimum initial entropy has q = 0 up to round-off, so the
/// entropy part of the interior test is q <= this value.
inline constexpr double kEntropyAverageSlack = 1e-13;

enum class LimiterKind {
    none,        ///< no limiting
    positivity,  ///< theta = min{1, theta1, theta2}
    irp,         ///< theta = min{1, theta1, theta2, theta3}
};

std::string_view to_string(LimiterKind kind);
LimiterKind limiter_kind_from_string(std::string_view name);

inline constexpr double kInactive = std::numeric_limits<double>::infinity();

/// Extrema over a cell's test set. q_max is +inf when some node has
/// rho <= 0 or p <= 0, where q is undefined.
struct TestSetExtrema {
    double rho_min = kInactive;
    double p_min = kInactive;
    double q_max = -kInactive;
};

struct CellLimiterReport {
    double theta = 1.0;
    double theta1 = kInactive;
    double theta2 = kInactive;
    double theta3 = kInactive;
    double rho_min = 0.0;
    double p_min = 0.0;
    double q_max = 0.0;
    bool activated = false;
    /// p or q was undefined at some node, so theta2/theta3 came from a
    /// further pass on the already contracted polynomial.
    bool deferred = false;
    /// Round-off safety halvings of theta.
    int fallback_halvings = 0;
};

/// Extrema of rho, p and q over the given node values.
TestSetExtrema node_extrema(const NodeValues& values, const InvariantRegion& region);
TestSetExtrema test_set_extrema(const DGSpace& space, const DGField& field, int cell,
                                const InvariantRegion& region);

/// Theta from a cell average and its test-set extrema. Throws RegionViolation
/// if the average is not strictly inside the region (for the positivity kind
/// only rho and p are required). An infinite q_max leaves theta3 inactive;
/// limit_cell then resolves it in a second contraction.
CellLimiterReport compute_theta(const ConservedState& average, const TestSetExtrema& extrema,
                                const InvariantRegion& region, LimiterKind kind, int cell = -1);

/// Scale every mode >= 1 of the cell by theta; mode 0 (the average) is untouched.
void apply_limiter(DGField& field, int cell, double theta);

/// Limit one cell in place and return its report.
CellLimiterReport limit_cell(const DGSpace& space, DGField& field, int cell, const InvariantRegion& region,
                             LimiterKind kind);

struct LimiterSummary {
    int activated_cells = 0;
    int theta1_active = 0;
    int theta2_active = 0;
    int theta3_active = 0;
    int deferred = 0;
    int fallback_halvings = 0;
    double min_theta = 1.0;
};

LimiterSummary summarize(const std::vector<CellLimiterReport>& reports);

/// Limit every cell in place; returns per-cell reports.
std::vector<CellLimiterReport> limit_field_in_place(const DGSpace& space, DGField& field,
                                                    const InvariantRegion& region, LimiterKind kind);

struct LimitResult {
    DGField field;
    std::vector<CellLimiterReport> reports;
};

LimitResult limit_field(const DGSpace& space, const DGField& field, const InvariantRegion& region,
                        LimiterKind kind);

/// True if every test node of every cell satisfies rho >= eps and p >= eps
/// and, for the irp kind, q <= q_slack.
bool test_nodes_admissible(const DGSpace& space, const DGField& field, const InvariantRegion& region,
                           LimiterKind kind = LimiterKind::irp, double q_slack = 1e-12);

} // namespace irp
