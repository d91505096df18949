#include <cmath>
#include <limits>

#include <gtest/gtest.h>

#include "irp/dg_space.hpp"
#include "irp/errors.hpp"
#include "irp/limiter.hpp"
#include "limiter_suites.hpp"
#include "test_support.hpp"

using namespace irp;

namespace {

const double kSqrt3 = std::sqrt(3.0);

// Single P1 cell whose density is 1 + 2 xi and whose momentum and energy are
// constant (0 and 2.5).
DGField linear_density_cell(const DGSpace& space)
{
    DGField field = space.zero_field();
    field.cell(0)(0, kDensity) = 1.0;
    field.cell(0)(1, kDensity) = 1.0 / kSqrt3;
    field.cell(0)(0, kEnergy) = 2.5;
    return field;
}

} // namespace

TEST(LimiterKindNames, RoundTrip)
{
    for (LimiterKind kind : {LimiterKind::none, LimiterKind::positivity, LimiterKind::irp})
        EXPECT_EQ(limiter_kind_from_string(to_string(kind)), kind);
}

TEST(ComputeTheta, AdmissibleCellIsUntouched)
{
    const InvariantRegion region(1.4, -1.0);
    const ConservedState avg = to_conserved(PrimitiveState{1.0, 0.0, 1.0}, 1.4);
    TestSetExtrema extrema;
    extrema.rho_min = 0.8;
    extrema.p_min = 0.7;
    extrema.q_max = -0.1;
    const CellLimiterReport report = compute_theta(avg, extrema, region, LimiterKind::irp);
    EXPECT_EQ(report.theta, 1.0);
    EXPECT_FALSE(report.activated);
}

TEST(ComputeTheta, DensityUndershoot)
{
    const InvariantRegion region(1.4, -10.0, 1e-13);
    const ConservedState avg = to_conserved(PrimitiveState{1.0, 0.0, 1.0}, 1.4);
    TestSetExtrema extrema;
    extrema.rho_min = -1.0;
    extrema.p_min = 0.5;
    extrema.q_max = -1.0;
    const CellLimiterReport report = compute_theta(avg, extrema, region, LimiterKind::irp);
    EXPECT_NEAR(report.theta1, (1.0 - 1e-13) / 2.0, 1e-16);
    EXPECT_NEAR(report.theta, 0.5, 1e-13);
    EXPECT_TRUE(report.activated);
}

TEST(ComputeTheta, EntropyOvershoot)
{
    // q(avg) = -1 requires s(avg) = s0 + 1 at rho = 1.
    const ConservedState avg = to_conserved(PrimitiveState{1.0, 0.0, 1.0}, 1.4);
    const InvariantRegion region(1.4, -1.0);
    ASSERT_NEAR(q_functional(avg, region), -1.0, 1e-15);
    TestSetExtrema extrema;
    extrema.rho_min = 0.9;
    extrema.p_min = 0.9;
    extrema.q_max = 1.0;
    const CellLimiterReport irp = compute_theta(avg, extrema, region, LimiterKind::irp);
    EXPECT_NEAR(irp.theta3, 0.5, 1e-15);
    EXPECT_NEAR(irp.theta, 0.5, 1e-15);

    // The positivity limiter ignores the entropy constraint.
    const CellLimiterReport pos = compute_theta(avg, extrema, region, LimiterKind::positivity);
    EXPECT_EQ(pos.theta, 1.0);
}

TEST(ComputeTheta, AverageOutsideRegionIsAnError)
{
    const InvariantRegion region(1.4, 0.0);
    TestSetExtrema extrema;
    EXPECT_THROW(compute_theta(ConservedState(-0.1, 0.0, 1.0), extrema, region, LimiterKind::irp, 3),
                 RegionViolation);
    EXPECT_THROW(compute_theta(ConservedState(1.0, 1.0, 0.5), extrema, region, LimiterKind::positivity),
                 RegionViolation);
    // s(avg) well below s0.
    const ConservedState cold = to_conserved(PrimitiveState{1.0, 0.0, 0.5}, 1.4);
    EXPECT_THROW(compute_theta(cold, extrema, region, LimiterKind::irp), RegionViolation);
    try {
        compute_theta(ConservedState(-0.1, 0.0, 1.0), extrema, region, LimiterKind::irp, 3);
    } catch (const RegionViolation& e) {
        EXPECT_EQ(e.cell(), 3);
    }
}

TEST(ApplyLimiter, ScalesHigherModesOnly)
{
    const DGSpace space(Mesh1D(0.0, 1.0, 1), 1);
    DGField field = linear_density_cell(space);
    const ConservedState before = field.average(0);
    apply_limiter(field, 0, 0.5);
    EXPECT_TRUE(field.average(0) == before);
    for (double xi : {-0.5, -0.25, 0.0, 0.5})
        EXPECT_NEAR(space.evaluate(field, 0, xi)[kDensity], 1.0 + xi, 1e-15);
}

TEST(TestSetExtrema, LinearDensityTouchesZero)
{
    const DGSpace space(Mesh1D(0.0, 1.0, 1), 1);
    const DGField field = linear_density_cell(space);
    const TestSetExtrema extrema = test_set_extrema(space, field, 0, InvariantRegion(1.4, -1.0));
    EXPECT_NEAR(extrema.rho_min, 0.0, 1e-15);
    EXPECT_EQ(extrema.q_max, std::numeric_limits<double>::infinity());
}

TEST(LimitCell, LaxJumpProjectionBecomesAdmissible)
{
    const double gamma = 1.4;
    const ConservedState left(0.445, 0.311, 8.928);
    const ConservedState right(0.5, 0.0, 1.4275);
    const DGSpace space(Mesh1D(-0.02, 0.02, 1, BoundaryKind::outflow), 2);
    DGField field = space.project([&](double x) { return x < 0.0 ? left : right; });
    const InvariantRegion region(gamma, std::min(specific_entropy(left, gamma), specific_entropy(right, gamma)));

    const CellLimiterReport report = limit_cell(space, field, 0, region, LimiterKind::irp);
    EXPECT_TRUE(report.activated);
    EXPECT_LT(report.theta, 1.0);
    EXPECT_GT(report.theta, 0.0);
    EXPECT_TRUE(test_nodes_admissible(space, field, region));

    const DGField limited = field;
    const CellLimiterReport again = limit_cell(space, field, 0, region, LimiterKind::irp);
    EXPECT_EQ(again.theta, 1.0);
    EXPECT_TRUE(field.coeffs() == limited.coeffs());
}

TEST(LimitField, NoneKindLeavesFieldAlone)
{
    const DGSpace space(Mesh1D(0.0, 1.0, 1), 1);
    const DGField field = linear_density_cell(space);
    const LimitResult result = limit_field(space, field, InvariantRegion(1.4, 5.0), LimiterKind::none);
    EXPECT_TRUE(result.field.coeffs() == field.coeffs());
}

TEST(LimitField, SummaryCountsActivatedCells)
{
    std::mt19937_64 rng(31);
    const DGSpace space(Mesh1D(0.0, 1.0, 40), 2);
    DGField field = space.zero_field();
    for (int i = 0; i < 40; ++i)
        test::random_cell(field, i, rng, i % 2 == 0 ? 2.5 : 0.0);
    const LimitResult result = limit_field(space, field, InvariantRegion(1.4, -50.0), LimiterKind::irp);
    const LimiterSummary summary = summarize(result.reports);
    EXPECT_GT(summary.activated_cells, 0);
    EXPECT_LE(summary.activated_cells, 20);
    EXPECT_LT(summary.min_theta, 1.0);
    EXPECT_TRUE(test_nodes_admissible(space, result.field, InvariantRegion(1.4, -50.0)));
}

TEST(LimiterProperties, RandomAndAdversarialCells)
{
    const test::LimiterSuiteStats stats = test::run_limiter_property_suite(1000, 300, 2024);
    EXPECT_EQ(stats.cells, 1300);
    EXPECT_GT(stats.activated, 300);
    EXPECT_LE(stats.max_average_error, 1e-15);
    EXPECT_EQ(stats.containment_failures, 0);
    EXPECT_EQ(stats.idempotence_failures, 0);
    EXPECT_EQ(stats.theta_range_failures, 0);
}

TEST(LimiterProperties, ShrinkingTheRegionNeverRaisesTheta)
{
    // Raising the entropy floor only adds constraints.
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 300; ++trial) {
        const DGSpace space(Mesh1D(0.0, 1.0, 1), 2);
        DGField field = space.zero_field();
        test::random_cell(field, 0, rng, 1.0);
        const double s_avg = specific_entropy(field.average(0), 1.4);
        const double loose = limit_field(space, field, InvariantRegion(1.4, s_avg - 0.5), LimiterKind::irp)
                                 .reports[0]
                                 .theta;
        const double tight = limit_field(space, field, InvariantRegion(1.4, s_avg - 0.01), LimiterKind::irp)
                                 .reports[0]
                                 .theta;
        EXPECT_LE(tight, loose + 1e-14);
    }
}

TEST(AverageInterior, DenselyAdmissiblePolynomials)
{
    const test::AverageInteriorStats stats = test::run_average_interior_suite(1000, 99);
    EXPECT_EQ(stats.polynomials, 1000);
    EXPECT_EQ(stats.failures, 0);
    EXPECT_LT(stats.max_q_average, 0.0);
}
