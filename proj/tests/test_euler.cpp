#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "irp/errors.hpp"
#include "irp/euler.hpp"

using namespace irp;

namespace {

ConservedState from_primitive(double rho, double u, double p) { return to_conserved(PrimitiveState{rho, u, p}, 1.4); }

PrimitiveState random_primitive(std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> rho(0.05, 5.0);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    std::uniform_real_distribution<double> p(0.05, 5.0);
    return {rho(rng), u(rng), p(rng)};
}

} // namespace

TEST(Pressure, AtRestUnitState) { EXPECT_DOUBLE_EQ(pressure(ConservedState(1.0, 0.0, 2.5), 1.4), 1.0); }

TEST(Pressure, LaxLeftState)
{
    const double expected = 0.4 * (8.928 - 0.311 * 0.311 / (2.0 * 0.445));
    EXPECT_NEAR(pressure(ConservedState(0.445, 0.311, 8.928), 1.4), expected, 1e-14);
    EXPECT_NEAR(pressure(ConservedState(0.445, 0.311, 8.928), 1.4), 3.52773, 1e-6);
}

TEST(Pressure, KineticEnergyEqualsTotalEnergyGivesZero)
{
    EXPECT_DOUBLE_EQ(pressure(ConservedState(1.0, 1.0, 0.5), 1.4), 0.0);
}

TEST(Pressure, ZeroDensityIsRejected) { EXPECT_THROW(pressure(ConservedState(0.0, 0.0, 1.0), 1.4), DomainError); }

TEST(SpecificEntropy, Examples)
{
    EXPECT_NEAR(specific_entropy(ConservedState(1.0, 0.0, 2.5), 1.4), 0.0, 1e-15);
    EXPECT_NEAR(specific_entropy(from_primitive(2.0, 0.0, 1.0), 1.4), -1.4 * std::log(2.0), 1e-14);
    EXPECT_NEAR(specific_entropy(from_primitive(2.0, 0.0, 1.0), 1.4), -0.970406, 1e-6);
    EXPECT_NEAR(specific_entropy(from_primitive(0.5, 0.0, std::pow(0.5, 1.4)), 1.4), 0.0, 1e-14);
}

TEST(SpecificEntropy, NonPositiveStatesAreRejected)
{
    EXPECT_THROW(specific_entropy(ConservedState(1.0, 1.0, 0.5), 1.4), DomainError);
    EXPECT_THROW(specific_entropy(ConservedState(-1.0, 0.0, 1.0), 1.4), DomainError);
}

TEST(QFunctional, Examples)
{
    const InvariantRegion region(1.4, -1.0);
    EXPECT_NEAR(q_functional(from_primitive(1.0, 0.0, 1.0), region), -1.0, 1e-15);

    const ConservedState w = from_primitive(2.0, 0.3, 1.5);
    const InvariantRegion on_floor(1.4, specific_entropy(w, 1.4));
    EXPECT_NEAR(q_functional(w, on_floor), 0.0, 1e-15);
}

TEST(QFunctional, UndefinedOutsidePositiveCone)
{
    const InvariantRegion region(1.4, 0.0);
    EXPECT_THROW(q_functional(ConservedState(1.0, 1.0, 0.5), region), DomainError);
    EXPECT_THROW(q_functional(ConservedState(-0.5, 0.0, 1.0), region), DomainError);
}

TEST(Region, Membership)
{
    const InvariantRegion region(1.4, -1.0, 1e-13);
    const ConservedState good = from_primitive(1.0, 0.0, 1.0);
    EXPECT_TRUE(in_region(good, region));
    EXPECT_TRUE(in_region_interior(good, region));

    EXPECT_FALSE(in_region(ConservedState(-0.1, 0.0, 1.0), region));
    EXPECT_FALSE(in_region_interior(ConservedState(-0.1, 0.0, 1.0), region));

    // q = (s0 - s) rho = +0.5 with rho = 1: s = s0 - 0.5.
    const double p = std::exp(-1.5);
    const ConservedState hot = from_primitive(1.0, 0.0, p);
    EXPECT_NEAR(q_functional(hot, region), 0.5, 1e-14);
    EXPECT_FALSE(in_region(hot, region));
}

TEST(Region, ShortCircuitsBeforeEvaluatingQ)
{
    const InvariantRegion region(1.4, 0.0);
    EXPECT_NO_THROW(EXPECT_FALSE(in_region(ConservedState(1.0, 1.0, 0.5), region)));
    EXPECT_NO_THROW(EXPECT_FALSE(in_region_interior(ConservedState(0.0, 0.0, 1.0), region)));
}

TEST(Region, BoundaryIsInsideButNotInterior)
{
    const ConservedState w = from_primitive(1.3, 0.2, 0.9);
    const InvariantRegion region(1.4, specific_entropy(w, 1.4));
    EXPECT_TRUE(in_region(w, InvariantRegion(1.4, region.s0 - 1e-12)));
    EXPECT_FALSE(in_region_interior(w, InvariantRegion(1.4, region.s0 + 1e-12)));
}

TEST(Region, RejectsBadParameters)
{
    EXPECT_THROW(InvariantRegion(1.0, 0.0), std::invalid_argument);
    EXPECT_THROW(InvariantRegion(1.4, 0.0, 0.0), std::invalid_argument);
}

TEST(PhysicalFlux, Examples)
{
    const FluxVector at_rest = physical_flux(ConservedState(1.0, 0.0, 2.5), 1.4);
    EXPECT_NEAR(at_rest[0], 0.0, 1e-15);
    EXPECT_NEAR(at_rest[1], 1.0, 1e-15);
    EXPECT_NEAR(at_rest[2], 0.0, 1e-15);

    const FluxVector moving = physical_flux(ConservedState(1.0, 1.0, 2.5), 1.4);
    EXPECT_NEAR(moving[0], 1.0, 1e-15);
    EXPECT_NEAR(moving[1], 1.8, 1e-15);
    EXPECT_NEAR(moving[2], 3.3, 1e-15);
}

TEST(PhysicalFlux, ZeroMomentumHasNoMassOrEnergyFlux)
{
    std::mt19937_64 rng(7);
    for (int i = 0; i < 100; ++i) {
        PrimitiveState v = random_primitive(rng);
        v.u = 0.0;
        const FluxVector f = physical_flux(to_conserved(v, 1.4), 1.4);
        EXPECT_EQ(f[0], 0.0);
        EXPECT_EQ(f[2], 0.0);
    }
}

TEST(MaxSignalSpeed, Examples)
{
    EXPECT_NEAR(max_signal_speed(from_primitive(1.0, 0.0, 1.0), 1.4), std::sqrt(1.4), 1e-15);
    EXPECT_NEAR(max_signal_speed(from_primitive(1.0, 1.0, 0.0), 1.4), 1.0, 1e-15);
    const double p = 0.4 * (8.928 - 0.311 * 0.311 / (2.0 * 0.445));
    const double speed = 0.311 / 0.445 + std::sqrt(1.4 * p / 0.445);
    EXPECT_NEAR(max_signal_speed(ConservedState(0.445, 0.311, 8.928), 1.4), speed, 1e-14);
    EXPECT_NEAR(speed, 4.030314, 1e-6);
}

TEST(MaxSignalSpeed, RejectsInadmissibleStates)
{
    EXPECT_THROW(max_signal_speed(ConservedState(0.0, 0.0, 1.0), 1.4), DomainError);
    EXPECT_THROW(max_signal_speed(ConservedState(1.0, 1.0, 0.1), 1.4), DomainError);
}

TEST(EntropyFloor, Examples)
{
    const std::vector<PrimitiveState> uniform(5, PrimitiveState{1.0, 0.0, 1.0});
    EXPECT_NEAR(entropy_floor_from_initial<double>(uniform, 1.4), 0.0, 1e-15);

    std::vector<PrimitiveState> smooth;
    for (int j = 0; j <= 4000; ++j) {
        const double x = j / 4000.0;
        smooth.push_back({1.0 + 0.5 * std::sin(2.0 * M_PI * x), 1.0, 1.0});
    }
    EXPECT_NEAR(entropy_floor_from_initial<double>(smooth, 1.4), -1.4 * std::log(1.5), 1e-9);

    const double pl = pressure(ConservedState(0.445, 0.311, 8.928), 1.4);
    const double pr = 0.4 * 1.4275;
    const double left = std::log(pl / std::pow(0.445, 1.4));
    const double right = std::log(pr / std::pow(0.5, 1.4));
    const std::vector<PrimitiveState> lax{to_primitive(ConservedState(0.445, 0.311, 8.928), 1.4),
                                          to_primitive(ConservedState(0.5, 0.0, 1.4275), 1.4)};
    EXPECT_NEAR(entropy_floor_from_initial<double>(lax, 1.4), std::min(left, right), 1e-13);
}

TEST(EntropyFloor, EmptySampleSetIsRejected)
{
    EXPECT_THROW(entropy_floor_from_initial<double>(std::vector<PrimitiveState>{}, 1.4), std::invalid_argument);
}

// Properties over random states.

TEST(EulerProperties, ConservedPrimitiveRoundTrip)
{
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> log_rho(std::log(1e-8), std::log(10.0));
    for (int i = 0; i < 10000; ++i) {
        PrimitiveState v = random_primitive(rng);
        v.rho = std::exp(log_rho(rng));
        const PrimitiveState back = to_primitive(to_conserved(v, 1.4), 1.4);
        EXPECT_NEAR(back.rho, v.rho, 1e-14 * v.rho);
        EXPECT_NEAR(back.u, v.u, 1e-14 * std::max(1.0, std::abs(v.u)));
        // Pressure is recovered from E - m^2/2rho and loses digits when the
        // kinetic part dominates.
        const double kinetic = 0.5 * v.rho * v.u * v.u;
        EXPECT_NEAR(back.p, v.p, 1e-14 * (v.p + 0.4 * kinetic) * 4);
    }
}

TEST(EulerProperties, QIsConvex)
{
    std::mt19937_64 rng(2);
    const InvariantRegion region(1.4, -0.3);
    for (int i = 0; i < 10000; ++i) {
        const ConservedState a = to_conserved(random_primitive(rng), 1.4);
        const ConservedState b = to_conserved(random_primitive(rng), 1.4);
        for (double t : {0.25, 0.5, 0.75}) {
            const ConservedState mix = t * a + (1.0 - t) * b;
            EXPECT_LE(q_functional(mix, region),
                      t * q_functional(a, region) + (1.0 - t) * q_functional(b, region) + 1e-12);
        }
    }
}

TEST(EulerProperties, PressureIsConcave)
{
    std::mt19937_64 rng(3);
    for (int i = 0; i < 10000; ++i) {
        const ConservedState a = to_conserved(random_primitive(rng), 1.4);
        const ConservedState b = to_conserved(random_primitive(rng), 1.4);
        for (double t : {0.25, 0.5, 0.75}) {
            const ConservedState mix = t * a + (1.0 - t) * b;
            EXPECT_GE(pressure(mix, 1.4), t * pressure(a, 1.4) + (1.0 - t) * pressure(b, 1.4) - 1e-12);
        }
    }
}

TEST(EulerProperties, EntropyConsistentWithPressure)
{
    std::mt19937_64 rng(4);
    for (int i = 0; i < 10000; ++i) {
        const ConservedState w = to_conserved(random_primitive(rng), 1.4);
        const double p = pressure(w, 1.4);
        EXPECT_NEAR(std::exp(specific_entropy(w, 1.4)) * std::pow(w[kDensity], 1.4), p, 1e-12 * p);
    }
}

TEST(EulerProperties, SignalSpeedIsScaleInvariant)
{
    std::mt19937_64 rng(5);
    for (int i = 0; i < 1000; ++i) {
        const ConservedState w = to_conserved(random_primitive(rng), 1.4);
        const double a = max_signal_speed(w, 1.4);
        EXPECT_NEAR(max_signal_speed(ConservedState(2.0 * w), 1.4), a, 1e-14 * a);
    }
}
