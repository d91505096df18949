// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "irp/errors.hpp"
#include "irp/harness/csv.hpp"
#include "irp/harness/norms.hpp"
#include "irp/harness/run.hpp"
#include "irp/riemann.hpp"
#include "limiter_suites.hpp"
#include "riemann_oracle.hpp"

using namespace irp;
using namespace irp::harness;

namespace {

// Regression thresholds frozen from the first validated runs plus 5%:
// Lax L1 was 0.027369, Shu-Osher coarse-vs-fine L1 was 0.44577.
constexpr double kLaxL1Threshold = 0.0288;
constexpr double kShuOsherL1Threshold = 0.468;

// Density level halfway between the pre-shock oscillation peak (about 1.2)
// and the post-shock plateau (about 3.9).
constexpr double kShockLevel = 2.5;

struct Verdict {
    bool pass = false;
    std::string detail;
};

std::string fmt(double x) { return format_number(x); }

std::vector<ConvergenceRow> study(int degree, Integrator integrator, std::vector<int> cells)
{
    RunConfig config;
    config.degree = degree;
    config.integrator = integrator;
    config.placement = LimiterPlacement::per_step;
    return convergence_study(config, cells);
}

std::string describe_orders(const std::vector<ConvergenceRow>& rows)
{
    std::ostringstream out;
    for (const auto& row : rows) {
        out << "N=" << row.n_cells << " L1=" << fmt(row.error_l1);
        if (row.order_l1)
            out << " (order " << fmt(std::round(*row.order_l1 * 1000.0) / 1000.0) << ")";
        if (!row.failure.empty())
            out << " FAILED: " << row.failure;
        out << "; ";
    }
    return out.str();
}

bool complete(const std::vector<ConvergenceRow>& rows, size_t expected)
{
    if (rows.size() != expected)
        return false;
    for (const auto& row : rows)
        if (!row.failure.empty())
            return false;
    return true;
}

Verdict third_order(Integrator integrator)
{
    const auto rows = study(2, integrator, {32, 64, 128});
    Verdict v{complete(rows, 3), describe_orders(rows)};
    if (!v.pass)
        return v;
    for (size_t j = 1; j < rows.size(); ++j)
        v.pass = v.pass && rows[j].order_l1 && std::abs(*rows[j].order_l1 - 3.0) <= 0.25;
    const double target_l1 = 1.75e-7;
    v.pass = v.pass && rows.back().error_l1 <= 3.0 * target_l1 && rows.back().error_l1 >= target_l1 / 3.0;
    return v;
}

Verdict fourth_order(Integrator integrator)
{
    const auto rows = study(3, integrator, {16, 32, 64, 128});
    Verdict v{complete(rows, 4), describe_orders(rows)};
    if (!v.pass)
        return v;
    double sum = 0.0;
    for (size_t j = 1; j < rows.size(); ++j)
        sum += rows[j].order_l1.value_or(0.0);
    const double average = sum / 3.0;
    v.detail += "average order " + fmt(average);
    v.pass = average >= 3.5;
    return v;
}

Verdict criterion_1() { return third_order(Integrator::rk3); }
Verdict criterion_2() { return fourth_order(Integrator::rk3); }

Verdict criterion_3()
{
    const Verdict p2 = third_order(Integrator::ms3);
    const Verdict p3 = fourth_order(Integrator::ms3);
    return {p2.pass && p3.pass, "P2: " + p2.detail + " P3: " + p3.detail};
}

Verdict criterion_4()
{
    const test::LimiterSuiteStats s = test::run_limiter_property_suite(1000, 500, 4);
    std::ostringstream out;
    out << s.cells << " cells, " << s.activated << " limited, max average error " << fmt(s.max_average_error)
        << ", containment failures " << s.containment_failures << ", idempotence failures "
        << s.idempotence_failures << ", theta in [" << fmt(s.theta_min) << ", 1]";
    const bool pass = s.cells == 1500 && s.max_average_error <= 1e-15 && s.containment_failures == 0
        && s.idempotence_failures == 0 && s.theta_range_failures == 0;
    return {pass, out.str()};
}

Verdict criterion_5()
{
    const test::AverageInteriorStats s = test::run_average_interior_suite(1000, 5);
    return {s.polynomials == 1000 && s.failures == 0 && s.max_q_average < 0.0,
            std::to_string(s.polynomials) + " polynomials, " + std::to_string(s.failures)
                + " failures, largest q(avg) " + fmt(s.max_q_average)};
}

double min_entropy(const RunOutcome& run)
{
    double s = std::numeric_limits<double>::infinity();
    for (const auto& d : run.evolution.diagnostics)
        s = std::min(s, d.min_average_entropy);
    return s;
}

Verdict criterion_6()
{
    RunConfig config;
    config.problem = ProblemKind::lax;
    config.degree = 2;
    config.n_cells = 100;
    const RunOutcome irp = run_solve(config);
    config.limiter = LimiterKind::positivity;
    const RunOutcome pos = run_solve(config);

    const double s_min = min_entropy(irp);
    const double l1 = irp.errors->l1;
    const double tv_irp = total_variation(sample_density(irp.space, irp.evolution.field).rho);
    const double tv_pos = total_variation(sample_density(pos.space, pos.evolution.field).rho);
    std::ostringstream out;
    out << "steps " << irp.evolution.steps << ", min s(avg) - s0 = " << fmt(s_min - irp.region.s0) << ", L1 "
        << fmt(l1) << " (threshold " << fmt(kLaxL1Threshold) << "), TV irp " << fmt(tv_irp) << " vs positivity "
        << fmt(tv_pos);
    const bool pass = irp.evolution.t == 0.5 && s_min >= irp.region.s0 - 1e-10 && l1 < kLaxL1Threshold
        && tv_pos > tv_irp;
    return {pass, out.str()};
}

Verdict criterion_7()
{
    RunConfig config;
    config.problem = ProblemKind::shu_osher;
    config.degree = 2;
    config.n_cells = 100;
    const RunOutcome coarse = run_solve(config);
    const RunOutcome fine = fine_grid_reference(config, 2560);
    const ErrorNorms diff = fine_grid_errors(coarse, fine);
    const double x_coarse = front_position(sample_density(coarse.space, coarse.evolution.field), kShockLevel);
    const double x_fine = front_position(sample_density(fine.space, fine.evolution.field), kShockLevel);
    const double h = coarse.space.mesh().h();
    std::ostringstream out;
    out << "coarse-vs-fine L1 " << fmt(diff.l1) << " (threshold " << fmt(kShuOsherL1Threshold) << "), shock at "
        << fmt(x_coarse) << " vs " << fmt(x_fine) << " (2h = " << fmt(2.0 * h) << ")";
    const bool pass = coarse.evolution.t == 1.8 && fine.evolution.t == 1.8 && diff.l1 < kShuOsherL1Threshold
        && std::abs(x_coarse - x_fine) <= 2.0 * h;
    return {pass, out.str()};
}

Verdict criterion_8()
{
    RunConfig config;
    config.degree = 2;
    config.n_cells = 128;
    const RunOutcome run = run_solve(config);
    const auto& diagnostics = run.evolution.diagnostics;
    const ConservedState start = diagnostics.front().totals;
    double drift = 0.0;
    for (const auto& d : diagnostics)
        drift = std::max(drift, ((d.totals - start).cwiseAbs().array() / start.cwiseAbs().array()).maxCoeff());
    return {run.evolution.steps >= 1000 && drift <= 1e-11,
            std::to_string(run.evolution.steps) + " steps, max relative drift " + fmt(drift)};
}

Verdict criterion_9()
{
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> rho(0.1, 5.0), u(-2.0, 2.0), p(0.05, 5.0);
    double worst = 0.0;
    int checked = 0;
    while (checked < 100) {
        const RiemannProblem problem{{rho(rng), u(rng), p(rng)}, {rho(rng), u(rng), p(rng)}, 1.4, 0.0};
        if (test::generates_vacuum(problem))
            continue;
        const StarState star = solve_star(problem);
        const double oracle = test::bisection_star_pressure(problem);
        worst = std::max(worst, std::abs(star.p_star - oracle) / std::max(1.0, oracle));
        worst = std::max(worst, std::abs(star.u_star - test::star_velocity(problem, oracle)));
        ++checked;
    }
    const StarState sod = solve_star({{1.0, 0.0, 1.0}, {0.125, 0.0, 0.1}, 1.4, 0.5});
    const bool pass = worst <= 1e-10 && std::abs(sod.p_star - 0.30313) <= 1e-4 && std::abs(sod.u_star - 0.92745) <= 1e-4;
    return {pass, "max oracle deviation " + fmt(worst) + " over 100 problems; Sod p* = " + fmt(sod.p_star)
                      + ", u* = " + fmt(sod.u_star)};
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
        {"P2 RK3 convergence", criterion_1},
        {"P3 RK3 convergence", criterion_2},
        {"multistep convergence", criterion_3},
        {"limiter property suite", criterion_4},
        {"averages of densely admissible polynomials", criterion_5},
        {"Lax shock tube", criterion_6},
        {"Shu-Osher against fine grid", criterion_7},
        {"periodic conservation", criterion_8},
        {"exact Riemann solver", criterion_9},
    };

    int failures = 0;
    for (size_t j = 0; j < criteria.size(); ++j) {
        Verdict v;
        try {
            v = criteria[j].second();
        } catch (const std::exception& e) {
            v = {false, std::string("aborted: ") + e.what()};
        }
        if (!v.pass)
            ++failures;
        std::printf("criterion %zu %s: %s | %s\n", j + 1, v.pass ? "PASS" : "FAIL", criteria[j].first.c_str(),
                    v.detail.c_str());
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
