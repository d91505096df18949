#include "irp/time_integration.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace irp {

std::string_view to_string(Integrator integrator)
{
    switch (integrator) {
    case Integrator::rk3: return "rk3";
    case Integrator::ms3: return "ms3";
    case Integrator::forward_euler: return "euler";
    }
    return "unknown";
}

Integrator integrator_from_string(std::string_view name)
{
    if (name == "rk3")
        return Integrator::rk3;
    if (name == "ms3" || name == "ms")
        return Integrator::ms3;
    if (name == "euler" || name == "forward_euler")
        return Integrator::forward_euler;
    throw ConfigError("unknown integrator '" + std::string(name) + "'");
}

std::string_view to_string(LimiterPlacement placement)
{
    return placement == LimiterPlacement::per_stage ? "per_stage" : "per_step";
}

LimiterPlacement placement_from_string(std::string_view name)
{
    if (name == "per_stage" || name == "stage")
        return LimiterPlacement::per_stage;
    if (name == "per_step" || name == "step")
        return LimiterPlacement::per_step;
    throw ConfigError("unknown limiter placement '" + std::string(name) + "'");
}

double default_cfl_fraction(Integrator integrator)
{
    return integrator == Integrator::ms3 ? 0.9 : 1.0;
}

double TimeController::compute_dt(double max_speed, double h) const
{
    if (!(max_speed > 0.0))
        throw SolverError("compute_dt: degenerate state with zero maximum signal speed");
    double step = cfl_fraction * 0.5 * w_hat_1 * h / max_speed;
    if (t + step >= t_final)
        step = t_final - t;
    return step;
}

void TimeController::check_bound(double dt_, double max_speed, double h, double fraction) const
{
    const double bound = 0.5 * w_hat_1 * fraction;
    if (dt_ / h * max_speed > bound * (1.0 + 1e-12))
        throw SolverError("CFL bound violated: lambda * max speed = " + std::to_string(dt_ / h * max_speed)
                          + " exceeds " + std::to_string(bound));
}

double compute_dt(const DGSpace& space, const DGField& field, double gamma, const TimeController& controller)
{
    return controller.compute_dt(space.max_wave_speed(field, gamma), space.mesh().h());
}

namespace {

void accumulate(LimiterSummary& into, const LimiterSummary& s)
{
    into.activated_cells = std::max(into.activated_cells, s.activated_cells);
    into.theta1_active = std::max(into.theta1_active, s.theta1_active);
    into.theta2_active = std::max(into.theta2_active, s.theta2_active);
    into.theta3_active = std::max(into.theta3_active, s.theta3_active);
    into.deferred += s.deferred;
    into.fallback_halvings += s.fallback_halvings;
    into.min_theta = std::min(into.min_theta, s.min_theta);
}

double min_average_entropy(const DGField& field, double gamma)
{
    double s_min = std::numeric_limits<double>::infinity();
    for (int i = 0; i < field.n_cells(); ++i) {
        try {
            s_min = std::min(s_min, specific_entropy(field.average(i), gamma));
        } catch (const DomainError&) {
            return -std::numeric_limits<double>::infinity();
        }
    }
    return s_min;
}

} // namespace

EvolveResult evolve(const DGSpace& space, DGField initial, const SolverSettings& settings)
{
    if (settings.t_final < 0.0)
        throw ConfigError("evolve: negative final time");

    const double gamma = settings.region.gamma;
    const double h = space.mesh().h();
    const bool multistep = settings.integrator == Integrator::ms3;

    TimeController controller;
    controller.cfl_fraction =
        settings.cfl_fraction > 0.0 ? settings.cfl_fraction : default_cfl_fraction(settings.integrator);
    controller.t_final = settings.t_final;
    controller.w_hat_1 = space.first_test_weight();

    EvolveResult result;
    result.field = std::move(initial);
    DGField& field = result.field;

    LimiterSummary step_summary;
    auto limit = [&](DGField& f) {
        auto reports = limit_field_in_place(space, f, settings.region, settings.limiter);
        accumulate(step_summary, summarize(reports));
        result.last_reports = std::move(reports);
    };
    auto no_limit = [](DGField&) {};

    double alpha = 0.0;
    auto op = [&](const DGField& f) { return space.spatial_operator(f, gamma, alpha); };

    auto verify = [&](const DGField& f) {
        if (settings.limiter == LimiterKind::none)
            return;
        for (int i = 0; i < f.n_cells(); ++i) {
            const ConservedState avg = f.average(i);
            const bool inside = settings.limiter == LimiterKind::irp
                ? avg[kDensity] > settings.region.eps && pressure(avg, gamma) > settings.region.eps
                      && q_functional(avg, settings.region) <= kEntropyAverageSlack
                : avg[kDensity] > settings.region.eps && pressure(avg, gamma) > settings.region.eps;
            if (!inside)
                throw RegionViolation("average outside interior region in cell " + std::to_string(i), i);
        }
        if (!test_nodes_admissible(space, f, settings.region, settings.limiter))
            throw SolverError("limited field left the region at a test node");
    };

    auto record = [&](double dt, double cfl_number) {
        StepDiagnostics d;
        d.step = controller.step_index;
        d.t = controller.t;
        d.dt = dt;
        d.cfl_number = cfl_number;
        d.min_theta = step_summary.min_theta;
        d.activated_cells = step_summary.activated_cells;
        d.theta3_active = step_summary.theta3_active;
        d.deferred = step_summary.deferred;
        d.fallback_halvings = step_summary.fallback_halvings;
        d.totals = space.integral(field);
        d.min_average_entropy = min_average_entropy(field, gamma);
        result.diagnostics.push_back(d);
    };

    try {
        limit(field);
        verify(field);
        record(0.0, 0.0);

        // Multistep runs use one step size for the whole run, sized so the
        // final step lands on t_final.
        double frozen_dt = 0.0;
        long frozen_steps = 0;
        if (multistep && settings.t_final > 0.0) {
            // Each term of the multistep update is a forward Euler step of up to
            // 3 dt, so the single-step bound is divided by three.
            const double trial = controller.compute_dt(space.max_wave_speed(field, gamma), h) * kMultistepSspCoefficient;
            frozen_steps = static_cast<long>(std::ceil(settings.t_final / trial - 1e-12));
            frozen_dt = settings.t_final / static_cast<double>(frozen_steps);
        }
        MultistepHistory<DGField> history;

        while (multistep ? controller.step_index < frozen_steps : controller.t < settings.t_final) {
            if (controller.step_index >= settings.max_steps)
                throw SolverError("evolve: step limit reached before t_final");
            step_summary = LimiterSummary{};

            const double speed = space.max_wave_speed(field, gamma);
            alpha = speed;
            const double dt = multistep ? frozen_dt : controller.compute_dt(speed, h);
            controller.check_bound(dt, speed, h, multistep ? kMultistepSspCoefficient : controller.cfl_fraction);
            controller.dt = dt;
            controller.lambda = dt / h;

            DGField residual = op(field);
            const bool per_stage = settings.placement == LimiterPlacement::per_stage;
            switch (settings.integrator) {
            case Integrator::forward_euler:
                field += dt * residual;
                limit(field);
                break;
            case Integrator::rk3:
                if (per_stage) {
                    field = ssp_rk3_step(field, residual, dt, op, limit);
                } else {
                    field = ssp_rk3_step(field, residual, dt, op, no_limit);
                    limit(field);
                }
                break;
            case Integrator::ms3:
                history.push(field, std::move(residual), dt);
                if (!history.ready()) {
                    // RK3 start-up for the first three steps.
                    if (per_stage)
                        field = ssp_rk3_step(field, history.residual(0), dt, op, limit);
                    else
                        field = ssp_rk3_step(field, history.residual(0), dt, op, no_limit);
                }
                else {
                    field = ssp_ms3_step(history, dt);
                }
                if (!per_stage || history.ready())
                    limit(field);
                break;
            }
            verify(field);

            ++controller.step_index;
            controller.t = multistep ? controller.step_index * frozen_dt : controller.t + dt;
            if (multistep && controller.step_index == frozen_steps)
                controller.t = settings.t_final;
            record(dt, controller.lambda * speed);
        }
    } catch (const RegionViolation& e) {
        throw RegionViolation(std::string(e.what()) + " at step " + std::to_string(controller.step_index), e.cell(),
                              controller.step_index);
    }

    result.t = controller.t;
    result.steps = controller.step_index;
    return result;
}

} // namespace irp
