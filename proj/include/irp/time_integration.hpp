#pragma once

#include <array>
#include <string_view>
#include <vector>

#include "irp/dg_field.hpp"
#include "irp/dg_space.hpp"
#include "irp/errors.hpp"
#include "irp/euler.hpp"
#include "irp/limiter.hpp"

namespace irp {

enum class Integrator { rk3, ms3, forward_euler };
enum class LimiterPlacement { per_stage, per_step };

std::string_view to_string(Integrator integrator);
Integrator integrator_from_string(std::string_view name);
std::string_view to_string(LimiterPlacement placement);
LimiterPlacement placement_from_string(std::string_view name);

/// Step-size control for the bound  lambda * max(|u| + c) <= w1 / 2,
/// lambda = dt / h, w1 the first Gauss-Lobatto weight of the test set.
struct TimeController {
    double cfl_fraction = 1.0;
    double t = 0.0;
    double t_final = 0.0;
    double dt = 0.0;
    double lambda = 0.0;
    long step_index = 0;
    double w_hat_1 = 0.5;

    /// Largest admissible step for the given speed, clipped to reach t_final.
    double compute_dt(double max_speed, double h) const;
    /// Throws SolverError if dt violates the bound for the given speed.
    void check_bound(double dt_, double max_speed, double h, double fraction) const;
};

double compute_dt(const DGSpace& space, const DGField& field, double gamma, const TimeController& controller);

// ---------------------------------------------------------------------------
// Steppers. State needs State + State and double * State; the operator maps
// State -> State and limit(State&) post-processes in place.

template <class State, class Operator, class Limit>
State ssp_rk3_step(const State& w, const State& residual_w, double dt, Operator&& op, Limit&& limit)
{
    State stage1 = w + dt * residual_w;
    limit(stage1);
    State stage2 = 0.75 * w + 0.25 * stage1 + (0.25 * dt) * op(stage1);
    limit(stage2);
    State next = (1.0 / 3.0) * w + (2.0 / 3.0) * stage2 + (2.0 / 3.0 * dt) * op(stage2);
    limit(next);
    return next;
}

template <class State, class Operator, class Limit>
State ssp_rk3_step(const State& w, double dt, Operator&& op, Limit&& limit)
{
    return ssp_rk3_step(w, State(op(w)), dt, op, limit);
}

/// The last four solutions and their residuals at a fixed step size.
template <class State>
class MultistepHistory {
public:
    void push(State w, State residual, double dt)
    {
        if (count_ > 0 && dt != dt_)
            throw SolverError("multistep history requires a constant step size");
        dt_ = dt;
        head_ = (head_ + 1) % 4;
        states_[head_] = std::move(w);
        residuals_[head_] = std::move(residual);
        count_ = count_ < 4 ? count_ + 1 : 4;
    }

    bool ready() const { return count_ == 4; }
    int size() const { return count_; }
    double dt() const { return dt_; }

    /// lag 0 is the newest entry, lag 3 the oldest.
    const State& state(int lag) const { return states_[index(lag)]; }
    const State& residual(int lag) const { return residuals_[index(lag)]; }

private:
    int index(int lag) const
    {
        if (lag < 0 || lag >= count_)
            throw SolverError("multistep history: lag out of range");
        return (head_ - lag + 4) % 4;
    }

    std::array<State, 4> states_{};
    std::array<State, 4> residuals_{};
    int head_ = -1;
    int count_ = 0;
    double dt_ = 0.0;
};

/// Ratio of the multistep scheme's stable step to the forward Euler step.
inline constexpr double kMultistepSspCoefficient = 1.0 / 3.0;

/// Third-order SSP multistep update
///   W^{n+1} = 16/27 (W^n + 3 dt L(W^n)) + 11/27 (W^{n-3} + 12/11 dt L(W^{n-3})).
template <class State>
State ssp_ms3_step(const MultistepHistory<State>& history, double dt)
{
    if (!history.ready())
        throw SolverError("multistep step before bootstrap completed");
    if (dt != history.dt())
        throw SolverError("multistep step size differs from the history's");
    return (16.0 / 27.0) * (history.state(0) + (3.0 * dt) * history.residual(0))
        + (11.0 / 27.0) * (history.state(3) + (12.0 / 11.0 * dt) * history.residual(3));
}

// ---------------------------------------------------------------------------

struct SolverSettings {
    LimiterKind limiter = LimiterKind::irp;
    Integrator integrator = Integrator::rk3;
    LimiterPlacement placement = LimiterPlacement::per_stage;
    /// Fraction of the theoretical CFL bound; <= 0 selects 1.0 (RK3) or 0.9 (MS).
    double cfl_fraction = 0.0;
    double t_final = 0.0;
    InvariantRegion region;
    long max_steps = 50'000'000;
};

double default_cfl_fraction(Integrator integrator);

struct StepDiagnostics {
    long step = 0;
    double t = 0.0;
    double dt = 0.0;
    /// lambda * max(|u| + c) measured at the start of the step.
    double cfl_number = 0.0;
    double min_theta = 1.0;
    int activated_cells = 0;
    int theta3_active = 0;
    int deferred = 0;
    int fallback_halvings = 0;
    ConservedState totals = ConservedState::Zero();
    double min_average_entropy = 0.0;
};

struct EvolveResult {
    DGField field;
    std::vector<StepDiagnostics> diagnostics;
    /// Reports of the last limiter pass (theta per cell).
    std::vector<CellLimiterReport> last_reports;
    double t = 0.0;
    long steps = 0;
};

/// Limit the initial field, then march to t_final. Every accepted state has
/// averages in the interior of the region and test nodes in the region.
EvolveResult evolve(const DGSpace& space, DGField initial, const SolverSettings& settings);

} // namespace irp
