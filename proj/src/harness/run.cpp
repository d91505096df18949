#include "irp/harness/run.hpp"

#include <cmath>

#include "irp/errors.hpp"

namespace irp::harness {

RunOutcome run_solve(const RunConfig& config, bool allow_degree_zero)
{
    config.validate(allow_degree_zero);
    Preset preset = make_preset(config);
    const Mesh1D mesh(preset.a, preset.b, config.n_cells, preset.boundary);
    DGSpace space(mesh, config.degree);
    const InvariantRegion region(config.gamma, entropy_floor(preset, mesh, config.gamma), config.epsilon);

    SolverSettings settings;
    settings.limiter = config.limiter;
    settings.integrator = config.integrator;
    settings.placement = config.placement;
    settings.cfl_fraction = config.cfl_fraction;
    settings.t_final = preset.t_final;
    settings.region = region;

    EvolveResult evolution = evolve(space, space.project(preset.initial), settings);

    std::optional<ErrorNorms> errors;
    const double t = evolution.t;
    if (preset.reference == ReferencePolicy::exact_function && preset.exact_density) {
        errors = error_norms(space, evolution.field, [&](double x) { return preset.exact_density(x, t); });
    } else if (preset.reference == ReferencePolicy::exact_riemann && preset.riemann) {
        const RiemannProblem& problem = *preset.riemann;
        const StarState star = solve_star(problem);
        errors = error_norms(space, evolution.field,
                             [&](double x) { return exact_state(problem, star, x, t).rho; });
    }

    return RunOutcome{config, std::move(preset), std::move(space), region, std::move(evolution), errors};
}

ErrorNorms fine_grid_errors(const RunOutcome& coarse, const RunOutcome& fine)
{
    return error_norms(coarse.space, coarse.evolution.field, fine.space, fine.evolution.field);
}

RunOutcome fine_grid_reference(const RunConfig& config, int n_cells)
{
    RunConfig fine = config;
    fine.n_cells = n_cells;
    fine.degree = 2;
    fine.integrator = Integrator::rk3;
    fine.limiter = LimiterKind::irp;
    fine.placement = LimiterPlacement::per_stage;
    return run_solve(fine);
}

std::optional<double> convergence_order(double coarse_error, double fine_error)
{
    if (!(coarse_error > 0.0) || !(fine_error > 0.0))
        return std::nullopt;
    return std::log2(coarse_error / fine_error);
}

std::vector<ConvergenceRow> convergence_study(const RunConfig& base, std::span<const int> cell_counts,
                                              bool allow_degree_zero)
{
    if (cell_counts.size() < 2)
        throw ConfigError("convergence study needs at least two cell counts");
    for (size_t j = 1; j < cell_counts.size(); ++j)
        if (cell_counts[j] != 2 * cell_counts[j - 1])
            throw ConfigError("convergence study: each cell count must double the previous one");

    std::vector<ConvergenceRow> rows;
    for (const int n : cell_counts) {
        RunConfig config = base;
        config.n_cells = n;
        ConvergenceRow row;
        row.n_cells = n;
        try {
            const RunOutcome outcome = run_solve(config, allow_degree_zero);
            if (!outcome.errors)
                throw ConfigError("convergence study requires a problem with an exact solution");
            row.error_linf = outcome.errors->linf;
            row.error_l1 = outcome.errors->l1;
        } catch (const ConfigError&) {
            throw;
        } catch (const std::exception& e) {
            row.failure = e.what();
            rows.push_back(row);
            break;
        }
        if (!rows.empty()) {
            row.order_linf = convergence_order(rows.back().error_linf, row.error_linf);
            row.order_l1 = convergence_order(rows.back().error_l1, row.error_l1);
        }
        rows.push_back(row);
    }
    return rows;
}

} // namespace irp::harness
