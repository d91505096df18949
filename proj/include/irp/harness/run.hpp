#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "irp/dg_space.hpp"
#include "irp/harness/config.hpp"
#include "irp/harness/norms.hpp"
#include "irp/harness/presets.hpp"
#include "irp/time_integration.hpp"

namespace irp::harness {

struct RunOutcome {
    RunConfig config;
    Preset preset;
    DGSpace space;
    InvariantRegion region;
    EvolveResult evolution;
    /// Density errors against the exact solution, when one exists.
    std::optional<ErrorNorms> errors;
};

/// Project the preset's data, fix s0 from the data, evolve, and measure errors.
RunOutcome run_solve(const RunConfig& config, bool allow_degree_zero = false);

/// Errors of `coarse` against a finer self-run on the same domain.
ErrorNorms fine_grid_errors(const RunOutcome& coarse, const RunOutcome& fine);

/// Shu-Osher style fine-grid reference: P2, RK3, IRP on `n_cells`, same
/// problem, gamma, eps and final time as `config`.
RunOutcome fine_grid_reference(const RunConfig& config, int n_cells = 2560);

struct ConvergenceRow {
    int n_cells = 0;
    double error_linf = 0.0;
    std::optional<double> order_linf;
    double error_l1 = 0.0;
    std::optional<double> order_l1;
    std::string failure;
};

/// log2(coarse / fine); empty when either error is zero.
std::optional<double> convergence_order(double coarse_error, double fine_error);

/// One run per cell count (each double the previous). A failing run ends the
/// table with an annotated row.
std::vector<ConvergenceRow> convergence_study(const RunConfig& base, std::span<const int> cell_counts,
                                              bool allow_degree_zero = false);

} // namespace irp::harness
