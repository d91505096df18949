// irp-dg: command-line front end for the DG solver with the invariant-region
// limiter. Subcommands: solve, converge, riemann-exact, diagnose.
//
// Exit codes: 0 success, 2 configuration/usage error, 3 solver abort.

#include <cstdio>
#include <fstream>
#include <limits>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "irp/errors.hpp"
#include "irp/harness/config.hpp"
#include "irp/harness/csv.hpp"
#include "irp/harness/run.hpp"

using namespace irp;
using namespace irp::harness;

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitSolver = 3;

struct RunFlags {
    std::string config_file;
    Settings settings;
};

// Registers one string-valued flag that lands in the settings map under `key`.
void add_setting(CLI::App* app, RunFlags& flags, const std::string& key, const std::string& help)
{
    app->add_option_function<std::string>(
        "--" + key, [&flags, key](const std::string& value) { flags.settings[key] = value; }, help);
}

void add_run_flags(CLI::App* app, RunFlags& flags)
{
    app->add_option("--config", flags.config_file, "key=value config file; flags override it");
    add_setting(app, flags, "problem", "smooth_advection | lax | shu_osher | custom-riemann");
    add_setting(app, flags, "degree", "polynomial degree k (1-3)");
    add_setting(app, flags, "cells", "number of cells");
    add_setting(app, flags, "limiter", "none | positivity | irp");
    add_setting(app, flags, "integrator", "rk3 | ms3");
    add_setting(app, flags, "cfl", "fraction of the theoretical CFL bound");
    add_setting(app, flags, "tfinal", "final time");
    add_setting(app, flags, "gamma", "adiabatic exponent");
    add_setting(app, flags, "eps", "admissibility floor epsilon");
    add_setting(app, flags, "placement", "per_stage | per_step");
    add_setting(app, flags, "out", "output CSV path");
    add_setting(app, flags, "left", "custom-riemann left state rho,u,p");
    add_setting(app, flags, "right", "custom-riemann right state rho,u,p");
    add_setting(app, flags, "domain", "domain a,b");
    add_setting(app, flags, "x0", "custom-riemann interface location");
}

Settings merged_settings(const RunFlags& flags)
{
    Settings settings;
    if (!flags.config_file.empty())
        settings = read_settings_file(flags.config_file);
    for (const auto& [key, value] : flags.settings)
        settings[key] = value;
    return settings;
}

void print_summary(const RunOutcome& run)
{
    const auto& ev = run.evolution;
    double min_theta = 1.0;
    double min_entropy = std::numeric_limits<double>::infinity();
    for (const auto& d : ev.diagnostics) {
        min_theta = std::min(min_theta, d.min_theta);
        min_entropy = std::min(min_entropy, d.min_average_entropy);
    }
    std::cout << "problem      " << to_string(run.config.problem) << "\n"
              << "degree       " << run.config.degree << "\n"
              << "cells        " << run.config.n_cells << "\n"
              << "limiter      " << to_string(run.config.limiter) << "\n"
              << "integrator   " << to_string(run.config.integrator) << "\n"
              << "steps        " << ev.steps << "\n"
              << "t            " << format_number(ev.t) << "\n"
              << "s0           " << format_number(run.region.s0) << "\n"
              << "min theta    " << format_number(min_theta) << "\n"
              << "min s(avg)   " << format_number(min_entropy) << "\n";
    if (run.errors)
        std::cout << "L-inf error  " << format_number(run.errors->linf) << "\n"
                  << "L1 error     " << format_number(run.errors->l1) << "\n";
}

int run_solve_command(const RunFlags& flags, const std::string& diagnostics_path, int reference_cells)
{
    const RunConfig config = apply_settings(RunConfig{}, merged_settings(flags));
    const RunOutcome run = run_solve(config);
    print_summary(run);
    if (reference_cells > 0) {
        const RunOutcome fine = fine_grid_reference(config, reference_cells);
        const ErrorNorms diff = fine_grid_errors(run, fine);
        std::cout << "fine-grid reference (" << reference_cells << " cells)\n"
                  << "L-inf diff   " << format_number(diff.linf) << "\n"
                  << "L1 diff      " << format_number(diff.l1) << "\n";
    }
    if (!config.output_path.empty())
        emit_solution_csv(config.output_path, run.space, run.evolution.field, run.region, run.evolution.last_reports);
    if (!diagnostics_path.empty())
        emit_diagnostics_csv(diagnostics_path, run.evolution.diagnostics);
    return 0;
}

int run_converge_command(const RunFlags& flags, const std::string& cells_list)
{
    const RunConfig config = apply_settings(RunConfig{}, merged_settings(flags));
    config.validate();
    const auto cells = parse_int_list(cells_list, "cells-list");
    const auto rows = convergence_study(config, cells);
    write_table_csv(std::cout, rows);
    if (!config.output_path.empty())
        emit_table_csv(config.output_path, rows);
    for (const auto& row : rows)
        if (!row.failure.empty())
            return kExitSolver;
    return 0;
}

int run_diagnose_command(const RunFlags& flags)
{
    const RunConfig config = apply_settings(RunConfig{}, merged_settings(flags));
    const RunOutcome run = run_solve(config);
    if (config.output_path.empty())
        write_diagnostics_csv(std::cout, run.evolution.diagnostics);
    else
        emit_diagnostics_csv(config.output_path, run.evolution.diagnostics);
    return 0;
}

struct RiemannFlags {
    std::string left;   // default: Lax left state
    std::string right;  // default: Lax right state
    double gamma = 1.4;
    double time = 0.5;
    std::string domain = "-2,2";
    std::string x0;
    int samples = 400;
    int cells = 0;
    int degree = 2;
    std::string out;
};

int run_riemann_command(const RiemannFlags& f)
{
    const auto domain = parse_double_list(f.domain, "domain");
    if (domain.size() != 2 || !(domain[1] > domain[0]))
        throw ConfigError("domain expects a,b with a < b");
    if (!(f.time >= 0.0))
        throw ConfigError("time must be non-negative");
    const auto state = [&](const std::string& text, const ConservedState& lax, const char* what) {
        return text.empty() ? to_primitive(lax, f.gamma) : parse_primitive(text, what);
    };
    RiemannProblem problem{state(f.left, ConservedState(0.445, 0.311, 8.928), "left"),
                           state(f.right, ConservedState(0.5, 0.0, 1.4275), "right"), f.gamma,
                           f.x0.empty() ? 0.5 * (domain[0] + domain[1]) : parse_double(f.x0, "x0")};

    std::vector<double> xs;
    if (f.cells > 0) {
        // Same points as a solve run's solution CSV.
        const DGSpace space(Mesh1D(domain[0], domain[1], f.cells, BoundaryKind::outflow), f.degree);
        for (int i = 0; i < f.cells; ++i)
            for (int q = 0; q < space.test_rule().size(); ++q)
                xs.push_back(space.mesh().to_physical(i, space.test_rule().nodes[q]));
    } else {
        if (f.samples < 2)
            throw ConfigError("samples must be at least 2");
        for (int j = 0; j < f.samples; ++j)
            xs.push_back(domain[0] + (domain[1] - domain[0]) * j / (f.samples - 1));
    }
    if (f.out.empty()) {
        write_riemann_csv(std::cout, problem, f.time, xs);
    } else {
        std::ofstream out(resolve_output_path(f.out));
        if (!out)
            throw std::runtime_error("cannot open output file " + f.out);
        write_riemann_csv(out, problem, f.time, xs);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"DG solver for 1D compressible Euler with an invariant-region-preserving limiter"};
    app.require_subcommand(1);

    RunFlags solve_flags;
    std::string diagnostics_path;
    int reference_cells = 0;
    auto* solve = app.add_subcommand("solve", "run one simulation");
    add_run_flags(solve, solve_flags);
    solve->add_option("--diagnostics", diagnostics_path, "per-step diagnostics CSV path");
    solve->add_option("--reference-cells", reference_cells, "also run a fine-grid reference and report differences");

    RunFlags converge_flags;
    std::string cells_list = "8,16,32,64,128";
    auto* converge = app.add_subcommand("converge", "convergence table over doubling meshes");
    add_run_flags(converge, converge_flags);
    converge->add_option("--cells-list", cells_list, "comma-separated cell counts, each doubling the previous");

    RiemannFlags riemann_flags;
    auto* riemann = app.add_subcommand("riemann-exact", "sample the exact Riemann solution");
    riemann->add_option("--left", riemann_flags.left, "left primitive state rho,u,p (default: Lax problem)");
    riemann->add_option("--right", riemann_flags.right, "right primitive state rho,u,p (default: Lax problem)");
    riemann->add_option("--gamma", riemann_flags.gamma, "adiabatic exponent");
    riemann->add_option("--time", riemann_flags.time, "sampling time");
    riemann->add_option("--domain", riemann_flags.domain, "domain a,b");
    riemann->add_option("--x0", riemann_flags.x0, "interface location (default: midpoint)");
    riemann->add_option("--samples", riemann_flags.samples, "number of uniform sample points");
    riemann->add_option("--cells", riemann_flags.cells, "sample at the test nodes of this many DG cells instead");
    riemann->add_option("--degree", riemann_flags.degree, "DG degree for --cells sampling");
    riemann->add_option("--out", riemann_flags.out, "output CSV path (default: stdout)");

    RunFlags diagnose_flags;
    auto* diagnose = app.add_subcommand("diagnose", "run and emit per-step diagnostics");
    add_run_flags(diagnose, diagnose_flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        std::cerr << app.help();
        return kExitConfig;
    }

    try {
        if (*solve)
            return run_solve_command(solve_flags, diagnostics_path, reference_cells);
        if (*converge)
            return run_converge_command(converge_flags, cells_list);
        if (*riemann)
            return run_riemann_command(riemann_flags);
        if (*diagnose)
            return run_diagnose_command(diagnose_flags);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const RegionViolation& e) {
        std::cerr << "solver abort: " << e.what() << "\n";
        return kExitSolver;
    } catch (const SolverError& e) {
        std::cerr << "solver abort: " << e.what() << "\n";
        return kExitSolver;
    } catch (const DomainError& e) {
        std::cerr << "solver abort: " << e.what() << "\n";
        return kExitSolver;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
