#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "irp/euler.hpp"
#include "irp/limiter.hpp"
#include "irp/time_integration.hpp"

namespace irp::harness {

enum class ProblemKind { smooth_advection, lax, shu_osher, custom_riemann };

std::string_view to_string(ProblemKind problem);
ProblemKind problem_from_string(std::string_view name);

struct RunConfig {
    ProblemKind problem = ProblemKind::smooth_advection;
    int degree = 2;
    int n_cells = 100;
    LimiterKind limiter = LimiterKind::irp;
    Integrator integrator = Integrator::rk3;
    LimiterPlacement placement = LimiterPlacement::per_stage;
    double cfl_fraction = 0.0;  // <= 0: integrator default
    std::optional<double> t_final;
    double gamma = 1.4;
    double epsilon = 1e-13;
    std::string output_path;

    // custom_riemann only (primitive states), and optional domain override
    PrimitiveState left{1.0, 0.0, 1.0};
    PrimitiveState right{0.125, 0.0, 0.1};
    std::optional<double> x0;  // default: domain midpoint
    std::optional<double> domain_a;
    std::optional<double> domain_b;

    /// Throws ConfigError. Degree 0 is accepted only as a diagnostic mode.
    void validate(bool allow_degree_zero = false) const;
};

/// Flat key=value settings; keys mirror the CLI flag names without dashes.
using Settings = std::map<std::string, std::string>;

/// Parse `key = value` lines; '#' starts a comment. Throws ConfigError.
Settings parse_settings(std::string_view text);
Settings read_settings_file(const std::string& path);

/// Apply settings on top of `base`. Unknown keys throw ConfigError.
RunConfig apply_settings(RunConfig base, const Settings& settings);

// Locale-independent numeric parsing; throw ConfigError.
double parse_double(std::string_view text, std::string_view what);
int parse_int(std::string_view text, std::string_view what);
std::vector<double> parse_double_list(std::string_view text, std::string_view what);
std::vector<int> parse_int_list(std::string_view text, std::string_view what);
PrimitiveState parse_primitive(std::string_view text, std::string_view what);

} // namespace irp::harness
