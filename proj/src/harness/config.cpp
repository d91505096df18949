#include "irp/harness/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "irp/errors.hpp"

namespace irp::harness {

std::string_view to_string(ProblemKind problem)
{
    switch (problem) {
    case ProblemKind::smooth_advection: return "smooth_advection";
    case ProblemKind::lax: return "lax";
    case ProblemKind::shu_osher: return "shu_osher";
    case ProblemKind::custom_riemann: return "custom-riemann";
    }
    return "unknown";
}

ProblemKind problem_from_string(std::string_view name)
{
    if (name == "smooth_advection" || name == "smooth")
        return ProblemKind::smooth_advection;
    if (name == "lax")
        return ProblemKind::lax;
    if (name == "shu_osher" || name == "shu-osher")
        return ProblemKind::shu_osher;
    if (name == "custom-riemann" || name == "custom_riemann")
        return ProblemKind::custom_riemann;
    throw ConfigError("unknown problem '" + std::string(name) + "'");
}

void RunConfig::validate(bool allow_degree_zero) const
{
    const int min_degree = allow_degree_zero ? 0 : 1;
    if (degree < min_degree || degree > 3)
        throw ConfigError("degree must be 1, 2 or 3");
    if (n_cells < 1)
        throw ConfigError("cell count must be positive");
    if (t_final && *t_final < 0.0)
        throw ConfigError("final time must be non-negative");
    if (!(gamma > 1.0))
        throw ConfigError("gamma must exceed 1");
    if (!(epsilon > 0.0))
        throw ConfigError("epsilon must be positive");
    if (cfl_fraction > 1.0)
        throw ConfigError("cfl fraction must lie in (0, 1]");
    if (domain_a && domain_b && !(*domain_b > *domain_a))
        throw ConfigError("domain must satisfy a < b");
}

namespace {

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view text, char sep)
{
    std::vector<std::string_view> parts;
    size_t start = 0;
    while (true) {
        const auto pos = text.find(sep, start);
        parts.push_back(trim(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
        if (pos == std::string_view::npos)
            break;
        start = pos + 1;
    }
    return parts;
}

} // namespace

double parse_double(std::string_view text, std::string_view what)
{
    text = trim(text);
    if (!text.empty() && text.front() == '+')
        text.remove_prefix(1);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty())
        throw ConfigError("invalid number for " + std::string(what) + ": '" + std::string(text) + "'");
    return value;
}

int parse_int(std::string_view text, std::string_view what)
{
    text = trim(text);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty())
        throw ConfigError("invalid integer for " + std::string(what) + ": '" + std::string(text) + "'");
    return value;
}

std::vector<double> parse_double_list(std::string_view text, std::string_view what)
{
    std::vector<double> values;
    for (auto part : split(text, ','))
        values.push_back(parse_double(part, what));
    return values;
}

std::vector<int> parse_int_list(std::string_view text, std::string_view what)
{
    std::vector<int> values;
    for (auto part : split(text, ','))
        values.push_back(parse_int(part, what));
    return values;
}

PrimitiveState parse_primitive(std::string_view text, std::string_view what)
{
    const auto v = parse_double_list(text, what);
    if (v.size() != 3)
        throw ConfigError(std::string(what) + " expects rho,u,p");
    return {v[0], v[1], v[2]};
}

Settings parse_settings(std::string_view text)
{
    Settings settings;
    int line_no = 0;
    for (auto line : split(text, '\n')) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos)
            line = trim(line.substr(0, hash));
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw ConfigError("config line " + std::to_string(line_no) + ": expected key=value");
        const auto key = trim(line.substr(0, eq));
        if (key.empty())
            throw ConfigError("config line " + std::to_string(line_no) + ": empty key");
        settings[std::string(key)] = std::string(trim(line.substr(eq + 1)));
    }
    return settings;
}

Settings read_settings_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot read config file " + path);
    std::ostringstream text;
    text << in.rdbuf();
    return parse_settings(text.str());
}

RunConfig apply_settings(RunConfig config, const Settings& settings)
{
    for (const auto& [key, value] : settings) {
        if (key == "problem")
            config.problem = problem_from_string(value);
        else if (key == "degree")
            config.degree = parse_int(value, key);
        else if (key == "cells")
            config.n_cells = parse_int(value, key);
        else if (key == "limiter")
            config.limiter = limiter_kind_from_string(value);
        else if (key == "integrator")
            config.integrator = integrator_from_string(value);
        else if (key == "placement")
            config.placement = placement_from_string(value);
        else if (key == "cfl")
            config.cfl_fraction = parse_double(value, key);
        else if (key == "tfinal")
            config.t_final = parse_double(value, key);
        else if (key == "gamma")
            config.gamma = parse_double(value, key);
        else if (key == "eps")
            config.epsilon = parse_double(value, key);
        else if (key == "out")
            config.output_path = value;
        else if (key == "left")
            config.left = parse_primitive(value, key);
        else if (key == "right")
            config.right = parse_primitive(value, key);
        else if (key == "x0")
            config.x0 = parse_double(value, key);
        else if (key == "domain") {
            const auto d = parse_double_list(value, key);
            if (d.size() != 2)
                throw ConfigError("domain expects a,b");
            config.domain_a = d[0];
            config.domain_b = d[1];
        } else if (key == "cells-list" || key == "reference-cells" || key == "diagnostics") {
            // consumed by the CLI front end
        } else {
            throw ConfigError("unknown setting '" + key + "'");
        }
    }
    return config;
}

} // namespace irp::harness
