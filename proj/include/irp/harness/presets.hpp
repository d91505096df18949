#pragma once

#include <functional>
#include <optional>
#include <string>

#include "irp/euler.hpp"
#include "irp/harness/config.hpp"
#include "irp/mesh.hpp"
#include "irp/riemann.hpp"

namespace irp::harness {

enum class ReferencePolicy { exact_function, exact_riemann, fine_grid };

struct Preset {
    std::string name;
    double a = 0.0;
    double b = 1.0;
    BoundaryKind boundary = BoundaryKind::periodic;
    double t_final = 0.0;
    std::function<ConservedState(double)> initial;
    ReferencePolicy reference = ReferencePolicy::exact_function;
    /// Exact density rho(x, t) (smooth_advection only).
    std::function<double(double, double)> exact_density;
    std::optional<RiemannProblem> riemann;
};

Preset make_preset(const RunConfig& config);

/// Minimum specific entropy of the initial data, sampled on each cell at 32
/// Gauss-Legendre nodes plus both endpoints.
double entropy_floor(const Preset& preset, const Mesh1D& mesh, double gamma, int samples_per_cell = 32);

} // namespace irp::harness
