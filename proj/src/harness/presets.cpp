#include "irp/harness/presets.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "irp/quadrature.hpp"

namespace irp::harness {

namespace {

Preset smooth_advection(double gamma)
{
    Preset p;
    p.name = "smooth_advection";
    p.a = 0.0;
    p.b = 1.0;
    p.boundary = BoundaryKind::periodic;
    p.t_final = 1.0;
    p.exact_density = [](double x, double t) { return 1.0 + 0.5 * std::sin(2.0 * std::numbers::pi * (x - t)); };
    p.initial = [gamma, rho = p.exact_density](double x) {
        return to_conserved(PrimitiveState{rho(x, 0.0), 1.0, 1.0}, gamma);
    };
    p.reference = ReferencePolicy::exact_function;
    return p;
}

Preset riemann_preset(std::string name, const RiemannProblem& problem, double a, double b, double t_final)
{
    Preset p;
    p.name = std::move(name);
    p.a = a;
    p.b = b;
    p.boundary = BoundaryKind::outflow;
    p.t_final = t_final;
    p.riemann = problem;
    const ConservedState left = to_conserved(problem.left, problem.gamma);
    const ConservedState right = to_conserved(problem.right, problem.gamma);
    p.initial = [left, right, x0 = problem.x0](double x) { return x < x0 ? left : right; };
    p.reference = ReferencePolicy::exact_riemann;
    return p;
}

Preset lax(double gamma)
{
    // Data given in conserved variables.
    const ConservedState left{0.445, 0.311, 8.928};
    const ConservedState right{0.5, 0.0, 1.4275};
    RiemannProblem problem{to_primitive(left, gamma), to_primitive(right, gamma), gamma, 0.0};
    Preset p = riemann_preset("lax", problem, -2.0, 2.0, 0.5);
    p.initial = [left, right](double x) { return x < 0.0 ? left : right; };
    return p;
}

Preset shu_osher(double gamma)
{
    Preset p;
    p.name = "shu_osher";
    p.a = -5.0;
    p.b = 5.0;
    p.boundary = BoundaryKind::outflow;
    p.t_final = 1.8;
    p.initial = [gamma](double x) {
        if (x < -4.0)
            return to_conserved(PrimitiveState{3.857143, 2.629369, 10.3333}, gamma);
        return to_conserved(PrimitiveState{1.0 + 0.2 * std::sin(5.0 * x), 0.0, 1.0}, gamma);
    };
    p.reference = ReferencePolicy::fine_grid;
    return p;
}

} // namespace

Preset make_preset(const RunConfig& config)
{
    Preset p;
    switch (config.problem) {
    case ProblemKind::smooth_advection: p = smooth_advection(config.gamma); break;
    case ProblemKind::lax: p = lax(config.gamma); break;
    case ProblemKind::shu_osher: p = shu_osher(config.gamma); break;
    case ProblemKind::custom_riemann: {
        const double a = config.domain_a.value_or(0.0);
        const double b = config.domain_b.value_or(1.0);
        const double x0 = config.x0.value_or(0.5 * (a + b));
        p = riemann_preset("custom-riemann", RiemannProblem{config.left, config.right, config.gamma, x0}, a, b, 0.2);
        break;
    }
    }
    if (config.problem != ProblemKind::custom_riemann) {
        if (config.domain_a)
            p.a = *config.domain_a;
        if (config.domain_b)
            p.b = *config.domain_b;
    }
    if (config.t_final)
        p.t_final = *config.t_final;
    return p;
}

double entropy_floor(const Preset& preset, const Mesh1D& mesh, double gamma, int samples_per_cell)
{
    const QuadratureRule rule = gauss_legendre_rule(samples_per_cell);
    std::vector<PrimitiveState> samples;
    samples.reserve(static_cast<size_t>(mesh.n_cells()) * (samples_per_cell + 2));
    for (int i = 0; i < mesh.n_cells(); ++i) {
        samples.push_back(to_primitive(preset.initial(mesh.cell_left(i)), gamma));
        for (int q = 0; q < rule.size(); ++q)
            samples.push_back(to_primitive(preset.initial(mesh.to_physical(i, rule.nodes[q])), gamma));
        samples.push_back(to_primitive(preset.initial(mesh.cell_right(i)), gamma));
    }
    return entropy_floor_from_initial<double>(samples, gamma);
}

} // namespace irp::harness
