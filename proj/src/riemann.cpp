#include "irp/riemann.hpp"

#include <algorithm>
#include <cmath>

#include "irp/errors.hpp"
#include "irp/quadrature.hpp"

namespace irp {

namespace {

constexpr double kTolerance = 1e-12;
constexpr int kMaxIterations = 200;

double sound(const PrimitiveState& v, double gamma) { return std::sqrt(gamma * v.p / v.rho); }

double wave_curve_derivative(double p, const PrimitiveState& side, double gamma)
{
    if (p > side.p) {
        const double a = 2.0 / ((gamma + 1.0) * side.rho);
        const double b = (gamma - 1.0) / (gamma + 1.0) * side.p;
        const double root = std::sqrt(a / (p + b));
        return root * (1.0 - 0.5 * (p - side.p) / (p + b));
    }
    const double c = sound(side, gamma);
    return std::pow(p / side.p, -(gamma + 1.0) / (2.0 * gamma)) / (side.rho * c);
}

double star_density(double p_star, const PrimitiveState& side, double gamma)
{
    if (p_star > side.p) {
        const double g = (gamma - 1.0) / (gamma + 1.0);
        const double ratio = p_star / side.p;
        return side.rho * (ratio + g) / (g * ratio + 1.0);
    }
    return side.rho * std::pow(p_star / side.p, 1.0 / gamma);
}

} // namespace

double wave_curve(double p, const PrimitiveState& side, double gamma)
{
    if (p > side.p) {
        const double a = 2.0 / ((gamma + 1.0) * side.rho);
        const double b = (gamma - 1.0) / (gamma + 1.0) * side.p;
        return (p - side.p) * std::sqrt(a / (p + b));
    }
    const double c = sound(side, gamma);
    return 2.0 * c / (gamma - 1.0) * (std::pow(p / side.p, (gamma - 1.0) / (2.0 * gamma)) - 1.0);
}

double pressure_function(double p, const RiemannProblem& problem)
{
    return wave_curve(p, problem.left, problem.gamma) + wave_curve(p, problem.right, problem.gamma)
        + (problem.right.u - problem.left.u);
}

StarState solve_star(const RiemannProblem& pr)
{
    const double gamma = pr.gamma;
    if (!(pr.left.rho > 0.0) || !(pr.right.rho > 0.0) || pr.left.p < 0.0 || pr.right.p < 0.0)
        throw DomainError("solve_star: requires positive densities and non-negative pressures");
    const double cl = sound(pr.left, gamma);
    const double cr = sound(pr.right, gamma);
    const double du = pr.right.u - pr.left.u;
    if (2.0 / (gamma - 1.0) * (cl + cr) <= du)
        throw SolverError("solve_star: initial data generate vacuum");

    // Two-rarefaction estimate as the starting point.
    const double z = (gamma - 1.0) / (2.0 * gamma);
    double p = 0.0;
    if (pr.left.p > 0.0 && pr.right.p > 0.0) {
        p = std::pow((cl + cr - 0.5 * (gamma - 1.0) * du) / (cl / std::pow(pr.left.p, z) + cr / std::pow(pr.right.p, z)),
                     1.0 / z);
    }
    p = std::max(p, 1e-14 * std::max({pr.left.p, pr.right.p, 1.0}));

    // Bracket the root; pressure_function is increasing in p.
    double lo = 0.0;
    double hi = std::max({p, pr.left.p, pr.right.p, 1e-300});
    while (pressure_function(hi, pr) < 0.0)
        hi *= 2.0;
    p = std::clamp(p, lo, hi);

    StarState star;
    bool converged = false;
    for (int it = 1; it <= kMaxIterations; ++it) {
        const double f = pressure_function(p, pr);
        star.iterations = it;
        if (f < 0.0)
            lo = p;
        else
            hi = p;
        const double df = wave_curve_derivative(p, pr.left, gamma) + wave_curve_derivative(p, pr.right, gamma);
        double next = p - f / df;
        if (!(next > lo && next < hi) || !std::isfinite(next))
            next = 0.5 * (lo + hi);
        const double change = std::abs(next - p) / (0.5 * (next + p));
        p = next;
        if (change < kTolerance || hi - lo <= kTolerance * hi) {
            converged = true;
            break;
        }
    }
    if (!converged)
        throw SolverError("solve_star: no convergence in " + std::to_string(kMaxIterations) + " iterations");

    star.p_star = p;
    star.u_star = 0.5 * (pr.left.u + pr.right.u)
        + 0.5 * (wave_curve(p, pr.right, gamma) - wave_curve(p, pr.left, gamma));
    star.rho_star_left = star_density(p, pr.left, gamma);
    star.rho_star_right = star_density(p, pr.right, gamma);
    return star;
}

WaveFan wave_fan(const RiemannProblem& pr, const StarState& star)
{
    const double gamma = pr.gamma;
    WaveFan fan;
    fan.contact = star.u_star;

    const double cl = sound(pr.left, gamma);
    if (star.p_star > pr.left.p) {
        fan.left_is_shock = true;
        const double s = pr.left.u
            - cl * std::sqrt((gamma + 1.0) / (2.0 * gamma) * star.p_star / pr.left.p + (gamma - 1.0) / (2.0 * gamma));
        fan.left_head = fan.left_tail = s;
    } else {
        fan.left_head = pr.left.u - cl;
        fan.left_tail = star.u_star - cl * std::pow(star.p_star / pr.left.p, (gamma - 1.0) / (2.0 * gamma));
    }

    const double cr = sound(pr.right, gamma);
    if (star.p_star > pr.right.p) {
        fan.right_is_shock = true;
        const double s = pr.right.u
            + cr * std::sqrt((gamma + 1.0) / (2.0 * gamma) * star.p_star / pr.right.p + (gamma - 1.0) / (2.0 * gamma));
        fan.right_head = fan.right_tail = s;
    } else {
        fan.right_head = pr.right.u + cr;
        fan.right_tail = star.u_star + cr * std::pow(star.p_star / pr.right.p, (gamma - 1.0) / (2.0 * gamma));
    }
    return fan;
}

PrimitiveState sample(const RiemannProblem& pr, const StarState& star, double xi)
{
    const double gamma = pr.gamma;
    const WaveFan fan = wave_fan(pr, star);
    const double g1 = 2.0 / (gamma + 1.0);
    const double g2 = (gamma - 1.0) / (gamma + 1.0);

    if (xi <= fan.contact) {
        const PrimitiveState& l = pr.left;
        if (xi <= fan.left_head)
            return l;
        if (xi >= fan.left_tail)
            return {star.rho_star_left, star.u_star, star.p_star};
        // Inside the left rarefaction fan.
        const double cl = sound(l, gamma);
        const double base = g1 + g2 / cl * (l.u - xi);
        return {l.rho * std::pow(base, 2.0 / (gamma - 1.0)), g1 * (cl + 0.5 * (gamma - 1.0) * l.u + xi),
                l.p * std::pow(base, 2.0 * gamma / (gamma - 1.0))};
    }

    const PrimitiveState& r = pr.right;
    if (xi >= fan.right_head)
        return r;
    if (xi <= fan.right_tail)
        return {star.rho_star_right, star.u_star, star.p_star};
    const double cr = sound(r, gamma);
    const double base = g1 - g2 / cr * (r.u - xi);
    return {r.rho * std::pow(base, 2.0 / (gamma - 1.0)), g1 * (-cr + 0.5 * (gamma - 1.0) * r.u + xi),
            r.p * std::pow(base, 2.0 * gamma / (gamma - 1.0))};
}

PrimitiveState exact_state(const RiemannProblem& problem, const StarState& star, double x, double t)
{
    if (t <= 0.0)
        return x < problem.x0 ? problem.left : problem.right;
    return sample(problem, star, (x - problem.x0) / t);
}

std::vector<ConservedState> reference_on_mesh(const RiemannProblem& problem, const Mesh1D& mesh, double t,
                                              int samples_per_cell)
{
    const StarState star = solve_star(problem);
    const QuadratureRule rule = gauss_legendre_rule(samples_per_cell);
    std::vector<ConservedState> averages(mesh.n_cells(), ConservedState::Zero());
    for (int i = 0; i < mesh.n_cells(); ++i) {
        for (int q = 0; q < rule.size(); ++q) {
            const PrimitiveState v = exact_state(problem, star, mesh.to_physical(i, rule.nodes[q]), t);
            averages[i] += rule.weights[q] * to_conserved(v, problem.gamma);
        }
    }
    return averages;
}

} // namespace irp
