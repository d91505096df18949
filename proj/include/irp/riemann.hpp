#pragma once

// Exact solution of the 1D Euler Riemann problem for an ideal gas
// (two-shock/two-rarefaction pressure function, self-similar sampling).

#include <vector>

#include "irp/euler.hpp"
#include "irp/mesh.hpp"

namespace irp {

struct RiemannProblem {
    PrimitiveState left;
    PrimitiveState right;
    double gamma = 1.4;
    double x0 = 0.0;
};

struct StarState {
    double p_star = 0.0;
    double u_star = 0.0;
    double rho_star_left = 0.0;
    double rho_star_right = 0.0;
    int iterations = 0;
};

/// Head/tail speeds of the two nonlinear waves and the contact speed. For a
/// shock, head == tail == shock speed.
struct WaveFan {
    bool left_is_shock = false;
    bool right_is_shock = false;
    double left_head = 0.0;
    double left_tail = 0.0;
    double contact = 0.0;
    double right_tail = 0.0;
    double right_head = 0.0;
};

/// f_K(p): velocity change across the K-wave as a function of star pressure.
double wave_curve(double p, const PrimitiveState& side, double gamma);

/// f_L(p) + f_R(p) + (u_R - u_L); its root is p*.
double pressure_function(double p, const RiemannProblem& problem);

StarState solve_star(const RiemannProblem& problem);
WaveFan wave_fan(const RiemannProblem& problem, const StarState& star);

/// State at similarity coordinate xi = (x - x0) / t.
PrimitiveState sample(const RiemannProblem& problem, const StarState& star, double xi);

/// Exact state at (x, t); t <= 0 returns the initial data.
PrimitiveState exact_state(const RiemannProblem& problem, const StarState& star, double x, double t);

/// Cell averages of the exact conserved solution, Gauss-Legendre quadrature
/// with samples_per_cell nodes per cell.
std::vector<ConservedState> reference_on_mesh(const RiemannProblem& problem, const Mesh1D& mesh, double t,
                                              int samples_per_cell = 16);

} // namespace irp
