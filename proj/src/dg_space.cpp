#include "irp/dg_space.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "irp/legendre.hpp"

namespace irp {

FluxVector lax_friedrichs_flux(const ConservedState& left, const ConservedState& right, double alpha,
                               double gamma)
{
    return 0.5 * (physical_flux(left, gamma) + physical_flux(right, gamma)) - 0.5 * alpha * (right - left);
}

namespace {

BasisTable tabulate(const QuadratureRule& rule, int n_modes)
{
    BasisTable table(rule.size(), n_modes);
    for (int q = 0; q < rule.size(); ++q)
        for (int j = 0; j < n_modes; ++j)
            table(q, j) = basis_value(j, rule.nodes[q]);
    return table;
}

} // namespace

DGSpace::DGSpace(Mesh1D mesh, int degree)
    : mesh_(mesh),
      degree_(degree),
      volume_rule_(gauss_legendre_rule(degree + 1)),
      test_rule_(gauss_lobatto_rule(test_set_size(degree)))
{
    if (degree < 0 || degree > kMaxDegree)
        throw std::invalid_argument("DGSpace: degree must lie in [0, " + std::to_string(kMaxDegree) + "]");
    const int modes = n_modes();
    volume_values_ = tabulate(volume_rule_, modes);
    test_values_ = tabulate(test_rule_, modes);
    volume_weighted_derivatives_.resize(modes, volume_rule_.size());
    for (int j = 0; j < modes; ++j)
        for (int q = 0; q < volume_rule_.size(); ++q)
            volume_weighted_derivatives_(j, q) = volume_rule_.weights[q] * basis_derivative(j, volume_rule_.nodes[q]);
    left_trace_.resize(modes);
    right_trace_.resize(modes);
    for (int j = 0; j < modes; ++j) {
        left_trace_[j] = basis_value(j, -0.5);
        right_trace_[j] = basis_value(j, 0.5);
    }
}

DGField DGSpace::project(const std::function<ConservedState(double)>& w0, int points) const
{
    const QuadratureRule rule = gauss_legendre_rule(points > 0 ? points : degree_ + 4);
    const BasisTable values = tabulate(rule, n_modes());
    DGField field = zero_field();
    NodeValues samples(rule.size(), 3);
    for (int i = 0; i < mesh_.n_cells(); ++i) {
        for (int q = 0; q < rule.size(); ++q)
            samples.row(q) = w0(mesh_.to_physical(i, rule.nodes[q])).transpose();
        field.cell(i).noalias() = values.transpose() * rule.weights.asDiagonal() * samples;
    }
    return field;
}

ConservedState DGSpace::cell_average(const DGField& field, int cell) const
{
    if (cell < 0 || cell >= field.n_cells())
        throw std::out_of_range("cell_average: cell index " + std::to_string(cell) + " out of range");
    return field.average(cell);
}

ConservedState DGSpace::evaluate(const DGField& field, int cell, double xi) const
{
    ConservedState w = ConservedState::Zero();
    for (int j = 0; j < field.n_modes(); ++j)
        w += basis_value(j, xi) * field.cell(cell).row(j).transpose();
    return w;
}

NodeValues DGSpace::test_node_values(const DGField& field, int cell) const
{
    NodeValues values(test_values_.rows(), 3);
    values.noalias() = test_values_ * field.cell(cell);
    return values;
}

NodeValues DGSpace::volume_node_values(const DGField& field, int cell) const
{
    NodeValues values(volume_values_.rows(), 3);
    values.noalias() = volume_values_ * field.cell(cell);
    return values;
}

ConservedState DGSpace::integral(const DGField& field) const
{
    ConservedState total = ConservedState::Zero();
    for (int i = 0; i < field.n_cells(); ++i)
        total += field.average(i);
    return mesh_.h() * total;
}

double DGSpace::max_wave_speed(const DGField& field, double gamma) const
{
    double speed = 0.0;
    for (int i = 0; i < field.n_cells(); ++i) {
        const NodeValues values = test_node_values(field, i);
        for (int q = 0; q < values.rows(); ++q) {
            try {
                speed = std::max(speed, max_signal_speed<double>(values.row(q).transpose(), gamma));
            } catch (const DomainError& e) {
                throw DomainError("cell " + std::to_string(i) + ": " + e.what());
            }
        }
    }
    return speed;
}

DGField DGSpace::spatial_operator(const DGField& field, double gamma, double alpha) const
{
    DGField residual = zero_field();
    spatial_operator(field, gamma, alpha, residual);
    return residual;
}

void DGSpace::spatial_operator(const DGField& field, double gamma, double alpha, DGField& residual) const
{
    const int n = mesh_.n_cells();
    if (field.n_cells() != n || field.degree() != degree_)
        throw std::invalid_argument("spatial_operator: field does not match the space");
    if (residual.n_cells() != n || residual.degree() != degree_)
        residual = zero_field();

    // Interface j sits between cells j-1 and j.
    std::vector<ConservedState> left_traces(n), right_traces(n);
    for (int i = 0; i < n; ++i) {
        left_traces[i] = (left_trace_ * field.cell(i)).transpose();
        right_traces[i] = (right_trace_ * field.cell(i)).transpose();
    }
    std::vector<FluxVector> interface_flux(n + 1);
    int cell = 0;
    try {
        for (int j = 1; j < n; ++j) {
            cell = j;
            interface_flux[j] = lax_friedrichs_flux(right_traces[j - 1], left_traces[j], alpha, gamma);
        }
        if (mesh_.boundary() == BoundaryKind::periodic) {
            cell = 0;
            interface_flux[0] = lax_friedrichs_flux(right_traces[n - 1], left_traces[0], alpha, gamma);
            interface_flux[n] = interface_flux[0];
        } else {
            // Zero-order extrapolation: each ghost cell holds the boundary cell's
            // average. Taking the trace itself as the ghost removes all numerical
            // dissipation at a supersonic inflow edge and lets noise grow there.
            cell = 0;
            interface_flux[0] = lax_friedrichs_flux(field.average(0), left_traces[0], alpha, gamma);
            cell = n - 1;
            interface_flux[n] = lax_friedrichs_flux(right_traces[n - 1], field.average(n - 1), alpha, gamma);
        }

        NodeValues flux_at_nodes(volume_rule_.size(), 3);
        const double inv_h = 1.0 / mesh_.h();
        for (int i = 0; i < n; ++i) {
            cell = i;
            const NodeValues values = volume_node_values(field, i);
            for (int q = 0; q < values.rows(); ++q)
                flux_at_nodes.row(q) = physical_flux<double>(values.row(q).transpose(), gamma).transpose();
            auto out = residual.cell(i);
            out.noalias() = volume_weighted_derivatives_ * flux_at_nodes;
            out.noalias() -= right_trace_.transpose() * interface_flux[i + 1].transpose();
            out.noalias() += left_trace_.transpose() * interface_flux[i].transpose();
            out *= inv_h;
        }
    } catch (const DomainError& e) {
        throw DomainError("spatial_operator, cell " + std::to_string(cell) + ": " + e.what());
    }
}

} // namespace irp
