#pragma once

#include <functional>

#include <Eigen/Core>

#include "irp/dg_field.hpp"
#include "irp/euler.hpp"
#include "irp/mesh.hpp"
#include "irp/quadrature.hpp"

namespace irp {

/// Basis table: rows are quadrature nodes, columns are modes. At most 8 x 8,
/// which bounds the supported degree.
using BasisTable = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor, 8, 8>;
/// Values of the three conserved variables at a set of nodes.
using NodeValues = Eigen::Matrix<double, Eigen::Dynamic, 3, Eigen::RowMajor, 8, 3>;

inline constexpr int kMaxDegree = 6;

/// Central average of the physical fluxes plus alpha-scaled jump dissipation.
FluxVector lax_friedrichs_flux(const ConservedState& left, const ConservedState& right, double alpha,
                               double gamma);

/// DG discretization of degree k on a uniform mesh: Legendre modal basis,
/// (k+1)-point Gauss-Legendre volume rule, Gauss-Lobatto test set.
class DGSpace {
public:
    DGSpace(Mesh1D mesh, int degree);

    const Mesh1D& mesh() const { return mesh_; }
    int degree() const { return degree_; }
    int n_modes() const { return degree_ + 1; }

    const QuadratureRule& volume_rule() const { return volume_rule_; }
    const QuadratureRule& test_rule() const { return test_rule_; }
    /// First Gauss-Lobatto weight of the test set; enters the CFL bound.
    double first_test_weight() const { return test_rule_.weights[0]; }

    const BasisTable& volume_values() const { return volume_values_; }
    const BasisTable& test_values() const { return test_values_; }

    DGField zero_field() const { return DGField(degree_, mesh_.n_cells()); }

    /// Cell-wise L2 projection, inner products by Gauss-Legendre quadrature
    /// with `points` nodes (0 selects k+4).
    DGField project(const std::function<ConservedState(double)>& w0, int points = 0) const;

    ConservedState cell_average(const DGField& field, int cell) const;
    ConservedState evaluate(const DGField& field, int cell, double xi) const;
    /// Values at the Gauss-Lobatto test nodes of one cell (left to right).
    NodeValues test_node_values(const DGField& field, int cell) const;
    NodeValues volume_node_values(const DGField& field, int cell) const;

    /// Domain integral of each conserved variable.
    ConservedState integral(const DGField& field) const;

    /// max over all cells and test nodes of |u| + c.
    double max_wave_speed(const DGField& field, double gamma) const;

    /// Semi-discrete right-hand side L(W) in modal layout.
    DGField spatial_operator(const DGField& field, double gamma, double alpha) const;
    void spatial_operator(const DGField& field, double gamma, double alpha, DGField& residual) const;

private:
    Mesh1D mesh_;
    int degree_;
    QuadratureRule volume_rule_;
    QuadratureRule test_rule_;
    BasisTable volume_values_;
    BasisTable volume_weighted_derivatives_;  // modes x nodes: w_q phi_j'(x_q)
    BasisTable test_values_;
    Eigen::Matrix<double, 1, Eigen::Dynamic, Eigen::RowMajor, 1, 8> left_trace_;
    Eigen::Matrix<double, 1, Eigen::Dynamic, Eigen::RowMajor, 1, 8> right_trace_;
};

} // namespace irp
