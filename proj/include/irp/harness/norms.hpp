#pragma once

#include <functional>
#include <vector>

#include "irp/dg_field.hpp"
#include "irp/dg_space.hpp"

namespace irp::harness {

struct ErrorNorms {
    double linf = 0.0;
    double l1 = 0.0;
};

/// Density errors at the Gauss-Legendre volume nodes of every cell:
/// L-inf = max |rho_h - rho_ref|, L1 = sum_cells h sum_nodes w |rho_h - rho_ref|.
ErrorNorms error_norms(const DGSpace& space, const DGField& field,
                       const std::function<double(double)>& reference_density);

/// Same norms against a DG reference on another mesh of the same domain,
/// evaluated pointwise. Throws std::invalid_argument on domain mismatch.
ErrorNorms error_norms(const DGSpace& space, const DGField& field, const DGSpace& reference_space,
                       const DGField& reference_field);

/// Density of a DG field at an arbitrary physical point (right cell wins at
/// an interface).
double density_at(const DGSpace& space, const DGField& field, double x);

struct SampledProfile {
    std::vector<double> x;
    std::vector<double> rho;
};

/// Density at the Gauss-Lobatto test nodes, left to right.
SampledProfile sample_density(const DGSpace& space, const DGField& field);

/// Sum of |rho_{j+1} - rho_j| over consecutive samples.
double total_variation(const std::vector<double>& values);

/// Largest x at which the sampled profile still reaches `level`, linearly
/// interpolated to the crossing.
double front_position(const SampledProfile& profile, double level);

} // namespace irp::harness
