#include "irp/harness/norms.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace irp::harness {

ErrorNorms error_norms(const DGSpace& space, const DGField& field,
                       const std::function<double(double)>& reference_density)
{
    const Mesh1D& mesh = space.mesh();
    const QuadratureRule& rule = space.volume_rule();
    ErrorNorms norms;
    for (int i = 0; i < mesh.n_cells(); ++i) {
        const NodeValues values = space.volume_node_values(field, i);
        double cell_l1 = 0.0;
        for (int q = 0; q < rule.size(); ++q) {
            const double err = std::abs(values(q, kDensity) - reference_density(mesh.to_physical(i, rule.nodes[q])));
            norms.linf = std::max(norms.linf, err);
            cell_l1 += rule.weights[q] * err;
        }
        norms.l1 += mesh.h() * cell_l1;
    }
    return norms;
}

double density_at(const DGSpace& space, const DGField& field, double x)
{
    const Mesh1D& mesh = space.mesh();
    int cell = static_cast<int>(std::floor((x - mesh.a()) / mesh.h()));
    cell = std::clamp(cell, 0, mesh.n_cells() - 1);
    const double xi = std::clamp((x - mesh.cell_center(cell)) / mesh.h(), -0.5, 0.5);
    return space.evaluate(field, cell, xi)[kDensity];
}

ErrorNorms error_norms(const DGSpace& space, const DGField& field, const DGSpace& reference_space,
                       const DGField& reference_field)
{
    const Mesh1D& coarse = space.mesh();
    const Mesh1D& fine = reference_space.mesh();
    const double tol = 1e-12 * (coarse.b() - coarse.a());
    if (std::abs(coarse.a() - fine.a()) > tol || std::abs(coarse.b() - fine.b()) > tol)
        throw std::invalid_argument("error_norms: reference mesh covers a different domain; cannot resample");
    return error_norms(space, field,
                       [&](double x) { return density_at(reference_space, reference_field, x); });
}

SampledProfile sample_density(const DGSpace& space, const DGField& field)
{
    const Mesh1D& mesh = space.mesh();
    const QuadratureRule& rule = space.test_rule();
    SampledProfile profile;
    profile.x.reserve(static_cast<size_t>(mesh.n_cells() * rule.size()));
    profile.rho.reserve(profile.x.capacity());
    for (int i = 0; i < mesh.n_cells(); ++i) {
        const NodeValues values = space.test_node_values(field, i);
        for (int q = 0; q < rule.size(); ++q) {
            profile.x.push_back(mesh.to_physical(i, rule.nodes[q]));
            profile.rho.push_back(values(q, kDensity));
        }
    }
    return profile;
}

double total_variation(const std::vector<double>& values)
{
    double tv = 0.0;
    for (size_t j = 1; j < values.size(); ++j)
        tv += std::abs(values[j] - values[j - 1]);
    return tv;
}

double front_position(const SampledProfile& profile, double level)
{
    for (size_t j = profile.x.size(); j-- > 0;) {
        if (profile.rho[j] >= level) {
            if (j + 1 == profile.x.size())
                return profile.x[j];
            const double r0 = profile.rho[j];
            const double r1 = profile.rho[j + 1];
            const double t = r0 == r1 ? 0.0 : (r0 - level) / (r0 - r1);
            return profile.x[j] + t * (profile.x[j + 1] - profile.x[j]);
        }
    }
    return profile.x.empty() ? 0.0 : profile.x.front();
}

} // namespace irp::harness
