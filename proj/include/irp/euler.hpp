#pragma once

// Ideal-gas thermodynamics for the 1D compressible Euler system.
//
// Conserved vectors are plain Eigen 3-vectors (rho, m, E) so they compose
// with the rest of the linear algebra; every function takes gamma explicitly.

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>

#include <Eigen/Core>

#include "irp/errors.hpp"

namespace irp {

template <typename Scalar>
using Conserved = Eigen::Matrix<Scalar, 3, 1>;

using ConservedState = Conserved<double>;
using FluxVector = Conserved<double>;

enum Variable : int { kDensity = 0, kMomentum = 1, kEnergy = 2 };

template <typename Scalar>
struct Primitive {
    Scalar rho{};
    Scalar u{};
    Scalar p{};
};

using PrimitiveState = Primitive<double>;

/// Admissible set {rho >= eps, p >= eps, q <= 0} with q = (s0 - s) rho.
template <typename Scalar>
struct Region {
    Scalar gamma = Scalar(1.4);
    Scalar s0 = Scalar(0);
    Scalar eps = Scalar(1e-13);

    Region() = default;
    Region(Scalar gamma_, Scalar s0_, Scalar eps_ = Scalar(1e-13))
        : gamma(gamma_), s0(s0_), eps(eps_)
    {
        if (!(gamma > Scalar(1)))
            throw std::invalid_argument("invariant region: gamma must exceed 1");
        if (!(eps > Scalar(0)))
            throw std::invalid_argument("invariant region: eps must be positive");
    }
};

using InvariantRegion = Region<double>;

template <typename Scalar>
Scalar pressure(const Conserved<Scalar>& w, Scalar gamma)
{
    if (w[kDensity] == Scalar(0))
        throw DomainError("pressure: zero density (inadmissible state)");
    return (gamma - Scalar(1)) * (w[kEnergy] - w[kMomentum] * w[kMomentum] / (Scalar(2) * w[kDensity]));
}

template <typename Scalar>
Scalar velocity(const Conserved<Scalar>& w)
{
    if (w[kDensity] == Scalar(0))
        throw DomainError("velocity: zero density (inadmissible state)");
    return w[kMomentum] / w[kDensity];
}

template <typename Scalar>
Conserved<Scalar> to_conserved(const Primitive<Scalar>& v, Scalar gamma)
{
    return {v.rho, v.rho * v.u, Scalar(0.5) * v.rho * v.u * v.u + v.p / (gamma - Scalar(1))};
}

template <typename Scalar>
Primitive<Scalar> to_primitive(const Conserved<Scalar>& w, Scalar gamma)
{
    return {w[kDensity], velocity(w), pressure(w, gamma)};
}

/// s = log(p / rho^gamma).
template <typename Scalar>
Scalar specific_entropy(const Conserved<Scalar>& w, Scalar gamma)
{
    if (!(w[kDensity] > Scalar(0)))
        throw DomainError("specific_entropy: non-positive density");
    const Scalar p = pressure(w, gamma);
    if (!(p > Scalar(0)))
        throw DomainError("specific_entropy: non-positive pressure");
    return std::log(p) - gamma * std::log(w[kDensity]);
}

template <typename Scalar>
Scalar specific_entropy(const Primitive<Scalar>& v, Scalar gamma)
{
    if (!(v.rho > Scalar(0)) || !(v.p > Scalar(0)))
        throw DomainError("specific_entropy: non-positive density or pressure");
    return std::log(v.p) - gamma * std::log(v.rho);
}

/// q = (s0 - s) rho; q <= 0 iff s >= s0. Convex on the positive cone.
template <typename Scalar>
Scalar q_functional(const Conserved<Scalar>& w, const Region<Scalar>& region)
{
    return (region.s0 - specific_entropy(w, region.gamma)) * w[kDensity];
}

// q is only evaluated once rho and p have passed their eps guards.
template <typename Scalar>
bool in_region(const Conserved<Scalar>& w, const Region<Scalar>& region)
{
    if (!(w[kDensity] >= region.eps))
        return false;
    if (!(pressure(w, region.gamma) >= region.eps))
        return false;
    return q_functional(w, region) <= Scalar(0);
}

template <typename Scalar>
bool in_region_interior(const Conserved<Scalar>& w, const Region<Scalar>& region)
{
    if (!(w[kDensity] > region.eps))
        return false;
    if (!(pressure(w, region.gamma) > region.eps))
        return false;
    return q_functional(w, region) < Scalar(0);
}

template <typename Scalar>
Conserved<Scalar> physical_flux(const Conserved<Scalar>& w, Scalar gamma)
{
    const Scalar u = velocity(w);
    const Scalar p = pressure(w, gamma);
    return {w[kMomentum], w[kMomentum] * u + p, (w[kEnergy] + p) * u};
}

template <typename Scalar>
Scalar sound_speed(Scalar rho, Scalar p, Scalar gamma)
{
    if (!(rho > Scalar(0)) || p < Scalar(0))
        throw DomainError("sound_speed: requires rho > 0 and p >= 0");
    return std::sqrt(gamma * p / rho);
}

/// |u| + c.
template <typename Scalar>
Scalar max_signal_speed(const Conserved<Scalar>& w, Scalar gamma)
{
    if (!(w[kDensity] > Scalar(0)))
        throw DomainError("max_signal_speed: non-positive density");
    const Scalar p = pressure(w, gamma);
    if (p < Scalar(0))
        throw DomainError("max_signal_speed: negative pressure");
    return std::abs(w[kMomentum] / w[kDensity]) + std::sqrt(gamma * p / w[kDensity]);
}

/// Minimum of log(p0/rho0^gamma) over the given samples.
template <typename Scalar>
Scalar entropy_floor_from_initial(std::span<const Primitive<Scalar>> samples, Scalar gamma)
{
    if (samples.empty())
        throw std::invalid_argument("entropy_floor_from_initial: empty sample set");
    Scalar floor = std::numeric_limits<Scalar>::infinity();
    for (const auto& v : samples)
        floor = std::min(floor, specific_entropy(v, gamma));
    return floor;
}

} // namespace irp
