#pragma once

// Gauss-Legendre and Gauss-Lobatto rules on the unit reference cell
// [-1/2, 1/2]; weights sum to one.

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include <Eigen/Core>

#include "irp/legendre.hpp"

namespace irp {

template <typename Scalar>
struct Quadrature {
    using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
    Vector nodes;
    Vector weights;

    int size() const { return static_cast<int>(nodes.size()); }
};

using QuadratureRule = Quadrature<double>;

template <typename Scalar = double>
Quadrature<Scalar> gauss_legendre_rule(int n)
{
    if (n < 1)
        throw std::invalid_argument("gauss_legendre_rule: need at least one node");
    Quadrature<Scalar> rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const Scalar pi = std::numbers::pi_v<Scalar>;
    for (int i = 0; i < (n + 1) / 2; ++i) {
        Scalar x = std::cos(pi * (Scalar(i) + Scalar(0.75)) / (Scalar(n) + Scalar(0.5)));
        Scalar dp{};
        for (int it = 0; it < 100; ++it) {
            const auto [p, d] = legendre_with_derivative(n, x);
            dp = d;
            const Scalar dx = p / d;
            x -= dx;
            if (std::abs(dx) <= Scalar(4) * std::numeric_limits<Scalar>::epsilon())
                break;
        }
        dp = legendre_with_derivative(n, x).second;
        const Scalar w = Scalar(1) / ((Scalar(1) - x * x) * dp * dp);  // 2/((1-x²)P'²) halved
        rule.nodes[i] = -x / Scalar(2);
        rule.nodes[n - 1 - i] = x / Scalar(2);
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1)
        rule.nodes[n / 2] = Scalar(0);
    return rule;
}

/// N-point Gauss-Lobatto rule including both endpoints; exact to degree 2N-3.
template <typename Scalar = double>
Quadrature<Scalar> gauss_lobatto_rule(int n)
{
    if (n < 2)
        throw std::invalid_argument("gauss_lobatto_rule: need at least two nodes");
    Quadrature<Scalar> rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const int m = n - 1;
    const Scalar pi = std::numbers::pi_v<Scalar>;
    const Scalar end_weight = Scalar(1) / Scalar(n * m);
    rule.nodes[0] = Scalar(-0.5);
    rule.nodes[m] = Scalar(0.5);
    rule.weights[0] = end_weight;
    rule.weights[m] = end_weight;
    // Interior nodes are the roots of P'_m; Newton on P'_m using
    // (1-x²) P''_m = 2x P'_m - m(m+1) P_m.
    for (int i = 1; i <= m / 2; ++i) {
        Scalar x = -std::cos(pi * Scalar(i) / Scalar(m));
        for (int it = 0; it < 100; ++it) {
            const auto [p, dp] = legendre_with_derivative(m, x);
            const Scalar d2p = (Scalar(2) * x * dp - Scalar(m * (m + 1)) * p) / (Scalar(1) - x * x);
            const Scalar dx = dp / d2p;
            x -= dx;
            if (std::abs(dx) <= Scalar(4) * std::numeric_limits<Scalar>::epsilon())
                break;
        }
        const Scalar p = legendre(m, x);
        const Scalar w = end_weight / (p * p);
        rule.nodes[i] = x / Scalar(2);
        rule.nodes[m - i] = -x / Scalar(2);
        rule.weights[i] = w;
        rule.weights[m - i] = w;
    }
    if (n % 2 == 1) {
        const Scalar p = legendre(m, Scalar(0));
        rule.nodes[m / 2] = Scalar(0);
        rule.weights[m / 2] = end_weight / (p * p);
    }
    return rule;
}

/// Smallest N >= 2 with 2N - 3 >= k.
constexpr int test_set_size(int degree)
{
    const int n = (degree + 4) / 2;  // ceil((k+3)/2)
    return n < 2 ? 2 : n;
}

} // namespace irp
