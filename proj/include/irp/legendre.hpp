#pragma once

#include <cmath>
#include <utility>

namespace irp {

/// Legendre polynomial P_n(x) and its derivative on [-1, 1], by the
/// three-term recurrence.
template <typename Scalar>
std::pair<Scalar, Scalar> legendre_with_derivative(int n, Scalar x)
{
    Scalar p_prev = Scalar(1);
    if (n == 0)
        return {p_prev, Scalar(0)};
    Scalar p = x;
    Scalar dp_prev = Scalar(0);
    Scalar dp = Scalar(1);
    for (int j = 2; j <= n; ++j) {
        const Scalar p_next = (Scalar(2 * j - 1) * x * p - Scalar(j - 1) * p_prev) / Scalar(j);
        // P'_j = P'_{j-2} + (2j-1) P_{j-1}
        const Scalar dp_next = dp_prev + Scalar(2 * j - 1) * p;
        p_prev = p;
        p = p_next;
        dp_prev = dp;
        dp = dp_next;
    }
    return {p, dp};
}

template <typename Scalar>
Scalar legendre(int n, Scalar x)
{
    return legendre_with_derivative(n, x).first;
}

/// Orthonormal modal basis on the reference cell [-1/2, 1/2]:
/// phi_j(xi) = sqrt(2j+1) P_j(2 xi), so that phi_0 == 1 and the cell mean
/// is the zeroth coefficient.
template <typename Scalar>
Scalar basis_value(int j, Scalar xi)
{
    return std::sqrt(Scalar(2 * j + 1)) * legendre(j, Scalar(2) * xi);
}

template <typename Scalar>
Scalar basis_derivative(int j, Scalar xi)
{
    return Scalar(2) * std::sqrt(Scalar(2 * j + 1)) * legendre_with_derivative(j, Scalar(2) * xi).second;
}

} // namespace irp
