#pragma once

#include <Eigen/Core>

#include "irp/euler.hpp"

namespace irp {

/// Row-major (cell * modes + mode) x 3 coefficient table; column = conserved
/// variable. A cell's block is contiguous.
using CoeffMatrix = Eigen::Matrix<double, Eigen::Dynamic, 3, Eigen::RowMajor>;

/// Piecewise polynomials of degree k in the orthonormal Legendre basis.
/// Because phi_0 == 1, mode 0 of a cell is its average.
class DGField {
public:
    DGField() = default;
    DGField(int degree, int n_cells);

    int degree() const { return degree_; }
    int n_modes() const { return degree_ + 1; }
    int n_cells() const { return n_cells_; }

    CoeffMatrix& coeffs() { return coeffs_; }
    const CoeffMatrix& coeffs() const { return coeffs_; }

    auto cell(int i) { return coeffs_.middleRows(i * n_modes(), n_modes()); }
    auto cell(int i) const { return coeffs_.middleRows(i * n_modes(), n_modes()); }

    ConservedState average(int i) const { return coeffs_.row(i * n_modes()).transpose(); }

    DGField& operator+=(const DGField& other);
    DGField& operator-=(const DGField& other);
    DGField& operator*=(double s);

    friend DGField operator+(DGField lhs, const DGField& rhs) { return lhs += rhs; }
    friend DGField operator-(DGField lhs, const DGField& rhs) { return lhs -= rhs; }
    friend DGField operator*(double s, DGField f) { return f *= s; }
    friend DGField operator*(DGField f, double s) { return f *= s; }

private:
    int degree_ = 0;
    int n_cells_ = 0;
    CoeffMatrix coeffs_;
};

} // namespace irp
