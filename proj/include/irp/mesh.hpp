#pragma once

#include <stdexcept>

namespace irp {

enum class BoundaryKind { periodic, outflow };

/// Uniform mesh of [a, b]; cell i covers [a + i h, a + (i+1) h].
class Mesh1D {
public:
    Mesh1D(double a, double b, int n_cells, BoundaryKind boundary = BoundaryKind::periodic)
        : a_(a), b_(b), n_cells_(n_cells), boundary_(boundary)
    {
        if (n_cells < 1)
            throw std::invalid_argument("Mesh1D: need at least one cell");
        if (!(b > a))
            throw std::invalid_argument("Mesh1D: empty domain");
        h_ = (b - a) / n_cells;
    }

    double a() const { return a_; }
    double b() const { return b_; }
    int n_cells() const { return n_cells_; }
    double h() const { return h_; }
    BoundaryKind boundary() const { return boundary_; }

    double cell_left(int i) const { return a_ + i * h_; }
    double cell_right(int i) const { return a_ + (i + 1) * h_; }
    double cell_center(int i) const { return a_ + (i + 0.5) * h_; }
    /// Physical coordinate of reference point xi in [-1/2, 1/2].
    double to_physical(int i, double xi) const { return cell_center(i) + xi * h_; }

private:
    double a_;
    double b_;
    int n_cells_;
    BoundaryKind boundary_;
    double h_;
};

} // namespace irp
