#include "irp/dg_field.hpp"

#include <stdexcept>

namespace irp {

DGField::DGField(int degree, int n_cells)
    : degree_(degree), n_cells_(n_cells), coeffs_(CoeffMatrix::Zero(n_cells * (degree + 1), 3))
{
    if (degree < 0 || n_cells < 1)
        throw std::invalid_argument("DGField: invalid degree or cell count");
}

namespace {
void check_compatible(const DGField& a, const DGField& b)
{
    if (a.degree() != b.degree() || a.n_cells() != b.n_cells())
        throw std::invalid_argument("DGField: incompatible layouts");
}
} // namespace

DGField& DGField::operator+=(const DGField& other)
{
    check_compatible(*this, other);
    coeffs_ += other.coeffs_;
    return *this;
}

DGField& DGField::operator-=(const DGField& other)
{
    check_compatible(*this, other);
    coeffs_ -= other.coeffs_;
    return *this;
}

DGField& DGField::operator*=(double s)
{
    coeffs_ *= s;
    return *this;
}

} // namespace irp
