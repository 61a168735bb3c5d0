#include "momentkit/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace momentkit {

namespace {

void require_same_dim(const LatticeVector& x, const LatticeVector& y) {
    if (x.dim() != y.dim())
        throw std::invalid_argument("lattice: dimension mismatch");
}

} // namespace

LatticeVector::LatticeVector(std::vector<double> entries) : entries_(std::move(entries)) {
    if (entries_.empty())
        throw std::invalid_argument("lattice: dimension must be >= 1");
    for (double v : entries_)
        if (!std::isfinite(v))
            throw std::invalid_argument("lattice: entries must be finite");
}

LatticeVector LatticeVector::constant(std::size_t dim, double value) {
    return LatticeVector(std::vector<double>(dim, value));
}

LatticeVector LatticeVector::operator+(const LatticeVector& o) const {
    require_same_dim(*this, o);
    std::vector<double> r(dim());
    for (std::size_t i = 0; i < dim(); ++i)
        r[i] = entries_[i] + o.entries_[i];
    return LatticeVector(std::move(r));
}

LatticeVector LatticeVector::operator-(const LatticeVector& o) const {
    require_same_dim(*this, o);
    std::vector<double> r(dim());
    for (std::size_t i = 0; i < dim(); ++i)
        r[i] = entries_[i] - o.entries_[i];
    return LatticeVector(std::move(r));
}

LatticeVector LatticeVector::operator*(double s) const {
    std::vector<double> r(dim());
    for (std::size_t i = 0; i < dim(); ++i)
        r[i] = entries_[i] * s;
    return LatticeVector(std::move(r));
}

LatticeVector LatticeVector::operator-() const { return *this * -1.0; }

LatticeVector join(const LatticeVector& x, const LatticeVector& y) {
    require_same_dim(x, y);
    std::vector<double> r(x.dim());
    for (std::size_t i = 0; i < x.dim(); ++i)
        r[i] = std::max(x[i], y[i]);
    return LatticeVector(std::move(r));
}

LatticeVector meet(const LatticeVector& x, const LatticeVector& y) {
    require_same_dim(x, y);
    std::vector<double> r(x.dim());
    for (std::size_t i = 0; i < x.dim(); ++i)
        r[i] = std::min(x[i], y[i]);
    return LatticeVector(std::move(r));
}

LatticeVector abs_val(const LatticeVector& x) {
    std::vector<double> r(x.dim());
    for (std::size_t i = 0; i < x.dim(); ++i)
        r[i] = std::fabs(x[i]);
    return LatticeVector(std::move(r));
}

bool leq(const LatticeVector& x, const LatticeVector& y) {
    require_same_dim(x, y);
    for (std::size_t i = 0; i < x.dim(); ++i)
        if (!(x[i] <= y[i]))
            return false;
    return true;
}

double unit_dominance(const LatticeVector& x) {
    double m = 0.0;
    for (std::size_t i = 0; i < x.dim(); ++i)
        m = std::max(m, std::fabs(x[i]));
    return m;
}

OSequenceLadder::OSequenceLadder(std::vector<double> values, double tolerance)
    : values_(std::move(values)), tolerance_(tolerance) {
    if (values_.empty())
        throw std::invalid_argument("ladder: needs at least one value");
    if (!(tolerance_ > 0.0))
        throw std::invalid_argument("ladder: tolerance must be positive");
    for (double v : values_)
        if (!(v > 0.0) || !std::isfinite(v))
            throw std::invalid_argument("ladder: values must be strictly positive");
    for (std::size_t i = 1; i < values_.size(); ++i)
        if (values_[i] > values_[i - 1])
            throw std::invalid_argument("ladder: values must be non-increasing");
    if (values_.back() > tolerance_)
        throw std::invalid_argument("ladder: last value must be <= tolerance");
}

} // namespace momentkit
