#pragma once

#include <cstddef>
#include <vector>

namespace momentkit {

// Element of R^d with the componentwise order. The strong unit is the
// all-ones vector, so unit_dominance reduces to the max norm.
class LatticeVector {
public:
    LatticeVector() = default;
    explicit LatticeVector(std::vector<double> entries); // rejects empty / non-finite
    static LatticeVector constant(std::size_t dim, double value);
    static LatticeVector zeros(std::size_t dim) { return constant(dim, 0.0); }
    static LatticeVector ones(std::size_t dim) { return constant(dim, 1.0); }

    std::size_t dim() const { return entries_.size(); }
    double operator[](std::size_t i) const { return entries_[i]; }
    const std::vector<double>& entries() const { return entries_; }

    LatticeVector operator+(const LatticeVector& o) const;
    LatticeVector operator-(const LatticeVector& o) const;
    LatticeVector operator*(double s) const;
    LatticeVector operator-() const;
    bool operator==(const LatticeVector& o) const { return entries_ == o.entries_; }

private:
    std::vector<double> entries_;
};

inline LatticeVector operator*(double s, const LatticeVector& v) { return v * s; }

// Componentwise max / min.
LatticeVector join(const LatticeVector& x, const LatticeVector& y);
LatticeVector meet(const LatticeVector& x, const LatticeVector& y);

// |x| = x v (-x), componentwise absolute value.
LatticeVector abs_val(const LatticeVector& x);

// Exact partial order: x <= y iff every component satisfies x[i] <= y[i].
// No tolerance; incomparable pairs simply return false both ways.
bool leq(const LatticeVector& x, const LatticeVector& y);

// Smallest c >= 0 with |x| <= c * e for the all-ones unit e, i.e. max_i |x[i]|.
double unit_dominance(const LatticeVector& x);

// Strictly positive, non-increasing ladder whose last value is at or below
// the tolerance: the finite stand-in for an (o)-sequence regulator.
class OSequenceLadder {
public:
    OSequenceLadder(std::vector<double> values, double tolerance);

    const std::vector<double>& values() const { return values_; }
    double tolerance() const { return tolerance_; }
    std::size_t size() const { return values_.size(); }
    double operator[](std::size_t i) const { return values_[i]; }

private:
    std::vector<double> values_;
    double tolerance_;
};

} // namespace momentkit
