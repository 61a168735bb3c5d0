#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "momentkit/lattice.hpp"

namespace momentkit {

// Uniform grid t_i = t0 + i*h, i = 0 .. n_points-1, on the nonnegative axis.
class Grid {
public:
    Grid(double t0, double h, std::size_t n_points);

    // Grid covering [t0, t1]; (t1-t0)/h must be within 1e-6 of an integer.
    static Grid span(double t0, double t1, double h);

    double t0() const { return t0_; }
    double h() const { return h_; }
    std::size_t n_points() const { return n_; }
    double node(std::size_t i) const { return std::fma(static_cast<double>(i), h_, t0_); }
    double back() const { return node(n_ - 1); }

    // Index of the node equal to x (within 1e-9 relative); throws if x is not
    // a node. Support endpoints and interval bounds go through this, so they
    // are always snapped onto the grid.
    std::size_t index_of(double x) const;

    bool is_node(double x) const;

    bool operator==(const Grid& o) const {
        return t0_ == o.t0_ && h_ == o.h_ && n_ == o.n_;
    }

private:
    double t0_, h_;
    std::size_t n_;
};

namespace detail {

inline double zero_like(double) { return 0.0; }
inline LatticeVector zero_like(const LatticeVector& v) {
    return LatticeVector::zeros(v.dim());
}
inline bool value_is_zero(double v) { return v == 0.0; }
inline bool value_is_zero(const LatticeVector& v) {
    for (std::size_t i = 0; i < v.dim(); ++i)
        if (v[i] != 0.0)
            return false;
    return true;
}

} // namespace detail

// Support window [a, b] of a grid function, snapped to node indices.
struct Support {
    double a, b;
    std::size_t ia, ib;
};

// Samples of a function on a Grid; optionally carries a support hint, in
// which case the samples are checked to vanish exactly outside [a, b] and
// the function is read as the support-clipped interpolant: exactly zero off
// [a, b], with no ramp down to the first zero sample beyond the edge. The
// quadrature helpers honour the same convention, which is what makes the
// integral of a sharp-edged profile exact rather than off by O(h).
// Off-grid evaluation is by linear interpolation, zero outside the grid.
template <typename T>
class BasicGridFunction {
public:
    BasicGridFunction(Grid grid, std::vector<T> values)
        : grid_(grid), values_(std::move(values)) {
        if (values_.size() != grid_.n_points())
            throw std::invalid_argument("grid function: value count differs from grid size");
    }

    template <typename Fn>
    static BasicGridFunction sample(const Grid& grid, Fn&& fn) {
        std::vector<T> vals;
        vals.reserve(grid.n_points());
        for (std::size_t i = 0; i < grid.n_points(); ++i)
            vals.push_back(fn(grid.node(i)));
        return BasicGridFunction(grid, std::move(vals));
    }

    const Grid& grid() const { return grid_; }
    const std::vector<T>& values() const { return values_; }
    std::vector<T>& values() { return values_; }
    const T& operator[](std::size_t i) const { return values_[i]; }
    std::size_t size() const { return values_.size(); }

    void set_support(double a, double b) {
        if (!(a <= b))
            throw std::invalid_argument("support: requires a <= b");
        const std::size_t ia = grid_.index_of(a);
        const std::size_t ib = grid_.index_of(b);
        for (std::size_t i = 0; i < values_.size(); ++i) {
            if (i >= ia && i <= ib)
                continue;
            if (!detail::value_is_zero(values_[i]))
                throw std::invalid_argument(
                    "support: values must vanish outside the declared window");
        }
        support_ = Support{grid_.node(ia), grid_.node(ib), ia, ib};
    }

    const std::optional<Support>& support() const { return support_; }

    T value_at(double x) const {
        double lo = grid_.t0(), hi = grid_.back();
        if (support_) {
            lo = support_->a;
            hi = support_->b;
        }
        if (x < lo || x > hi)
            return detail::zero_like(values_[0]);
        lo = grid_.t0();
        double pos = (x - lo) / grid_.h();
        std::size_t k = static_cast<std::size_t>(pos);
        if (k >= values_.size() - 1)
            k = values_.size() - 2;
        const double theta = (x - grid_.node(k)) / grid_.h();
        return values_[k] * (1.0 - theta) + values_[k + 1] * theta;
    }

private:
    Grid grid_;
    std::vector<T> values_;
    std::optional<Support> support_;
};

using GridFunction = BasicGridFunction<double>;
using LatticeGridFunction = BasicGridFunction<LatticeVector>;

} // namespace momentkit
