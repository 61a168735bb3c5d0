#pragma once

#include <algorithm>
#include <stdexcept>

#include "momentkit/grid.hpp"

namespace momentkit {

enum class QuadRule { Trapezoid, Simpson };

// Riemann-Stieltjes evaluation rule. LeftPoint is the non-anticipating choice
// the Ito sums require; Midpoint averages the endpoint samples.
enum class StieltjesRule { LeftPoint, Midpoint };

namespace detail {

// Cells of [i_lo, i_hi) that survive support clipping: a function with a
// support hint is zero off [a, b], so cells outside [ia, ib) drop out
// entirely (no ramp into the first zero sample beyond an edge).
template <typename T>
void clip_cells(const BasicGridFunction<T>& f, std::size_t& i_lo, std::size_t& i_hi) {
    if (!f.support())
        return;
    i_lo = std::max(i_lo, f.support()->ia);
    i_hi = std::min(i_hi, f.support()->ib);
    if (i_lo > i_hi)
        i_lo = i_hi;
}

// Sequential cell-by-cell accumulation, with the step factored out of the
// loop so that piecewise-constant integer-valued samples sum exactly.
// cumulative_integral's final entry is produced by the identical operation
// order, so the two agree bitwise.
template <typename T>
T trapezoid_range(const BasicGridFunction<T>& f, std::size_t i_lo, std::size_t i_hi) {
    clip_cells(f, i_lo, i_hi);
    T acc = zero_like(f[0]);
    for (std::size_t i = i_lo; i < i_hi; ++i)
        acc = acc + (f[i] + f[i + 1]) * 0.5;
    return acc * f.grid().h();
}

// Simpson ignores the support hint; it is meant for smooth whole-grid
// integrands (the sharp-edged profiles stay on the trapezoid path).
template <typename T>
T simpson_range(const BasicGridFunction<T>& f, std::size_t i_lo, std::size_t i_hi) {
    if ((i_hi - i_lo) % 2 != 0)
        throw std::invalid_argument("quadrature: Simpson needs an even cell count "
                                    "(odd number of nodes)");
    const double h = f.grid().h();
    T acc = zero_like(f[0]);
    for (std::size_t i = i_lo; i + 2 <= i_hi; i += 2)
        acc = acc + (f[i] + f[i + 1] * 4.0 + f[i + 2]) * (h / 3.0);
    return acc;
}

} // namespace detail

template <typename T>
T integrate_range(const BasicGridFunction<T>& f, std::size_t i_lo, std::size_t i_hi,
                  QuadRule rule = QuadRule::Trapezoid) {
    if (i_lo > i_hi || i_hi >= f.size())
        throw std::invalid_argument("quadrature: bad index range");
    return rule == QuadRule::Trapezoid ? detail::trapezoid_range(f, i_lo, i_hi)
                                       : detail::simpson_range(f, i_lo, i_hi);
}

template <typename T>
T integrate(const BasicGridFunction<T>& f, QuadRule rule = QuadRule::Trapezoid) {
    return integrate_range(f, 0, f.size() - 1, rule);
}

// Running trapezoid antiderivative: F(t0) = 0, one O(n) pass. Honours the
// support clipping, and reproduces integrate(f) bitwise in its final entry.
template <typename T>
BasicGridFunction<T> cumulative_integral(const BasicGridFunction<T>& f) {
    const double h = f.grid().h();
    std::size_t c_lo = 0, c_hi = f.size() - 1;
    detail::clip_cells(f, c_lo, c_hi);
    std::vector<T> out;
    out.reserve(f.size());
    T acc = detail::zero_like(f[0]);
    out.push_back(acc * h);
    for (std::size_t i = 0; i + 1 < f.size(); ++i) {
        if (i >= c_lo && i < c_hi)
            acc = acc + (f[i] + f[i + 1]) * 0.5;
        out.push_back(acc * h);
    }
    return BasicGridFunction<T>(f.grid(), std::move(out));
}

// sum g(t_i) * (path(t_{i+1}) - path(t_i)) over cells (LeftPoint), or with
// the endpoint average of g (Midpoint). Both functions must share the grid.
template <typename T>
T stieltjes_integral(const BasicGridFunction<T>& g, const GridFunction& path,
                     StieltjesRule rule) {
    if (!(g.grid() == path.grid()))
        throw std::invalid_argument("stieltjes: integrand and path grids differ");
    T acc = detail::zero_like(g[0]);
    for (std::size_t i = 0; i + 1 < g.size(); ++i) {
        const double dp = path[i + 1] - path[i];
        if (rule == StieltjesRule::LeftPoint)
            acc = acc + g[i] * dp;
        else
            acc = acc + (g[i] + g[i + 1]) * (0.5 * dp);
    }
    return acc;
}

} // namespace momentkit
