#pragma once

#include <cstdint>
#include <vector>

#include "momentkit/exec.hpp"
#include "momentkit/grid.hpp"

namespace momentkit {

// Moment kernel M_n(w) = n w^n on (0, 1), zero elsewhere (including w = 1).
double kernel_eval(int n, double w);

// Degree-n moment average of f:
//
//   (T_n f)(s) = (n / s^n) * int_0^s t^(n-1) f(t) dt
//
// evaluated on an output grid with t0 > 0. The input must carry a support
// hint [a, b]; samples are treated as piecewise linear and the weighted
// inner integral is accumulated cell by cell from exact antiderivatives of
// t^(n-1) * (linear piece), once, in O(grid). That keeps the constant and
// linear closed forms exact to rounding and is second order for smooth f,
// like the trapezoid rule. Between inner nodes the accumulated integral is
// interpolated linearly; for s >= b the closed-form tail n K_n / s^n takes
// over (K_n = inner integral up to b), which matches the quadrature branch
// at s = b identically. Powers are computed relative to b so large n stays
// in floating-point range.
struct MomentTransform {
    int n = 0;
    GridFunction input;  // keeps its support hint [a, b]
    GridFunction output; // on the eval grid, no support hint
    double a = 0.0, b = 0.0;
    double K_n = 0.0;       // int_a^b t^(n-1) f(t) dt
    double M_f = 0.0;       // max |f| over the input nodes
    double K_scaled = 0.0;  // K_n / b^(n-1), the overflow-safe tail mass
};

MomentTransform transform(const GridFunction& f, int n, const Grid& eval_grid);

// int_0^inf (T_n f)(s) ds = window quadrature up to b plus the exact tail
// n K_n / ((n-1) b^(n-1)). Needs n >= 2 and b on the eval grid.
double total_integral(const MomentTransform& T);

// | total_integral(T_n f) - n/(n-1) * int f |, the empirical defect of the
// interchange-of-integrals identity.
double consfubini_residual(const GridFunction& f, int n, const Grid& eval_grid);

// s -> (n/s) (f(s) - T_n f(s)) on the eval grid: the closed form of the
// transform's derivative.
GridFunction derivative(const MomentTransform& T);

struct BoundReport {
    int n = 0;
    double a = 0.0, b = 0.0;
    double M_f = 0.0;
    double lipschitz_M = 0.0; // n b^n M_f
    bool lipschitz_ok = false;
    double lipschitz_max_excess = 0.0;
    std::uint64_t pairs_sampled = 0;
    std::uint64_t seed = 0;
    bool tail_ok = false;
    double tail_max_excess = 0.0;
    double uniform_error = 0.0;       // sup over eval nodes |T_n f - f|
    double l1_error = 0.0;            // window integral of |T_n f - f| + exact tail
    double tail_mass_beyond_2b = 0.0; // exact int_{2b}^inf |T_n f|
    double tail_bound_2b = 0.0;       // M_f b / 2^(n-1)
};

// Samples seeded random eval-node pairs against the Lipschitz bound
// M (1+n) |s1 - s2| with M = n b^n M_f (valid for supports with a > 1,
// enforced), checks the decay bound |T_n f(s)| <= M_f (b/s)^n beyond b, and
// reports the sup / L1 distance to f including the exact tail term. n >= 2.
BoundReport bound_checks(const MomentTransform& T, std::uint64_t pair_samples,
                         std::uint64_t seed);

// phi(s) = s^(-nu) (c + nu int_0^s f(t) t^(nu-1) dt), the closed solution of
// s phi' + nu phi = nu f. Shares the transform's weighted cumulative pass,
// so for integer nu = n and c = 0 it reproduces transform() exactly.
GridFunction ode_solve(double nu, const GridFunction& f, double c, const Grid& eval_grid);

// max over interior eval nodes of |s phi'(s) + nu phi(s) - nu f(s)| with
// phi' by central differences.
double ode_residual(const GridFunction& phi, double nu, const GridFunction& f);

struct WeakRow {
    int n;
    double delta1; // | int T_n f w' - int f w' |
    double delta2; // | int w d(T_n f) - int w df |, Midpoint Stieltjes
};

struct WeakTable {
    std::vector<WeakRow> rows;
    bool delta1_decreased = false; // last < first
    bool delta2_decreased = false;
};

// Weak-convergence experiment against a smooth compactly supported w on the
// same grid as f (w' by central differences). The eval grid for T_n f is the
// shared grid, so it must start at t0 > 0.
WeakTable weak_convergence_experiment(const GridFunction& f, const GridFunction& w,
                                      const std::vector<int>& n_list,
                                      Exec mode = Exec::Parallel);

} // namespace momentkit
