#include "momentkit/moment_ops.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "momentkit/philox.hpp"
#include "momentkit/quadrature.hpp"

namespace momentkit {

double kernel_eval(int n, double w) {
    if (n < 1)
        throw std::invalid_argument("kernel: degree must be >= 1");
    if (!(w > 0.0) || w >= 1.0)
        return 0.0;
    return static_cast<double>(n) * std::pow(w, static_cast<double>(n));
}

namespace {

// Exact weighted cumulative of the support-clipped piecewise-linear model:
//
//   G(s) = int_0^s (t/R)^(nu-1) f_lin(t) dt
//
// accumulated cell by cell from the antiderivatives
//
//   P(t) = (R/nu) (t/R)^nu            for the constant part of a cell,
//   Q(t) = (R^2/(nu+1)) (t/R)^(nu+1)  for the linear part,
//
// so constant and linear inputs integrate exactly to rounding, and any s
// (not just input nodes) is reached by an exact partial cell on top of the
// node table. The R scaling keeps every power in (0, 1].
struct WeightedCumulative {
    const GridFunction& f;
    double nu, R;
    std::size_t c_lo, c_hi; // clipped cell range
    std::vector<double> at_nodes;

    WeightedCumulative(const GridFunction& fn, double nu_, double R_)
        : f(fn), nu(nu_), R(R_), c_lo(0), c_hi(fn.size() - 1) {
        detail::clip_cells(f, c_lo, c_hi);
        const double h = f.grid().h();
        at_nodes.assign(f.size(), 0.0);
        double acc = 0.0;
        double P0 = 0.0, Q0 = 0.0;
        if (c_lo < c_hi) {
            P0 = P(f.grid().node(c_lo));
            Q0 = Q(f.grid().node(c_lo));
        }
        for (std::size_t i = 0; i + 1 < f.size(); ++i) {
            if (i >= c_lo && i < c_hi) {
                const double t0 = f.grid().node(i), t1 = f.grid().node(i + 1);
                const double P1 = P(t1), Q1 = Q(t1);
                const double dP = P1 - P0;
                const double dQ = Q1 - Q0;
                const double m = (f[i + 1] - f[i]) / h;
                if (!std::isfinite(f[i]))
                    throw std::invalid_argument("weighted integral: non-finite input sample");
                acc += f[i] * dP + m * (dQ - t0 * dP);
                P0 = P1;
                Q0 = Q1;
            }
            at_nodes[i + 1] = acc;
        }
    }

    double P(double t) const { return (R / nu) * std::pow(t / R, nu); }
    double Q(double t) const { return (R * R / (nu + 1.0)) * std::pow(t / R, nu + 1.0); }

    double total() const { return at_nodes[c_hi]; }

    double eval(double s) const {
        const Grid& g = f.grid();
        const double lo = g.node(c_lo), hi = g.node(c_hi);
        if (!(s > lo))
            return 0.0;
        if (s >= hi)
            return total();
        double pos = (s - g.t0()) / g.h();
        std::size_t k = static_cast<std::size_t>(pos);
        k = std::min(std::max(k, c_lo), c_hi - 1);
        const double t0 = g.node(k), t1 = g.node(k + 1);
        const double dP = P(s) - P(t0);
        const double dQ = Q(s) - Q(t0);
        const double m = (f[k + 1] - f[k]) / (t1 - t0);
        return at_nodes[k] + f[k] * dP + m * (dQ - t0 * dP);
    }
};

const Support& required_support(const GridFunction& f, const char* who) {
    if (!f.support())
        throw std::invalid_argument(std::string(who) + ": input needs a support hint");
    return *f.support();
}

} // namespace

MomentTransform transform(const GridFunction& f, int n, const Grid& eval_grid) {
    if (n < 1)
        throw std::invalid_argument("transform: degree must be >= 1");
    const Support& sup = required_support(f, "transform");
    if (!(eval_grid.t0() > 0.0))
        throw std::invalid_argument("transform: eval grid must start at t0 > 0");
    if (!(sup.b > 0.0))
        throw std::invalid_argument("transform: support must reach past 0");

    const double nd = static_cast<double>(n);
    const double b = sup.b;
    WeightedCumulative G(f, nd, b);

    double M_f = 0.0;
    for (double v : f.values()) {
        if (!std::isfinite(v))
            throw std::invalid_argument("transform: non-finite input sample");
        M_f = std::max(M_f, std::abs(v));
    }

    std::vector<double> out(eval_grid.n_points());
    for (std::size_t i = 0; i < eval_grid.n_points(); ++i) {
        const double s = eval_grid.node(i);
        // Exactly zero until the support starts; this also keeps the power
        // below out of the region where it could overflow.
        if (s <= sup.a) {
            out[i] = 0.0;
            continue;
        }
        // For s >= b, G.eval(s) is the constant K_scaled, so this single
        // expression is also the closed-form tail n K_n / s^n; the two
        // branches coincide identically at s = b.
        out[i] = (nd / s) * std::pow(b / s, nd - 1.0) * G.eval(s);
        if (!std::isfinite(out[i]))
            throw std::domain_error(
                "transform: (b/s)^(n-1) left floating-point range; lower the degree "
                "or raise the evaluation window start");
    }

    MomentTransform T{n, f, GridFunction(eval_grid, std::move(out)),
                      sup.a, b, 0.0, M_f, 0.0};
    T.K_scaled = G.total();
    T.K_n = std::pow(b, nd - 1.0) * T.K_scaled;
    return T;
}

double total_integral(const MomentTransform& T) {
    if (T.n < 2)
        throw std::invalid_argument("total integral: needs degree n >= 2");
    const Grid& eg = T.output.grid();
    const std::size_t ib = eg.index_of(T.b);
    const double window = integrate_range(T.output, 0, ib, QuadRule::Trapezoid);
    const double nd = static_cast<double>(T.n);
    const double tail = nd * T.K_scaled / (nd - 1.0);
    return window + tail;
}

double consfubini_residual(const GridFunction& f, int n, const Grid& eval_grid) {
    if (n < 2)
        throw std::invalid_argument("integral identity: needs degree n >= 2");
    const MomentTransform T = transform(f, n, eval_grid);
    const double lhs = total_integral(T);
    const double nd = static_cast<double>(n);
    const double rhs = nd / (nd - 1.0) * integrate(f);
    return std::abs(lhs - rhs);
}

GridFunction derivative(const MomentTransform& T) {
    const Grid& eg = T.output.grid();
    const double nd = static_cast<double>(T.n);
    std::vector<double> d(eg.n_points());
    for (std::size_t i = 0; i < eg.n_points(); ++i) {
        const double s = eg.node(i);
        d[i] = (nd / s) * (T.input.value_at(s) - T.output[i]);
    }
    return GridFunction(eg, std::move(d));
}

BoundReport bound_checks(const MomentTransform& T, std::uint64_t pair_samples,
                         std::uint64_t seed) {
    if (T.n < 2)
        throw std::invalid_argument("bounds: need degree n >= 2");
    if (!(T.a > 1.0))
        throw std::invalid_argument("bounds: the Lipschitz constant requires support a > 1");

    const Grid& eg = T.output.grid();
    const double nd = static_cast<double>(T.n);
    BoundReport r;
    r.n = T.n;
    r.a = T.a;
    r.b = T.b;
    r.M_f = T.M_f;
    r.lipschitz_M = nd * std::pow(T.b, nd) * T.M_f;
    r.pairs_sampled = pair_samples;
    r.seed = seed;

    // Seeded eval-node pairs against |T(s1) - T(s2)| <= M (1+n) |s1 - s2|.
    const double lip = r.lipschitz_M * (1.0 + nd);
    double lip_excess = 0.0;
    for (std::uint64_t k = 0; k < pair_samples; ++k) {
        const std::size_t i = index_at(seed, 0, 2 * k, eg.n_points());
        const std::size_t j = index_at(seed, 0, 2 * k + 1, eg.n_points());
        const double ds = std::abs(eg.node(i) - eg.node(j));
        const double dT = std::abs(T.output[i] - T.output[j]);
        const double bound = lip * ds + 1e-9;
        lip_excess = std::max(lip_excess, dT - bound);
    }
    r.lipschitz_max_excess = std::max(0.0, lip_excess);
    r.lipschitz_ok = lip_excess <= 0.0;

    // Decay beyond the support: |T(s)| <= M_f (b/s)^n.
    double tail_excess = 0.0;
    for (std::size_t i = 0; i < eg.n_points(); ++i) {
        const double s = eg.node(i);
        if (s <= T.b)
            continue;
        const double bound = T.M_f * std::pow(T.b / s, nd) + 1e-12;
        tail_excess = std::max(tail_excess, std::abs(T.output[i]) - bound);
    }
    r.tail_max_excess = std::max(0.0, tail_excess);
    r.tail_ok = tail_excess <= 0.0;

    // Distance to f over the eval window, plus the exact tail of |T| beyond
    // the window end (where f is already zero).
    std::vector<double> diff(eg.n_points());
    double sup_err = 0.0;
    for (std::size_t i = 0; i < eg.n_points(); ++i) {
        diff[i] = std::abs(T.output[i] - T.input.value_at(eg.node(i)));
        sup_err = std::max(sup_err, diff[i]);
    }
    r.uniform_error = sup_err;
    const double S = eg.back();
    const double tail_l1 =
        nd * std::abs(T.K_scaled) * std::pow(T.b / S, nd - 1.0) / (nd - 1.0);
    r.l1_error = integrate(GridFunction(eg, std::move(diff))) + tail_l1;

    r.tail_mass_beyond_2b =
        nd * std::abs(T.K_scaled) * std::pow(0.5, nd - 1.0) / (nd - 1.0);
    r.tail_bound_2b = T.M_f * T.b * std::pow(0.5, nd - 1.0);
    return r;
}

GridFunction ode_solve(double nu, const GridFunction& f, double c, const Grid& eval_grid) {
    if (!(nu > 0.0))
        throw std::invalid_argument("ode: needs nu > 0");
    const Support& sup = required_support(f, "ode");
    if (!(eval_grid.t0() > 0.0))
        throw std::invalid_argument("ode: eval grid must start at t0 > 0");
    const double R = sup.b > 0.0 ? sup.b : f.grid().back();

    WeightedCumulative G(f, nu, R);
    std::vector<double> out(eval_grid.n_points());
    for (std::size_t i = 0; i < eval_grid.n_points(); ++i) {
        const double s = eval_grid.node(i);
        const double Gs = G.eval(s);
        const double particular =
            Gs == 0.0 ? 0.0 : (nu / s) * std::pow(R / s, nu - 1.0) * Gs;
        out[i] = c * std::pow(s, -nu) + particular;
        if (!std::isfinite(out[i]))
            throw std::domain_error(
                "ode: (R/s)^(nu-1) left floating-point range; lower nu or raise the "
                "evaluation window start");
    }
    return GridFunction(eval_grid, std::move(out));
}

double ode_residual(const GridFunction& phi, double nu, const GridFunction& f) {
    const Grid& g = phi.grid();
    if (g.n_points() < 3)
        throw std::invalid_argument("ode residual: needs at least 3 nodes");
    const double h = g.h();
    double worst = 0.0;
    for (std::size_t i = 1; i + 1 < g.n_points(); ++i) {
        const double s = g.node(i);
        const double dphi = (phi[i + 1] - phi[i - 1]) / (2.0 * h);
        const double res = s * dphi + nu * phi[i] - nu * f.value_at(s);
        worst = std::max(worst, std::abs(res));
    }
    return worst;
}

WeakTable weak_convergence_experiment(const GridFunction& f, const GridFunction& w,
                                      const std::vector<int>& n_list, Exec mode) {
    if (!(f.grid() == w.grid()))
        throw std::invalid_argument("weak experiment: f and w must share a grid");
    if (!(f.grid().t0() > 0.0))
        throw std::invalid_argument("weak experiment: shared grid must start at t0 > 0");
    if (n_list.empty())
        throw std::invalid_argument("weak experiment: empty degree list");
    const Grid& g = f.grid();
    const double h = g.h();

    std::vector<double> wd(g.n_points());
    for (std::size_t i = 0; i < g.n_points(); ++i) {
        if (i == 0)
            wd[i] = (w[1] - w[0]) / h;
        else if (i + 1 == g.n_points())
            wd[i] = (w[i] - w[i - 1]) / h;
        else
            wd[i] = (w[i + 1] - w[i - 1]) / (2.0 * h);
    }
    const GridFunction wprime(g, std::move(wd));

    auto weighted = [&](const GridFunction& u) {
        std::vector<double> p(g.n_points());
        for (std::size_t i = 0; i < g.n_points(); ++i)
            p[i] = u[i] * wprime[i];
        GridFunction prod(g, std::move(p));
        if (u.support())
            prod.set_support(u.support()->a, u.support()->b);
        return integrate(prod);
    };

    const double base1 = weighted(f);
    const double base2 = stieltjes_integral(w, f, StieltjesRule::Midpoint);

    WeakTable table;
    table.rows.assign(n_list.size(), WeakRow{});
    exec::for_index(n_list.size(), mode, [&](std::size_t k) {
        const MomentTransform T = transform(f, n_list[k], g);
        const double d1 = std::abs(weighted(T.output) - base1);
        const double d2 =
            std::abs(stieltjes_integral(w, T.output, StieltjesRule::Midpoint) - base2);
        table.rows[k] = WeakRow{n_list[k], d1, d2};
    });
    table.delta1_decreased = table.rows.back().delta1 < table.rows.front().delta1;
    table.delta2_decreased = table.rows.back().delta2 < table.rows.front().delta2;
    return table;
}

} // namespace momentkit
