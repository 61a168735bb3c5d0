#include "momentkit/stochastic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "momentkit/moment_ops.hpp"
#include "momentkit/philox.hpp"
#include "momentkit/quadrature.hpp"

namespace momentkit {

BrownianPath simulate_brownian(std::uint64_t seed, const Grid& grid, std::uint64_t stream) {
    if (grid.t0() != 0.0)
        throw std::invalid_argument("brownian: grid must start at t0 = 0");
    const double sh = std::sqrt(grid.h());
    std::vector<double> b(grid.n_points());
    b[0] = 0.0;
    for (std::size_t i = 0; i + 1 < grid.n_points(); ++i)
        b[i + 1] = b[i] + sh * normal_at(seed, stream, i);
    return BrownianPath{GridFunction(grid, std::move(b)), seed, stream};
}

double holder_witness(const BrownianPath& path) {
    const GridFunction& B = path.values;
    const double h = B.grid().h();
    double worst = 0.0;
    for (std::size_t k = 1; k < B.size(); k *= 2) {
        const double scale = std::pow(static_cast<double>(k) * h, 0.25);
        for (std::size_t i = 0; i + k < B.size(); ++i)
            worst = std::max(worst, std::abs(B[i + k] - B[i]) / scale);
    }
    return worst;
}

GridFunction bridge_process(const BrownianPath& path, double a, double T_end) {
    if (!(1.0 < a && a < T_end))
        throw std::invalid_argument("bridge: needs 1 < a < T_end");
    const Grid& g = path.values.grid();
    const std::size_t ia = g.index_of(a);
    const std::size_t iT = g.index_of(T_end);
    const double ta = g.node(ia), tT = g.node(iT);
    const double Ba = path.values[ia];

    std::vector<double> f(g.n_points(), 0.0);
    for (std::size_t i = ia; i <= iT; ++i)
        f[i] = (g.node(i) - tT) * (path.values[i] - Ba);
    GridFunction out(g, std::move(f));
    out.set_support(ta, tT);
    return out;
}

double ito_sum(const GridFunction& Y, const BrownianPath& path) {
    return stieltjes_integral(Y, path.values, StieltjesRule::LeftPoint);
}

RegularProcessSpec RegularProcessSpec::constant(double c) {
    RegularProcessSpec s;
    s.kind = Kind::Constant;
    s.c = c;
    s.K_bound = c * c;
    return s;
}

RegularProcessSpec RegularProcessSpec::bridge(double a, double T) {
    if (!(1.0 < a && a < T))
        throw std::invalid_argument("process spec: bridge needs 1 < a < T");
    RegularProcessSpec s;
    s.kind = Kind::Bridge;
    s.a = a;
    s.T = T;
    s.K_bound = 4.0 * (T - a) * (T - a) * (T - a) / 27.0;
    return s;
}

RegularProcessSpec RegularProcessSpec::smoothed_bridge(double a, double T, int n) {
    if (n < 2)
        throw std::invalid_argument("process spec: smoothing degree must be >= 2");
    RegularProcessSpec s = bridge(a, T);
    s.kind = Kind::SmoothedBridge;
    s.n = n;
    return s;
}

namespace {

// Degree-n moment average of a trajectory living on a grid that starts at 0:
// evaluate on the grid minus its origin (the averaging needs s > 0) and
// prepend the exact limit value 0, which is correct because the average
// vanishes until s reaches the integrand's support.
GridFunction smoothed_pathwise(const GridFunction& f, int n) {
    const Grid& g = f.grid();
    if (g.n_points() < 2)
        throw std::invalid_argument("smoothed path: grid too small");
    const Grid sub(g.node(1), g.h(), g.n_points() - 1);
    const MomentTransform T = transform(f, n, sub);
    std::vector<double> vals;
    vals.reserve(g.n_points());
    vals.push_back(0.0);
    for (double v : T.output.values())
        vals.push_back(v);
    return GridFunction(g, std::move(vals));
}

double mean_of(const std::vector<double>& xs, std::size_t lo, std::size_t count) {
    return exec::pairwise_sum(std::span<const double>(xs.data() + lo, count)) /
           static_cast<double>(count);
}

// Standard error of the mean of xs[lo .. lo+count), deterministic reduction.
double se_of(const std::vector<double>& xs, std::size_t lo, std::size_t count, double mean) {
    std::vector<double> dev(count);
    for (std::size_t i = 0; i < count; ++i) {
        const double d = xs[lo + i] - mean;
        dev[i] = d * d;
    }
    const double var = exec::pairwise_sum(dev) / static_cast<double>(count - 1);
    return std::sqrt(var / static_cast<double>(count));
}

} // namespace

GridFunction realize_process(const RegularProcessSpec& spec, const BrownianPath& path) {
    switch (spec.kind) {
    case RegularProcessSpec::Kind::Constant:
        return GridFunction(path.values.grid(),
                            std::vector<double>(path.values.size(), spec.c));
    case RegularProcessSpec::Kind::Bridge:
        return bridge_process(path, spec.a, spec.T);
    case RegularProcessSpec::Kind::SmoothedBridge:
        return smoothed_pathwise(bridge_process(path, spec.a, spec.T), spec.n);
    }
    throw std::logic_error("process spec: unknown kind");
}

MonteCarloReport mc_ito_moments(const RegularProcessSpec& spec, const Grid& grid,
                                int trials, std::uint64_t seed, Exec mode) {
    if (trials < 100)
        throw std::invalid_argument("monte carlo: needs trials >= 100");

    std::vector<double> v(static_cast<std::size_t>(trials));
    exec::for_index(v.size(), mode, [&](std::size_t t) {
        const BrownianPath path = simulate_brownian(seed, grid, t);
        const GridFunction Y = realize_process(spec, path);
        v[t] = ito_sum(Y, path);
    });

    std::vector<double> sq(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        sq[i] = v[i] * v[i];

    MonteCarloReport r;
    r.trials = trials;
    r.estimate_mean = mean_of(v, 0, v.size());
    r.estimate_second_moment = mean_of(sq, 0, sq.size());
    r.standard_error = se_of(sq, 0, sq.size(), r.estimate_second_moment);
    r.bound_KT = spec.K_bound * grid.back();
    r.bound_satisfied_within_3se =
        r.estimate_second_moment <= r.bound_KT + 3.0 * r.standard_error;
    r.trial_values = std::move(v);
    return r;
}

SmoothedTable smoothed_convergence_experiment(double a, double T_end,
                                              const std::vector<int>& n_list,
                                              const Grid& grid, int trials,
                                              std::uint64_t seed, Exec mode) {
    if (!(1.0 < a && a < T_end))
        throw std::invalid_argument("smoothed experiment: needs 1 < a < T_end");
    for (int n : n_list)
        if (n < 2)
            throw std::invalid_argument("smoothed experiment: degrees must be >= 2");
    SmoothedTable table;
    if (n_list.empty()) {
        table.nonincreasing_within_1se = true;
        return table;
    }
    if (trials < 2)
        throw std::invalid_argument("smoothed experiment: needs trials >= 2");

    const std::size_t nt = static_cast<std::size_t>(trials);
    const std::size_t nk = n_list.size();
    std::vector<double> sq(nk * nt);
    exec::for_index(nt, mode, [&](std::size_t t) {
        const BrownianPath path = simulate_brownian(seed, grid, t);
        const GridFunction f = bridge_process(path, a, T_end);
        const double R = ito_sum(f, path);
        for (std::size_t k = 0; k < nk; ++k) {
            const GridFunction Tn = smoothed_pathwise(f, n_list[k]);
            const double d = ito_sum(Tn, path) - R;
            sq[k * nt + t] = d * d;
        }
    });

    table.rows.reserve(nk);
    for (std::size_t k = 0; k < nk; ++k) {
        SmoothedRow row;
        row.n = n_list[k];
        row.l2_error = mean_of(sq, k * nt, nt);
        row.se = se_of(sq, k * nt, nt, row.l2_error);
        table.rows.push_back(row);
    }
    table.nonincreasing_within_1se = true;
    for (std::size_t k = 0; k + 1 < nk; ++k) {
        const double slack = std::sqrt(table.rows[k].se * table.rows[k].se +
                                       table.rows[k + 1].se * table.rows[k + 1].se);
        if (table.rows[k + 1].l2_error > table.rows[k].l2_error + slack)
            table.nonincreasing_within_1se = false;
    }
    return table;
}

double clamp_truncate(double x, double M) {
    if (!(M > 0.0))
        throw std::invalid_argument("truncate: needs M > 0");
    return x > 0.0 ? std::min(x, M) : std::max(x, -M);
}

} // namespace momentkit
