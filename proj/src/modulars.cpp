#include "momentkit/modulars.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "momentkit/quadrature.hpp"

namespace momentkit {

Modular Modular::l1() { return Modular(Kind::L1Lebesgue); }

Modular Modular::l1_log() { return Modular(Kind::L1LogScale); }

Modular Modular::weighted_deriv(GridFunction w_prime) {
    if (!w_prime.support())
        throw std::invalid_argument(
            "modular: the derivative weight must carry a compact support hint");
    Modular m(Kind::WeightedDeriv);
    m.w_prime_ = std::move(w_prime);
    return m;
}

std::string Modular::describe() const {
    switch (kind_) {
    case Kind::L1Lebesgue: return "L1(Lebesgue)";
    case Kind::L1LogScale: return "L1(log-scale)";
    default: return "weighted-derivative";
    }
}

namespace {

// Every integrand below vanishes wherever f does, so f's support hint (and
// with it the clipped edge cells) carries over unchanged.
GridFunction with_support_of(const GridFunction& f, std::vector<double> vals) {
    GridFunction out(f.grid(), std::move(vals));
    if (f.support())
        out.set_support(f.support()->a, f.support()->b);
    return out;
}

} // namespace

double Modular::operator()(const GridFunction& f) const {
    switch (kind_) {
    case Kind::L1Lebesgue: {
        std::vector<double> vals(f.size());
        for (std::size_t i = 0; i < f.size(); ++i)
            vals[i] = std::fabs(f[i]);
        return integrate(with_support_of(f, std::move(vals)), QuadRule::Trapezoid);
    }
    case Kind::L1LogScale: {
        if (!(f.grid().t0() > 0.0))
            throw std::invalid_argument(
                "modular: log-scale measure needs a grid starting at t0 > 0");
        std::vector<double> vals(f.size());
        for (std::size_t i = 0; i < f.size(); ++i)
            vals[i] = std::fabs(f[i]) / f.grid().node(i);
        return integrate(with_support_of(f, std::move(vals)), QuadRule::Trapezoid);
    }
    default: {
        if (!(w_prime_->grid() == f.grid()))
            throw std::invalid_argument("modular: weight and argument grids differ");
        std::vector<double> vals(f.size());
        for (std::size_t i = 0; i < f.size(); ++i)
            vals[i] = std::fabs(f[i]) * std::fabs((*w_prime_)[i]);
        return integrate(with_support_of(f, std::move(vals)), QuadRule::Trapezoid);
    }
    }
}

double eval_modular(const Modular& rho, const GridFunction& f) { return rho(f); }

namespace {

// Scaling does not move the support, so the hint survives.
GridFunction scaled(const GridFunction& f, double s) {
    std::vector<double> vals(f.size());
    for (std::size_t i = 0; i < f.size(); ++i)
        vals[i] = s * f[i];
    GridFunction out(f.grid(), std::move(vals));
    if (f.support())
        out.set_support(f.support()->a, f.support()->b);
    return out;
}

GridFunction combine(const GridFunction& f, double a1, const GridFunction& g, double a2) {
    std::vector<double> vals(f.size());
    for (std::size_t i = 0; i < f.size(); ++i)
        vals[i] = a1 * f[i] + a2 * g[i];
    return GridFunction(f.grid(), std::move(vals));
}

bool abs_leq_pointwise(const GridFunction& f, const GridFunction& g) {
    for (std::size_t i = 0; i < f.size(); ++i)
        if (std::fabs(f[i]) > std::fabs(g[i]))
            return false;
    return true;
}

// Indicator mask of [lo, hi] with the jump-midpoint convention: endpoints
// that cut the grid interior sample at one-half; endpoints on the grid
// boundary are not jumps and stay at full height.
std::vector<double> interval_mask(const Grid& grid, double lo, double hi, bool complement) {
    const std::size_t ilo = grid.index_of(lo);
    const std::size_t ihi = grid.index_of(hi);
    if (ilo > ihi)
        throw std::invalid_argument("restrict: requires lo <= hi");
    std::vector<double> mask(grid.n_points(), 0.0);
    for (std::size_t i = ilo; i <= ihi; ++i)
        mask[i] = 1.0;
    if (ilo > 0)
        mask[ilo] = 0.5;
    if (ihi + 1 < grid.n_points())
        mask[ihi] = 0.5;
    if (complement)
        for (double& m : mask)
            m = 1.0 - m;
    return mask;
}

GridFunction apply_mask(const GridFunction& f, const std::vector<double>& mask) {
    std::vector<double> vals(f.size());
    for (std::size_t i = 0; i < f.size(); ++i)
        vals[i] = f[i] * mask[i];
    return GridFunction(f.grid(), std::move(vals));
}

} // namespace

GridFunction restrict_to(const GridFunction& f, double lo, double hi) {
    return apply_mask(f, interval_mask(f.grid(), lo, hi, false));
}

GridFunction restrict_outside(const GridFunction& f, double lo, double hi) {
    return apply_mask(f, interval_mask(f.grid(), lo, hi, true));
}

AxiomReport check_axioms(const Modular& rho, const std::vector<GridFunction>& corpus,
                         double tolerance) {
    return check_axioms([&rho](const GridFunction& f) { return rho(f); }, corpus,
                        tolerance);
}

AxiomReport check_axioms(const std::function<double(const GridFunction&)>& rho,
                         const std::vector<GridFunction>& corpus, double tolerance) {
    if (corpus.empty())
        throw std::invalid_argument("axioms: corpus must be nonempty");
    const Grid& grid = corpus.front().grid();
    for (const GridFunction& f : corpus)
        if (!(f.grid() == grid))
            throw std::invalid_argument("axioms: corpus members must share one grid");

    AxiomReport rep;
    rep.corpus_size = corpus.size();
    rep.tolerance = tolerance;

    double v_zero = 0.0, v_sym = 0.0, v_convex = 0.0, v_mono = 0.0;

    const GridFunction zero(grid, std::vector<double>(grid.n_points(), 0.0));
    v_zero = std::fabs(rho(zero));
    ++rep.checks_run;

    std::vector<double> rho_of(corpus.size());
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        rho_of[i] = rho(corpus[i]);
        v_sym = std::max(v_sym, std::fabs(rho(scaled(corpus[i], -1.0)) - rho_of[i]));
        ++rep.checks_run;
    }

    static constexpr double kWeights[] = {0.0, 0.25, 0.5, 0.75, 1.0};
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        for (std::size_t j = i; j < corpus.size(); ++j) {
            for (double a1 : kWeights) {
                const double lhs = rho(combine(corpus[i], a1, corpus[j], 1.0 - a1));
                v_convex = std::max(v_convex, lhs - (rho_of[i] + rho_of[j]));
                ++rep.checks_run;
            }
            // Monotonicity on pairs that happen to be comparable.
            if (i != j && abs_leq_pointwise(corpus[i], corpus[j])) {
                v_mono = std::max(v_mono, rho_of[i] - rho_of[j]);
                ++rep.checks_run;
            }
        }
    }

    // Synthesized comparable pairs: |f| <= |2f| and |f restricted| <= |f|.
    const double mid = grid.node(grid.n_points() / 2);
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        v_mono = std::max(v_mono, rho_of[i] - rho(scaled(corpus[i], 2.0)));
        v_mono = std::max(v_mono, rho(restrict_to(corpus[i], grid.t0(), mid)) - rho_of[i]);
        rep.checks_run += 2;
    }

    rep.worst_violation = std::max({v_zero, v_sym, v_convex, v_mono, 0.0});
    rep.zero_ok = v_zero <= tolerance;
    rep.symmetry_ok = v_sym <= tolerance;
    rep.convexity_ok = v_convex <= tolerance;
    rep.monotone_ok = v_mono <= tolerance;
    return rep;
}

std::vector<FinitenessRow> finiteness_scan(const Modular& rho, const Grid& grid, double lo,
                                           double hi, const OSequenceLadder& ladder) {
    const GridFunction one_a =
        apply_mask(GridFunction(grid, std::vector<double>(grid.n_points(), 1.0)),
                   interval_mask(grid, lo, hi, false));
    std::vector<FinitenessRow> rows;
    rows.reserve(ladder.size());
    for (std::size_t p = 0; p < ladder.size(); ++p)
        rows.push_back({ladder[p], rho(scaled(one_a, ladder[p]))});
    return rows;
}

EquiAcReport equi_ac_diagnostic(const std::vector<GridFunction>& family, const Modular& rho,
                                double alpha, const std::vector<Interval>& small_sets,
                                const std::vector<Interval>& exhaustion, double tolerance) {
    if (family.empty())
        throw std::invalid_argument("equi-ac: family must be nonempty");
    if (!(alpha > 0.0))
        throw std::invalid_argument("equi-ac: alpha must be positive");
    const Grid& grid = family.front().grid();

    EquiAcReport rep;
    rep.alpha = alpha;
    rep.tolerance = tolerance;
    rep.note = "finite diagnostic: only the supplied small sets and exhaustion stages "
               "were examined";

    const GridFunction ones(grid, std::vector<double>(grid.n_points(), 1.0));
    for (const Interval& B : small_sets) {
        const double measure = rho(restrict_to(ones, B.lo, B.hi));
        double sup = 0.0;
        for (const GridFunction& f : family)
            sup = std::max(sup, rho(scaled(restrict_to(f, B.lo, B.hi), alpha)));
        rep.small_set_rows.push_back({measure, sup});
    }
    std::sort(rep.small_set_rows.begin(), rep.small_set_rows.end(),
              [](const EquiAcRow& x, const EquiAcRow& y) { return x.parameter > y.parameter; });

    for (std::size_t m = 0; m < exhaustion.size(); ++m) {
        double sup = 0.0;
        for (const GridFunction& f : family)
            sup = std::max(sup,
                           rho(scaled(restrict_outside(f, exhaustion[m].lo, exhaustion[m].hi),
                                      alpha)));
        rep.exhaustion_rows.push_back({exhaustion[m].hi, sup});
    }

    auto nonincreasing_to_tol = [tolerance](const std::vector<EquiAcRow>& rows) {
        if (rows.empty())
            return true;
        for (std::size_t i = 1; i < rows.size(); ++i)
            if (rows[i].sup_value > rows[i - 1].sup_value + 1e-12)
                return false;
        return rows.back().sup_value <= tolerance;
    };
    rep.pass = nonincreasing_to_tol(rep.small_set_rows) &&
               nonincreasing_to_tol(rep.exhaustion_rows);
    return rep;
}

std::vector<DecayRow> vitali_decay(const std::vector<int>& n_labels,
                                   const std::vector<GridFunction>& family,
                                   const Modular& rho, const std::vector<double>& alpha_grid,
                                   Exec mode) {
    if (n_labels.size() != family.size())
        throw std::invalid_argument("decay: labels and family sizes differ");
    if (alpha_grid.empty())
        throw std::invalid_argument("decay: alpha grid must be nonempty");

    const std::size_t cols = alpha_grid.size();
    std::vector<DecayRow> rows(family.size() * cols);
    exec::for_index(rows.size(), mode, [&](std::size_t k) {
        const std::size_t i = k / cols, j = k % cols;
        rows[k] = DecayRow{n_labels[i], alpha_grid[j],
                           rho(scaled(family[i], alpha_grid[j]))};
    });
    return rows;
}

} // namespace momentkit
