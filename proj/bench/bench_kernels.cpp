// Times the serial reference path against the OpenMP path for the heavy
// kernels and insists the two produce bitwise-identical results. Exit code is
// the number of mismatching workloads, so this doubles as a determinism
// smoke test under any OMP_NUM_THREADS.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "momentkit/filters.hpp"
#include "momentkit/grid.hpp"
#include "momentkit/lattice.hpp"
#include "momentkit/modulars.hpp"
#include "momentkit/moment_ops.hpp"
#include "momentkit/profiles.hpp"
#include "momentkit/stochastic.hpp"

using namespace momentkit;

namespace {

double timed(const std::function<void()>& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int mismatches = 0;

void row(const char* name, double ts, double tp, bool identical) {
    std::printf("%-26s  serial %7.3f s   parallel %7.3f s   speedup %5.2fx   %s\n",
                name, ts, tp, tp > 0.0 ? ts / tp : 0.0,
                identical ? "identical" : "MISMATCH");
    if (!identical)
        ++mismatches;
}

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads %d\n\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; both columns run the serial path\n\n");
#endif

    {
        const Grid g = Grid::span(0.0, 3.0, 1e-3);
        const RegularProcessSpec spec = RegularProcessSpec::bridge(1.5, 3.0);
        MonteCarloReport a, b;
        const double ts = timed([&] { a = mc_ito_moments(spec, g, 400, 1, Exec::Serial); });
        const double tp = timed([&] { b = mc_ito_moments(spec, g, 400, 1, Exec::Parallel); });
        bool same = a.estimate_mean == b.estimate_mean &&
                    a.estimate_second_moment == b.estimate_second_moment &&
                    a.standard_error == b.standard_error &&
                    a.trial_values.size() == b.trial_values.size();
        for (std::size_t i = 0; same && i < a.trial_values.size(); ++i)
            same = a.trial_values[i] == b.trial_values[i];
        row("monte carlo (400 paths)", ts, tp, same);
    }

    {
        double a = 0.0, b = 0.0;
        const double ts =
            timed([&] { a = density(IndexSet::squares(), 4000000, Exec::Serial); });
        const double tp =
            timed([&] { b = density(IndexSet::squares(), 4000000, Exec::Parallel); });
        row("density scan (4e6)", ts, tp, a == b);
    }

    {
        const auto seq = [](std::uint64_t k) {
            return 1.0 / std::sqrt(static_cast<double>(k));
        };
        const OSequenceLadder ladder({0.1, 0.01, 0.005}, 5e-3);
        ConvergenceReport a, b;
        const double ts = timed([&] {
            a = filter_limit_verdict(seq, 0.0, ladder, FilterSpec::cofinite(2000000),
                                     Exec::Serial);
        });
        const double tp = timed([&] {
            b = filter_limit_verdict(seq, 0.0, ladder, FilterSpec::cofinite(2000000),
                                     Exec::Parallel);
        });
        bool same = a.pass == b.pass && a.rungs.size() == b.rungs.size();
        for (std::size_t i = 0; same && i < a.rungs.size(); ++i)
            same = a.rungs[i].set_size == b.rungs[i].set_size &&
                   a.rungs[i].verdict == b.rungs[i].verdict;
        row("filter ladder (2e6)", ts, tp, same);
    }

    {
        const Grid g = Grid::span(0.0, 3.0, 2e-3);
        SmoothedTable a, b;
        const double ts = timed([&] {
            a = smoothed_convergence_experiment(1.5, 3.0, {10, 40}, g, 120, 3,
                                                Exec::Serial);
        });
        const double tp = timed([&] {
            b = smoothed_convergence_experiment(1.5, 3.0, {10, 40}, g, 120, 3,
                                                Exec::Parallel);
        });
        bool same = a.rows.size() == b.rows.size();
        for (std::size_t i = 0; same && i < a.rows.size(); ++i)
            same = a.rows[i].l2_error == b.rows[i].l2_error && a.rows[i].se == b.rows[i].se;
        row("smoothed integrals (120)", ts, tp, same);
    }

    {
        const Grid g = Grid::span(1e-3, 6.0, 1e-3);
        const GridFunction f = make_profile("bump", g, 2.0, 3.0);
        const GridFunction w = GridFunction::sample(g, [](double t) {
            return std::max(0.0, (t - 1.0) * (4.0 - t) / 2.25);
        });
        WeakTable a, b;
        const double ts =
            timed([&] { a = weak_convergence_experiment(f, w, {5, 20, 80}, Exec::Serial); });
        const double tp = timed(
            [&] { b = weak_convergence_experiment(f, w, {5, 20, 80}, Exec::Parallel); });
        bool same = a.rows.size() == b.rows.size();
        for (std::size_t i = 0; same && i < a.rows.size(); ++i)
            same = a.rows[i].delta1 == b.rows[i].delta1 &&
                   a.rows[i].delta2 == b.rows[i].delta2;
        row("weak pairings (3 degrees)", ts, tp, same);
    }

    {
        const Grid g = Grid::span(1e-3, 6.0, 1e-3);
        const Grid in = Grid::span(0.0, 6.0, 1e-3);
        std::vector<GridFunction> family;
        std::vector<int> labels;
        const GridFunction f = make_profile("bump", in, 1.5, 3.0);
        for (int n : {5, 10, 20, 40, 80}) {
            labels.push_back(n);
            const MomentTransform T = transform(f, n, g);
            std::vector<double> diff(g.n_points());
            for (std::size_t i = 0; i < g.n_points(); ++i)
                diff[i] = T.output[i] - f.value_at(g.node(i));
            family.emplace_back(g, std::move(diff));
        }
        std::vector<DecayRow> a, b;
        const double ts =
            timed([&] { a = vitali_decay(labels, family, Modular::l1(), {1.0}, Exec::Serial); });
        const double tp = timed(
            [&] { b = vitali_decay(labels, family, Modular::l1(), {1.0}, Exec::Parallel); });
        bool same = a.size() == b.size();
        for (std::size_t i = 0; same && i < a.size(); ++i)
            same = a[i].value == b[i].value && a[i].n == b[i].n;
        row("modular decay (5 degrees)", ts, tp, same);
    }

    if (mismatches == 0)
        std::printf("\nall workloads agree between execution modes\n");
    else
        std::printf("\n%d workload(s) MISMATCHED between execution modes\n", mismatches);
    return mismatches;
}
