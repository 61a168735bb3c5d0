// Release gate: every numbered check below must hold for a build to ship.
// Each check prints one [PASS]/[FAIL] line plus the measured numbers it was
// judged on; the exit code is the number of failed checks. Run with no
// arguments for the full gate, or --only K for a single criterion (the ctest
// entries do the latter). C12 shells out to the command-line driver, so pass
// its location with --cli.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "momentkit/filters.hpp"
#include "momentkit/grid.hpp"
#include "momentkit/lattice.hpp"
#include "momentkit/modulars.hpp"
#include "momentkit/moment_ops.hpp"
#include "momentkit/philox.hpp"
#include "momentkit/profiles.hpp"
#include "momentkit/quadrature.hpp"
#include "momentkit/stochastic.hpp"

using namespace momentkit;

namespace {

std::string g_cli_path;

std::string num(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Notes {
    std::vector<std::string> lines;
    void add(std::string s) { lines.push_back(std::move(s)); }
};

// ---------------------------------------------------------------- C1

bool c1_integral_identity(Notes& notes) {
    const double h = 1e-3;
    const Grid in = Grid::span(0.0, 6.0, h);
    const Grid ev = Grid::span(h, 6.0, h);
    bool ok = true;
    double worst_res = 0.0, slowest = 0.0;
    for (const char* p : {"indicator", "bump", "sin"}) {
        const GridFunction f = make_profile(p, in, 2.0, 3.0);
        for (int n : {2, 3, 5, 10}) {
            const auto t0 = Clock::now();
            const double r = consfubini_residual(f, n, ev);
            const double dt = seconds_since(t0);
            worst_res = std::max(worst_res, r);
            slowest = std::max(slowest, dt);
            if (!(r <= 1e-4)) {
                ok = false;
                notes.add(std::string(p) + " n=" + std::to_string(n) +
                          ": residual " + num(r) + " > 1e-4");
            }
            if (!(dt < 1.0)) {
                ok = false;
                notes.add(std::string(p) + " n=" + std::to_string(n) + ": took " +
                          num(dt) + " s >= 1 s");
            }
        }
    }
    notes.add("12 cases on [2,3], h = 1e-3: worst residual " + num(worst_res) +
              " (limit 1e-4), slowest case " + num(slowest) + " s (limit 1 s)");
    return ok;
}

// ---------------------------------------------------------------- C2

double c2_deviation(double h, bool skip_kink_nodes) {
    const Grid in = Grid::span(0.0, 6.0, h);
    const Grid ev = Grid::span(h, 6.0, h);
    const GridFunction f = make_profile("bump", in, 2.0, 3.0);
    const MomentTransform T = transform(f, 5, ev);
    const GridFunction rhs = derivative(T);
    const std::size_t ia = ev.index_of(2.0), ib = ev.index_of(3.0);
    double worst = 0.0;
    for (std::size_t i = 1; i + 1 < ev.n_points(); ++i) {
        if (skip_kink_nodes && (i == ia || i == ib))
            continue;
        const double fd = (T.output[i + 1] - T.output[i - 1]) / (2.0 * h);
        worst = std::max(worst, std::abs(fd - rhs[i]));
    }
    return worst;
}

bool c2_derivative_identity(Notes& notes) {
    const double all_h = c2_deviation(1e-3, false);
    const double all_h2 = c2_deviation(5e-4, false);
    const double smooth_h = c2_deviation(1e-3, true);
    const double smooth_h2 = c2_deviation(5e-4, true);
    const double ratio = smooth_h / smooth_h2;

    bool ok = true;
    if (!(all_h <= 1e-3)) {
        ok = false;
        notes.add("max interior deviation " + num(all_h) + " > 1e-3 at h = 1e-3");
    }
    if (!(ratio >= 3.0)) {
        ok = false;
        notes.add("halving h only scaled the deviation by " + num(ratio) + " < 3");
    }
    notes.add("max interior deviation: " + num(all_h) + " at h = 1e-3, " + num(all_h2) +
              " at h = 5e-4 (limit 1e-3)");
    notes.add("away from the support endpoints (piecewise-linear kinks at s = 2, 3): " +
              num(smooth_h) + " -> " + num(smooth_h2) + ", ratio " + num(ratio) +
              " (needs >= 3; the kink nodes themselves halve at first order)");
    return ok;
}

// ---------------------------------------------------------------- C3

bool c3_lipschitz(Notes& notes) {
    const double h = 1e-3;
    const Grid in = Grid::span(0.0, 6.0, h);
    const Grid ev = Grid::span(h, 6.0, h);
    bool ok = true;
    double worst_excess = 0.0;
    std::uint64_t pairs = 0;
    for (const char* p : {"indicator", "bump", "sin"}) {
        const GridFunction f = make_profile(p, in, 1.5, 3.0);
        for (int n : {2, 5, 10}) {
            const MomentTransform T = transform(f, n, ev);
            const BoundReport r = bound_checks(T, 10000, 427 + n);
            pairs += r.pairs_sampled;
            worst_excess = std::max(worst_excess, r.lipschitz_max_excess);
            if (!r.lipschitz_ok) {
                ok = false;
                notes.add(std::string(p) + " n=" + std::to_string(n) +
                          ": excess beyond the 1e-9 slack: " +
                          num(r.lipschitz_max_excess));
            }
        }
    }
    notes.add("a = 1.5, b = 3, n in {2,5,10}, 10000 seeded pairs per case (" +
              std::to_string(pairs) + " total): worst excess beyond slack " +
              num(worst_excess));
    return ok;
}

// ---------------------------------------------------------------- C4

bool c4_tail_bounds(Notes& notes) {
    const double h = 1e-3;
    const Grid in = Grid::span(0.0, 6.0, h);
    const Grid ev = Grid::span(h, 8.0, h);
    bool ok = true;
    double worst_node_excess = -1.0;
    double worst_mass_gap = -1.0; // bound - mass, want >= 0 everywhere
    for (const char* p : {"zero", "indicator", "bump", "sin", "ramp", "one", "identity"}) {
        const GridFunction f = make_profile(p, in, 1.5, 3.0);
        for (int n = 2; n <= 10; ++n) {
            const MomentTransform T = transform(f, n, ev);
            const double nd = static_cast<double>(n);
            for (std::size_t i = 0; i < ev.n_points(); ++i) {
                const double s = ev.node(i);
                if (!(s > T.b))
                    continue;
                const double excess =
                    std::abs(T.output[i]) - (T.M_f * std::pow(T.b / s, nd) + 1e-12);
                worst_node_excess = std::max(worst_node_excess, excess);
                if (excess > 0.0) {
                    ok = false;
                    notes.add(std::string(p) + " n=" + std::to_string(n) + " s=" +
                              num(s) + ": decay bound violated by " + num(excess));
                }
            }
            const double mass = nd * T.K_scaled * std::pow(0.5, nd - 1.0) / (nd - 1.0);
            const double bound = T.M_f * T.b * std::pow(0.5, nd - 1.0);
            worst_mass_gap = worst_mass_gap < 0.0 ? bound - mass
                                                  : std::min(worst_mass_gap, bound - mass);
            if (!(mass <= bound)) {
                ok = false;
                notes.add(std::string(p) + " n=" + std::to_string(n) +
                          ": tail mass past 2b " + num(mass) + " > bound " + num(bound));
            }
        }
    }
    notes.add("7 profiles x n in {2..10}, every node s > b on [h, 8]: worst bound "
              "excess " +
              num(worst_node_excess) + " (must be <= 0)");
    notes.add("closed-form tail mass past 2b stayed under M_f b / 2^(n-1); smallest "
              "margin " +
              num(worst_mass_gap));
    return ok;
}

// ---------------------------------------------------------------- C5

double c5_sup_error(const GridFunction& f, int n, const Grid& window) {
    const MomentTransform T = transform(f, n, window);
    double sup = 0.0;
    for (std::size_t i = 0; i < window.n_points(); ++i)
        sup = std::max(sup, std::abs(T.output[i] - f.value_at(window.node(i))));
    return sup;
}

bool c5_uniform_convergence(Notes& notes) {
    const double h = 1e-3;
    const GridFunction f = make_profile("bump", Grid::span(0.0, 6.0, h), 2.0, 3.0);
    const Grid window = Grid::span(0.5, 6.0, h);
    const double e5 = c5_sup_error(f, 5, window);
    const double e200 = c5_sup_error(f, 200, window);

    bool ok = true;
    if (!(e200 < e5)) {
        ok = false;
        notes.add("sup error did not shrink: " + num(e200) + " at n=200 vs " + num(e5) +
                  " at n=5");
    }
    if (!(e200 < 1e-2)) {
        ok = false;
        notes.add("sup error at n=200 is " + num(e200) + ", not below 1e-2");
    }
    notes.add("sup error over [0.5, 6]: " + num(e5) + " at n=5, " + num(e200) +
              " at n=200");
    const double kink = 200.0 * (-9.0 / 202.0 + 15.0 / 201.0 - 6.0 / 200.0);
    notes.add("the n=200 sup sits at the support endpoint s=3, where the averaged "
              "value is exactly 200(-9/202 + 15/201 - 6/200) = " +
              num(kink) + " while the profile is 0; agreement with the measured sup: " +
              num(std::abs(e200 - kink)));
    notes.add("that endpoint value is 3/n - 21/n^2 + O(1/n^3), so it first drops "
              "below 1e-2 near n = 293; at the required n = 200 the target 1e-2 is "
              "unattainable for this profile and the clause fails honestly");
    return ok;
}

// ---------------------------------------------------------------- C6

bool c6_l1_convergence(Notes& notes) {
    const double h = 1e-3;
    const GridFunction f = make_profile("bump", Grid::span(0.0, 6.0, h), 2.0, 3.0);
    const Grid ev = Grid::span(h, 6.0, h);
    const double l5 =
        bound_checks(transform(f, 5, ev), 100, 3).l1_error;
    const double l100 =
        bound_checks(transform(f, 100, ev), 100, 3).l1_error;

    bool ok = true;
    if (!(l100 < 1e-2)) {
        ok = false;
        notes.add("L1 error at n=100 is " + num(l100) + ", not below 1e-2");
    }
    if (!(l100 < l5 / 5.0)) {
        ok = false;
        notes.add("L1 error at n=100 (" + num(l100) + ") is not under a fifth of n=5 (" +
                  num(l5) + ")");
    }
    notes.add("L1 error (grid window plus closed-form tail): " + num(l5) +
              " at n=5, " + num(l100) + " at n=100, ratio " + num(l5 / l100));
    notes.add("the L1 distance for this profile decays like c/n with c near 1.26 "
              "(dominated by the mass the average pushes past the support end), so it "
              "reaches 1e-2 only near n = 130; at n = 100 the absolute clause fails "
              "honestly while the fivefold-decay clause holds");
    return ok;
}

// ---------------------------------------------------------------- C7

bool c7_modular_axioms(Notes& notes) {
    const auto t0 = Clock::now();
    const Grid g(0.0, 2e-3, 2001); // [0, 4]
    std::vector<GridFunction> corpus;
    corpus.reserve(50);
    for (std::uint64_t k = 0; k < 50; ++k) {
        std::vector<double> v(g.n_points());
        for (std::size_t i = 0; i < v.size(); ++i)
            v[i] = 2.0 * uniform_at(9001, k, i) - 1.0;
        corpus.emplace_back(g, std::move(v));
    }
    GridFunction wp = GridFunction::sample(
        g, [](double t) { return (t >= 1.0 && t <= 3.0) ? std::cos(t) : 0.0; });
    wp.set_support(1.0, 3.0);

    const AxiomReport r1 = check_axioms(Modular::l1(), corpus, 1e-12);
    const AxiomReport r2 = check_axioms(Modular::weighted_deriv(std::move(wp)), corpus, 1e-12);
    const double dt = seconds_since(t0);

    bool ok = true;
    for (const AxiomReport* r : {&r1, &r2}) {
        if (!(r->zero_ok && r->symmetry_ok && r->convexity_ok && r->monotone_ok &&
              r->worst_violation <= 1e-12)) {
            ok = false;
            notes.add("axiom violation: worst " + num(r->worst_violation));
        }
    }
    if (!(dt < 5.0)) {
        ok = false;
        notes.add("took " + num(dt) + " s >= 5 s");
    }
    notes.add("50-function corpus, " + std::to_string(r1.checks_run + r2.checks_run) +
              " checks across both functionals: worst violation " +
              num(std::max(r1.worst_violation, r2.worst_violation)) + ", " + num(dt) +
              " s (limit 5 s)");
    return ok;
}

// ---------------------------------------------------------------- C8

bool c8_density_convergence(Notes& notes) {
    const auto is_square = [](std::uint64_t k) {
        const std::uint64_t r =
            static_cast<std::uint64_t>(std::llround(std::sqrt(static_cast<double>(k))));
        for (std::uint64_t c = r > 0 ? r - 1 : 0; c <= r + 1; ++c)
            if (c * c == k)
                return true;
        return false;
    };
    const auto seq = [&](std::uint64_t k) {
        return is_square(k) ? 1.0 : 1.0 / static_cast<double>(k);
    };
    const OSequenceLadder ladder({0.1, 0.01, 0.001}, 1e-3);

    const ConvergenceReport dens = filter_limit_verdict(
        seq, 0.0, ladder, FilterSpec::density(1000000, 0.999));
    const ConvergenceReport cof =
        filter_limit_verdict(seq, 0.0, ladder, FilterSpec::cofinite(1000000));

    bool ok = dens.pass && !cof.pass;
    for (const RungResult& r : dens.rungs) {
        if (r.verdict != Verdict::InFilter) {
            ok = false;
            notes.add("density rung eps=" + num(r.epsilon) + ": " + to_string(r.verdict));
        }
    }
    for (const RungResult& r : cof.rungs) {
        if (r.verdict == Verdict::InFilter) {
            ok = false;
            notes.add("cofinite rung eps=" + num(r.epsilon) +
                      " unexpectedly in the filter");
        }
        notes.add("cofinite rung eps=" + num(r.epsilon) + ": " + to_string(r.verdict) +
                  " (" + std::to_string(r.set_size) + " of 1000000 indices close)");
    }
    notes.add("square-pulse sequence, H = 1e6: density filter at threshold 0.999 "
              "passes every rung; the cofinite filter passes none");
    return ok;
}

// ---------------------------------------------------------------- C9

bool c9_ito_bound(Notes& notes) {
    const auto t0 = Clock::now();
    const MonteCarloReport flat = mc_ito_moments(RegularProcessSpec::constant(1.0),
                                                 Grid::span(0.0, 2.0, 2e-3), 10000, 929);
    const MonteCarloReport br = mc_ito_moments(RegularProcessSpec::bridge(1.5, 3.0),
                                               Grid::span(0.0, 3.0, 2e-3), 10000, 930);
    const double dt = seconds_since(t0);

    bool ok = true;
    const double gap = std::abs(flat.estimate_second_moment - 2.0);
    if (!(gap <= 3.0 * flat.standard_error)) {
        ok = false;
        notes.add("unit process second moment " + num(flat.estimate_second_moment) +
                  " is " + num(gap / flat.standard_error) + " SE from 2");
    }
    if (!br.bound_satisfied_within_3se) {
        ok = false;
        notes.add("bridge second moment " + num(br.estimate_second_moment) +
                  " exceeds its bound " + num(br.bound_KT) + " beyond 3 SE");
    }
    if (!(dt < 10.0)) {
        ok = false;
        notes.add("took " + num(dt) + " s >= 10 s");
    }
    notes.add("unit process on [0,2], 10000 trials: second moment " +
              num(flat.estimate_second_moment) + " vs 2, SE " +
              num(flat.standard_error));
    notes.add("bridge(1.5, 3), 10000 trials: second moment " +
              num(br.estimate_second_moment) + " vs bound " + num(br.bound_KT) +
              ", within 3 SE: " + (br.bound_satisfied_within_3se ? "yes" : "no"));
    notes.add(num(dt) + " s (limit 10 s)");
    return ok;
}

// ---------------------------------------------------------------- C10

bool c10_smoothed_convergence(Notes& notes) {
    const auto t0 = Clock::now();
    const Grid g = Grid::span(0.0, 3.0, 2e-3);
    const std::vector<int> degrees = {10, 40, 80};
    const SmoothedTable a = smoothed_convergence_experiment(1.5, 3.0, degrees, g, 500, 4242);
    const SmoothedTable b = smoothed_convergence_experiment(1.5, 3.0, degrees, g, 500, 4242);
    const double dt = seconds_since(t0);

    bool ok = true;
    if (a.rows.size() != 3) {
        notes.add("expected 3 rows");
        return false;
    }
    const double drop = a.rows[0].l2_error - a.rows[2].l2_error;
    const double se = std::sqrt(a.rows[0].se * a.rows[0].se + a.rows[2].se * a.rows[2].se);
    if (!(drop > se)) {
        ok = false;
        notes.add("L2 error drop " + num(drop) + " is not larger than the combined SE " +
                  num(se));
    }
    bool identical = a.rows.size() == b.rows.size();
    for (std::size_t i = 0; identical && i < a.rows.size(); ++i)
        identical = a.rows[i].l2_error == b.rows[i].l2_error && a.rows[i].se == b.rows[i].se;
    if (!identical) {
        ok = false;
        notes.add("two runs with the same seed disagreed");
    }
    if (!(dt < 60.0)) {
        ok = false;
        notes.add("took " + num(dt) + " s >= 60 s");
    }
    for (const SmoothedRow& row : a.rows)
        notes.add("n=" + std::to_string(row.n) + ": L2 error " + num(row.l2_error) +
                  " (SE " + num(row.se) + ")");
    notes.add("drop from n=10 to n=80: " + num(drop) + " vs combined SE " + num(se) +
              "; repeat run bitwise identical: " + (identical ? "yes" : "no") + "; " +
              num(dt) + " s (limit 60 s)");
    return ok;
}

// ---------------------------------------------------------------- C11

bool c11_ode(Notes& notes) {
    const double h = 1e-3;
    const Grid in = Grid::span(0.0, 6.0, h);
    const Grid ev = Grid::span(h, 6.0, h);
    bool ok = true;

    const GridFunction one = make_profile("one", in, 0.0, 0.0);
    const GridFunction lin = make_profile("identity", in, 0.0, 0.0);
    const GridFunction bump = make_profile("bump", in, 2.0, 3.0);

    const GridFunction phi1 = ode_solve(1.0, one, 0.0, ev);
    const GridFunction phi2 = ode_solve(2.0, lin, 0.0, ev);
    const GridFunction phi3 = ode_solve(3.0, bump, 0.0, ev);

    const double r1 = ode_residual(phi1, 1.0, one);
    const double r2 = ode_residual(phi2, 2.0, lin);
    const double r3 = ode_residual(phi3, 3.0, bump);
    for (double r : {r1, r2, r3}) {
        if (!(r <= 1e-3)) {
            ok = false;
            notes.add("residual " + num(r) + " > 1e-3");
        }
    }

    double v1 = 0.0, v2 = 0.0;
    for (std::size_t i = 0; i < ev.n_points(); ++i) {
        v1 = std::max(v1, std::abs(phi1[i] - 1.0));
        v2 = std::max(v2, std::abs(phi2[i] - (2.0 / 3.0) * ev.node(i)));
    }
    if (!(v1 <= 1e-12 && v2 <= 1e-12)) {
        ok = false;
        notes.add("closed-form solution values off by " + num(v1) + " / " + num(v2) +
                  " (limit 1e-12)");
    }
    notes.add("residuals at h = 1e-3: nu=1 " + num(r1) + ", nu=2 " + num(r2) +
              ", nu=3 bump " + num(r3) + " (limit 1e-3)");
    notes.add("closed forms: sup |phi - 1| = " + num(v1) + ", sup |phi - 2s/3| = " +
              num(v2) + " (limit 1e-12; residuals of these cases carry the central-"
              "difference O(h^2) floor, the solution values are the exact quantity)");
    return ok;
}

// ---------------------------------------------------------------- C12

struct RunOut {
    int code = -1;
    std::string text;
};

RunOut run_cmd(const std::string& cmd) {
    RunOut out;
    FILE* p = popen((cmd + " 2>&1").c_str(), "r");
    if (!p)
        return out;
    char buf[4096];
    std::size_t n;
    while ((n = std::fread(buf, 1, sizeof buf, p)) > 0)
        out.text.append(buf, n);
    const int st = pclose(p);
    out.code = st;
    return out;
}

std::string drop_exec_lines(const std::string& s) {
    std::string out;
    std::size_t start = 0;
    while (start <= s.size()) {
        const std::size_t end = s.find('\n', start);
        const std::string line =
            s.substr(start, end == std::string::npos ? std::string::npos : end - start);
        if (line.find("exec") == std::string::npos) {
            out += line;
            out += '\n';
        }
        if (end == std::string::npos)
            break;
        start = end + 1;
    }
    return out;
}

bool c12_reproducibility(Notes& notes) {
    if (g_cli_path.empty()) {
        notes.add("no --cli <path> given; cannot exercise the command line");
        return false;
    }
    const std::string base = "\"" + g_cli_path + "\" ";
    const std::vector<std::string> cmds = {
        base + "identity --profile bump --n 3 --h 2e-3",
        base + "ito --process bridge --a 1.5 --T 3 --h 4e-3 --trials 300 --seed 11",
        base + "smooth-converge --a 1.5 --T 3 --h 5e-3 --trials 40 --n-list 5,20 --seed 7",
        base + "filter --sequence squarepulse --kind density --horizon 1000000",
    };

    bool ok = true;
    int compared = 0;
    for (const std::string& c : cmds) {
        const RunOut r1 = run_cmd(c);
        const RunOut r2 = run_cmd(c);
        ++compared;
        if (r1.code != 0 || r2.code != 0) {
            ok = false;
            notes.add("nonzero exit: " + c);
        }
        if (r1.text != r2.text) {
            ok = false;
            notes.add("repeat run differed: " + c);
        }
    }

    const std::string threaded = cmds[1];
    const RunOut t1 = run_cmd("OMP_NUM_THREADS=1 " + threaded);
    const RunOut t2 = run_cmd("OMP_NUM_THREADS=2 " + threaded);
    const RunOut t4 = run_cmd("OMP_NUM_THREADS=4 " + threaded);
    compared += 2;
    if (t1.text != t2.text || t2.text != t4.text) {
        ok = false;
        notes.add("output changed with OMP_NUM_THREADS");
    }
    const RunOut s1 = run_cmd("OMP_NUM_THREADS=4 " + cmds[2]);
    const RunOut s2 = run_cmd("OMP_NUM_THREADS=1 " + cmds[2]);
    ++compared;
    if (s1.text != s2.text) {
        ok = false;
        notes.add("smooth-converge output changed with OMP_NUM_THREADS");
    }

    const RunOut ser = run_cmd(cmds[1] + " --exec serial");
    const RunOut par = run_cmd(cmds[1] + " --exec parallel");
    ++compared;
    if (drop_exec_lines(ser.text) != drop_exec_lines(par.text)) {
        ok = false;
        notes.add("serial and parallel bodies differ (beyond the echoed mode line)");
    }

    notes.add(std::to_string(compared) +
              " byte-for-byte comparisons: repeats, OMP_NUM_THREADS in {1,2,4}, and "
              "serial vs parallel execution (config echo line excluded for the last)");
    return ok;
}

// ---------------------------------------------------------------- driver

struct Criterion {
    int id;
    const char* label;
    bool (*fn)(Notes&);
};

const Criterion kCriteria[] = {
    {1, "integral identity across profiles and degrees", c1_integral_identity},
    {2, "derivative identity against central differences", c2_derivative_identity},
    {3, "Lipschitz bound on sampled node pairs", c3_lipschitz},
    {4, "decay bound past the support and tail mass", c4_tail_bounds},
    {5, "uniform convergence on [0.5, 6]", c5_uniform_convergence},
    {6, "L1 convergence at degree 100", c6_l1_convergence},
    {7, "modular axioms on a random corpus", c7_modular_axioms},
    {8, "density-filter convergence of the square-pulse sequence", c8_density_convergence},
    {9, "Ito second-moment bound", c9_ito_bound},
    {10, "smoothed stochastic integral convergence", c10_smoothed_convergence},
    {11, "weighted ODE residuals and closed forms", c11_ode},
    {12, "bitwise reproducibility of the command line", c12_reproducibility},
};

} // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--only" && i + 1 < argc) {
            only = std::atoi(argv[++i]);
        } else if (arg == "--cli" && i + 1 < argc) {
            g_cli_path = argv[++i];
        } else {
            std::cerr << "usage: acceptance [--only K] [--cli PATH]\n";
            return 64;
        }
    }

    int failures = 0, ran = 0;
    for (const Criterion& c : kCriteria) {
        if (only != 0 && c.id != only)
            continue;
        ++ran;
        Notes notes;
        bool ok = false;
        try {
            ok = c.fn(notes);
        } catch (const std::exception& e) {
            notes.add(std::string("threw: ") + e.what());
        }
        std::cout << (ok ? "[PASS]" : "[FAIL]") << " C" << c.id << " " << c.label << "\n";
        for (const std::string& line : notes.lines)
            std::cout << "       " << line << "\n";
        if (!ok)
            ++failures;
    }
    if (ran == 0) {
        std::cerr << "no such criterion: " << only << "\n";
        return 64;
    }
    if (only == 0)
        std::cout << "criteria passed: " << (ran - failures) << "/" << ran << "\n";
    return failures;
}
