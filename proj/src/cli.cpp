#include "momentkit/cli.hpp"

#include <cmath>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "momentkit/filters.hpp"
#include "momentkit/modulars.hpp"
#include "momentkit/moment_ops.hpp"
#include "momentkit/philox.hpp"
#include "momentkit/profiles.hpp"
#include "momentkit/quadrature.hpp"
#include "momentkit/report_io.hpp"
#include "momentkit/stochastic.hpp"

namespace momentkit {

namespace {

// Everything an invocation can configure, pre-resolved defaults included.
// Echoed verbatim into every JSON report as the audit trail.
struct RunConfig {
    std::string subcommand;
    std::string profile = "bump";
    int n = 5;
    std::vector<int> n_list;
    double w = -1.0; // kernel evaluation point; < 0 means "table"
    double a = 1.5;
    double b = 3.0;
    double h = 1e-3;
    double smax = 0.0; // 0 resolves to 2b
    double nu = 3.0;
    double c = 0.0;
    double T = 3.0;
    double limit = 0.0;
    double threshold = 0.999;
    double alpha = 1.0;
    double tol = -1.0; // < 0 resolves to the subcommand default
    std::vector<double> ladder = {0.1, 0.01, 0.001};
    int trials = 0; // 0 resolves to the subcommand default
    int corpus = 50;
    std::uint64_t horizon = 1000000;
    std::uint64_t seed = 42;
    std::uint64_t pairs = 10000;
    std::string kind = "density";     // filter kind
    std::string check = "axioms";     // modular check
    std::string modular = "l1";       // modular kind
    std::string process = "bridge";   // ito process kind
    std::string sequence = "squarepulse";
    std::string exec = "parallel";
    std::string out = ".";
    std::string format = "json";
    bool dump_trials = false;
};

Exec exec_mode(const RunConfig& cfg) {
    return cfg.exec == "serial" ? Exec::Serial : Exec::Parallel;
}

ojson config_json(const RunConfig& c) {
    ojson nl = ojson::array();
    for (int n : c.n_list)
        nl.push_back(n);
    ojson ld = ojson::array();
    for (double e : c.ladder)
        ld.push_back(e);
    return ojson{{"subcommand", c.subcommand},
                 {"profile", c.profile},
                 {"n", c.n},
                 {"n_list", nl},
                 {"w", c.w},
                 {"a", c.a},
                 {"b", c.b},
                 {"h", c.h},
                 {"smax", c.smax},
                 {"nu", c.nu},
                 {"c", c.c},
                 {"T", c.T},
                 {"limit", c.limit},
                 {"threshold", c.threshold},
                 {"alpha", c.alpha},
                 {"tol", c.tol},
                 {"ladder", ld},
                 {"trials", c.trials},
                 {"corpus", c.corpus},
                 {"horizon", c.horizon},
                 {"seed", c.seed},
                 {"pairs", c.pairs},
                 {"kind", c.kind},
                 {"check", c.check},
                 {"modular", c.modular},
                 {"process", c.process},
                 {"sequence", c.sequence},
                 {"exec", c.exec},
                 {"out", c.out},
                 {"format", c.format},
                 {"dump_trials", c.dump_trials}};
}

void emit(const RunConfig& cfg, ojson body) {
    ojson root{{"config", config_json(cfg)}};
    for (auto& [key, value] : body.items())
        root[key] = std::move(value);
    std::cout << root.dump(2) << "\n";
}

std::string csv_path(const RunConfig& cfg, const std::string& name) {
    return cfg.out + "/" + name;
}

Grid eval_grid(const RunConfig& cfg) {
    return Grid::span(cfg.h, cfg.smax, cfg.h);
}

// Input samples live on a grid that starts at 0, so the weighted inner
// integrals see the whole support of the whole-axis profiles; evaluation
// happens on [h, smax] where the averaging is defined.
Grid input_grid(const RunConfig& cfg) {
    return Grid::span(0.0, cfg.smax, cfg.h);
}

GridFunction cfg_profile(const RunConfig& cfg, const Grid& g) {
    return make_profile(cfg.profile, g, cfg.a, cfg.b);
}

OSequenceLadder cfg_ladder(const RunConfig& cfg) {
    return OSequenceLadder(cfg.ladder, cfg.ladder.empty() ? 0.0 : cfg.ladder.back());
}

// ---- subcommand bodies ------------------------------------------------

int run_kernel(RunConfig& cfg) {
    if (cfg.w >= 0.0) {
        emit(cfg, ojson{{"value", kernel_eval(cfg.n, cfg.w)}});
        return 0;
    }
    ojson rows = ojson::array();
    std::string csv = "w,Mn\n";
    for (int i = 1; i < 40; ++i) {
        const double w = 0.025 * i;
        const double v = kernel_eval(cfg.n, w);
        rows.push_back(ojson{{"w", w}, {"Mn", v}});
        csv += fmt17(w) + "," + fmt17(v) + "\n";
    }
    if (cfg.format == "csv")
        write_text(csv_path(cfg, "kernel.csv"), csv);
    emit(cfg, ojson{{"rows", rows}});
    return 0;
}

int run_transform(RunConfig& cfg) {
    const Grid g = eval_grid(cfg);
    const GridFunction f = cfg_profile(cfg, input_grid(cfg));
    const MomentTransform T = transform(f, cfg.n, g);

    std::string csv = "s,f,Tn_f\n";
    for (std::size_t i = 0; i < g.n_points(); ++i) {
        const double s = g.node(i);
        csv += fmt17(s) + "," + fmt17(f.value_at(s)) + "," + fmt17(T.output[i]) + "\n";
    }
    write_text(csv_path(cfg, "transform.csv"), csv);

    emit(cfg, ojson{{"K_n", T.K_n},
                    {"K_scaled", T.K_scaled},
                    {"M_f", T.M_f},
                    {"rows", g.n_points()},
                    {"csv", csv_path(cfg, "transform.csv")}});
    return 0;
}

int run_identity(RunConfig& cfg) {
    if (cfg.tol < 0.0)
        cfg.tol = 1e-4;
    const Grid g = eval_grid(cfg);
    const GridFunction f = cfg_profile(cfg, input_grid(cfg));
    const double residual = consfubini_residual(f, cfg.n, g);
    const bool pass = residual <= cfg.tol;
    emit(cfg, ojson{{"residual", residual}, {"tolerance", cfg.tol}, {"pass", pass}});
    return pass ? 0 : 1;
}

int run_bounds(RunConfig& cfg) {
    const Grid g = eval_grid(cfg);
    const GridFunction f = cfg_profile(cfg, input_grid(cfg));
    const MomentTransform T = transform(f, cfg.n, g);
    const BoundReport r = bound_checks(T, cfg.pairs, cfg.seed);
    const bool pass = r.lipschitz_ok && r.tail_ok;
    ojson body = report_json(r);
    ojson root{{"report", body}, {"pass", pass}};
    emit(cfg, root);
    return pass ? 0 : 1;
}

int run_ode(RunConfig& cfg) {
    if (cfg.tol < 0.0)
        cfg.tol = 1e-3;
    const Grid g = eval_grid(cfg);
    const GridFunction f = cfg_profile(cfg, input_grid(cfg));
    const GridFunction phi = ode_solve(cfg.nu, f, cfg.c, g);
    const double residual = ode_residual(phi, cfg.nu, f);
    const bool pass = residual <= cfg.tol;
    if (cfg.format == "csv") {
        std::string csv = "s,f,phi\n";
        for (std::size_t i = 0; i < g.n_points(); ++i) {
            const double s = g.node(i);
            csv += fmt17(s) + "," + fmt17(f.value_at(s)) + "," + fmt17(phi[i]) + "\n";
        }
        write_text(csv_path(cfg, "ode.csv"), csv);
    }
    emit(cfg, ojson{{"residual", residual}, {"tolerance", cfg.tol}, {"pass", pass}});
    return pass ? 0 : 1;
}

int run_weak(RunConfig& cfg) {
    if (cfg.n_list.empty())
        cfg.n_list = {5, 20, 80};
    const Grid g = eval_grid(cfg);
    const GridFunction f = cfg_profile(cfg, g);
    // Weight: a fixed parabolic bump on [1,4], compactly supported and
    // straddling the default profile window.  Only its samples are used
    // (central differences and Stieltjes sums), so no support hint.
    const GridFunction w = GridFunction::sample(g, [](double t) {
        return std::max(0.0, (t - 1.0) * (4.0 - t) / 2.25);
    });
    const WeakTable t = weak_convergence_experiment(f, w, cfg.n_list, exec_mode(cfg));
    const bool pass = t.delta1_decreased && t.delta2_decreased;
    if (cfg.format == "csv") {
        std::string csv = "n,delta1,delta2\n";
        for (const WeakRow& row : t.rows)
            csv += std::to_string(row.n) + "," + fmt17(row.delta1) + "," +
                   fmt17(row.delta2) + "\n";
        write_text(csv_path(cfg, "weak.csv"), csv);
    }
    emit(cfg, ojson{{"report", report_json(t)}, {"pass", pass}});
    return pass ? 0 : 1;
}

std::function<double(std::uint64_t)> named_sequence(const std::string& name) {
    if (name == "inv")
        return [](std::uint64_t k) { return 1.0 / static_cast<double>(k); };
    if (name == "squarepulse")
        return [](std::uint64_t k) {
            const auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(k)));
            for (std::uint64_t s = (r > 0 ? r - 1 : 0); s <= r + 1; ++s)
                if (s * s == k)
                    return 1.0;
            return 1.0 / static_cast<double>(k);
        };
    if (name == "shifted")
        return [](std::uint64_t k) { return 1.0 + 1.0 / static_cast<double>(k); };
    throw std::invalid_argument("unknown sequence '" + name + "'");
}

int run_filter(RunConfig& cfg) {
    FilterSpec spec = [&] {
        if (cfg.kind == "cofinite")
            return FilterSpec::cofinite(cfg.horizon);
        if (cfg.kind == "density")
            return FilterSpec::density(cfg.horizon, cfg.threshold);
        if (cfg.kind == "explicit") {
            std::vector<IndexSet> base;
            base.push_back(IndexSet::tail_from(1));
            base.push_back(IndexSet::tail_from(cfg.horizon / 100 + 1));
            base.push_back(IndexSet::tail_from(cfg.horizon / 10 + 1));
            return FilterSpec::explicit_base(cfg.horizon, std::move(base), exec_mode(cfg));
        }
        throw std::invalid_argument("unknown filter kind '" + cfg.kind + "'");
    }();
    const ConvergenceReport r = filter_limit_verdict(
        named_sequence(cfg.sequence), cfg.limit, cfg_ladder(cfg), spec, exec_mode(cfg));
    emit(cfg, ojson{{"report", report_json(r)}, {"pass", r.pass}});
    return r.pass ? 0 : 1;
}

Modular cfg_modular(const RunConfig& cfg, const Grid& g) {
    if (cfg.modular == "l1")
        return Modular::l1();
    if (cfg.modular == "l1log")
        return Modular::l1_log();
    if (cfg.modular == "wderiv") {
        // w(t) = sin(t) restricted to [a, b]: w' = cos there, zero outside,
        // with the support hint the weighted modular requires.
        GridFunction wp = GridFunction::sample(g, [&cfg](double t) {
            return (t >= cfg.a && t <= cfg.b) ? std::cos(t) : 0.0;
        });
        wp.set_support(cfg.a, cfg.b);
        return Modular::weighted_deriv(std::move(wp));
    }
    throw std::invalid_argument("unknown modular '" + cfg.modular + "'");
}

std::vector<GridFunction> random_corpus(const Grid& g, int count, std::uint64_t seed) {
    std::vector<GridFunction> corpus;
    corpus.reserve(count);
    for (int fi = 0; fi < count; ++fi) {
        std::vector<double> v(g.n_points());
        for (std::size_t i = 0; i < v.size(); ++i)
            v[i] = 2.0 * uniform_at(seed, fi, i) - 1.0;
        corpus.emplace_back(g, std::move(v));
    }
    return corpus;
}

std::vector<GridFunction> smoothing_family(const RunConfig& cfg, const Grid& g,
                                           const GridFunction& f, bool difference) {
    std::vector<GridFunction> family;
    family.reserve(cfg.n_list.size());
    for (int n : cfg.n_list) {
        const MomentTransform T = transform(f, n, g);
        if (!difference) {
            family.push_back(T.output);
            continue;
        }
        std::vector<double> d(g.n_points());
        for (std::size_t i = 0; i < d.size(); ++i)
            d[i] = T.output[i] - f.value_at(g.node(i));
        family.emplace_back(g, std::move(d));
    }
    return family;
}

int run_modular(RunConfig& cfg) {
    const Grid g = eval_grid(cfg);
    const Modular rho = cfg_modular(cfg, g);

    if (cfg.check == "axioms") {
        if (cfg.tol < 0.0)
            cfg.tol = 1e-12;
        const AxiomReport r =
            check_axioms(rho, random_corpus(g, cfg.corpus, cfg.seed), cfg.tol);
        const bool pass = r.zero_ok && r.symmetry_ok && r.convexity_ok && r.monotone_ok;
        emit(cfg, ojson{{"report", report_json(r)}, {"pass", pass}});
        return pass ? 0 : 1;
    }
    if (cfg.check == "finiteness") {
        const auto rows = finiteness_scan(rho, g, cfg.a, cfg.b, cfg_ladder(cfg));
        bool pass = true;
        for (std::size_t i = 0; i + 1 < rows.size(); ++i)
            if (rows[i + 1].value > rows[i].value)
                pass = false;
        for (const FinitenessRow& row : rows)
            if (!std::isfinite(row.value))
                pass = false;
        emit(cfg, ojson{{"rows", report_json(rows)}, {"pass", pass}});
        return pass ? 0 : 1;
    }
    if (cfg.check == "equiac") {
        if (cfg.tol < 0.0)
            cfg.tol = 0.05;
        if (cfg.n_list.empty())
            cfg.n_list = {2, 5, 10, 20, 50};
        const GridFunction f = cfg_profile(cfg, g);
        const auto family = smoothing_family(cfg, g, f, false);
        // Interval endpoints must sit on grid nodes; snap so any --h works.
        const auto snap = [&g](double x) {
            double pos = std::round((x - g.t0()) / g.h());
            pos = std::clamp(pos, 0.0, static_cast<double>(g.n_points() - 1));
            return g.node(static_cast<std::size_t>(pos));
        };
        std::vector<Interval> small_sets;
        for (double d = 0.5; d >= 0.0624; d *= 0.5)
            small_sets.push_back(Interval{snap(cfg.b - d), snap(cfg.b)});
        std::vector<Interval> exhaustion;
        for (double m : {1.0, 2.0, 4.0, cfg.smax})
            exhaustion.push_back(Interval{g.t0(), snap(m)});
        const EquiAcReport r =
            equi_ac_diagnostic(family, rho, cfg.alpha, small_sets, exhaustion, cfg.tol);
        emit(cfg, ojson{{"report", report_json(r)}, {"pass", r.pass}});
        return r.pass ? 0 : 1;
    }
    if (cfg.check == "decay") {
        if (cfg.n_list.empty())
            cfg.n_list = {2, 5, 10, 20, 50, 100};
        const GridFunction f = cfg_profile(cfg, g);
        const auto family = smoothing_family(cfg, g, f, true);
        const auto rows = vitali_decay(cfg.n_list, family, rho, {1.0, 1.0 / 3.0, 1.0 / 9.0},
                                       exec_mode(cfg));
        // Contract: along each alpha the modular at the last degree improves
        // on the first degree.
        bool pass = true;
        for (double alpha : {1.0, 1.0 / 3.0, 1.0 / 9.0}) {
            double first = -1.0, last = -1.0;
            for (const DecayRow& row : rows) {
                if (row.alpha != alpha)
                    continue;
                if (first < 0.0)
                    first = row.value;
                last = row.value;
            }
            if (!(last < first))
                pass = false;
        }
        if (cfg.format == "csv") {
            std::string csv = "n,alpha,value\n";
            for (const DecayRow& row : rows)
                csv += std::to_string(row.n) + "," + fmt17(row.alpha) + "," +
                       fmt17(row.value) + "\n";
            write_text(csv_path(cfg, "decay.csv"), csv);
        }
        emit(cfg, ojson{{"rows", report_json(rows)}, {"pass", pass}});
        return pass ? 0 : 1;
    }
    throw std::invalid_argument("unknown modular check '" + cfg.check + "'");
}

int run_brownian(RunConfig& cfg) {
    const Grid g = Grid::span(0.0, cfg.T, cfg.h);
    const BrownianPath path = simulate_brownian(cfg.seed, g);
    std::string csv = "t,B\n";
    for (std::size_t i = 0; i < g.n_points(); ++i)
        csv += fmt17(g.node(i)) + "," + fmt17(path.values[i]) + "\n";
    write_text(csv_path(cfg, "brownian.csv"), csv);
    emit(cfg, ojson{{"B_end", path.values[g.n_points() - 1]},
                    {"holder_witness", holder_witness(path)},
                    {"rows", g.n_points()},
                    {"csv", csv_path(cfg, "brownian.csv")}});
    return 0;
}

int run_ito(RunConfig& cfg) {
    if (cfg.trials == 0)
        cfg.trials = 10000;
    const Grid g = Grid::span(0.0, cfg.T, cfg.h);
    const RegularProcessSpec spec = [&] {
        if (cfg.process == "constant")
            return RegularProcessSpec::constant(cfg.c);
        if (cfg.process == "bridge")
            return RegularProcessSpec::bridge(cfg.a, cfg.T);
        if (cfg.process == "smoothed")
            return RegularProcessSpec::smoothed_bridge(cfg.a, cfg.T, cfg.n);
        throw std::invalid_argument("unknown process '" + cfg.process + "'");
    }();
    const MonteCarloReport r = mc_ito_moments(spec, g, cfg.trials, cfg.seed, exec_mode(cfg));
    if (cfg.dump_trials) {
        std::string csv = "trial,value\n";
        for (std::size_t i = 0; i < r.trial_values.size(); ++i)
            csv += std::to_string(i) + "," + fmt17(r.trial_values[i]) + "\n";
        write_text(csv_path(cfg, "trials.csv"), csv);
    }
    emit(cfg, ojson{{"report", report_json(r)}, {"pass", r.bound_satisfied_within_3se}});
    return r.bound_satisfied_within_3se ? 0 : 1;
}

int run_smooth_converge(RunConfig& cfg) {
    if (cfg.trials == 0)
        cfg.trials = 500;
    if (cfg.n_list.empty())
        cfg.n_list = {10, 40, 80};
    const Grid g = Grid::span(0.0, cfg.T, cfg.h);
    const SmoothedTable t = smoothed_convergence_experiment(
        cfg.a, cfg.T, cfg.n_list, g, cfg.trials, cfg.seed, exec_mode(cfg));
    if (cfg.format == "csv") {
        std::string csv = "n,l2_error,se\n";
        for (const SmoothedRow& row : t.rows)
            csv += std::to_string(row.n) + "," + fmt17(row.l2_error) + "," +
                   fmt17(row.se) + "\n";
        write_text(csv_path(cfg, "smooth.csv"), csv);
    }
    emit(cfg, ojson{{"report", report_json(t)}, {"pass", t.nonincreasing_within_1se}});
    return t.nonincreasing_within_1se ? 0 : 1;
}

int run_figure1(RunConfig& cfg) {
    const Grid g = Grid::span(0.0, cfg.T, cfg.h);
    const BrownianPath path = simulate_brownian(cfg.seed, g);
    const GridFunction f = bridge_process(path, cfg.a, cfg.T);
    const GridFunction t50 =
        realize_process(RegularProcessSpec::smoothed_bridge(cfg.a, cfg.T, 50), path);
    const GridFunction t80 =
        realize_process(RegularProcessSpec::smoothed_bridge(cfg.a, cfg.T, 80), path);

    std::string bridge_csv = "t,f\n";
    std::string t50_csv = "t,f,Tn_f\n";
    std::string t80_csv = "t,f,Tn_f\n";
    for (std::size_t i = 0; i < g.n_points(); ++i) {
        const std::string ts = fmt17(g.node(i));
        const std::string fs = fmt17(f[i]);
        bridge_csv += ts + "," + fs + "\n";
        t50_csv += ts + "," + fs + "," + fmt17(t50[i]) + "\n";
        t80_csv += ts + "," + fs + "," + fmt17(t80[i]) + "\n";
    }

    std::vector<GridFunction> overlay;
    for (std::uint64_t stream = 0; stream < 10; ++stream)
        overlay.push_back(
            bridge_process(simulate_brownian(cfg.seed, g, stream), cfg.a, cfg.T));
    std::string overlay_csv = "t";
    for (int k = 0; k < 10; ++k)
        overlay_csv += ",f" + std::to_string(k);
    overlay_csv += "\n";
    for (std::size_t i = 0; i < g.n_points(); ++i) {
        overlay_csv += fmt17(g.node(i));
        for (int k = 0; k < 10; ++k)
            overlay_csv += "," + fmt17(overlay[k][i]);
        overlay_csv += "\n";
    }

    write_text(csv_path(cfg, "bridge.csv"), bridge_csv);
    write_text(csv_path(cfg, "t50.csv"), t50_csv);
    write_text(csv_path(cfg, "t80.csv"), t80_csv);
    write_text(csv_path(cfg, "overlay10.csv"), overlay_csv);
    emit(cfg, ojson{{"rows", g.n_points()},
                    {"files", ojson::array({csv_path(cfg, "bridge.csv"),
                                            csv_path(cfg, "t50.csv"),
                                            csv_path(cfg, "t80.csv"),
                                            csv_path(cfg, "overlay10.csv")})}});
    return 0;
}

} // namespace

int run_cli(int argc, const char* const* argv) {
    RunConfig cfg;
    CLI::App app{"moment-kernel experiment runner"};
    app.set_help_flag("--help", "print usage"); // frees -h/--h for the grid step
    app.require_subcommand(1);

    // Shared options live on the parent and fall through to any subcommand.
    app.add_option("--profile", cfg.profile, "built-in test function")
        ->check(CLI::IsMember(profile_names()));
    app.add_option("--n", cfg.n, "degree of the moment average / smoothing");
    app.add_option("--n-list", cfg.n_list, "comma separated degree list")
        ->delimiter(',');
    app.add_option("--w", cfg.w, "kernel evaluation point (omit for a table)");
    app.add_option("--a", cfg.a, "support start");
    app.add_option("--b", cfg.b, "support end");
    app.add_option("--h", cfg.h, "grid step");
    app.add_option("--smax", cfg.smax, "evaluation window end (default 2b)");
    app.add_option("--nu", cfg.nu, "ODE parameter nu");
    app.add_option("--c", cfg.c, "constant (ODE homogeneous weight / process value)");
    app.add_option("--T", cfg.T, "time horizon for path experiments");
    app.add_option("--limit", cfg.limit, "candidate limit for filter verdicts");
    app.add_option("--threshold", cfg.threshold, "density filter threshold");
    app.add_option("--alpha", cfg.alpha, "modular scaling weight");
    app.add_option("--tol", cfg.tol, "pass tolerance (subcommand default if unset)");
    app.add_option("--ladder", cfg.ladder, "epsilon ladder, comma separated")
        ->delimiter(',');
    app.add_option("--trials", cfg.trials, "Monte Carlo trials");
    app.add_option("--corpus", cfg.corpus, "random corpus size for axiom checks");
    app.add_option("--horizon", cfg.horizon, "filter window horizon");
    app.add_option("--seed", cfg.seed, "root seed (fixed default, never time based)");
    app.add_option("--pairs", cfg.pairs, "sampled node pairs for the Lipschitz check");
    app.add_option("--kind", cfg.kind, "filter kind: cofinite|density|explicit");
    app.add_option("--check", cfg.check,
                   "modular check: axioms|finiteness|equiac|decay");
    app.add_option("--modular", cfg.modular, "modular: l1|l1log|wderiv");
    app.add_option("--process", cfg.process, "ito process: constant|bridge|smoothed");
    app.add_option("--sequence", cfg.sequence,
                   "filter test sequence: inv|squarepulse|shifted");
    app.add_option("--exec", cfg.exec, "execution mode: serial|parallel")
        ->check(CLI::IsMember({"serial", "parallel"}));
    app.add_option("--out", cfg.out, "output directory for CSV files");
    app.add_option("--format", cfg.format, "csv writes tabular artifacts too")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_flag("--dump-trials", cfg.dump_trials, "write per-trial values to trials.csv");

    // Options are declared on the parent; each subcommand hands unmatched
    // flags back up, so "momentkit identity --n 3 --h 1e-3" just works.
    const std::pair<const char*, const char*> subs[] = {
        {"kernel", "moment kernel values"},
        {"transform", "moment average of a profile (CSV s,f,Tn_f)"},
        {"identity", "integral identity residual"},
        {"bounds", "Lipschitz / decay bound checks"},
        {"ode", "weighted first-order ODE solve and residual"},
        {"weak", "weak convergence experiment"},
        {"filter", "filter convergence verdicts"},
        {"modular", "modular functional checks"},
        {"brownian", "one seeded Brownian path"},
        {"ito", "Monte Carlo Ito moments"},
        {"smooth-converge", "smoothed stochastic integral convergence"},
        {"figure1", "bridge trajectory figure data"}};
    for (const auto& [name, desc] : subs)
        app.add_subcommand(name, desc)->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            std::cout << app.help();
            return 0;
        }
        std::cerr << e.what() << "\n" << app.help();
        return 2;
    }

    cfg.subcommand = app.get_subcommands().front()->get_name();
    if (cfg.smax == 0.0)
        cfg.smax = 2.0 * cfg.b;

    try {
        if (cfg.subcommand == "kernel")
            return run_kernel(cfg);
        if (cfg.subcommand == "transform")
            return run_transform(cfg);
        if (cfg.subcommand == "identity")
            return run_identity(cfg);
        if (cfg.subcommand == "bounds")
            return run_bounds(cfg);
        if (cfg.subcommand == "ode")
            return run_ode(cfg);
        if (cfg.subcommand == "weak")
            return run_weak(cfg);
        if (cfg.subcommand == "filter")
            return run_filter(cfg);
        if (cfg.subcommand == "modular")
            return run_modular(cfg);
        if (cfg.subcommand == "brownian")
            return run_brownian(cfg);
        if (cfg.subcommand == "ito")
            return run_ito(cfg);
        if (cfg.subcommand == "smooth-converge")
            return run_smooth_converge(cfg);
        if (cfg.subcommand == "figure1")
            return run_figure1(cfg);
        std::cerr << "unknown subcommand\n" << app.help();
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace momentkit
