#pragma once

#include <cstdint>
#include <vector>

#include "momentkit/exec.hpp"
#include "momentkit/grid.hpp"

namespace momentkit {

// Brownian path on a grid starting at 0: values[0] = 0 and each increment is
// sqrt(h) times a standard normal drawn counter-based from (seed, stream, i),
// so paths are reproducible bit for bit no matter how trials are scheduled.
struct BrownianPath {
    GridFunction values;
    std::uint64_t seed = 0;
    std::uint64_t stream = 0;
};

// stream selects an independent sub-stream of the seed (the trial number in
// the Monte Carlo drivers). Requires grid.t0() == 0.
BrownianPath simulate_brownian(std::uint64_t seed, const Grid& grid,
                               std::uint64_t stream = 0);

// Empirical quarter-Holder witness: max over sampled node pairs of
// |B(t + d) - B(t)| / d^(1/4). All start nodes are scanned at geometrically
// growing strides d = h, 2h, 4h, ... (coarse in the stride only), giving a
// lower estimate of the pathwise witness random variable.
double holder_witness(const BrownianPath& path);

// f(t) = (t - T_end) (B(t) - B(a)) on [a, T_end], zero outside, with exact
// zeros at both ends; support hint set to [a, T_end]. Needs 1 < a < T_end,
// both on the grid.
GridFunction bridge_process(const BrownianPath& path, double a, double T_end);

// Left-point Riemann sum of Y against the path: sum Y(t_i) (B(t_i+1)-B(t_i)).
// Left evaluation is what makes the sum non-anticipating; callers must pass
// integrands whose value at t_i does not depend on later increments (true by
// construction for every built-in process).
double ito_sum(const GridFunction& Y, const BrownianPath& path);

// Process family driving the Monte Carlo harness, with its declared bound
// K >= sup_t E(Y(t)^2).
struct RegularProcessSpec {
    enum class Kind { Constant, Bridge, SmoothedBridge };
    Kind kind = Kind::Constant;
    double c = 0.0;    // Constant value
    double a = 0.0;    // Bridge support start, 1 < a < T
    double T = 0.0;    // Bridge support end
    int n = 0;         // SmoothedBridge smoothing degree
    double K_bound = 0.0;

    static RegularProcessSpec constant(double c);
    // K = max over [a,T] of (T-t)^2 (t-a) = 4 (T-a)^3 / 27, attained at
    // t = (T + 2a)/3; smoothing cannot increase a second moment bound, so
    // the smoothed variant reuses the same K.
    static RegularProcessSpec bridge(double a, double T);
    static RegularProcessSpec smoothed_bridge(double a, double T, int n);
};

// Builds the process's integrand for one realized path (Constant ignores
// the path; Bridge/SmoothedBridge are adapted to it).
GridFunction realize_process(const RegularProcessSpec& spec, const BrownianPath& path);

struct MonteCarloReport {
    int trials = 0;
    double estimate_mean = 0.0;          // mean of the per-trial Ito sums
    double estimate_second_moment = 0.0; // mean of their squares
    double standard_error = 0.0;         // SE of the second moment
    double bound_KT = 0.0;               // K_bound * grid end
    bool bound_satisfied_within_3se = false;
    std::vector<double> trial_values;    // raw per-trial sums (CSV dump)
};

// trials >= 100. Per trial: fresh path (stream = trial), realized process,
// Ito sum. Slots are filled independently (concurrently under Parallel) and
// reduced by fixed-tree pairwise summation, so the report is a pure function
// of (spec, grid, trials, seed), bitwise, at any thread count.
MonteCarloReport mc_ito_moments(const RegularProcessSpec& spec, const Grid& grid,
                                int trials, std::uint64_t seed,
                                Exec mode = Exec::Parallel);

struct SmoothedRow {
    int n = 0;
    double l2_error = 0.0; // mean over trials of (smoothed sum - Ito sum)^2
    double se = 0.0;       // standard error of that mean
};

struct SmoothedTable {
    std::vector<SmoothedRow> rows;
    // l2_error never rises from one row to the next by more than the
    // combined standard error of the two rows.
    bool nonincreasing_within_1se = false;
};

// Convergence of the smoothed stochastic integral to the Ito integral: per
// trial, one path, f = bridge on [a, T_end], reference R = ito_sum(f, path);
// for each n the degree-n moment average of f is integrated against the same
// path with the left-point rule, and (value - R)^2 recorded. The moment
// average at s depends only on f up to s, so left evaluation stays
// non-anticipating. Empty n_list gives an empty table.
SmoothedTable smoothed_convergence_experiment(double a, double T_end,
                                              const std::vector<int>& n_list,
                                              const Grid& grid, int trials,
                                              std::uint64_t seed,
                                              Exec mode = Exec::Parallel);

// min(x, M) for positive x, max(x, -M) otherwise: the truncation that
// dominates |x| by M while never moving x further from any r with |r| <= M.
double clamp_truncate(double x, double M);

} // namespace momentkit
