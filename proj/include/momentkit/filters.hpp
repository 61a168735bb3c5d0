#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "momentkit/exec.hpp"
#include "momentkit/lattice.hpp"

namespace momentkit {

// Three-valued membership verdict at a finite horizon. Undecidable means the
// window cannot tell: e.g. a cofinite-looking set whose exceptions run into
// the upper half of the window.
enum class Verdict { InFilter, NotInFilter, Undecidable };

std::string to_string(Verdict v);

// Subset of {1, 2, ...} given either as an explicit sorted list or as a
// membership predicate. Predicates must be pure and reentrant: the scans
// may evaluate them from several threads.
class IndexSet {
public:
    static IndexSet from_predicate(std::function<bool(uint64_t)> pred);
    static IndexSet from_list(std::vector<uint64_t> sorted_members);

    bool contains(uint64_t z) const;

    static IndexSet evens();
    static IndexSet squares();
    static IndexSet tail_from(uint64_t first); // {z : z >= first}

private:
    IndexSet() = default;
    std::function<bool(uint64_t)> pred_;
    std::vector<uint64_t> list_;
    bool explicit_ = false;
};

// Free filter checked over the window {1..horizon}.
//  Cofinite:     member iff all exceptions sit in [1, horizon/2]; exceptions
//                beyond that are Undecidable, never NotInFilter.
//  Density:      member iff the density estimated on the tail half-window
//                (horizon/2, horizon] reaches the threshold. The tail window
//                ignores finite heads, matching the asymptotic notion.
//  ExplicitBase: member iff the set contains some base set within the window;
//                the base must be closed under pairwise intersection there.
class FilterSpec {
public:
    enum class Kind { Cofinite, Density, ExplicitBase };

    static FilterSpec cofinite(uint64_t horizon);
    static FilterSpec density(uint64_t horizon, double threshold = 0.999);
    static FilterSpec explicit_base(uint64_t horizon, std::vector<IndexSet> base,
                                    Exec mode = Exec::Parallel);

    Kind kind() const { return kind_; }
    uint64_t horizon() const { return horizon_; }
    double threshold() const { return threshold_; }
    const std::vector<IndexSet>& base() const { return base_; }
    std::string describe() const;

private:
    FilterSpec(Kind kind, uint64_t horizon);
    Kind kind_;
    uint64_t horizon_;
    double threshold_ = 0.999;
    std::vector<IndexSet> base_;
};

// |s intersect {1..horizon}| / horizon.
double density(const IndexSet& s, uint64_t horizon, Exec mode = Exec::Parallel);

Verdict filter_contains(const FilterSpec& filter, const IndexSet& s,
                        Exec mode = Exec::Parallel);

struct RungResult {
    double epsilon;
    uint64_t set_size;
    Verdict verdict;
};

struct ConvergenceReport {
    uint64_t horizon = 0;
    std::string filter;
    std::vector<RungResult> rungs;
    bool pass = false;
};

// For each ladder rung eps, forms S = {z <= horizon : |x_z - limit| <= eps}
// and asks the filter for membership; passes iff every rung is InFilter.
ConvergenceReport filter_limit_verdict(const std::function<double(uint64_t)>& sequence,
                                       double limit, const OSequenceLadder& ladder,
                                       const FilterSpec& filter,
                                       Exec mode = Exec::Parallel);

// Lattice-valued sequences reduce to the scalar case through unit dominance
// of the difference from the limit.
ConvergenceReport filter_limit_verdict(
    const std::function<LatticeVector(uint64_t)>& sequence, const LatticeVector& limit,
    const OSequenceLadder& ladder, const FilterSpec& filter, Exec mode = Exec::Parallel);

} // namespace momentkit
