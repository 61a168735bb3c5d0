#include "momentkit/filters.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace momentkit {

std::string to_string(Verdict v) {
    switch (v) {
    case Verdict::InFilter: return "InFilter";
    case Verdict::NotInFilter: return "NotInFilter";
    default: return "Undecidable";
    }
}

IndexSet IndexSet::from_predicate(std::function<bool(uint64_t)> pred) {
    if (!pred)
        throw std::invalid_argument("index set: empty predicate");
    IndexSet s;
    s.pred_ = std::move(pred);
    return s;
}

IndexSet IndexSet::from_list(std::vector<uint64_t> sorted_members) {
    if (!std::is_sorted(sorted_members.begin(), sorted_members.end()))
        throw std::invalid_argument("index set: list must be sorted");
    IndexSet s;
    s.list_ = std::move(sorted_members);
    s.explicit_ = true;
    return s;
}

bool IndexSet::contains(uint64_t z) const {
    if (explicit_)
        return std::binary_search(list_.begin(), list_.end(), z);
    return pred_(z);
}

IndexSet IndexSet::evens() {
    return from_predicate([](uint64_t z) { return z % 2 == 0; });
}

IndexSet IndexSet::squares() {
    return from_predicate([](uint64_t z) {
        const uint64_t r = static_cast<uint64_t>(std::llround(std::sqrt(static_cast<double>(z))));
        for (uint64_t c = (r > 0 ? r - 1 : 0); c <= r + 1; ++c)
            if (c * c == z)
                return true;
        return false;
    });
}

IndexSet IndexSet::tail_from(uint64_t first) {
    return from_predicate([first](uint64_t z) { return z >= first; });
}

FilterSpec::FilterSpec(Kind kind, uint64_t horizon) : kind_(kind), horizon_(horizon) {
    if (horizon < 2)
        throw std::invalid_argument("filter: horizon must be >= 2");
}

FilterSpec FilterSpec::cofinite(uint64_t horizon) {
    return FilterSpec(Kind::Cofinite, horizon);
}

FilterSpec FilterSpec::density(uint64_t horizon, double threshold) {
    if (!(threshold > 0.0) || threshold > 1.0)
        throw std::invalid_argument("filter: density threshold must be in (0, 1]");
    FilterSpec f(Kind::Density, horizon);
    f.threshold_ = threshold;
    return f;
}

namespace {

constexpr uint64_t kBlock = 4096;

// Scan {1..horizon} once, accumulating per-block partials of an arbitrary
// per-index statistic, then fold the blocks in index order. The fold is
// sequential and the per-index work is pure, so Serial and Parallel modes
// produce identical results.
template <typename Partial, typename PerIndex>
std::vector<Partial> scan_blocks(uint64_t horizon, Exec mode, PerIndex&& per_index) {
    const uint64_t nblocks = (horizon + kBlock - 1) / kBlock;
    std::vector<Partial> partials(static_cast<std::size_t>(nblocks));
    exec::for_index(static_cast<std::size_t>(nblocks), mode, [&](std::size_t b) {
        const uint64_t lo = static_cast<uint64_t>(b) * kBlock + 1;
        const uint64_t hi = std::min(horizon, lo + kBlock - 1);
        Partial& p = partials[b];
        for (uint64_t z = lo; z <= hi; ++z)
            per_index(z, p);
    });
    return partials;
}

struct MemberStats {
    uint64_t members = 0;
    uint64_t tail_members = 0;  // members in (horizon/2, horizon]
    uint64_t max_exception = 0; // largest non-member
};

MemberStats member_stats(const std::function<bool(uint64_t)>& is_member, uint64_t horizon,
                         Exec mode) {
    const uint64_t half = horizon / 2;
    auto partials = scan_blocks<MemberStats>(horizon, mode, [&](uint64_t z, MemberStats& p) {
        if (is_member(z)) {
            ++p.members;
            if (z > half)
                ++p.tail_members;
        } else {
            p.max_exception = std::max(p.max_exception, z);
        }
    });
    MemberStats total;
    for (const MemberStats& p : partials) {
        total.members += p.members;
        total.tail_members += p.tail_members;
        total.max_exception = std::max(total.max_exception, p.max_exception);
    }
    return total;
}

Verdict verdict_from_stats(const FilterSpec& filter, const MemberStats& st) {
    const uint64_t horizon = filter.horizon();
    const uint64_t half = horizon / 2;
    switch (filter.kind()) {
    case FilterSpec::Kind::Cofinite:
        if (st.max_exception == 0)
            return Verdict::InFilter;
        return st.max_exception <= half ? Verdict::InFilter : Verdict::Undecidable;
    case FilterSpec::Kind::Density: {
        const uint64_t window = horizon - half;
        const double tail_density =
            static_cast<double>(st.tail_members) / static_cast<double>(window);
        return tail_density >= filter.threshold() ? Verdict::InFilter
                                                  : Verdict::NotInFilter;
    }
    default:
        throw std::logic_error("verdict_from_stats: not applicable to base filters");
    }
}

bool subset_within(const IndexSet& inner, const std::function<bool(uint64_t)>& outer,
                   uint64_t horizon, Exec mode) {
    struct Flag {
        bool violated = false;
    };
    auto partials = scan_blocks<Flag>(horizon, mode, [&](uint64_t z, Flag& p) {
        if (!p.violated && inner.contains(z) && !outer(z))
            p.violated = true;
    });
    for (const Flag& p : partials)
        if (p.violated)
            return false;
    return true;
}

Verdict contains_impl(const FilterSpec& filter, const std::function<bool(uint64_t)>& member,
                      Exec mode) {
    if (filter.kind() == FilterSpec::Kind::ExplicitBase) {
        for (const IndexSet& b : filter.base())
            if (subset_within(b, member, filter.horizon(), mode))
                return Verdict::InFilter;
        return Verdict::NotInFilter;
    }
    return verdict_from_stats(filter, member_stats(member, filter.horizon(), mode));
}

} // namespace

FilterSpec FilterSpec::explicit_base(uint64_t horizon, std::vector<IndexSet> base,
                                     Exec mode) {
    if (base.empty())
        throw std::invalid_argument("filter: explicit base must be nonempty");
    FilterSpec f(Kind::ExplicitBase, horizon);
    f.base_ = std::move(base);
    // Filter-base property up to the horizon: every pairwise intersection
    // must contain some base set within {1..horizon}.
    for (std::size_t i = 0; i < f.base_.size(); ++i) {
        for (std::size_t j = i; j < f.base_.size(); ++j) {
            auto inter = [&, i, j](uint64_t z) {
                return f.base_[i].contains(z) && f.base_[j].contains(z);
            };
            bool witnessed = false;
            for (const IndexSet& cand : f.base_) {
                if (subset_within(cand, inter, horizon, mode)) {
                    witnessed = true;
                    break;
                }
            }
            if (!witnessed)
                throw std::invalid_argument(
                    "filter: base not closed under pairwise intersection up to horizon");
        }
    }
    return f;
}

std::string FilterSpec::describe() const {
    switch (kind_) {
    case Kind::Cofinite: return "cofinite";
    case Kind::Density: {
        char buf[64];
        std::snprintf(buf, sizeof buf, "density(threshold=%.17g)", threshold_);
        return buf;
    }
    default: return "explicit-base(" + std::to_string(base_.size()) + " sets)";
    }
}

double density(const IndexSet& s, uint64_t horizon, Exec mode) {
    if (horizon == 0)
        throw std::invalid_argument("density: horizon must be positive");
    const MemberStats st =
        member_stats([&](uint64_t z) { return s.contains(z); }, horizon, mode);
    return static_cast<double>(st.members) / static_cast<double>(horizon);
}

Verdict filter_contains(const FilterSpec& filter, const IndexSet& s, Exec mode) {
    return contains_impl(filter, [&](uint64_t z) { return s.contains(z); }, mode);
}

namespace {

ConvergenceReport verdict_report(const std::function<double(uint64_t)>& deviation,
                                 const OSequenceLadder& ladder, const FilterSpec& filter,
                                 Exec mode) {
    ConvergenceReport rep;
    rep.horizon = filter.horizon();
    rep.filter = filter.describe();

    const std::size_t nrungs = ladder.size();
    if (filter.kind() == FilterSpec::Kind::ExplicitBase) {
        for (std::size_t p = 0; p < nrungs; ++p) {
            const double eps = ladder[p];
            auto member = [&, eps](uint64_t z) { return deviation(z) <= eps; };
            const MemberStats st = member_stats(member, filter.horizon(), mode);
            rep.rungs.push_back({eps, st.members, contains_impl(filter, member, mode)});
        }
    } else {
        // One pass over the window serves every rung: evaluate the sequence
        // once per index and compare against each epsilon.
        struct Partial {
            std::vector<MemberStats> per_rung;
        };
        const uint64_t half = filter.horizon() / 2;
        auto partials = scan_blocks<Partial>(
            filter.horizon(), mode, [&](uint64_t z, Partial& p) {
                if (p.per_rung.empty())
                    p.per_rung.resize(nrungs);
                const double d = deviation(z);
                for (std::size_t r = 0; r < nrungs; ++r) {
                    MemberStats& st = p.per_rung[r];
                    if (d <= ladder[r]) {
                        ++st.members;
                        if (z > half)
                            ++st.tail_members;
                    } else {
                        st.max_exception = std::max(st.max_exception, z);
                    }
                }
            });
        for (std::size_t r = 0; r < nrungs; ++r) {
            MemberStats total;
            for (const Partial& p : partials) {
                if (p.per_rung.empty())
                    continue;
                total.members += p.per_rung[r].members;
                total.tail_members += p.per_rung[r].tail_members;
                total.max_exception = std::max(total.max_exception, p.per_rung[r].max_exception);
            }
            rep.rungs.push_back({ladder[r], total.members, verdict_from_stats(filter, total)});
        }
    }

    rep.pass = std::all_of(rep.rungs.begin(), rep.rungs.end(), [](const RungResult& r) {
        return r.verdict == Verdict::InFilter;
    });
    return rep;
}

} // namespace

ConvergenceReport filter_limit_verdict(const std::function<double(uint64_t)>& sequence,
                                       double limit, const OSequenceLadder& ladder,
                                       const FilterSpec& filter, Exec mode) {
    if (!sequence)
        throw std::invalid_argument("filter verdict: empty sequence");
    return verdict_report(
        [&](uint64_t z) { return std::fabs(sequence(z) - limit); }, ladder, filter, mode);
}

ConvergenceReport filter_limit_verdict(
    const std::function<LatticeVector(uint64_t)>& sequence, const LatticeVector& limit,
    const OSequenceLadder& ladder, const FilterSpec& filter, Exec mode) {
    if (!sequence)
        throw std::invalid_argument("filter verdict: empty sequence");
    return verdict_report(
        [&](uint64_t z) { return unit_dominance(sequence(z) - limit); }, ladder, filter,
        mode);
}

} // namespace momentkit
