#include "momentkit/report_io.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace momentkit {

std::string fmt17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

void write_text(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open for writing: " + path);
    out << content;
    if (!out)
        throw std::runtime_error("write failed: " + path);
}

ojson report_json(const ConvergenceReport& r) {
    ojson rungs = ojson::array();
    for (const RungResult& rung : r.rungs)
        rungs.push_back(ojson{{"epsilon", rung.epsilon},
                              {"set_size", rung.set_size},
                              {"verdict", to_string(rung.verdict)}});
    return ojson{{"horizon", r.horizon},
                 {"filter", r.filter},
                 {"rungs", rungs},
                 {"pass", r.pass}};
}

ojson report_json(const AxiomReport& r) {
    return ojson{{"zero_ok", r.zero_ok},
                 {"symmetry_ok", r.symmetry_ok},
                 {"convexity_ok", r.convexity_ok},
                 {"monotone_ok", r.monotone_ok},
                 {"worst_violation", r.worst_violation},
                 {"corpus_size", r.corpus_size},
                 {"checks_run", r.checks_run},
                 {"tolerance", r.tolerance}};
}

ojson report_json(const std::vector<FinitenessRow>& rows) {
    ojson arr = ojson::array();
    for (const FinitenessRow& row : rows)
        arr.push_back(ojson{{"epsilon", row.epsilon}, {"value", row.value}});
    return arr;
}

ojson report_json(const EquiAcReport& r) {
    auto table = [](const std::vector<EquiAcRow>& rows) {
        ojson arr = ojson::array();
        for (const EquiAcRow& row : rows)
            arr.push_back(ojson{{"parameter", row.parameter}, {"sup_value", row.sup_value}});
        return arr;
    };
    return ojson{{"alpha", r.alpha},
                 {"tolerance", r.tolerance},
                 {"small_set_rows", table(r.small_set_rows)},
                 {"exhaustion_rows", table(r.exhaustion_rows)},
                 {"pass", r.pass},
                 {"note", r.note}};
}

ojson report_json(const std::vector<DecayRow>& rows) {
    ojson arr = ojson::array();
    for (const DecayRow& row : rows)
        arr.push_back(ojson{{"n", row.n}, {"alpha", row.alpha}, {"value", row.value}});
    return arr;
}

ojson report_json(const BoundReport& r) {
    return ojson{{"n", r.n},
                 {"a", r.a},
                 {"b", r.b},
                 {"M_f", r.M_f},
                 {"lipschitz_M", r.lipschitz_M},
                 {"lipschitz_ok", r.lipschitz_ok},
                 {"lipschitz_max_excess", r.lipschitz_max_excess},
                 {"pairs_sampled", r.pairs_sampled},
                 {"seed", r.seed},
                 {"tail_ok", r.tail_ok},
                 {"tail_max_excess", r.tail_max_excess},
                 {"uniform_error", r.uniform_error},
                 {"l1_error", r.l1_error},
                 {"tail_mass_beyond_2b", r.tail_mass_beyond_2b},
                 {"tail_bound_2b", r.tail_bound_2b}};
}

ojson report_json(const WeakTable& t) {
    ojson rows = ojson::array();
    for (const WeakRow& row : t.rows)
        rows.push_back(ojson{{"n", row.n}, {"delta1", row.delta1}, {"delta2", row.delta2}});
    return ojson{{"rows", rows},
                 {"delta1_decreased", t.delta1_decreased},
                 {"delta2_decreased", t.delta2_decreased}};
}

ojson report_json(const MonteCarloReport& r) {
    return ojson{{"trials", r.trials},
                 {"estimate_mean", r.estimate_mean},
                 {"estimate_second_moment", r.estimate_second_moment},
                 {"standard_error", r.standard_error},
                 {"bound_KT", r.bound_KT},
                 {"bound_satisfied_within_3se", r.bound_satisfied_within_3se}};
}

ojson report_json(const SmoothedTable& t) {
    ojson rows = ojson::array();
    for (const SmoothedRow& row : t.rows)
        rows.push_back(ojson{{"n", row.n}, {"l2_error", row.l2_error}, {"se", row.se}});
    return ojson{{"rows", rows},
                 {"nonincreasing_within_1se", t.nonincreasing_within_1se}};
}

} // namespace momentkit
