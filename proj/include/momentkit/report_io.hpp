#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "momentkit/filters.hpp"
#include "momentkit/modulars.hpp"
#include "momentkit/moment_ops.hpp"
#include "momentkit/stochastic.hpp"

namespace momentkit {

using ojson = nlohmann::ordered_json;

// 17 significant digits: enough to round-trip any double, so CSV output is
// bitwise reproducible.
std::string fmt17(double x);

void write_text(const std::string& path, const std::string& content);

// Report serializers. Key order is fixed, so dumps are byte-stable.
ojson report_json(const ConvergenceReport& r);
ojson report_json(const AxiomReport& r);
ojson report_json(const std::vector<FinitenessRow>& rows);
ojson report_json(const EquiAcReport& r);
ojson report_json(const std::vector<DecayRow>& rows);
ojson report_json(const BoundReport& r);
ojson report_json(const WeakTable& t);
ojson report_json(const MonteCarloReport& r); // trial_values go to CSV, not here
ojson report_json(const SmoothedTable& t);

} // namespace momentkit
