#pragma once

#include "selfloop/bounds.hpp"
#include "selfloop/charpoly.hpp"
#include "selfloop/harness.hpp"
#include "selfloop/invariants.hpp"

#include <json.hpp>

#include <string>

namespace selfloop::report {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Fixed 12-decimal rendering used for every real number in reports.
/// Values that round to zero print as "0.000000000000".
std::string decimal(double value);
/// Three significant digits in exponent form, for gaps and slacks near zero.
std::string scientific(double value);

Json instance_json(const LoopedGraph& gs);
Json spectrum_json(const Spectrum& spectrum);
Json poly_json(const IntPoly& p);

Json spectrum_report(const LoopedGraph& gs, const Spectrum& spectrum);
Json energy_report(const LoopedGraph& gs, const EnergyValue& energy);
Json charpoly_report(const LoopedGraph& gs, const IntPoly& p);
Json identity_report(const LoopedGraph& gs, const LineGraphIdentity& identity);

Json bound_json(const BoundReport& r);
Json bounds_report(const LoopedGraph& gs, const std::vector<BoundReport>& reports);

/// The runtime field is included only when the config asked for timestamps.
Json campaign_json(const harness::CampaignReport& report);
Json oracle_json(const harness::OracleReport& report);

} // namespace selfloop::report
