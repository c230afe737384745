#pragma once

#include <string>

#include <json.hpp>

#include "swipt/channel.hpp"
#include "swipt/clustering.hpp"
#include "swipt/experiments.hpp"
#include "swipt/ps_core.hpp"
#include "swipt/ps_dual.hpp"
#include "swipt/ts_baseline.hpp"

namespace swipt {

/// Renders value with 12 significant digits (shortest form), the fixed
/// precision of every numeric field the CLI emits. Locale-independent.
std::string format_sig(double value);

/// Nearest double to the 12-significant-digit decimal rendering of value.
/// Serialized JSON numbers pass through this so their textual form is
/// stable at 12 digits. Non-finite values pass through unchanged.
double round_sig(double value);

/// RFC-4180 field quoting: fields containing commas, quotes, or line breaks
/// are wrapped in double quotes with inner quotes doubled; everything else
/// passes through bare.
std::string csv_field(const std::string& raw);

/// Sweep table as CSV: one header line, then one line per row, numbers at
/// 12 significant digits, NaN ratios as empty fields.
std::string to_csv(const SweepResult& result);

void to_json(nlohmann::json& j, const ChannelRealization& ch);
void to_json(nlohmann::json& j, const ScenarioConfig& cfg);
void to_json(nlohmann::json& j, const PsSolution& s);
void to_json(nlohmann::json& j, const AcSolution& s);
void to_json(nlohmann::json& j, const TsSolution& s);
void to_json(nlohmann::json& j, const DualTraceRecord& rec);
void to_json(nlohmann::json& j, const SweepRow& row);
void to_json(nlohmann::json& j, const SweepResult& result);

/// Parses a realization object: arrays "h" and "g", "source_power" (alias
/// "P"), "eta"; optional "n_antennas" must agree with the array lengths.
/// Throws std::invalid_argument on malformed input, std::domain_error on
/// out-of-range values.
ChannelRealization channel_from_json(const nlohmann::json& j);

/// Parses a scenario object; absent fields keep their defaults. Same error
/// contract as channel_from_json.
ScenarioConfig scenario_from_json(const nlohmann::json& j);

}  // namespace swipt
