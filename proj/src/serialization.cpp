#include "swipt/serialization.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <system_error>
#include <vector>

namespace swipt {
namespace {

constexpr int k_sig_digits = 12;

std::vector<double> rounded(const std::vector<double>& values) {
    std::vector<double> out(values.size());
    std::transform(values.begin(), values.end(), out.begin(),
                   [](double v) { return round_sig(v); });
    return out;
}

std::vector<int> info_set_indices(std::uint32_t mask, int n) {
    std::vector<int> out;
    for (int i = 0; i < n; ++i) {
        if (mask & (1u << static_cast<unsigned>(i))) out.push_back(i);
    }
    return out;
}

double require_number(const nlohmann::json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_number()) {
        throw std::invalid_argument(std::string("missing or non-numeric field: ") + key);
    }
    return j.at(key).get<double>();
}

std::vector<double> require_number_array(const nlohmann::json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_array()) {
        throw std::invalid_argument(std::string("missing or non-array field: ") + key);
    }
    std::vector<double> out;
    for (const auto& item : j.at(key)) {
        if (!item.is_number()) {
            throw std::invalid_argument(std::string("non-numeric entry in array: ") + key);
        }
        out.push_back(item.get<double>());
    }
    return out;
}

}  // namespace

std::string format_sig(double value) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general,
                             k_sig_digits);
    return std::string(buf, res.ptr);
}

double round_sig(double value) {
    if (!std::isfinite(value)) return value;
    const std::string text = format_sig(value);
    double out = value;
    std::from_chars(text.data(), text.data() + text.size(), out);
    return out;
}

std::string csv_field(const std::string& raw) {
    const bool needs_quotes = raw.find_first_of(",\"\r\n") != std::string::npos;
    if (!needs_quotes) return raw;
    std::string out = "\"";
    for (char c : raw) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string to_csv(const SweepResult& result) {
    std::string out = "sweep_value,scheme,mean_rate,std_rate,mean_ratio,n_trials\n";
    for (const SweepRow& row : result.rows) {
        out += csv_field(format_sig(row.sweep_value));
        out += ',';
        out += csv_field(scheme_name(row.scheme));
        out += ',';
        out += csv_field(format_sig(row.mean_rate));
        out += ',';
        out += csv_field(format_sig(row.std_rate));
        out += ',';
        if (std::isfinite(row.mean_ratio)) out += csv_field(format_sig(row.mean_ratio));
        out += ',';
        out += std::to_string(row.n_trials);
        out += '\n';
    }
    return out;
}

void to_json(nlohmann::json& j, const ChannelRealization& ch) {
    j = nlohmann::json{{"n_antennas", ch.n_antennas},
                       {"h", rounded(ch.h)},
                       {"g", rounded(ch.g)},
                       {"source_power", round_sig(ch.source_power)},
                       {"eta", round_sig(ch.eta)}};
}

void to_json(nlohmann::json& j, const ScenarioConfig& cfg) {
    j = nlohmann::json{{"sd_distance", round_sig(cfg.sd_distance)},
                       {"relay_distance", round_sig(cfg.relay_distance)},
                       {"path_loss_exponent", round_sig(cfg.path_loss_exponent)},
                       {"n_antennas", cfg.n_antennas},
                       {"eta", round_sig(cfg.eta)},
                       {"power_db_grid", rounded(cfg.power_db_grid)},
                       {"distance_grid", rounded(cfg.distance_grid)},
                       {"n_trials", cfg.n_trials},
                       {"seed", cfg.seed}};
}

void to_json(nlohmann::json& j, const PsSolution& s) {
    j = nlohmann::json{{"alpha", round_sig(s.alpha)},
                       {"relay_powers", rounded(s.relay_powers)},
                       {"rate", round_sig(s.rate)},
                       {"hop1_rate", round_sig(s.hop1_rate)},
                       {"hop2_rate", round_sig(s.hop2_rate)}};
}

void to_json(nlohmann::json& j, const AcSolution& s) {
    j = nlohmann::json{
        {"info_set", info_set_indices(s.info_set, static_cast<int>(s.relay_powers.size()))},
        {"relay_powers", rounded(s.relay_powers)},
        {"rate", round_sig(s.rate)},
        {"evaluations", s.evaluations}};
}

void to_json(nlohmann::json& j, const TsSolution& s) {
    j = nlohmann::json{{"t", round_sig(s.t)}, {"rate", round_sig(s.rate)}};
}

void to_json(nlohmann::json& j, const DualTraceRecord& rec) {
    j = nlohmann::json{{"iteration", rec.iteration},
                       {"lambda", round_sig(rec.lambda)},
                       {"mu", round_sig(rec.mu)},
                       {"delta_lambda", round_sig(rec.delta_lambda)},
                       {"delta_mu", round_sig(rec.delta_mu)},
                       {"gap", round_sig(rec.gap)},
                       {"shape_det", round_sig(rec.shape_det)},
                       {"cut", dual_cut_name(rec.cut)}};
}

void to_json(nlohmann::json& j, const SweepRow& row) {
    j = nlohmann::json{{"sweep_value", round_sig(row.sweep_value)},
                       {"scheme", scheme_name(row.scheme)},
                       {"mean_rate", round_sig(row.mean_rate)},
                       {"std_rate", round_sig(row.std_rate)},
                       {"mean_ratio", round_sig(row.mean_ratio)},
                       {"n_trials", row.n_trials}};
}

void to_json(nlohmann::json& j, const SweepResult& result) {
    j = nlohmann::json{{"sweep_variable", sweep_variable_name(result.sweep_variable)},
                       {"rows", result.rows},
                       {"config_echo", result.config_echo}};
}

ChannelRealization channel_from_json(const nlohmann::json& j) {
    if (!j.is_object()) {
        throw std::invalid_argument("realization must be a JSON object");
    }
    ChannelRealization ch;
    ch.h = require_number_array(j, "h");
    ch.g = require_number_array(j, "g");
    ch.source_power = j.contains("P") ? require_number(j, "P") : require_number(j, "source_power");
    ch.eta = require_number(j, "eta");
    ch.n_antennas = static_cast<int>(ch.h.size());
    if (j.contains("n_antennas")) {
        const auto stated = j.at("n_antennas").get<int>();
        if (stated != ch.n_antennas) {
            throw std::invalid_argument("n_antennas disagrees with the gain array length");
        }
    }
    ch.validate();
    return ch;
}

ScenarioConfig scenario_from_json(const nlohmann::json& j) {
    if (!j.is_object()) {
        throw std::invalid_argument("scenario must be a JSON object");
    }
    ScenarioConfig cfg;
    if (j.contains("sd_distance")) cfg.sd_distance = require_number(j, "sd_distance");
    if (j.contains("relay_distance")) cfg.relay_distance = require_number(j, "relay_distance");
    if (j.contains("path_loss_exponent"))
        cfg.path_loss_exponent = require_number(j, "path_loss_exponent");
    if (j.contains("n_antennas")) {
        if (!j.at("n_antennas").is_number_integer()) {
            throw std::invalid_argument("n_antennas must be an integer");
        }
        cfg.n_antennas = j.at("n_antennas").get<int>();
    }
    if (j.contains("eta")) cfg.eta = require_number(j, "eta");
    if (j.contains("power_db_grid")) cfg.power_db_grid = require_number_array(j, "power_db_grid");
    if (j.contains("distance_grid")) cfg.distance_grid = require_number_array(j, "distance_grid");
    if (j.contains("n_trials")) {
        if (!j.at("n_trials").is_number_integer()) {
            throw std::invalid_argument("n_trials must be an integer");
        }
        cfg.n_trials = j.at("n_trials").get<long>();
    }
    if (j.contains("seed")) {
        if (!j.at("seed").is_number_integer()) {
            throw std::invalid_argument("seed must be an integer");
        }
        cfg.seed = j.at("seed").get<std::uint64_t>();
    }
    cfg.validate();
    return cfg;
}

}  // namespace swipt
