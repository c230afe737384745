#pragma once

#include <string>
#include <vector>

#include "swipt/channel.hpp"

namespace swipt {

enum class Scheme { ps, ts, ac_opt, ac_greedy };

const char* scheme_name(Scheme scheme);

enum class SweepVariable { power_db, relay_distance };

const char* sweep_variable_name(SweepVariable variable);

/// Per-trial optimal values of all four schemes on one shared channel
/// realization (common random numbers: the schemes are compared on
/// identical draws, so per-trial differences are paired).
struct TrialOutcome {
    double ps_rate = 0.0;
    double ps_alpha = 0.0;
    double ts_rate = 0.0;
    double ts_t = 0.0;
    double ac_opt_rate = 0.0;
    double ac_greedy_rate = 0.0;
};

/// One aggregated cell of a sweep table. mean_ratio carries the scheme's
/// companion quantity (alpha for ps, t for ts) and is NaN for the
/// clustering schemes, which have none.
struct SweepRow {
    double sweep_value = 0.0;
    Scheme scheme = Scheme::ps;
    double mean_rate = 0.0;
    double std_rate = 0.0;
    double mean_ratio = 0.0;
    long n_trials = 0;
};

struct SweepResult {
    SweepVariable sweep_variable = SweepVariable::power_db;
    std::vector<SweepRow> rows;
    ScenarioConfig config_echo;
};

/// Runs cfg.n_trials seeded trials at one (distance, power) operating point
/// and solves all four schemes per trial on the same realization. Trial i
/// draws from make_trial_rng(cfg.seed, i) regardless of the operating
/// point, so outcomes are paired across grid points too.
/// Enforces the per-trial dominance chain
///   greedy <= exhaustive <= power-splitting rate
/// as a hard assertion (throws std::logic_error on violation).
std::vector<TrialOutcome> run_trials_at(const ScenarioConfig& cfg, double relay_distance,
                                        double power_linear);

double db_to_linear(double value_db);

/// Mean rates of all four schemes per source-power grid point at the
/// configured relay distance.
SweepResult run_rate_vs_power(const ScenarioConfig& cfg);

/// Mean splitting ratio (ps) and harvest fraction (ts) per source-power
/// grid point.
SweepResult run_ratio_vs_power(const ScenarioConfig& cfg);

/// Mean rates of all four schemes per relay-distance grid point. Source
/// power is held fixed at the first entry of cfg.power_db_grid.
SweepResult run_rate_vs_distance(const ScenarioConfig& cfg);

/// Mean splitting ratio and harvest fraction per relay-distance grid point,
/// at the same fixed source power as run_rate_vs_distance.
SweepResult run_ratio_vs_distance(const ScenarioConfig& cfg);

}  // namespace swipt
