#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

namespace swipt {

/// One solver-ready instance of the two-hop relay channel.
///
/// Gains are noise-normalized power gains (unit-variance noise at every
/// node), so source_power expressed in dB reads directly as per-hop SNR
/// before path loss.
struct ChannelRealization {
    int n_antennas = 0;
    std::vector<double> h;      ///< first-hop power gains |h_i|^2, one per antenna
    std::vector<double> g;      ///< second-hop power gains |g_i|^2, one per antenna
    double source_power = 0.0;  ///< P, linear scale
    double eta = 1.0;           ///< energy conversion efficiency, in (0, 1]

    /// Throws std::domain_error if any field violates its range.
    void validate() const;
};

/// Geometry and sweep grid consumed by the Monte-Carlo harness.
/// Defaults reproduce the standard setup: source and destination 10 units
/// apart, relay on the line between them, square-law path loss, eta = 0.8.
struct ScenarioConfig {
    double sd_distance = 10.0;
    double relay_distance = 5.0;
    double path_loss_exponent = 2.0;
    int n_antennas = 4;
    double eta = 0.8;
    std::vector<double> power_db_grid = {0, 5, 10, 15, 20, 25, 30, 35, 40};
    std::vector<double> distance_grid = {1, 2, 3, 4, 5, 6, 7, 8, 9};
    long n_trials = 10000;
    std::uint64_t seed = 0;

    void validate() const;
};

/// Deterministic path loss factor L^-theta.
/// Throws std::domain_error for non-positive distance.
double path_loss_gain(double distance, double theta);

// ---------------------------------------------------------------------------
// Seeded random streams.
//
// The stream for trial t is an mt19937_64 engine seeded with
// splitmix64(master_seed + (t + 1) * 0x9E3779B97F4A7C15). Every trial owns an
// independent stream keyed by (master seed, trial index), so trials can run
// in parallel and still reproduce the sequential results bit for bit.
// ---------------------------------------------------------------------------

std::uint64_t splitmix64(std::uint64_t x);
std::mt19937_64 make_trial_rng(std::uint64_t master_seed, std::uint64_t trial_index);

/// Uniform double in [0, 1) built from the top 53 bits of one engine output.
template <typename Urbg>
double uniform_unit(Urbg& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Unit-mean exponential draw: the power gain of unit-variance Rayleigh
/// fading (squared magnitude of a circularly-symmetric complex Gaussian).
/// Inverse-CDF sampling keeps the draw sequence identical across platforms.
template <typename Urbg>
double rayleigh_power_draw(Urbg& rng) {
    return -std::log1p(-uniform_unit(rng));
}

/// Samples one channel realization at the given relay position and source
/// power. Consumes exactly 2N fading draws in a fixed order: all h gains
/// first, then all g gains, antenna index ascending.
template <typename Urbg>
ChannelRealization sample_realization(const ScenarioConfig& cfg, double relay_distance,
                                      double power_linear, Urbg& rng) {
    if (!(relay_distance > 0.0) || !(relay_distance < cfg.sd_distance))
        throw std::domain_error(
            "relay distance must lie strictly between source and destination");
    if (!(power_linear >= 0.0))
        throw std::domain_error("source power must be nonnegative");
    if (cfg.n_antennas < 1) throw std::domain_error("n_antennas must be >= 1");

    const double loss1 = path_loss_gain(relay_distance, cfg.path_loss_exponent);
    const double loss2 = path_loss_gain(cfg.sd_distance - relay_distance, cfg.path_loss_exponent);

    ChannelRealization ch;
    ch.n_antennas = cfg.n_antennas;
    ch.h.resize(static_cast<std::size_t>(cfg.n_antennas));
    ch.g.resize(static_cast<std::size_t>(cfg.n_antennas));
    ch.source_power = power_linear;
    ch.eta = cfg.eta;
    for (auto& hi : ch.h) hi = rayleigh_power_draw(rng) * loss1;
    for (auto& gi : ch.g) gi = rayleigh_power_draw(rng) * loss2;
    return ch;
}

/// Random solver test instance: h_i, g_i ~ Exp(1), source power log-uniform
/// over [1, 1e4], eta uniform over [0.3, 1]. Used by the cross-validation
/// command and the randomized test suites.
template <typename Urbg>
ChannelRealization make_random_instance(int n_antennas, Urbg& rng) {
    if (n_antennas < 1) throw std::domain_error("n_antennas must be >= 1");
    ChannelRealization ch;
    ch.n_antennas = n_antennas;
    ch.h.resize(static_cast<std::size_t>(n_antennas));
    ch.g.resize(static_cast<std::size_t>(n_antennas));
    for (auto& hi : ch.h) hi = rayleigh_power_draw(rng);
    for (auto& gi : ch.g) gi = rayleigh_power_draw(rng);
    ch.source_power = std::pow(10.0, 4.0 * uniform_unit(rng));
    ch.eta = 0.3 + 0.7 * uniform_unit(rng);
    return ch;
}

/// Sums the per-antenna gains: the virtual single-antenna equivalent of the
/// multi-antenna relay has first-hop gain sum(h) and second-hop gain sum(g).
std::pair<double, double> aggregate_gains(const ChannelRealization& ch);

}  // namespace swipt
