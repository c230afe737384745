#include "swipt/channel.hpp"

#include <cmath>

namespace swipt {

void ChannelRealization::validate() const {
    if (n_antennas < 1) throw std::domain_error("channel must have at least one antenna");
    if (h.size() != static_cast<std::size_t>(n_antennas) ||
        g.size() != static_cast<std::size_t>(n_antennas))
        throw std::domain_error("gain vector length must equal n_antennas");
    for (double v : h)
        if (!(v >= 0.0)) throw std::domain_error("first-hop gains must be nonnegative");
    for (double v : g)
        if (!(v >= 0.0)) throw std::domain_error("second-hop gains must be nonnegative");
    if (!(source_power >= 0.0)) throw std::domain_error("source power must be nonnegative");
    if (!(eta > 0.0) || !(eta <= 1.0))
        throw std::domain_error("energy conversion efficiency must be in (0, 1]");
}

void ScenarioConfig::validate() const {
    if (!(sd_distance > 0.0)) throw std::domain_error("sd_distance must be positive");
    if (!(relay_distance > 0.0) || !(relay_distance < sd_distance))
        throw std::domain_error("relay_distance must be in (0, sd_distance)");
    if (power_db_grid.empty()) throw std::domain_error("power_db_grid must be nonempty");
    if (distance_grid.empty()) throw std::domain_error("distance_grid must be nonempty");
    for (double d : distance_grid)
        if (!(d > 0.0) || !(d < sd_distance))
            throw std::domain_error("every grid distance must be in (0, sd_distance)");
    if (n_antennas < 1) throw std::domain_error("n_antennas must be >= 1");
    if (!(eta > 0.0) || !(eta <= 1.0)) throw std::domain_error("eta must be in (0, 1]");
    if (n_trials < 1) throw std::domain_error("n_trials must be >= 1");
}

double path_loss_gain(double distance, double theta) {
    if (!(distance > 0.0)) throw std::domain_error("distance must be positive");
    return std::pow(distance, -theta);
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::mt19937_64 make_trial_rng(std::uint64_t master_seed, std::uint64_t trial_index) {
    return std::mt19937_64(
        splitmix64(master_seed + (trial_index + 1) * 0x9E3779B97F4A7C15ULL));
}

std::pair<double, double> aggregate_gains(const ChannelRealization& ch) {
    double h_sum = 0.0;
    double g_sum = 0.0;
    for (double v : ch.h) h_sum += v;
    for (double v : ch.g) g_sum += v;
    return {h_sum, g_sum};
}

}  // namespace swipt
