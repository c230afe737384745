#include "swipt/clustering.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "swipt/ps_core.hpp"

namespace swipt {
namespace {

struct HopRates {
    double rate;
    double hop1;
    double hop2;
};

double half_log2_1p(double x) {
    return 0.5 * std::log2(1.0 + x);
}

/// Objective value when the decode and harvest sets are given explicitly.
/// Antennas in neither set contribute to no first-hop term (the greedy pass
/// scores partial placements this way) but always transmit, so the full
/// second-hop gain sum applies.
HopRates partition_rates(const ChannelRealization& ch, std::uint32_t info_mask,
                         std::uint32_t energy_mask) {
    double info_h = 0.0;
    double energy_h = 0.0;
    double g_sum = 0.0;
    for (int i = 0; i < ch.n_antennas; ++i) {
        const auto idx = static_cast<std::size_t>(i);
        const std::uint32_t bit = 1u << static_cast<unsigned>(i);
        if (info_mask & bit) info_h += ch.h[idx];
        if (energy_mask & bit) energy_h += ch.h[idx];
        g_sum += ch.g[idx];
    }
    const double relay_power = ch.eta * ch.source_power * energy_h;
    HopRates r{};
    r.hop1 = half_log2_1p(ch.source_power * info_h);
    r.hop2 = half_log2_1p(relay_power * g_sum);
    r.rate = std::min(r.hop1, r.hop2);
    return r;
}

std::uint32_t full_mask(int n) {
    return n >= 32 ? ~0u : (1u << static_cast<unsigned>(n)) - 1u;
}

/// One greedy pass from a fixed two-antenna seeding. Returns the final
/// partition and rate; counts the two tentative evaluations per placed
/// antenna plus the one full evaluation of the committed partition.
AcSolution greedy_pass(const ChannelRealization& ch, int info_seed, int energy_seed) {
    std::uint32_t info = 1u << static_cast<unsigned>(info_seed);
    std::uint32_t energy = 1u << static_cast<unsigned>(energy_seed);
    long evaluations = 0;
    for (int i = 0; i < ch.n_antennas; ++i) {
        if (i == info_seed || i == energy_seed) continue;
        const std::uint32_t bit = 1u << static_cast<unsigned>(i);
        const double as_info = partition_rates(ch, info | bit, energy).rate;
        const double as_energy = partition_rates(ch, info, energy | bit).rate;
        evaluations += 2;
        if (as_info > as_energy) {
            info |= bit;
        } else {
            energy |= bit;
        }
    }
    AcRate final_rate = rate_ac(ch, info);
    ++evaluations;
    AcSolution out;
    out.info_set = info;
    out.relay_powers = std::move(final_rate.powers);
    out.rate = final_rate.rate;
    out.evaluations = evaluations;
    return out;
}

}  // namespace

AcRate rate_ac(const ChannelRealization& ch, std::uint32_t info_set) {
    ch.validate();
    if (info_set & ~full_mask(ch.n_antennas)) {
        throw std::domain_error("info_set has bits beyond the antenna count");
    }
    const std::uint32_t energy_set = full_mask(ch.n_antennas) & ~info_set;
    const HopRates rates = partition_rates(ch, info_set, energy_set);

    double energy_h = 0.0;
    double g_sum = 0.0;
    for (int i = 0; i < ch.n_antennas; ++i) {
        const auto idx = static_cast<std::size_t>(i);
        if (energy_set & (1u << static_cast<unsigned>(i))) energy_h += ch.h[idx];
        g_sum += ch.g[idx];
    }
    const double relay_power = ch.eta * ch.source_power * energy_h;

    AcRate out;
    out.hop1_rate = rates.hop1;
    out.hop2_rate = rates.hop2;
    out.rate = rates.rate;
    if (relay_power > 0.0 && g_sum > 0.0) {
        out.powers = mrc_power_allocation(ch.g, relay_power);
    } else {
        out.powers.assign(static_cast<std::size_t>(ch.n_antennas), 0.0);
    }
    return out;
}

AcSolution solve_ac_exhaustive(const ChannelRealization& ch, int max_antennas) {
    ch.validate();
    const int cap = std::min(max_antennas, 31);  // bitmask arithmetic ceiling
    if (ch.n_antennas > cap) {
        throw std::domain_error("exhaustive clustering is capped at " + std::to_string(cap) +
                                " antennas, got " + std::to_string(ch.n_antennas));
    }
    const std::uint32_t full = full_mask(ch.n_antennas);
    std::uint32_t best_mask = 0;
    double best_rate = -1.0;
    for (std::uint32_t mask = 0; mask <= full; ++mask) {
        const double rate = partition_rates(ch, mask, full & ~mask).rate;
        if (rate > best_rate) {
            best_rate = rate;
            best_mask = mask;
        }
    }
    AcRate winner = rate_ac(ch, best_mask);
    AcSolution out;
    out.info_set = best_mask;
    out.relay_powers = std::move(winner.powers);
    out.rate = winner.rate;
    out.evaluations = static_cast<long>(full) + 1;
    return out;
}

AcSolution solve_ac_greedy(const ChannelRealization& ch, bool faithful_seed) {
    ch.validate();
    if (ch.n_antennas < 2) {
        throw std::domain_error("greedy clustering needs at least 2 antennas");
    }
    AcSolution best = greedy_pass(ch, 0, 1);
    if (!faithful_seed) {
        AcSolution swapped = greedy_pass(ch, 1, 0);
        const long total = best.evaluations + swapped.evaluations;
        if (swapped.rate > best.rate) {
            best = std::move(swapped);
        }
        best.evaluations = total;
    }
    return best;
}

}  // namespace swipt
