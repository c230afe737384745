#pragma once

#include <span>
#include <vector>

#include "swipt/channel.hpp"

namespace swipt {

/// Optimal power-splitting solution: one common splitting ratio (a single
/// scalar is optimal for every antenna), per-antenna relay transmit powers,
/// and the achieved end-to-end rate with its two hop components.
struct PsSolution {
    double alpha = 0.0;                 ///< common power-splitting ratio in [0, 1]
    std::vector<double> relay_powers;   ///< p_i, linear power units
    double rate = 0.0;                  ///< min of the two hop rates, bits/channel use
    double hop1_rate = 0.0;
    double hop2_rate = 0.0;
};

struct RateBreakdown {
    double rate = 0.0;
    double hop1_rate = 0.0;
    double hop2_rate = 0.0;
};

/// End-to-end rate of the power-splitting relay for arbitrary per-antenna
/// splitting ratios and relay powers:
///   hop1 = 1/2 log2(1 + sum_i P h_i alpha_i)
///   hop2 = 1/2 log2(1 + (sum_i sqrt(p_i g_i))^2)
/// The 1/2 pre-log accounts for the two half-duplex phases. Does not check
/// the harvested-energy budget; callers enforce feasibility.
RateBreakdown rate_ps(const ChannelRealization& ch, std::span<const double> alphas,
                      std::span<const double> powers);

/// Splits total_power across antennas proportionally to their second-hop
/// gains (maximal-ratio combining), the allocation that maximizes the
/// coherent-combining SNR at the destination.
/// Throws std::domain_error when every gain is zero but total_power > 0:
/// the second hop cannot carry power usefully, and callers must map that
/// case to rate zero explicitly.
std::vector<double> mrc_power_allocation(std::span<const double> g, double total_power);

/// Closed-form optimum of the joint splitting/allocation problem via the
/// virtual single-antenna equivalence. With h = sum(h_i), g = sum(g_i):
///   alpha* = eta*g / (1 + eta*g)
///   rate*  = 1/2 log2(1 + eta*P*h*g / (1 + eta*g))
/// and the relay spends exactly its harvested power, MRC-split across
/// antennas. The two hop rates balance at the optimum. alpha* depends only
/// on eta and the second-hop gain sum, never on P or the first hop.
PsSolution solve_ps_closed_form(const ChannelRealization& ch);

}  // namespace swipt
