#pragma once

#include <cstdint>
#include <vector>

#include "swipt/channel.hpp"

namespace swipt {

/// Antenna-clustering solution. info_set is a bitmask over the N antennas:
/// bit i set means antenna i decodes in the first hop, clear means it
/// harvests. All N antennas transmit in the second hop regardless of the
/// partition. evaluations counts candidate-rate computations, the complexity
/// audit for the solvers below.
struct AcSolution {
    std::uint32_t info_set = 0;
    std::vector<double> relay_powers;
    double rate = 0.0;
    long evaluations = 0;
};

/// Rate and power allocation of one fixed partition.
struct AcRate {
    double rate = 0.0;
    double hop1_rate = 0.0;
    double hop2_rate = 0.0;
    std::vector<double> powers;
};

/// Evaluates the clustering objective for a given decoding set:
///   hop1 = 1/2 log2(1 + P * sum_{i in info_set} h_i)
///   P_R  = eta * P * sum_{i not in info_set} h_i
///   hop2 = 1/2 log2(1 + P_R * sum_i g_i)
/// Relay powers split P_R across all N antennas by second-hop gain. An empty
/// decoding set, an empty harvesting set, or an all-zero g give rate 0; no
/// partition is an error.
AcRate rate_ac(const ChannelRealization& ch, std::uint32_t info_set);

/// Exact clustering optimum by enumerating all 2^N partitions in ascending
/// bitmask order; ties keep the smallest mask. N above max_antennas is
/// refused with a domain error naming the cap.
AcSolution solve_ac_exhaustive(const ChannelRealization& ch, int max_antennas = 20);

/// Linear-time clustering heuristic: seed one antenna per set, then place
/// antennas 2..N-1 in ascending order, each where a tentative evaluation
/// over the antennas placed so far scores higher (ties harvest). By default
/// both seedings {0 decodes, 1 harvests} and its swap are run and the better
/// kept, so N=2 is always exact; faithful_seed runs only the first.
/// Requires N >= 2.
AcSolution solve_ac_greedy(const ChannelRealization& ch, bool faithful_seed = false);

}  // namespace swipt
