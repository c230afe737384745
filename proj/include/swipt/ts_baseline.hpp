#pragma once

#include "swipt/channel.hpp"

namespace swipt {

/// Time-switching benchmark solution: the fraction t of the frame spent
/// harvesting and the resulting end-to-end rate.
struct TsSolution {
    double t = 0.0;
    double rate = 0.0;
};

/// Rate of the harvest-then-use time-switching relay. The frame spends t
/// harvesting, then splits the remaining 1-t equally between the two hops.
/// With h = sum(h_i), g = sum(g_i):
///   P_R  = 2*eta*P*h*t / (1-t)   (harvest spread over the relay's half)
///   rate = ((1-t)/2) * min{ log2(1+P*h), log2(1+P_R*g) }
/// The first hop decodes at full received power with no splitting; the
/// second hop combines all antennas. t outside [0,1] is a domain error;
/// both endpoints give rate 0.
double rate_ts(const ChannelRealization& ch, double t);

/// Maximizes rate_ts over t in [0,1]: a 1024-point coarse grid picks the
/// basin, golden-section refines it until the bracket is narrower than
/// `tolerance`, and the best evaluated point wins. The min of two concave
/// terms has no elementary closed form and unimodality is unproven, hence
/// the grid guard.
TsSolution solve_ts(const ChannelRealization& ch, double tolerance);

}  // namespace swipt
