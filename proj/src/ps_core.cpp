#include "swipt/ps_core.hpp"

#include <cmath>

namespace swipt {

RateBreakdown rate_ps(const ChannelRealization& ch, std::span<const double> alphas,
                      std::span<const double> powers) {
    const auto n = static_cast<std::size_t>(ch.n_antennas);
    if (alphas.size() != n || powers.size() != n)
        throw std::domain_error("alpha and power vectors must have one entry per antenna");

    double info_snr = 0.0;
    double amplitude = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        if (!(alphas[i] >= 0.0) || !(alphas[i] <= 1.0))
            throw std::domain_error("splitting ratios must lie in [0, 1]");
        if (!(powers[i] >= 0.0)) throw std::domain_error("relay powers must be nonnegative");
        info_snr += ch.source_power * ch.h[i] * alphas[i];
        amplitude += std::sqrt(powers[i] * ch.g[i]);
    }

    RateBreakdown out;
    out.hop1_rate = 0.5 * std::log2(1.0 + info_snr);
    out.hop2_rate = 0.5 * std::log2(1.0 + amplitude * amplitude);
    out.rate = std::min(out.hop1_rate, out.hop2_rate);
    return out;
}

std::vector<double> mrc_power_allocation(std::span<const double> g, double total_power) {
    if (!(total_power >= 0.0)) throw std::domain_error("total power must be nonnegative");

    double g_sum = 0.0;
    for (double v : g) g_sum += v;

    std::vector<double> p(g.size(), 0.0);
    if (total_power == 0.0) return p;
    if (g_sum <= 0.0)
        throw std::domain_error(
            "all second-hop gains are zero; cannot allocate positive relay power");

    for (std::size_t i = 0; i < g.size(); ++i) p[i] = g[i] / g_sum * total_power;
    return p;
}

PsSolution solve_ps_closed_form(const ChannelRealization& ch) {
    ch.validate();
    const auto [h_sum, g_sum] = aggregate_gains(ch);

    PsSolution sol;
    const double eta_g = ch.eta * g_sum;
    sol.alpha = eta_g / (1.0 + eta_g);  // 0 when the second hop is dead

    if (ch.source_power <= 0.0 || h_sum <= 0.0 || g_sum <= 0.0) {
        sol.relay_powers.assign(static_cast<std::size_t>(ch.n_antennas), 0.0);
        return sol;  // zero rate; nothing to transmit or forward
    }

    // Harvested budget with 1 - alpha = 1/(1 + eta*g) computed directly;
    // the difference form loses precision once eta*g is large.
    const double total_relay_power = ch.eta * ch.source_power * h_sum / (1.0 + eta_g);
    sol.relay_powers = mrc_power_allocation(ch.g, total_relay_power);

    // Evaluate both hops through the generic rate expression rather than the
    // reduced formula, so the balance identity is exercised, not assumed.
    const std::vector<double> alphas(static_cast<std::size_t>(ch.n_antennas), sol.alpha);
    const RateBreakdown b = rate_ps(ch, alphas, sol.relay_powers);
    sol.rate = b.rate;
    sol.hop1_rate = b.hop1_rate;
    sol.hop2_rate = b.hop2_rate;
    return sol;
}

}  // namespace swipt
