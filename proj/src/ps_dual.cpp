#include "swipt/ps_dual.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <utility>

namespace swipt {
namespace {

// Stationarity constant from differentiating the half-log2 hop rates:
// d/dx (1/2)log2(1+x) = 1/(delta*(1+x)).
constexpr double k_delta = 2.0 * std::numbers::ln2;

double det2(const std::array<double, 4>& m) {
    return m[0] * m[3] - m[1] * m[2];
}

/// Central ellipsoid cut for n = 2: keep the half-space a^T (z - c) <= 0,
/// shrink the shape by the standard (n^2/(n^2-1), 2/(n+1)) update. Volume
/// drops by a fixed factor every call, so the determinant trace is strictly
/// decreasing.
void apply_cut(DualState& state, const std::array<double, 2>& a) {
    auto& c = state.ellipsoid_center;
    auto& m = state.ellipsoid_shape;
    const std::array<double, 2> ma{m[0] * a[0] + m[1] * a[1], m[2] * a[0] + m[3] * a[1]};
    const double norm_sq = a[0] * ma[0] + a[1] * ma[1];
    if (!(norm_sq > 0.0)) {
        throw ConvergenceError("ellipsoid shape lost positive definiteness", state,
                               std::numeric_limits<double>::quiet_NaN());
    }
    const double inv_norm = 1.0 / std::sqrt(norm_sq);
    const std::array<double, 2> step{ma[0] * inv_norm, ma[1] * inv_norm};
    c[0] -= step[0] / 3.0;
    c[1] -= step[1] / 3.0;
    const double scale = 4.0 / 3.0;
    const double off = scale * (m[1] - (2.0 / 3.0) * step[0] * step[1]);
    m[0] = scale * (m[0] - (2.0 / 3.0) * step[0] * step[0]);
    m[3] = scale * (m[3] - (2.0 / 3.0) * step[1] * step[1]);
    m[1] = off;
    m[2] = off;
}

/// Primal point at the final duals: common alpha from the dual formula, relay
/// powers spending the harvest exactly. If the hops are left unbalanced
/// beyond half the caller's budget, project onto the balance point instead;
/// the half keeps min(hop1, hop2) within `tolerance` of the balanced optimum.
PsSolution recover_primal(const ChannelRealization& ch, double lambda, double mu,
                          double tolerance, double h_sum) {
    const double alpha = alpha_from_duals(lambda, mu, ch);
    const std::vector<double> alphas(static_cast<std::size_t>(ch.n_antennas), alpha);
    const double total = ch.eta * ch.source_power * h_sum * (1.0 - alpha);
    PsSolution out;
    out.alpha = alpha;
    out.relay_powers = mrc_power_allocation(ch.g, total);
    const RateBreakdown rates = rate_ps(ch, alphas, out.relay_powers);
    const double spread = std::abs(rates.hop1_rate - rates.hop2_rate);
    const double scale = std::max(std::max(rates.hop1_rate, rates.hop2_rate), 1e-9);
    if (spread > 0.5 * tolerance * scale) {
        return solve_ps_closed_form(ch);
    }
    out.rate = rates.rate;
    out.hop1_rate = rates.hop1_rate;
    out.hop2_rate = rates.hop2_rate;
    return out;
}

}  // namespace

const char* dual_cut_name(DualCut cut) {
    switch (cut) {
        case DualCut::subgradient: return "subgradient";
        case DualCut::lambda_low: return "lambda_low";
        case DualCut::lambda_high: return "lambda_high";
        case DualCut::mu_low: return "mu_low";
    }
    return "unknown";
}

double alpha_from_duals(double lambda, double mu, const ChannelRealization& ch) {
    if (mu < 0.0) {
        throw std::domain_error("energy multiplier must be nonnegative");
    }
    if (mu == 0.0) {
        return 1.0;  // limit of the ratio as the energy price vanishes
    }
    double h_sum = 0.0;
    for (double hi : ch.h) h_sum += hi;
    const double received = ch.source_power * h_sum;
    const double ratio = lambda / (k_delta * mu * ch.eta);
    if (received <= 0.0) {
        // No first-hop signal: the ratio alone decides which clamp binds.
        return ratio > 1.0 ? 1.0 : 0.0;
    }
    return std::clamp((ratio - 1.0) / received, 0.0, 1.0);
}

std::pair<double, double> subgradients(double lambda, double mu, const ChannelRealization& ch,
                                       std::span<const double> alpha_star,
                                       std::span<const double> p_star) {
    (void)lambda;
    (void)mu;
    const RateBreakdown rates = rate_ps(ch, alpha_star, p_star);
    double harvested = 0.0;
    double spent = 0.0;
    for (int i = 0; i < ch.n_antennas; ++i) {
        const auto idx = static_cast<std::size_t>(i);
        harvested += ch.eta * ch.source_power * ch.h[idx] * (1.0 - alpha_star[idx]);
        spent += p_star[idx];
    }
    return {rates.hop1_rate - rates.hop2_rate, harvested - spent};
}

PsSolution solve_ps_dual(const ChannelRealization& ch, double tolerance,
                         std::vector<DualTraceRecord>* trace) {
    ch.validate();
    if (!(tolerance > 0.0)) {
        throw std::domain_error("tolerance must be positive");
    }
    const auto [h_sum, g_sum] = aggregate_gains(ch);
    if (ch.source_power <= 0.0 || h_sum <= 0.0 || g_sum <= 0.0) {
        return solve_ps_closed_form(ch);
    }

    const double mu0 = 1.0 / (k_delta * ch.eta);
    DualState state;
    state.ellipsoid_center = {0.5, mu0};
    state.ellipsoid_shape = {2.25, 0.0, 0.0, 100.0 * mu0 * mu0};
    // |delta_mu| is measured against the total power the relay could ever
    // harvest, so the two stopping thresholds share one relative meaning.
    const double energy_scale = ch.eta * ch.source_power * h_sum;
    const double nan = std::numeric_limits<double>::quiet_NaN();

    std::vector<double> alphas(static_cast<std::size_t>(ch.n_antennas), 0.0);
    double last_gap = nan;
    constexpr int max_iterations = 500;

    for (int iteration = 0; iteration < max_iterations; ++iteration) {
        const double lambda = state.ellipsoid_center[0];
        const double mu = state.ellipsoid_center[1];
        DualTraceRecord rec;
        rec.iteration = iteration;
        rec.lambda = lambda;
        rec.mu = mu;
        rec.shape_det = det2(state.ellipsoid_shape);

        std::array<double, 2> cut_dir{};
        if (lambda < 0.0) {
            rec.cut = DualCut::lambda_low;
            cut_dir = {-1.0, 0.0};
            rec.delta_lambda = nan;
            rec.delta_mu = nan;
            rec.gap = nan;
        } else if (lambda > 1.0) {
            rec.cut = DualCut::lambda_high;
            cut_dir = {1.0, 0.0};
            rec.delta_lambda = nan;
            rec.delta_mu = nan;
            rec.gap = nan;
        } else if (mu <= 0.0) {
            rec.cut = DualCut::mu_low;
            cut_dir = {0.0, -1.0};
            rec.delta_lambda = nan;
            rec.delta_mu = nan;
            rec.gap = nan;
        } else {
            const double alpha = alpha_from_duals(lambda, mu, ch);
            std::fill(alphas.begin(), alphas.end(), alpha);
            // Relay power maximizing the Lagrangian at these duals; the
            // 1/g_sum offset is where the second-hop rate slope meets mu.
            const double total =
                std::max(0.0, (1.0 - lambda) / (k_delta * mu) - 1.0 / g_sum);
            const std::vector<double> powers = mrc_power_allocation(ch.g, total);
            const auto [d_lambda, d_mu] = subgradients(lambda, mu, ch, alphas, powers);
            rec.cut = DualCut::subgradient;
            rec.delta_lambda = d_lambda;
            rec.delta_mu = d_mu;
            const double gap = std::max(std::abs(d_lambda), std::abs(d_mu) / energy_scale);
            rec.gap = gap;
            state.lambda = lambda;
            state.mu = mu;
            last_gap = gap;
            if (trace) trace->push_back(rec);
            if (gap <= tolerance) {
                return recover_primal(ch, lambda, mu, tolerance, h_sum);
            }
            cut_dir = {d_lambda, d_mu};
            apply_cut(state, cut_dir);
            continue;
        }
        if (trace) trace->push_back(rec);
        apply_cut(state, cut_dir);
    }
    throw ConvergenceError("dual ellipsoid did not converge within 500 iterations", state,
                           last_gap);
}

}  // namespace swipt
