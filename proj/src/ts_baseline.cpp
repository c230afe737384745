#include "swipt/ts_baseline.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace swipt {
namespace {

constexpr int k_grid_points = 1024;
constexpr double k_golden = 0.6180339887498949;  // 1/phi

}  // namespace

double rate_ts(const ChannelRealization& ch, double t) {
    if (!(t >= 0.0) || !(t <= 1.0)) {
        throw std::domain_error("time allocation factor must lie in [0, 1]");
    }
    if (t >= 1.0) return 0.0;
    const auto [h_sum, g_sum] = aggregate_gains(ch);
    const double hop1_snr = ch.source_power * h_sum;
    const double relay_power = 2.0 * ch.eta * ch.source_power * h_sum * t / (1.0 - t);
    const double hop2_snr = relay_power * g_sum;
    const double log_min = std::min(std::log2(1.0 + hop1_snr), std::log2(1.0 + hop2_snr));
    return 0.5 * (1.0 - t) * log_min;
}

TsSolution solve_ts(const ChannelRealization& ch, double tolerance) {
    ch.validate();
    if (!(tolerance > 0.0)) {
        throw std::domain_error("tolerance must be positive");
    }
    const auto [h_sum, g_sum] = aggregate_gains(ch);
    if (ch.source_power <= 0.0 || h_sum <= 0.0 || g_sum <= 0.0) {
        return {0.0, 0.0};  // no harvest or no second hop: every t scores 0
    }

    TsSolution best{0.0, 0.0};
    auto consider = [&](double t) {
        const double rate = rate_ts(ch, t);
        if (rate > best.rate) best = {t, rate};
        return rate;
    };

    int best_index = 0;
    double best_grid_rate = 0.0;
    for (int k = 0; k < k_grid_points; ++k) {
        const double t = static_cast<double>(k) / (k_grid_points - 1);
        const double rate = consider(t);
        if (rate > best_grid_rate) {
            best_grid_rate = rate;
            best_index = k;
        }
    }

    const double step = 1.0 / (k_grid_points - 1);
    double lo = std::max(0.0, (best_index - 1) * step);
    double hi = std::min(1.0, (best_index + 1) * step);

    double inner_lo = hi - k_golden * (hi - lo);
    double inner_hi = lo + k_golden * (hi - lo);
    double rate_lo = consider(inner_lo);
    double rate_hi = consider(inner_hi);
    while (hi - lo > tolerance) {
        if (rate_lo < rate_hi) {
            lo = inner_lo;
            inner_lo = inner_hi;
            rate_lo = rate_hi;
            inner_hi = lo + k_golden * (hi - lo);
            rate_hi = consider(inner_hi);
        } else {
            hi = inner_hi;
            inner_hi = inner_lo;
            rate_hi = rate_lo;
            inner_lo = hi - k_golden * (hi - lo);
            rate_lo = consider(inner_lo);
        }
    }
    return best;
}

}  // namespace swipt
