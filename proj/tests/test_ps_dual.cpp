#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "swipt/channel.hpp"
#include "swipt/ps_core.hpp"
#include "swipt/ps_dual.hpp"

using namespace swipt;

namespace {

ChannelRealization make_channel(std::vector<double> h, std::vector<double> g, double power,
                                double eta) {
    ChannelRealization ch;
    ch.n_antennas = static_cast<int>(h.size());
    ch.h = std::move(h);
    ch.g = std::move(g);
    ch.source_power = power;
    ch.eta = eta;
    return ch;
}

constexpr double k_delta = 2.0 * std::numbers::ln2;

}  // namespace

TEST_CASE("splitting ratio inverts the dual stationarity condition") {
    // sum of P*h is 1, so the ratio term maps straight onto alpha.
    const ChannelRealization ch = make_channel({0.1}, {1.0}, 10.0, 0.8);

    const double lambda_for_half = 1.5 * k_delta * 0.8 * 0.5;
    CHECK(lambda_for_half == doctest::Approx(0.8317766166719344).epsilon(1e-14));
    CHECK(alpha_from_duals(lambda_for_half, 0.5, ch) == doctest::Approx(0.5).epsilon(1e-13));

    // Lower clamp: ratio at or below 1.
    CHECK(alpha_from_duals(k_delta * 0.5 * 0.8, 0.5, ch) == 0.0);
    CHECK(alpha_from_duals(0.0, 0.5, ch) == 0.0);

    // Upper clamp: ratio at or above 1 + sum(P h).
    CHECK(alpha_from_duals(2.0 * k_delta * 0.5 * 0.8, 0.5, ch) == 1.0);

    // Vanishing energy price sends everything to decoding.
    CHECK(alpha_from_duals(0.7, 0.0, ch) == 1.0);
    CHECK_THROWS_AS(alpha_from_duals(0.5, -1.0, ch), std::domain_error);
}

TEST_CASE("subgradients are the hop-rate spread and the unspent harvest") {
    const ChannelRealization ch = make_channel({0.1}, {1.0}, 10.0, 0.8);
    const std::vector<double> alpha{0.5};
    const std::vector<double> p{0.4};
    const auto [d_lambda, d_mu] = subgradients(0.5, 0.5, ch, alpha, p);
    CHECK(d_lambda == doctest::Approx(0.04976783677545726).epsilon(1e-12));
    CHECK(d_mu == doctest::Approx(0.0).scale(1.0).epsilon(1e-15));
}

TEST_CASE("subgradients vanish at the balanced tight-budget point") {
    const ChannelRealization ch = make_channel({1.5, 0.5}, {0.6, 0.4}, 10.0, 0.8);
    const PsSolution sol = solve_ps_closed_form(ch);
    const std::vector<double> alphas(2, sol.alpha);
    const auto [d_lambda, d_mu] = subgradients(0.5, 0.5, ch, alphas, sol.relay_powers);
    CHECK(std::abs(d_lambda) <= 1e-12);
    CHECK(std::abs(d_mu) <= 1e-12 * ch.eta * ch.source_power * 2.0);
}

TEST_CASE("all power to decoding leaves nothing to harvest or spend") {
    const ChannelRealization ch = make_channel({0.3, 0.7}, {1.0, 1.0}, 5.0, 0.9);
    const std::vector<double> alpha{1.0, 1.0};
    const std::vector<double> p{0.0, 0.0};
    const auto [d_lambda, d_mu] = subgradients(0.2, 0.1, ch, alpha, p);
    CHECK(d_mu == 0.0);
    CHECK(d_lambda > 0.0);
}

TEST_CASE("dual solver reproduces the single-antenna optimum") {
    const ChannelRealization ch = make_channel({0.5}, {2.0}, 10.0, 0.8);
    const PsSolution dual = solve_ps_dual(ch, 1e-5);
    const PsSolution closed = solve_ps_closed_form(ch);
    CHECK(dual.alpha == doctest::Approx(0.6153846153846154).epsilon(1e-3));
    CHECK(std::abs(dual.rate - closed.rate) <= 1e-5 * closed.rate);
    CHECK(dual.hop1_rate == doctest::Approx(dual.hop2_rate).epsilon(1e-4));
}

TEST_CASE("dual solver matches the closed form across random instances") {
    auto rng = make_trial_rng(21, 0);
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
        const int n = 1 + static_cast<int>(rng() % 8);
        const ChannelRealization ch = make_random_instance(n, rng);
        const PsSolution closed = solve_ps_closed_form(ch);
        const PsSolution dual = solve_ps_dual(ch, 1e-5);
        const double gap = std::abs(dual.rate - closed.rate) / std::max(closed.rate, 1e-9);
        worst = std::max(worst, gap);

        // The recovered point must itself be feasible: budget not exceeded.
        const auto [h_sum, g_sum] = aggregate_gains(ch);
        double spent = 0.0;
        for (double p : dual.relay_powers) spent += p;
        const double budget = ch.eta * ch.source_power * h_sum * (1.0 - dual.alpha);
        CHECK(spent <= budget * (1.0 + 1e-9) + 1e-15);
    }
    CHECK(worst <= 1e-5);
}

TEST_CASE("degenerate instances short-circuit to the zero solution") {
    CHECK(solve_ps_dual(make_channel({0.0, 0.0}, {1.0, 1.0}, 10.0, 0.8), 1e-5).rate == 0.0);
    CHECK(solve_ps_dual(make_channel({1.0}, {0.0}, 10.0, 0.8), 1e-5).rate == 0.0);
    CHECK(solve_ps_dual(make_channel({1.0}, {1.0}, 0.0, 0.8), 1e-5).rate == 0.0);
}

TEST_CASE("solver rejects a non-positive tolerance") {
    const ChannelRealization ch = make_channel({1.0}, {1.0}, 10.0, 0.8);
    CHECK_THROWS_AS(solve_ps_dual(ch, 0.0), std::domain_error);
    CHECK_THROWS_AS(solve_ps_dual(ch, -1e-3), std::domain_error);
}

TEST_CASE("trace records shrink the ellipsoid monotonically") {
    const ChannelRealization ch = make_channel({1.5, 0.5}, {0.6, 0.4}, 10.0, 0.8);
    std::vector<DualTraceRecord> trace;
    solve_ps_dual(ch, 1e-6, &trace);
    REQUIRE(!trace.empty());

    // Starts from the documented center.
    CHECK(trace.front().iteration == 0);
    CHECK(trace.front().lambda == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(trace.front().mu == doctest::Approx(1.0 / (k_delta * 0.8)).epsilon(1e-13));

    for (std::size_t i = 1; i < trace.size(); ++i) {
        CHECK(trace[i].shape_det < trace[i - 1].shape_det);
        CHECK(trace[i].iteration == trace[i - 1].iteration + 1);
    }

    const DualTraceRecord& last = trace.back();
    CHECK(last.cut == DualCut::subgradient);
    CHECK(last.gap <= 1e-6);

    // Feasibility cuts carry no subgradient information.
    for (const DualTraceRecord& rec : trace) {
        if (rec.cut != DualCut::subgradient) {
            CHECK(std::isnan(rec.gap));
            CHECK(std::isnan(rec.delta_lambda));
        } else {
            CHECK(std::isfinite(rec.gap));
        }
    }
}

TEST_CASE("an unreachable tolerance raises a convergence error with state") {
    // This instance never hits an exactly-zero subgradient pair, so the
    // iteration cap is what stops it. (Smoother instances can genuinely
    // reach gap == 0 in floating point and converge even at 1e-300.)
    const ChannelRealization ch = make_channel({1.5, 0.5, 0.25}, {0.6, 0.4, 0.2}, 10.0, 0.8);
    try {
        solve_ps_dual(ch, 1e-300);
        FAIL("expected a convergence error");
    } catch (const ConvergenceError& e) {
        CHECK(std::string(e.what()).find("500") != std::string::npos);
        CHECK(e.gap > 0.0);
        CHECK(e.last_state.lambda >= 0.0);
        CHECK(e.last_state.lambda <= 1.0);
        CHECK(e.last_state.mu > 0.0);
    }
}

TEST_CASE("cut labels are stable strings") {
    CHECK(std::string(dual_cut_name(DualCut::subgradient)) == "subgradient");
    CHECK(std::string(dual_cut_name(DualCut::lambda_low)) == "lambda_low");
    CHECK(std::string(dual_cut_name(DualCut::lambda_high)) == "lambda_high");
    CHECK(std::string(dual_cut_name(DualCut::mu_low)) == "mu_low");
}
