#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <deque>
#include <limits>

#include "swipt/channel.hpp"

using namespace swipt;

namespace {

/// URBG whose outputs are scripted, for pinning down draw order and bit use.
struct ScriptedRng {
    using result_type = std::uint64_t;
    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return ~0ull; }
    std::deque<result_type> values;
    result_type operator()() {
        REQUIRE(!values.empty());
        const result_type v = values.front();
        values.pop_front();
        return v;
    }
};

constexpr std::uint64_t encode_uniform(double u) {
    // uniform_unit keeps the top 53 bits, so load them directly.
    return static_cast<std::uint64_t>(u * 9007199254740992.0) << 11;
}

}  // namespace

TEST_CASE("path loss follows inverse power law") {
    CHECK(path_loss_gain(5.0, 2.0) == doctest::Approx(0.04).epsilon(1e-14));
    CHECK(path_loss_gain(1.0, 2.0) == 1.0);
    CHECK(path_loss_gain(2.0, 3.0) == doctest::Approx(0.125).epsilon(1e-14));
    CHECK(path_loss_gain(4.0, 0.0) == 1.0);
    CHECK_THROWS_AS(path_loss_gain(0.0, 2.0), std::domain_error);
    CHECK_THROWS_AS(path_loss_gain(-1.0, 2.0), std::domain_error);
}

TEST_CASE("splitmix64 matches its reference outputs") {
    // First outputs of the reference sequence from seed 0.
    CHECK(splitmix64(0) == 0xE220A8397B1DCDAFull);
    CHECK(splitmix64(1) != splitmix64(0));
    CHECK(splitmix64(0xDEADBEEFull) == splitmix64(0xDEADBEEFull));
}

TEST_CASE("trial streams are keyed by seed and trial index") {
    auto a = make_trial_rng(42, 0);
    auto b = make_trial_rng(42, 0);
    auto c = make_trial_rng(42, 1);
    auto d = make_trial_rng(43, 0);
    CHECK(a() == b());
    auto a2 = make_trial_rng(42, 0);
    CHECK(a2() != c());
    auto a3 = make_trial_rng(42, 0);
    CHECK(a3() != d());
}

TEST_CASE("uniform draws use the top 53 bits and stay inside [0, 1)") {
    ScriptedRng rng;
    rng.values = {0, ~0ull, encode_uniform(0.5)};
    CHECK(uniform_unit(rng) == 0.0);
    const double top = uniform_unit(rng);
    CHECK(top < 1.0);
    CHECK(top > 0.9999999999999997);
    CHECK(uniform_unit(rng) == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("fading draws are unit-mean exponential") {
    ScriptedRng rng;
    rng.values = {0, encode_uniform(1.0 - std::exp(-1.0))};
    CHECK(rayleigh_power_draw(rng) == 0.0);
    CHECK(rayleigh_power_draw(rng) == doctest::Approx(1.0).epsilon(1e-9));

    auto stream = make_trial_rng(7, 0);
    double sum = 0.0;
    const int n = 100000;
    for (int i = 0; i < n; ++i) sum += rayleigh_power_draw(stream);
    CHECK(sum / n == doctest::Approx(1.0).epsilon(0.02));
}

TEST_CASE("realizations are sampled h first then g, both scaled by path loss") {
    ScenarioConfig cfg;
    cfg.n_antennas = 2;
    ScriptedRng rng;
    const double u1 = 0.3, u2 = 0.6, u3 = 0.2, u4 = 0.9;
    rng.values = {encode_uniform(u1), encode_uniform(u2), encode_uniform(u3),
                  encode_uniform(u4)};
    const ChannelRealization ch = sample_realization(cfg, 2.0, 10.0, rng);

    const double loss1 = std::pow(2.0, -2.0);
    const double loss2 = std::pow(8.0, -2.0);
    CHECK(ch.h[0] == doctest::Approx(-std::log1p(-u1) * loss1).epsilon(1e-12));
    CHECK(ch.h[1] == doctest::Approx(-std::log1p(-u2) * loss1).epsilon(1e-12));
    CHECK(ch.g[0] == doctest::Approx(-std::log1p(-u3) * loss2).epsilon(1e-12));
    CHECK(ch.g[1] == doctest::Approx(-std::log1p(-u4) * loss2).epsilon(1e-12));
    CHECK(ch.source_power == 10.0);
    CHECK(ch.eta == cfg.eta);
    CHECK(ch.n_antennas == 2);
}

TEST_CASE("sampling rejects out-of-range geometry") {
    ScenarioConfig cfg;
    auto rng = make_trial_rng(0, 0);
    CHECK_THROWS_AS(sample_realization(cfg, 0.0, 1.0, rng), std::domain_error);
    CHECK_THROWS_AS(sample_realization(cfg, 10.0, 1.0, rng), std::domain_error);
    CHECK_THROWS_AS(sample_realization(cfg, 12.0, 1.0, rng), std::domain_error);
    CHECK_THROWS_AS(sample_realization(cfg, 5.0, -1.0, rng), std::domain_error);
}

TEST_CASE("identical seeds reproduce identical realizations") {
    ScenarioConfig cfg;
    cfg.seed = 99;
    auto rng1 = make_trial_rng(cfg.seed, 3);
    auto rng2 = make_trial_rng(cfg.seed, 3);
    const ChannelRealization a = sample_realization(cfg, 4.0, 100.0, rng1);
    const ChannelRealization b = sample_realization(cfg, 4.0, 100.0, rng2);
    CHECK(a.h == b.h);
    CHECK(a.g == b.g);
}

TEST_CASE("random solver instances stay inside their documented ranges") {
    auto rng = make_trial_rng(5, 0);
    for (int i = 0; i < 200; ++i) {
        const ChannelRealization ch = make_random_instance(3, rng);
        CHECK(ch.n_antennas == 3);
        CHECK(ch.source_power >= 1.0);
        CHECK(ch.source_power < 1e4);
        CHECK(ch.eta >= 0.3);
        CHECK(ch.eta <= 1.0);
        for (double v : ch.h) CHECK(v >= 0.0);
        for (double v : ch.g) CHECK(v >= 0.0);
        CHECK_NOTHROW(ch.validate());
    }
}

TEST_CASE("realization validation rejects inconsistent fields") {
    ChannelRealization ch;
    ch.n_antennas = 2;
    ch.h = {1.0, 2.0};
    ch.g = {0.5, 0.5};
    ch.source_power = 1.0;
    ch.eta = 0.8;
    CHECK_NOTHROW(ch.validate());

    ChannelRealization bad = ch;
    bad.h = {1.0};
    CHECK_THROWS_AS(bad.validate(), std::domain_error);

    bad = ch;
    bad.g[1] = -0.1;
    CHECK_THROWS_AS(bad.validate(), std::domain_error);

    bad = ch;
    bad.eta = 0.0;
    CHECK_THROWS_AS(bad.validate(), std::domain_error);

    bad = ch;
    bad.eta = 1.2;
    CHECK_THROWS_AS(bad.validate(), std::domain_error);

    bad = ch;
    bad.source_power = -1.0;
    CHECK_THROWS_AS(bad.validate(), std::domain_error);

    bad = ch;
    bad.n_antennas = 0;
    bad.h.clear();
    bad.g.clear();
    CHECK_THROWS_AS(bad.validate(), std::domain_error);
}

TEST_CASE("scenario validation guards the sweep grids") {
    ScenarioConfig cfg;
    CHECK_NOTHROW(cfg.validate());

    ScenarioConfig bad = cfg;
    bad.relay_distance = 10.0;
    CHECK_THROWS_AS(bad.validate(), std::domain_error);

    bad = cfg;
    bad.distance_grid = {0.0};
    CHECK_THROWS_AS(bad.validate(), std::domain_error);

    bad = cfg;
    bad.power_db_grid.clear();
    CHECK_THROWS_AS(bad.validate(), std::domain_error);

    bad = cfg;
    bad.distance_grid.clear();
    CHECK_THROWS_AS(bad.validate(), std::domain_error);

    bad = cfg;
    bad.n_trials = 0;
    CHECK_THROWS_AS(bad.validate(), std::domain_error);
}

TEST_CASE("gain aggregation sums both hops") {
    ChannelRealization ch;
    ch.n_antennas = 3;
    ch.h = {0.5, 1.5, 2.0};
    ch.g = {0.25, 0.25, 0.5};
    ch.source_power = 1.0;
    ch.eta = 0.5;
    const auto [h_sum, g_sum] = aggregate_gains(ch);
    CHECK(h_sum == doctest::Approx(4.0).epsilon(1e-15));
    CHECK(g_sum == doctest::Approx(1.0).epsilon(1e-15));
}
