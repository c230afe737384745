#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "swipt/channel.hpp"
#include "swipt/clustering.hpp"
#include "swipt/experiments.hpp"
#include "swipt/ps_core.hpp"
#include "swipt/ps_dual.hpp"
#include "swipt/serialization.hpp"
#include "swipt/ts_baseline.hpp"

namespace {

// Exit contract: 0 success, 1 validation failure, 2 input error,
// 3 solver domain error.
constexpr int k_exit_ok = 0;
constexpr int k_exit_validation = 1;
constexpr int k_exit_input = 2;
constexpr int k_exit_solver = 3;

struct Options {
    std::string scheme;
    std::string input;
    std::string output;
    std::string format = "csv";        // sweep output format
    std::string solve_format = "json";  // solve emits JSON only
    std::string sweep_name;
    std::optional<std::uint64_t> seed;
    std::optional<long> trials;
    std::optional<int> n_antennas;
    std::optional<double> power_db;
    std::optional<double> distance;
    bool trace = false;
    bool faithful_seed = false;
    std::optional<double> tol;
    long instances = 1000;
    int min_antennas = 1;
    int max_antennas = 8;
};

void write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file: " + path);
    out << text;
}

nlohmann::json load_json(const std::string& input) {
    if (input.empty()) throw std::invalid_argument("--input is required");
    if (!input.empty() && input.front() == '{') {
        return nlohmann::json::parse(input);
    }
    std::ifstream in(input, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open input file: " + input);
    std::stringstream buf;
    buf << in.rdbuf();
    return nlohmann::json::parse(buf.str());
}

/// Either a literal realization ({"h": ..., "g": ...}) or a scenario plus
/// trial index ({"scenario": {...}, "trial": k}) drawn from the seeded
/// stream. Flag overrides apply to the scenario path only.
swipt::ChannelRealization realization_from_request(const nlohmann::json& j, const Options& opt) {
    if (j.contains("scenario")) {
        swipt::ScenarioConfig cfg = swipt::scenario_from_json(j.at("scenario"));
        if (opt.seed) cfg.seed = *opt.seed;
        if (opt.n_antennas) cfg.n_antennas = *opt.n_antennas;
        std::uint64_t trial = 0;
        if (j.contains("trial")) {
            if (!j.at("trial").is_number_integer()) {
                throw std::invalid_argument("trial must be an integer");
            }
            trial = j.at("trial").get<std::uint64_t>();
        }
        const double distance = opt.distance.value_or(cfg.relay_distance);
        const double power_db = opt.power_db.value_or(cfg.power_db_grid.front());
        cfg.validate();
        auto rng = swipt::make_trial_rng(cfg.seed, trial);
        return swipt::sample_realization(cfg, distance, swipt::db_to_linear(power_db), rng);
    }
    return swipt::channel_from_json(j);
}

int run_solve(const Options& opt) {
    if (opt.solve_format != "json") {
        throw std::invalid_argument("solve emits JSON only; use --format json");
    }
    const swipt::ChannelRealization ch = realization_from_request(load_json(opt.input), opt);

    nlohmann::json result;
    result["scheme"] = opt.scheme;
    if (opt.scheme == "ps") {
        result["solution"] = swipt::solve_ps_closed_form(ch);
    } else if (opt.scheme == "ps-dual") {
        std::vector<swipt::DualTraceRecord> trace;
        const double tol = opt.tol.value_or(1e-5);
        result["solution"] =
            swipt::solve_ps_dual(ch, tol, opt.trace ? &trace : nullptr);
        if (opt.trace) result["trace"] = trace;
    } else if (opt.scheme == "ac-opt") {
        result["solution"] = swipt::solve_ac_exhaustive(ch);
    } else if (opt.scheme == "ac-greedy") {
        result["solution"] = swipt::solve_ac_greedy(ch, opt.faithful_seed);
    } else if (opt.scheme == "ts") {
        result["solution"] = swipt::solve_ts(ch, opt.tol.value_or(1e-9));
    } else {
        throw std::invalid_argument("unknown scheme: " + opt.scheme);
    }
    write_output(opt.output, result.dump(2) + "\n");
    return k_exit_ok;
}

int run_sweep(const Options& opt) {
    swipt::ScenarioConfig cfg;
    if (!opt.input.empty()) cfg = swipt::scenario_from_json(load_json(opt.input));
    if (opt.seed) cfg.seed = *opt.seed;
    if (opt.trials) cfg.n_trials = *opt.trials;
    if (opt.n_antennas) cfg.n_antennas = *opt.n_antennas;
    if (opt.power_db) cfg.power_db_grid = {*opt.power_db};
    if (opt.distance) cfg.relay_distance = *opt.distance;
    cfg.validate();

    swipt::SweepResult result;
    if (opt.sweep_name == "rate-vs-power") {
        result = swipt::run_rate_vs_power(cfg);
    } else if (opt.sweep_name == "ratio-vs-power") {
        result = swipt::run_ratio_vs_power(cfg);
    } else if (opt.sweep_name == "rate-vs-distance") {
        result = swipt::run_rate_vs_distance(cfg);
    } else if (opt.sweep_name == "ratio-vs-distance") {
        result = swipt::run_ratio_vs_distance(cfg);
    } else {
        throw std::invalid_argument("unknown sweep: " + opt.sweep_name);
    }

    if (opt.format == "csv") {
        write_output(opt.output, swipt::to_csv(result));
    } else if (opt.format == "json") {
        write_output(opt.output, nlohmann::json(result).dump(2) + "\n");
    } else {
        throw std::invalid_argument("unknown format: " + opt.format);
    }
    return k_exit_ok;
}

/// Cross-validates the two splitting solvers and the two clustering solvers
/// on seeded random instances; fails (exit 1) when the dual solver strays
/// beyond tolerance from the closed form.
int run_compare(const Options& opt) {
    if (opt.instances < 1) throw std::invalid_argument("--instances must be >= 1");
    if (opt.min_antennas < 1 || opt.max_antennas < opt.min_antennas) {
        throw std::invalid_argument("antenna range must satisfy 1 <= min <= max");
    }
    const double tol = opt.tol.value_or(1e-5);
    const std::uint64_t seed = opt.seed.value_or(0);
    const int n_span = opt.max_antennas - opt.min_antennas + 1;

    struct GreedyBucket {
        long instances = 0;
        long equal = 0;
        double ratio_sum = 0.0;
    };
    std::vector<GreedyBucket> buckets(static_cast<std::size_t>(n_span));
    double max_gap = 0.0;

    for (long i = 0; i < opt.instances; ++i) {
        const int n = opt.min_antennas + static_cast<int>(i % n_span);
        auto rng = swipt::make_trial_rng(seed, static_cast<std::uint64_t>(i));
        const swipt::ChannelRealization ch = swipt::make_random_instance(n, rng);

        const swipt::PsSolution closed = swipt::solve_ps_closed_form(ch);
        const swipt::PsSolution dual = swipt::solve_ps_dual(ch, tol);
        const double gap = std::abs(dual.rate - closed.rate) / std::max(closed.rate, 1e-9);
        max_gap = std::max(max_gap, gap);

        if (n >= 2) {
            const swipt::AcSolution exact = swipt::solve_ac_exhaustive(ch);
            const swipt::AcSolution greedy = swipt::solve_ac_greedy(ch, opt.faithful_seed);
            GreedyBucket& b = buckets[static_cast<std::size_t>(n - opt.min_antennas)];
            ++b.instances;
            if (std::abs(greedy.rate - exact.rate) <= 1e-12 * std::max(exact.rate, 1.0)) {
                ++b.equal;
            }
            b.ratio_sum += exact.rate > 0.0 ? greedy.rate / exact.rate : 1.0;
        }
    }

    nlohmann::json report;
    report["instances"] = opt.instances;
    report["seed"] = seed;
    report["tolerance"] = tol;
    report["max_ps_dual_gap"] = swipt::round_sig(max_gap);
    report["pass"] = max_gap <= tol;
    nlohmann::json per_n = nlohmann::json::array();
    for (int n = opt.min_antennas; n <= opt.max_antennas; ++n) {
        const GreedyBucket& b = buckets[static_cast<std::size_t>(n - opt.min_antennas)];
        if (b.instances == 0) continue;
        per_n.push_back({{"n_antennas", n},
                         {"instances", b.instances},
                         {"greedy_equals_exhaustive_frequency",
                          swipt::round_sig(static_cast<double>(b.equal) /
                                           static_cast<double>(b.instances))},
                         {"mean_rate_ratio",
                          swipt::round_sig(b.ratio_sum / static_cast<double>(b.instances))}});
    }
    report["greedy_vs_exhaustive"] = per_n;
    write_output(opt.output, report.dump(2) + "\n");
    return report["pass"].get<bool>() ? k_exit_ok : k_exit_validation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Solvers and experiment sweeps for an energy-harvesting multi-antenna relay"};
    app.require_subcommand(1);
    Options opt;

    auto bind_seed = [&opt](CLI::App* sub, const char* help) {
        sub->add_option_function<std::uint64_t>(
            "--seed", [&opt](std::uint64_t v) { opt.seed = v; }, help);
    };
    auto bind_tol = [&opt](CLI::App* sub, const char* help) {
        sub->add_option_function<double>(
            "--tol", [&opt](double v) { opt.tol = v; }, help);
    };
    auto bind_overrides = [&opt](CLI::App* sub) {
        sub->add_option_function<int>(
            "--n-antennas", [&opt](int v) { opt.n_antennas = v; }, "Relay antenna count");
        sub->add_option_function<double>(
            "--power-db", [&opt](double v) { opt.power_db = v; }, "Source power (dB)");
        sub->add_option_function<double>(
            "--distance", [&opt](double v) { opt.distance = v; }, "Relay distance");
    };

    CLI::App* solve = app.add_subcommand(
        "solve", "Solve one instance with a chosen scheme and print the solution as JSON");
    solve->add_option("--scheme", opt.scheme, "ps | ps-dual | ac-opt | ac-greedy | ts")
        ->required();
    solve->add_option("--input", opt.input,
                      "Path to a JSON file, or inline JSON starting with '{'. Either a "
                      "realization {h, g, source_power|P, eta} or {scenario: {...}, trial: k}")
        ->required();
    solve->add_option("--output", opt.output, "Write here instead of stdout");
    solve->add_option("--format", opt.solve_format, "json (the only solve format)");
    bind_seed(solve, "Seed override for scenario inputs");
    bind_overrides(solve);
    solve->add_flag("--trace", opt.trace, "Append per-iteration records (ps-dual)");
    solve->add_flag("--faithful-seed", opt.faithful_seed,
                    "Single-seeding greedy clustering (ac-greedy)");
    bind_tol(solve, "Solver tolerance (ps-dual default 1e-5, ts 1e-9)");

    CLI::App* sweep = app.add_subcommand("sweep", "Run a seeded Monte-Carlo sweep table");
    sweep->add_option("name", opt.sweep_name,
                      "rate-vs-power | ratio-vs-power | rate-vs-distance | ratio-vs-distance")
        ->required();
    sweep->add_option("--input", opt.input, "Scenario config JSON (defaults when omitted)");
    sweep->add_option("--output", opt.output, "Write here instead of stdout");
    sweep->add_option("--format", opt.format, "csv | json");
    bind_seed(sweep, "Seed override (flag > config > 0)");
    sweep->add_option_function<long>(
        "--trials", [&opt](long v) { opt.trials = v; }, "Trials per grid point");
    bind_overrides(sweep);

    CLI::App* compare = app.add_subcommand(
        "compare", "Cross-validate solvers on random instances; exit 1 on tolerance breach");
    compare->add_option("--instances", opt.instances, "Instance count")->default_val(1000);
    compare->add_option("--min-antennas", opt.min_antennas, "Smallest antenna count")
        ->default_val(1);
    compare->add_option("--max-antennas", opt.max_antennas, "Largest antenna count")
        ->default_val(8);
    bind_seed(compare, "Instance stream seed");
    bind_tol(compare, "Relative rate gap tolerance (default 1e-5)");
    compare->add_option("--output", opt.output, "Write here instead of stdout");
    compare->add_flag("--faithful-seed", opt.faithful_seed,
                      "Single-seeding greedy clustering");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return k_exit_input;
    }

    try {
        if (solve->parsed()) return run_solve(opt);
        if (sweep->parsed()) return run_sweep(opt);
        return run_compare(opt);
    } catch (const swipt::ConvergenceError& e) {
        std::cerr << "error: " << e.what() << " (gap " << e.gap << ")\n";
        return k_exit_solver;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return k_exit_solver;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return k_exit_input;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return k_exit_input;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return k_exit_input;
    }
}
