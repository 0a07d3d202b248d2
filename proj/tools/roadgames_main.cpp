// roadgames: solve the road-crossing games from files and run the seeded
// experiments. Exit codes: 0 success, 2 parse/config error, 3 capacity
// error, 1 internal failure.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "roadgames/montecarlo.hpp"
#include "roadgames/solver.hpp"
#include "roadgames/text_format.hpp"

namespace rg = roadgames;

namespace {

std::string format_strategy(const rg::MixedStrategy& s) {
    std::string out;
    for (std::size_t i = 0; i < s.probs.size(); ++i) {
        if (i > 0) out += ", ";
        out += rg::to_string(s.probs[i]);
    }
    return out;
}

void print_pure(const rg::NormalFormGame& game, const std::vector<rg::PureProfile>& profiles) {
    if (profiles.empty()) {
        std::cout << "no pure NE\n";
        return;
    }
    for (const auto& p : profiles)
        std::cout << "pure NE: (" << game.action_label(rg::Player::row, p.row) << ", "
                  << game.action_label(rg::Player::col, p.col) << ")\n";
}

void print_mixed(const std::vector<rg::MixedProfile>& profiles) {
    if (profiles.empty()) {
        std::cout << "no mixed NE\n";
        return;
    }
    for (const auto& p : profiles)
        std::cout << "mixed NE: row: " << format_strategy(p.row)
                  << "; col: " << format_strategy(p.col) << "\n";
}

void print_trace(const rg::NormalFormGame& game, const rg::EliminationTrace& trace) {
    if (trace.steps.empty()) std::cout << "no dominated actions\n";
    rg::NormalFormGame current = game;  // replay to resolve per-step labels
    for (const auto& step : trace.steps) {
        std::cout << "eliminate " << (step.player == rg::Player::row ? "row" : "col") << " "
                  << step.action << " dominated by";
        bool first = true;
        for (std::size_t k = 0; k < step.dominator.probs.size(); ++k) {
            if (step.dominator.probs[k] == 0) continue;
            std::cout << (first ? " " : " + ") << rg::to_string(step.dominator.probs[k]) << " "
                      << current.action_label(step.player, k);
            first = false;
        }
        std::cout << "\n";
        current = current.without_action(step.player, step.action_index);
    }
    std::cout << "reduced game:\n" << rg::serialize_normal_form(trace.reduced);
}

void solve_game(const rg::NormalFormGame& game, const std::string& mode) {
    if (mode == "pure") {
        print_pure(game, rg::enumerate_pure_nash(game));
    } else if (mode == "mixed") {
        print_mixed(rg::enumerate_mixed_nash(game));
    } else {
        const auto trace = rg::iesds(game);
        print_trace(game, trace);
        print_pure(trace.reduced, rg::enumerate_pure_nash(trace.reduced));
    }
}

void solve_bayesian(const rg::BayesianGame& game, const std::string& mode) {
    for (std::size_t t = 0; t < game.types.size(); ++t) {
        std::cout << "type " << game.types[t] << " (" << rg::to_string(game.prior[t]) << "):\n";
        solve_game(game.games[t], mode);
    }
}

// A leading 'types' keyword marks the Bayesian format.
bool looks_bayesian(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream tokens(line);
        std::string first;
        if (tokens >> first) return first == "types";
    }
    return false;
}

std::string output_path(const std::string& flag_value, const char* filename) {
    if (!flag_value.empty()) return flag_value;
    const char* dir = std::getenv("ROADGAMES_OUT");
    return (dir != nullptr ? std::string(dir) + "/" : std::string()) + filename;
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw rg::Error("cannot write '" + path + "'");
    out << contents;
    std::cout << "wrote " << path << "\n";
}

std::string load_config(const std::string& path) {
    return path.empty() ? std::string() : rg::read_text_file(path);
}

struct ExperimentFlags {
    std::optional<long long> iterations;
    std::optional<long long> seed;
    std::optional<int> workers;
    std::string output;

    template <typename Config>
    void apply(Config& config) const {
        if (iterations) config.iterations = static_cast<std::uint64_t>(*iterations);
        if (seed) config.seed = static_cast<std::uint64_t>(*seed);
        if (workers) config.workers = *workers;
        config.validate();
    }
};

void add_experiment_flags(CLI::App* cmd, std::string& config_path, ExperimentFlags& flags) {
    cmd->add_option("config", config_path, "experiment config file (key = value lines)");
    cmd->add_option("--iterations", flags.iterations, "override iteration count");
    cmd->add_option("--seed", flags.seed, "override RNG seed (default 42)");
    cmd->add_option("--workers", flags.workers, "worker threads; output bytes are unaffected");
    cmd->add_option("-o,--output", flags.output,
                    "output CSV path (default $ROADGAMES_OUT or the working directory)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"road-crossing game models: exact solvers and seeded experiments"};
    app.require_subcommand(1);

    // solve
    auto* solve = app.add_subcommand("solve", "solve a normal-form game file");
    std::string game_file;
    std::string mode = "mixed";
    solve->add_option("file", game_file, "game description file")->required();
    solve->add_option("--mode", mode, "pure | mixed | iesds")
        ->check(CLI::IsMember({"pure", "mixed", "iesds"}));

    // scenario
    auto* scenario = app.add_subcommand("scenario", "solve a bundled scenario");
    std::string scenario_name;
    std::string scenario_mode = "mixed";
    std::string scenario_speed = "medium";
    std::string scenario_prior = "1/2";
    std::string scenario_config_path;
    std::string noise;
    long long noise_trials = 1000;
    std::optional<long long> noise_seed;
    scenario->add_option("name", scenario_name, "zebra | fined")->required();
    scenario->add_option("config", scenario_config_path, "scenario config file");
    scenario->add_option("--mode", scenario_mode, "pure | mixed | iesds")
        ->check(CLI::IsMember({"pure", "mixed", "iesds"}));
    scenario->add_option("--speed", scenario_speed, "low | medium | high");
    scenario->add_option("--prior", scenario_prior, "AV share as a fraction, e.g. 1/2");
    scenario->add_option("--noise", noise,
                         "run noise-robustness trials at this amplitude (fraction, e.g. 1/20)");
    scenario->add_option("--trials", noise_trials, "noise trial count (default 1000)");
    scenario->add_option("--seed", noise_seed, "noise trial seed (default 42)");

    // experiments
    std::string sweep_config_path, entry_config_path, misjudge_config_path;
    ExperimentFlags sweep_flags, entry_flags, misjudge_flags;
    auto* sweep = app.add_subcommand("sweep", "collision rate vs AV share (CSV)");
    add_experiment_flags(sweep, sweep_config_path, sweep_flags);
    auto* entry = app.add_subcommand("entry", "entry-game outcome histogram (CSV)");
    add_experiment_flags(entry, entry_config_path, entry_flags);
    auto* misjudge = app.add_subcommand("misjudge", "reaction misjudgment experiment (CSV)");
    add_experiment_flags(misjudge, misjudge_config_path, misjudge_flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*solve) {
            const std::string text = rg::read_text_file(game_file);
            if (looks_bayesian(text))
                solve_bayesian(rg::parse_bayesian_game(text), mode);
            else
                solve_game(rg::parse_normal_form(text), mode);
        } else if (*scenario) {
            rg::ScenarioConfig config = rg::parse_scenario_config(load_config(scenario_config_path));
            if (scenario->count("--speed") > 0)
                config.speed = rg::parse_speed_class(scenario_speed);
            if (scenario->count("--prior") > 0) config.prior_av = rg::parse_rational(scenario_prior);
            if (!noise.empty()) config.noise_amplitude = rg::parse_rational(noise);
            if (scenario_name == "fined") {
                solve_game(rg::fined_game(), scenario_mode);
            } else if (scenario_name == "zebra") {
                const auto game = rg::zebra_game(config.speed, config.prior_av, config.severity);
                for (std::size_t t = 0; t < game.types.size(); ++t) {
                    std::cout << "type " << game.types[t] << " ("
                              << rg::to_string(game.prior[t]) << "):\n";
                    solve_game(game.games[t], scenario_mode);
                }
                if (scenario_mode == "pure") {
                    std::cout << "type-contingent pure NE of the induced game:\n";
                    const auto induced = rg::induced_normal_form(game);
                    print_pure(induced, rg::enumerate_pure_nash(induced));
                }
                if (!noise.empty() || config.noise_amplitude != 0) {
                    const auto result = rg::zebra_noise_robustness(
                        config.speed, config.noise_amplitude, static_cast<int>(noise_trials),
                        noise_seed ? static_cast<std::uint64_t>(*noise_seed) : 42,
                        config.severity);
                    std::cout << "noise robustness: support stable in " << result.support_stable
                              << "/" << result.trials << " trials; collision probability in ["
                              << rg::to_string(result.min_probability) << ", "
                              << rg::to_string(result.max_probability) << "], reference "
                              << rg::to_string(result.reference) << "\n";
                }
            } else {
                throw rg::ParseError("scenario name: expected zebra|fined, found '" +
                                     scenario_name + "'");
            }
        } else if (*sweep) {
            auto config = rg::parse_sweep_config(load_config(sweep_config_path));
            sweep_flags.apply(config);
            const auto result = rg::fatality_curve(rg::sweep_av_share(config));
            write_file(output_path(sweep_flags.output, "sweep.csv"), rg::sweep_csv(result));
        } else if (*entry) {
            auto config = rg::parse_entry_config(load_config(entry_config_path));
            entry_flags.apply(config);
            const auto result = rg::entry_histogram(config);
            write_file(output_path(entry_flags.output, "entry.csv"), rg::histogram_csv(result));
        } else if (*misjudge) {
            auto config = rg::parse_misjudge_config(load_config(misjudge_config_path));
            misjudge_flags.apply(config);
            const auto result = rg::misjudgment_experiment(config);
            write_file(output_path(misjudge_flags.output, "misjudge.csv"),
                       rg::histogram_csv({result}));
        }
    } catch (const rg::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const rg::CapacityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
