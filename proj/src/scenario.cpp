#include "roadgames/scenario.hpp"

#include <algorithm>

#include "roadgames/config.hpp"
#include "roadgames/solver.hpp"

namespace roadgames {

SpeedClass speed_class(SpeedClassLabel label) {
    switch (label) {
        case SpeedClassLabel::low: return SpeedClass{label, 30.0, 0.10};
        case SpeedClassLabel::medium: return SpeedClass{label, 45.0, 0.50};
        case SpeedClassLabel::high: return SpeedClass{label, 70.0, 0.99};
    }
    throw DomainError("bad speed class");
}

const char* to_string(SpeedClassLabel label) {
    switch (label) {
        case SpeedClassLabel::low: return "LOW";
        case SpeedClassLabel::medium: return "MEDIUM";
        case SpeedClassLabel::high: return "HIGH";
    }
    throw DomainError("bad speed class");
}

SpeedClassLabel parse_speed_class(std::string_view text) {
    if (text == "low" || text == "LOW") return SpeedClassLabel::low;
    if (text == "medium" || text == "MEDIUM") return SpeedClassLabel::medium;
    if (text == "high" || text == "HIGH") return SpeedClassLabel::high;
    throw ParseError("speed: expected low|medium|high, found '" + std::string(text) + "'");
}

namespace {

NormalFormGame make_table(std::vector<std::pair<long, long>> cells) {
    std::vector<PayoffPair> payoffs;
    payoffs.reserve(cells.size());
    for (const auto& [r, c] : cells) payoffs.push_back(PayoffPair{Rational(r), Rational(c)});
    return NormalFormGame({"Y", "W", "C"}, {"G", "S"}, std::move(payoffs));
}

const Rational& severity_multiplier(SpeedClassLabel speed, const SeverityScaling& severity) {
    static const Rational one(1);
    switch (speed) {
        case SpeedClassLabel::low: return severity.low;
        case SpeedClassLabel::medium: return one;
        case SpeedClassLabel::high: return severity.high;
    }
    throw DomainError("bad speed class");
}

NormalFormGame scale_collision_cells(NormalFormGame game, const Rational& multiplier) {
    if (multiplier < 0) throw DomainError("severity multiplier must be nonnegative");
    for (std::size_t r : {std::size_t{1}, std::size_t{2}}) {  // W and C against G
        game.at(r, 0).row *= multiplier;
        game.at(r, 0).col *= multiplier;
    }
    return game;
}

}  // namespace

NormalFormGame zebra_human_game(SpeedClassLabel speed, const SeverityScaling& severity) {
    NormalFormGame medium = make_table({{8, 15}, {6, 1},       //
                                        {-400, -400}, {15, 7},  //
                                        {-500, -200}, {20, 7}});
    return scale_collision_cells(std::move(medium), severity_multiplier(speed, severity));
}

NormalFormGame zebra_av_game(SpeedClassLabel speed, const SeverityScaling& severity) {
    NormalFormGame medium = make_table({{5, 7}, {3, 10},        //
                                        {-400, -500}, {15, 8},  //
                                        {-500, -300}, {20, 12}});
    return scale_collision_cells(std::move(medium), severity_multiplier(speed, severity));
}

BayesianGame zebra_game(SpeedClassLabel speed, const Rational& av_share,
                        const SeverityScaling& severity) {
    BayesianGame game;
    game.types = {"AV", "HUMAN"};
    game.prior = {av_share, 1 - av_share};
    game.games.push_back(zebra_av_game(speed, severity));
    game.games.push_back(zebra_human_game(speed, severity));
    game.observed_by_row = game.observed_by_col = true;
    game.validate();
    return game;
}

std::vector<std::vector<CellRef>> zebra_collision_cells() {
    const std::vector<CellRef> cells{{1, 0}, {2, 0}};  // (W,G) and (C,G)
    return {cells, cells};
}

NormalFormGame fined_game() {
    std::vector<PayoffPair> payoffs{
        {Rational(18), Rational(10)},   {Rational(15), Rational(4)},
        {Rational(-500), Rational(-400)}, {Rational(0), Rational(5)},
        {Rational(-600), Rational(-200)}, {Rational(5), Rational(5)},
    };
    return NormalFormGame({"Yield", "Walk", "Cycle"}, {"Go", "Stop"}, std::move(payoffs));
}

namespace {

// The totally mixed equilibrium of a 3x2 human-type table: row support {Y,C},
// col support {G,S}.
std::optional<MixedProfile> find_human_mixed(const std::vector<MixedProfile>& equilibria) {
    const std::vector<std::size_t> row_support{0, 2};
    const std::vector<std::size_t> col_support{0, 1};
    std::optional<MixedProfile> found;
    for (const auto& eq : equilibria) {
        if (eq.row.support() != row_support || eq.col.support() != col_support) continue;
        if (found) return std::nullopt;  // must be unique
        found = eq;
    }
    return found;
}

}  // namespace

TypeContingentProfile zebra_equilibrium(SpeedClassLabel speed, const SeverityScaling& severity) {
    const NormalFormGame av = zebra_av_game(speed, severity);
    const NormalFormGame human = zebra_human_game(speed, severity);

    const auto av_pure = enumerate_pure_nash(av);
    if (av_pure.size() != 1 || av_pure.front() != PureProfile{2, 1})
        throw Error("AV-type table lost its unique (C, S) equilibrium");
    MixedProfile av_profile = to_mixed_profile(av_pure.front(), av.rows(), av.cols());

    auto mixed = find_human_mixed(enumerate_mixed_nash(human));
    if (!mixed) throw Error("human-type table lost its totally mixed equilibrium");

    TypeContingentProfile profile;
    profile.per_type = {std::move(av_profile), std::move(*mixed)};
    return profile;
}

Rational zebra_collision_closed_form(SpeedClassLabel speed, const SeverityScaling& severity) {
    const NormalFormGame human = zebra_human_game(speed, severity);
    const Rational& cyclist_cg = human.payoff(Player::row, 2, 0);
    const Rational& driver_cg = human.payoff(Player::col, 2, 0);
    return (Rational(14) / (21 - driver_cg)) * (Rational(14) / (22 - cyclist_cg));
}

NormalFormGame perturb_payoffs(const NormalFormGame& game, const Rational& amplitude,
                               StreamRng& rng) {
    if (amplitude < 0 || amplitude > make_rational(1, 2))
        throw DomainError("noise amplitude must lie in [0, 1/2]");
    NormalFormGame out = game;
    for (std::size_t r = 0; r < out.rows(); ++r) {
        for (std::size_t c = 0; c < out.cols(); ++c) {
            for (Player p : {Player::row, Player::col}) {
                const Rational unit = make_rational(
                    static_cast<long>(rng.next_u64() >> 32), 1L << 32);
                const Rational factor = 1 - amplitude + 2 * amplitude * unit;
                out.at(r, c).of(p) *= factor;
            }
        }
    }
    return out;
}

NoiseRobustness zebra_noise_robustness(SpeedClassLabel speed, const Rational& amplitude,
                                       int trials, std::uint64_t seed,
                                       const SeverityScaling& severity) {
    if (trials < 1) throw DomainError("noise trials must be positive");
    const NormalFormGame human = zebra_human_game(speed, severity);
    const std::vector<PureProfile> expected_pure{{0, 0}, {2, 1}};  // (Y,G) and (C,S)

    NoiseRobustness result;
    result.trials = trials;
    result.reference = zebra_collision_closed_form(speed, severity);
    for (int t = 0; t < trials; ++t) {
        StreamRng rng(seed, static_cast<std::uint64_t>(t));
        const NormalFormGame noisy = perturb_payoffs(human, amplitude, rng);
        const auto equilibria = enumerate_mixed_nash(noisy);
        const auto mixed = find_human_mixed(equilibria);
        const bool stable = mixed && enumerate_pure_nash(noisy) == expected_pure &&
                            equilibria.size() == 3;
        if (!stable) continue;
        ++result.support_stable;
        const Rational probability = mixed->row.probs[2] * mixed->col.probs[0];
        if (result.support_stable == 1) {
            result.min_probability = probability;
            result.max_probability = probability;
        } else {
            if (probability < result.min_probability) result.min_probability = probability;
            if (probability > result.max_probability) result.max_probability = probability;
        }
    }
    return result;
}

ScenarioConfig parse_scenario_config(std::string_view text) {
    ConfigReader reader(text);
    ScenarioConfig config;
    if (reader.has("speed")) config.speed = parse_speed_class(reader.take("speed", ""));
    try {
        if (reader.has("prior_av")) config.prior_av = parse_rational(reader.take("prior_av", ""));
        if (reader.has("severity_low"))
            config.severity.low = parse_rational(reader.take("severity_low", ""));
        if (reader.has("severity_high"))
            config.severity.high = parse_rational(reader.take("severity_high", ""));
        if (reader.has("noise_amplitude"))
            config.noise_amplitude = parse_rational(reader.take("noise_amplitude", ""));
    } catch (const ParseError& err) {
        throw ParseError(std::string("scenario config: ") + err.what());
    }
    reader.finish();
    if (config.prior_av < 0 || config.prior_av > 1)
        throw ParseError("prior_av: must lie in [0,1]");
    return config;
}

}  // namespace roadgames
