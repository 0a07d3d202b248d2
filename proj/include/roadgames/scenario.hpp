#pragma once

#include <cstdint>
#include <string_view>

#include "roadgames/bayesian.hpp"
#include "roadgames/rng.hpp"

namespace roadgames {

enum class SpeedClassLabel { low = 0, medium = 1, high = 2 };

struct SpeedClass {
    SpeedClassLabel label = SpeedClassLabel::medium;
    double nominal_speed_kmh = 45.0;
    double fatality_rate = 0.5;  // probability a collision at this speed is fatal
};

SpeedClass speed_class(SpeedClassLabel label);
const char* to_string(SpeedClassLabel label);
SpeedClassLabel parse_speed_class(std::string_view text);  // low|medium|high

// Collision entries of non-medium tables are the medium ones scaled by these
// multipliers: gentler outcomes at low speed, harsher at high speed. The
// magnitudes are modeling defaults, declared configurable.
struct SeverityScaling {
    Rational low = make_rational(3, 5);
    Rational high = make_rational(8, 5);
};

// Zebra-crossing tables, rows Y/W/C (yield, walk, cycle) against cols G/S
// (go, stop), entries (cyclist, driver). Medium speed is the canonical table;
// low/high scale the four collision cells ((W,G) and (C,G), both players).
NormalFormGame zebra_human_game(SpeedClassLabel speed, const SeverityScaling& severity = {});
NormalFormGame zebra_av_game(SpeedClassLabel speed, const SeverityScaling& severity = {});

// Both-observe Bayesian game with types (AV, HUMAN) and prior
// (av_share, 1 - av_share).
BayesianGame zebra_game(SpeedClassLabel speed, const Rational& av_share,
                        const SeverityScaling& severity = {});

// Collision cells (W,G) and (C,G), identical for both types.
std::vector<std::vector<CellRef>> zebra_collision_cells();

// The regulation variant with fines: rows Yield/Walk/Cycle vs cols Go/Stop.
NormalFormGame fined_game();

// The equilibrium the simulations play: the AV type's unique (C, S) and the
// human type's totally mixed equilibrium (row support {Y,C}, col {G,S}).
// Multiple equilibria exist for the human type; this selection is pinned here
// once so every caller agrees.
TypeContingentProfile zebra_equilibrium(SpeedClassLabel speed, const SeverityScaling& severity = {});

// Collision probability of zebra_equilibrium at av_share 0, in closed form
// from the human table's (C,G) entries: (14/(21-d_CG)) * (14/(22-c_CG)).
// Valid whenever only the collision entries differ from the medium table.
Rational zebra_collision_closed_form(SpeedClassLabel speed, const SeverityScaling& severity = {});

// Every payoff entry multiplied by an independent uniform factor in
// [1-amplitude, 1+amplitude]; factors are exact rationals, so signs and
// exactness are preserved. amplitude must lie in [0, 1/2].
NormalFormGame perturb_payoffs(const NormalFormGame& game, const Rational& amplitude,
                               StreamRng& rng);

// Repeated-perturbation study of the human-type game: does the equilibrium
// structure (two pure profiles plus the {Y,C}x{G,S} mixed one) survive, and
// how far does the mixed equilibrium's collision probability move?
struct NoiseRobustness {
    int trials = 0;
    int support_stable = 0;           // trials keeping the exact structure
    Rational reference;               // unperturbed collision probability
    Rational min_probability;         // over stable trials
    Rational max_probability;
};

NoiseRobustness zebra_noise_robustness(SpeedClassLabel speed, const Rational& amplitude,
                                       int trials, std::uint64_t seed,
                                       const SeverityScaling& severity = {});

// Scenario config file: all keys optional, so an empty config is the
// medium-speed default setting.
//   speed = medium            # low|medium|high
//   prior_av = 1/2
//   severity_low = 3/5
//   severity_high = 8/5
//   noise_amplitude = 0
struct ScenarioConfig {
    SpeedClassLabel speed = SpeedClassLabel::medium;
    Rational prior_av = make_rational(1, 2);
    SeverityScaling severity;
    Rational noise_amplitude = Rational(0);
};

ScenarioConfig parse_scenario_config(std::string_view text);

}  // namespace roadgames
