#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "roadgames/normal_form.hpp"

namespace roadgames {

// Support enumeration is exponential in the action counts; games past this
// size are rejected with CapacityError.
inline constexpr std::size_t kSupportEnumerationMaxActions = 8;

// Exact bilinear expected payoff of `player` under a mixed profile.
Rational expected_payoff(const NormalFormGame& game, const MixedProfile& profile, Player player);

// Expected payoff of one pure action of `player` against an opponent mix.
Rational action_payoff(const NormalFormGame& game, Player player, std::size_t action,
                       const MixedStrategy& opponent);

// The full argmax set of `player` against `opponent` (ties all included).
std::vector<std::size_t> best_responses(const NormalFormGame& game,
                                        const MixedStrategy& opponent, Player player);

// A mixed strategy over the player's other actions that beats `action`
// against every opponent pure action, when one exists. Detects domination by
// mixed strategies via an exact rational LP; the returned strategy spans all
// of the player's actions with zero weight on `action`.
std::optional<MixedStrategy> strict_domination_certificate(const NormalFormGame& game,
                                                           Player player, std::size_t action);

struct EliminationStep {
    Player player;
    std::size_t action_index;  // index within the game state at this step
    std::string action;        // its label at that point
    MixedStrategy dominator;   // over that state's actions; zero weight on action_index
};

struct EliminationTrace {
    std::vector<EliminationStep> steps;
    NormalFormGame reduced;
    std::vector<std::size_t> surviving_rows;  // original indices, ascending
    std::vector<std::size_t> surviving_cols;
};

// Iterated elimination of strictly dominated strategies, mixed dominators
// included. The seeded overload shuffles the scan order; strictness makes the
// surviving action set independent of it.
EliminationTrace iesds(const NormalFormGame& game);
EliminationTrace iesds(const NormalFormGame& game, std::uint64_t shuffle_seed);

// Replays a trace against `original`, re-checking every strict inequality and
// the final reduced game. False on any violation.
bool replay_elimination_trace(const NormalFormGame& original, const EliminationTrace& trace);

// All pure Nash equilibria, verified by exhaustive deviation checks.
std::vector<PureProfile> enumerate_pure_nash(const NormalFormGame& game);

// All equilibria found by exact support enumeration, pure ones included as
// singleton supports. Degenerate games may yield a superset of extreme
// equilibria; every returned profile passes is_nash. Throws CapacityError
// past kSupportEnumerationMaxActions.
std::vector<MixedProfile> enumerate_mixed_nash(const NormalFormGame& game);

// Best-response verification with zero tolerance: every supported action of
// each player attains that player's maximum payoff against the opponent mix.
bool is_nash(const NormalFormGame& game, const MixedProfile& profile);

}  // namespace roadgames
