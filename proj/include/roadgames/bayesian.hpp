#pragma once

#include <string>
#include <vector>

#include "roadgames/normal_form.hpp"

namespace roadgames {

// Two-player game with a nature move drawing a type from `prior`; one
// normal-form game per type, all sharing action-set shapes. The observation
// flags describe who sees the realized type before acting.
struct BayesianGame {
    std::vector<std::string> types;
    std::vector<Rational> prior;
    std::vector<NormalFormGame> games;
    bool observed_by_row = true;
    bool observed_by_col = true;

    void validate() const;
    std::size_t n_types() const { return types.size(); }
};

// One mixed profile per type: the players' plans conditioned on the realized
// type.
struct TypeContingentProfile {
    std::vector<MixedProfile> per_type;

    bool operator==(const TypeContingentProfile& other) const {
        return per_type == other.per_type;
    }
};

// Equilibria when both players observe the type: the Cartesian product of the
// per-type equilibrium lists. Throws UnsupportedError unless both observation
// flags are set; the one-sided information structure is representable but has
// no solver here.
std::vector<TypeContingentProfile> solve_observed(const BayesianGame& game);

// Ex-ante induced normal form: each observing player's action is a tuple with
// one component per type; payoffs are prior-weighted expectations. Tuple
// labels concatenate the per-type action labels (separated by '|' when any
// label has more than one character), type 0 first.
NormalFormGame induced_normal_form(const BayesianGame& game);

struct CellRef {
    std::size_t row = 0;
    std::size_t col = 0;
};

// Probability that play lands in one of the given cells, under a
// type-contingent profile: sum over types of prior(t) times the product of
// the per-type mixed probabilities, exact.
Rational equilibrium_collision_probability(const TypeContingentProfile& profile,
                                           const std::vector<Rational>& prior,
                                           const std::vector<std::vector<CellRef>>& cells_per_type);

}  // namespace roadgames
