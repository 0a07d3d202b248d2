#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "roadgames/errors.hpp"
#include "roadgames/rational.hpp"

namespace roadgames {

enum class Player { row = 0, col = 1 };

constexpr Player opponent_of(Player p) {
    return p == Player::row ? Player::col : Player::row;
}

struct PayoffPair {
    Rational row;
    Rational col;

    const Rational& of(Player p) const { return p == Player::row ? row : col; }
    Rational& of(Player p) { return p == Player::row ? row : col; }
    bool operator==(const PayoffPair& other) const {
        return row == other.row && col == other.col;
    }
};

// Two-player finite game in normal form. Payoff matrix is row-major with
// dimensions |row_actions| x |col_actions|; action labels are unique per side.
class NormalFormGame {
public:
    NormalFormGame(std::vector<std::string> row_actions,
                   std::vector<std::string> col_actions,
                   std::vector<PayoffPair> payoffs_row_major);

    std::size_t rows() const { return row_actions_.size(); }
    std::size_t cols() const { return col_actions_.size(); }
    std::size_t actions(Player p) const { return p == Player::row ? rows() : cols(); }

    const std::vector<std::string>& action_labels(Player p) const {
        return p == Player::row ? row_actions_ : col_actions_;
    }
    const std::string& action_label(Player p, std::size_t i) const;
    // index of the labelled action; throws ShapeError when absent
    std::size_t action_index(Player p, std::string_view label) const;

    const PayoffPair& at(std::size_t r, std::size_t c) const;
    PayoffPair& at(std::size_t r, std::size_t c);

    // payoff of `p` at cell (r, c)
    const Rational& payoff(Player p, std::size_t r, std::size_t c) const {
        return at(r, c).of(p);
    }
    // payoff of `p` when p plays `own` and the opponent plays `opp`
    const Rational& payoff_own(Player p, std::size_t own, std::size_t opp) const {
        return p == Player::row ? at(own, opp).row : at(opp, own).col;
    }

    // copy of the game with one action of `p` removed
    NormalFormGame without_action(Player p, std::size_t index) const;

    bool operator==(const NormalFormGame& other) const;

private:
    std::vector<std::string> row_actions_;
    std::vector<std::string> col_actions_;
    std::vector<PayoffPair> payoffs_;  // row-major
};

// Probability distribution over one player's actions, exact.
struct MixedStrategy {
    std::vector<Rational> probs;

    static MixedStrategy pure(std::size_t n_actions, std::size_t index);
    static MixedStrategy uniform(std::size_t n_actions);

    // entries in [0,1] and exact sum 1; throws DomainError otherwise
    void validate() const;
    std::vector<std::size_t> support() const;
    bool is_pure() const { return support().size() == 1; }

    bool operator==(const MixedStrategy& other) const { return probs == other.probs; }
};

struct MixedProfile {
    MixedStrategy row;
    MixedStrategy col;

    bool operator==(const MixedProfile& other) const {
        return row == other.row && col == other.col;
    }
};

struct PureProfile {
    std::size_t row = 0;
    std::size_t col = 0;

    auto operator<=>(const PureProfile&) const = default;
};

// Exact lexicographic order on (row probs, col probs); used to give solver
// output and test oracles a common canonical ordering.
bool profile_less(const MixedProfile& a, const MixedProfile& b);

MixedProfile to_mixed_profile(const PureProfile& p, std::size_t rows, std::size_t cols);

}  // namespace roadgames
