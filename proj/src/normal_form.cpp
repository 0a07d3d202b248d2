#include "roadgames/normal_form.hpp"

#include <set>
#include <utility>

namespace roadgames {

NormalFormGame::NormalFormGame(std::vector<std::string> row_actions,
                               std::vector<std::string> col_actions,
                               std::vector<PayoffPair> payoffs_row_major)
    : row_actions_(std::move(row_actions)),
      col_actions_(std::move(col_actions)),
      payoffs_(std::move(payoffs_row_major)) {
    if (row_actions_.empty() || col_actions_.empty())
        throw ShapeError("game needs at least one action per player");
    if (payoffs_.size() != row_actions_.size() * col_actions_.size())
        throw ShapeError("payoff matrix size does not match action counts");
    for (Player p : {Player::row, Player::col}) {
        std::set<std::string> seen;
        for (const auto& label : action_labels(p)) {
            if (label.empty()) throw ShapeError("empty action label");
            if (!seen.insert(label).second)
                throw ShapeError("duplicate action label '" + label + "'");
        }
    }
}

const std::string& NormalFormGame::action_label(Player p, std::size_t i) const {
    const auto& labels = action_labels(p);
    if (i >= labels.size()) throw ShapeError("action index out of range");
    return labels[i];
}

std::size_t NormalFormGame::action_index(Player p, std::string_view label) const {
    const auto& labels = action_labels(p);
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == label) return i;
    throw ShapeError("unknown action label '" + std::string(label) + "'");
}

const PayoffPair& NormalFormGame::at(std::size_t r, std::size_t c) const {
    if (r >= rows() || c >= cols()) throw ShapeError("payoff cell out of range");
    return payoffs_[r * cols() + c];
}

PayoffPair& NormalFormGame::at(std::size_t r, std::size_t c) {
    if (r >= rows() || c >= cols()) throw ShapeError("payoff cell out of range");
    return payoffs_[r * cols() + c];
}

NormalFormGame NormalFormGame::without_action(Player p, std::size_t index) const {
    if (index >= actions(p)) throw ShapeError("action index out of range");
    if (actions(p) == 1) throw ShapeError("cannot remove a player's last action");
    std::vector<std::string> new_rows = row_actions_;
    std::vector<std::string> new_cols = col_actions_;
    if (p == Player::row)
        new_rows.erase(new_rows.begin() + static_cast<std::ptrdiff_t>(index));
    else
        new_cols.erase(new_cols.begin() + static_cast<std::ptrdiff_t>(index));
    std::vector<PayoffPair> cells;
    cells.reserve(new_rows.size() * new_cols.size());
    for (std::size_t r = 0; r < rows(); ++r) {
        if (p == Player::row && r == index) continue;
        for (std::size_t c = 0; c < cols(); ++c) {
            if (p == Player::col && c == index) continue;
            cells.push_back(at(r, c));
        }
    }
    return NormalFormGame(std::move(new_rows), std::move(new_cols), std::move(cells));
}

bool NormalFormGame::operator==(const NormalFormGame& other) const {
    return row_actions_ == other.row_actions_ && col_actions_ == other.col_actions_ &&
           payoffs_ == other.payoffs_;
}

MixedStrategy MixedStrategy::pure(std::size_t n_actions, std::size_t index) {
    if (index >= n_actions) throw ShapeError("pure-strategy index out of range");
    MixedStrategy s;
    s.probs.assign(n_actions, Rational(0));
    s.probs[index] = 1;
    return s;
}

MixedStrategy MixedStrategy::uniform(std::size_t n_actions) {
    if (n_actions == 0) throw ShapeError("strategy needs at least one action");
    MixedStrategy s;
    s.probs.assign(n_actions, make_rational(1, static_cast<long>(n_actions)));
    return s;
}

void MixedStrategy::validate() const {
    if (probs.empty()) throw DomainError("strategy has no actions");
    Rational sum(0);
    for (const auto& p : probs) {
        if (p < 0 || p > 1) throw DomainError("strategy probability outside [0,1]");
        sum += p;
    }
    if (sum != 1) throw DomainError("strategy probabilities must sum to 1");
}

std::vector<std::size_t> MixedStrategy::support() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < probs.size(); ++i)
        if (probs[i] > 0) out.push_back(i);
    return out;
}

bool profile_less(const MixedProfile& a, const MixedProfile& b) {
    auto vec_less = [](const std::vector<Rational>& x, const std::vector<Rational>& y) {
        for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
            int c = cmp(x[i], y[i]);
            if (c != 0) return std::pair(true, c < 0);
        }
        return std::pair(x.size() != y.size(), x.size() < y.size());
    };
    auto [decided, less] = vec_less(a.row.probs, b.row.probs);
    if (decided) return less;
    return vec_less(a.col.probs, b.col.probs).second;
}

MixedProfile to_mixed_profile(const PureProfile& p, std::size_t rows, std::size_t cols) {
    return MixedProfile{MixedStrategy::pure(rows, p.row), MixedStrategy::pure(cols, p.col)};
}

}  // namespace roadgames
