#include "roadgames/bayesian.hpp"

#include <algorithm>

#include "roadgames/solver.hpp"

namespace roadgames {

void BayesianGame::validate() const {
    if (types.empty()) throw ShapeError("bayesian game needs at least one type");
    if (prior.size() != types.size() || games.size() != types.size())
        throw ShapeError("prior and per-type games must match the type list");
    Rational sum(0);
    for (const auto& p : prior) {
        if (p < 0 || p > 1) throw DomainError("prior probability outside [0,1]");
        sum += p;
    }
    if (sum != 1) throw DomainError("prior probabilities must sum to 1");
    for (const auto& g : games) {
        if (g.rows() != games.front().rows() || g.cols() != games.front().cols())
            throw ShapeError("per-type games must share action-set shapes");
    }
}

std::vector<TypeContingentProfile> solve_observed(const BayesianGame& game) {
    game.validate();
    if (!game.observed_by_row || !game.observed_by_col)
        throw UnsupportedError(
            "only the both-players-observe information structure is solved; "
            "unobserved types are represented but not supported");
    std::vector<std::vector<MixedProfile>> per_type;
    per_type.reserve(game.n_types());
    for (const auto& g : game.games) per_type.push_back(enumerate_mixed_nash(g));

    std::vector<TypeContingentProfile> out;
    std::vector<std::size_t> index(game.n_types(), 0);
    for (;;) {
        TypeContingentProfile profile;
        profile.per_type.reserve(game.n_types());
        for (std::size_t t = 0; t < game.n_types(); ++t) {
            if (per_type[t].empty()) return {};  // a type with no equilibrium
            profile.per_type.push_back(per_type[t][index[t]]);
        }
        out.push_back(std::move(profile));
        std::size_t t = game.n_types();
        while (t > 0) {
            --t;
            if (++index[t] < per_type[t].size()) break;
            index[t] = 0;
            if (t == 0) return out;
        }
    }
}

namespace {

std::string join_labels(const std::vector<std::string>& parts, bool single_char) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0 && !single_char) out += '|';
        out += parts[i];
    }
    return out;
}

}  // namespace

NormalFormGame induced_normal_form(const BayesianGame& game) {
    game.validate();
    const std::size_t n_types = game.n_types();
    const std::size_t base_rows = game.games.front().rows();
    const std::size_t base_cols = game.games.front().cols();

    std::size_t n_row_tuples = 1, n_col_tuples = 1;
    for (std::size_t t = 0; t < n_types; ++t) {
        n_row_tuples *= base_rows;
        n_col_tuples *= base_cols;
    }

    bool single_char = true;
    for (const auto& g : game.games)
        for (Player p : {Player::row, Player::col})
            for (const auto& label : g.action_labels(p))
                if (label.size() != 1) single_char = false;

    auto tuple_components = [n_types](std::size_t tuple, std::size_t base) {
        std::vector<std::size_t> parts(n_types, 0);
        for (std::size_t t = n_types; t > 0; --t) {
            parts[t - 1] = tuple % base;
            tuple /= base;
        }
        return parts;  // type 0 is the most significant component
    };

    auto tuple_labels = [&](Player p, std::size_t base, std::size_t count) {
        std::vector<std::string> labels;
        labels.reserve(count);
        for (std::size_t tuple = 0; tuple < count; ++tuple) {
            auto parts = tuple_components(tuple, base);
            std::vector<std::string> names;
            names.reserve(n_types);
            for (std::size_t t = 0; t < n_types; ++t)
                names.push_back(game.games[t].action_label(p, parts[t]));
            labels.push_back(join_labels(names, single_char));
        }
        return labels;
    };

    std::vector<PayoffPair> cells;
    cells.reserve(n_row_tuples * n_col_tuples);
    for (std::size_t rt = 0; rt < n_row_tuples; ++rt) {
        auto row_parts = tuple_components(rt, base_rows);
        for (std::size_t ct = 0; ct < n_col_tuples; ++ct) {
            auto col_parts = tuple_components(ct, base_cols);
            PayoffPair cell{Rational(0), Rational(0)};
            for (std::size_t t = 0; t < n_types; ++t) {
                const auto& pay = game.games[t].at(row_parts[t], col_parts[t]);
                cell.row += game.prior[t] * pay.row;
                cell.col += game.prior[t] * pay.col;
            }
            cells.push_back(std::move(cell));
        }
    }
    return NormalFormGame(tuple_labels(Player::row, base_rows, n_row_tuples),
                          tuple_labels(Player::col, base_cols, n_col_tuples), std::move(cells));
}

Rational equilibrium_collision_probability(
    const TypeContingentProfile& profile, const std::vector<Rational>& prior,
    const std::vector<std::vector<CellRef>>& cells_per_type) {
    if (profile.per_type.size() != prior.size() || cells_per_type.size() != prior.size())
        throw ShapeError("profile, prior and cell lists must cover the same types");
    Rational total(0);
    for (std::size_t t = 0; t < prior.size(); ++t) {
        const auto& mp = profile.per_type[t];
        for (const auto& cell : cells_per_type[t]) {
            if (cell.row >= mp.row.probs.size() || cell.col >= mp.col.probs.size())
                throw ShapeError("collision cell index out of range");
            total += prior[t] * mp.row.probs[cell.row] * mp.col.probs[cell.col];
        }
    }
    return total;
}

}  // namespace roadgames
