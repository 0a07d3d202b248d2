#include "roadgames/solver.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <utility>

#include "roadgames/rng.hpp"

namespace roadgames {

namespace {

using Matrix = std::vector<std::vector<Rational>>;

// ---------------------------------------------------------------------------
// Exact linear systems: Gaussian elimination plus enumeration of basic
// solutions for the degenerate (underdetermined) case.
// ---------------------------------------------------------------------------

struct Echelon {
    Matrix m;
    std::vector<Rational> rhs;
    std::vector<std::size_t> pivot_cols;  // pivot column of each pivot row
    bool consistent = true;
};

Echelon eliminate(Matrix m, std::vector<Rational> rhs) {
    Echelon e;
    const std::size_t n_rows = m.size();
    const std::size_t n_cols = n_rows == 0 ? 0 : m[0].size();
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < n_cols && pivot_row < n_rows; ++col) {
        std::size_t sel = pivot_row;
        while (sel < n_rows && m[sel][col] == 0) ++sel;
        if (sel == n_rows) continue;
        std::swap(m[sel], m[pivot_row]);
        std::swap(rhs[sel], rhs[pivot_row]);
        const Rational pivot = m[pivot_row][col];
        for (std::size_t j = col; j < n_cols; ++j) m[pivot_row][j] /= pivot;
        rhs[pivot_row] /= pivot;
        for (std::size_t r = 0; r < n_rows; ++r) {
            if (r == pivot_row || m[r][col] == 0) continue;
            const Rational factor = m[r][col];
            for (std::size_t j = col; j < n_cols; ++j) m[r][j] -= factor * m[pivot_row][j];
            rhs[r] -= factor * rhs[pivot_row];
        }
        e.pivot_cols.push_back(col);
        ++pivot_row;
    }
    for (std::size_t r = pivot_row; r < n_rows; ++r) {
        if (rhs[r] != 0) {
            e.consistent = false;
            break;
        }
    }
    e.m = std::move(m);
    e.rhs = std::move(rhs);
    return e;
}

// Unique solution of M x = rhs, or nullopt when singular or inconsistent.
std::optional<std::vector<Rational>> solve_unique(const Matrix& m,
                                                  const std::vector<Rational>& rhs) {
    const std::size_t n_cols = m.empty() ? 0 : m[0].size();
    Echelon e = eliminate(m, rhs);
    if (!e.consistent || e.pivot_cols.size() != n_cols) return std::nullopt;
    std::vector<Rational> x(n_cols, Rational(0));
    for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) x[e.pivot_cols[r]] = e.rhs[r];
    return x;
}

// All basic solutions of M x = rhs: when the system is underdetermined with
// nullity k, every k-subset of the first `pinnable` variables is pinned to
// zero in turn and the restriction solved when it is uniquely solvable.
// Variables past `pinnable` (the indifference value) are never pinned, which
// keeps the candidate set equivariant under affine payoff transforms.
std::vector<std::vector<Rational>> basic_solutions(const Matrix& m,
                                                   const std::vector<Rational>& rhs,
                                                   std::size_t pinnable) {
    const std::size_t n_cols = m.empty() ? 0 : m[0].size();
    Echelon e = eliminate(m, rhs);
    if (!e.consistent) return {};
    const std::size_t rank = e.pivot_cols.size();
    if (rank == n_cols) {
        std::vector<Rational> x(n_cols, Rational(0));
        for (std::size_t r = 0; r < rank; ++r) x[e.pivot_cols[r]] = e.rhs[r];
        return {std::move(x)};
    }
    const std::size_t nullity = n_cols - rank;
    std::vector<std::vector<Rational>> out;
    for (std::uint32_t mask = 0; mask < (1u << pinnable); ++mask) {
        if (static_cast<std::size_t>(std::popcount(mask)) != nullity) continue;
        std::vector<std::size_t> kept;
        for (std::size_t j = 0; j < n_cols; ++j)
            if (!(mask & (1u << j))) kept.push_back(j);
        Matrix sub(m.size(), std::vector<Rational>(kept.size()));
        for (std::size_t r = 0; r < m.size(); ++r)
            for (std::size_t j = 0; j < kept.size(); ++j) sub[r][j] = m[r][kept[j]];
        auto partial = solve_unique(sub, rhs);
        if (!partial) continue;
        std::vector<Rational> x(n_cols, Rational(0));
        for (std::size_t j = 0; j < kept.size(); ++j) x[kept[j]] = (*partial)[j];
        if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(std::move(x));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Exact LP: maximize c.x subject to A x <= b, x >= 0. Two-phase primal
// simplex with Bland's rule; rational arithmetic makes it free of tolerances
// and Bland's rule makes it terminate.
// ---------------------------------------------------------------------------

struct LpResult {
    Rational objective;
    std::vector<Rational> x;
};

class SimplexTableau {
public:
    SimplexTableau(const Matrix& a, const std::vector<Rational>& b, std::size_t n_structural)
        : n_structural_(n_structural), n_rows_(a.size()) {
        n_total_ = n_structural_ + n_rows_;  // structural + slack
        std::vector<std::size_t> artificial_rows;
        for (std::size_t i = 0; i < n_rows_; ++i)
            if (b[i] < 0) artificial_rows.push_back(i);
        n_artificial_ = artificial_rows.size();
        const std::size_t width = n_total_ + n_artificial_;
        tab_.assign(n_rows_, std::vector<Rational>(width, Rational(0)));
        rhs_.assign(n_rows_, Rational(0));
        basis_.assign(n_rows_, 0);
        std::size_t art = 0;
        for (std::size_t i = 0; i < n_rows_; ++i) {
            const bool flip = b[i] < 0;
            for (std::size_t j = 0; j < n_structural_; ++j)
                tab_[i][j] = flip ? Rational(-a[i][j]) : a[i][j];
            tab_[i][n_structural_ + i] = flip ? Rational(-1) : Rational(1);
            rhs_[i] = flip ? Rational(-b[i]) : b[i];
            if (flip) {
                tab_[i][n_total_ + art] = 1;
                basis_[i] = n_total_ + art;
                ++art;
            } else {
                basis_[i] = n_structural_ + i;
            }
        }
    }

    std::optional<LpResult> solve(const std::vector<Rational>& c) {
        if (n_artificial_ > 0) {
            // phase 1: maximize minus the sum of artificials
            std::vector<Rational> phase1(n_total_ + n_artificial_, Rational(0));
            for (std::size_t j = n_total_; j < n_total_ + n_artificial_; ++j) phase1[j] = -1;
            Rational value = run(phase1, /*allow_artificial=*/true);
            if (value != 0) return std::nullopt;  // infeasible
            evict_artificials();
        }
        std::vector<Rational> full_c(n_total_ + n_artificial_, Rational(0));
        for (std::size_t j = 0; j < n_structural_; ++j) full_c[j] = c[j];
        Rational value = run(full_c, /*allow_artificial=*/false);
        LpResult result;
        result.objective = value;
        result.x.assign(n_structural_, Rational(0));
        for (std::size_t i = 0; i < n_rows_; ++i)
            if (basis_[i] < n_structural_) result.x[basis_[i]] = rhs_[i];
        return result;
    }

private:
    Rational run(const std::vector<Rational>& c, bool allow_artificial) {
        const std::size_t width = n_total_ + n_artificial_;
        std::vector<Rational> reduced = c;
        Rational value(0);
        for (std::size_t i = 0; i < n_rows_; ++i) {
            const Rational& cb = c[basis_[i]];
            if (cb == 0) continue;
            for (std::size_t j = 0; j < width; ++j) reduced[j] -= cb * tab_[i][j];
            value += cb * rhs_[i];
        }
        for (;;) {
            const std::size_t limit = allow_artificial ? width : n_total_;
            std::size_t entering = limit;
            for (std::size_t j = 0; j < limit; ++j) {
                if (reduced[j] > 0) {
                    entering = j;
                    break;  // Bland: smallest improving index
                }
            }
            if (entering == limit) return value;
            std::size_t leaving = n_rows_;
            Rational best_ratio(0);
            for (std::size_t i = 0; i < n_rows_; ++i) {
                if (tab_[i][entering] <= 0) continue;
                Rational ratio = rhs_[i] / tab_[i][entering];
                if (leaving == n_rows_ || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[i] < basis_[leaving])) {
                    leaving = i;
                    best_ratio = ratio;
                }
            }
            if (leaving == n_rows_)
                throw Error("internal: unbounded LP in dominance check");
            pivot(leaving, entering, reduced, value);
        }
    }

    void pivot(std::size_t row, std::size_t col, std::vector<Rational>& reduced,
               Rational& value) {
        const std::size_t width = n_total_ + n_artificial_;
        const Rational p = tab_[row][col];
        for (std::size_t j = 0; j < width; ++j) tab_[row][j] /= p;
        rhs_[row] /= p;
        for (std::size_t i = 0; i < n_rows_; ++i) {
            if (i == row || tab_[i][col] == 0) continue;
            const Rational f = tab_[i][col];
            for (std::size_t j = 0; j < width; ++j) tab_[i][j] -= f * tab_[row][j];
            rhs_[i] -= f * rhs_[row];
        }
        basis_[row] = col;
        if (reduced[col] != 0) {
            const Rational f = reduced[col];
            for (std::size_t j = 0; j < width; ++j) reduced[j] -= f * tab_[row][j];
            value += f * rhs_[row];
        }
    }

    // After phase 1, pivot any zero-level artificial out of the basis or drop
    // its (redundant) row.
    void evict_artificials() {
        for (std::size_t i = 0; i < n_rows_; ++i) {
            if (basis_[i] < n_total_) continue;
            std::size_t col = n_total_;
            for (std::size_t j = 0; j < n_total_; ++j) {
                if (tab_[i][j] != 0) {
                    col = j;
                    break;
                }
            }
            if (col == n_total_) {
                tab_.erase(tab_.begin() + static_cast<std::ptrdiff_t>(i));
                rhs_.erase(rhs_.begin() + static_cast<std::ptrdiff_t>(i));
                basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
                --n_rows_;
                --i;
                continue;
            }
            std::vector<Rational> dummy(n_total_ + n_artificial_, Rational(0));
            Rational dummy_value(0);
            pivot(i, col, dummy, dummy_value);
        }
    }

    std::size_t n_structural_;
    std::size_t n_rows_;
    std::size_t n_total_;
    std::size_t n_artificial_ = 0;
    Matrix tab_;
    std::vector<Rational> rhs_;
    std::vector<std::size_t> basis_;
};

std::optional<LpResult> solve_lp_max(const Matrix& a, const std::vector<Rational>& b,
                                     const std::vector<Rational>& c) {
    SimplexTableau tableau(a, b, c.size());
    return tableau.solve(c);
}

// Opponent strategies (over that player's full action set, zeros outside
// `opp_support`) under which `player` is exactly indifferent across
// `own_support`. Unique for nondegenerate systems; basic solutions otherwise.
std::vector<MixedStrategy> indifference_candidates(const NormalFormGame& game, Player player,
                                                   const std::vector<std::size_t>& own_support,
                                                   const std::vector<std::size_t>& opp_support) {
    const std::size_t n_unknowns = opp_support.size() + 1;  // probs then the common value
    Matrix m;
    std::vector<Rational> rhs;
    for (std::size_t i : own_support) {
        std::vector<Rational> eq(n_unknowns, Rational(0));
        for (std::size_t j = 0; j < opp_support.size(); ++j)
            eq[j] = game.payoff_own(player, i, opp_support[j]);
        eq[n_unknowns - 1] = -1;
        m.push_back(std::move(eq));
        rhs.push_back(Rational(0));
    }
    std::vector<Rational> norm(n_unknowns, Rational(1));
    norm[n_unknowns - 1] = 0;
    m.push_back(std::move(norm));
    rhs.push_back(Rational(1));

    std::vector<MixedStrategy> out;
    for (const auto& sol : basic_solutions(m, rhs, opp_support.size())) {
        bool nonnegative = true;
        for (std::size_t j = 0; j + 1 < sol.size(); ++j) {
            if (sol[j] < 0) {
                nonnegative = false;
                break;
            }
        }
        if (!nonnegative) continue;
        MixedStrategy s;
        s.probs.assign(game.actions(opponent_of(player)), Rational(0));
        for (std::size_t j = 0; j < opp_support.size(); ++j) s.probs[opp_support[j]] = sol[j];
        if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(std::move(s));
    }
    return out;
}

std::vector<std::size_t> mask_indices(std::uint32_t mask) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; mask != 0; ++i, mask >>= 1)
        if (mask & 1u) out.push_back(i);
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Expected utilities and best responses
// ---------------------------------------------------------------------------

Rational action_payoff(const NormalFormGame& game, Player player, std::size_t action,
                       const MixedStrategy& opponent) {
    if (opponent.probs.size() != game.actions(opponent_of(player)))
        throw ShapeError("opponent strategy length does not match the game");
    if (action >= game.actions(player)) throw ShapeError("action index out of range");
    Rational total(0);
    for (std::size_t j = 0; j < opponent.probs.size(); ++j) {
        if (opponent.probs[j] == 0) continue;
        total += opponent.probs[j] * game.payoff_own(player, action, j);
    }
    return total;
}

Rational expected_payoff(const NormalFormGame& game, const MixedProfile& profile, Player player) {
    if (profile.row.probs.size() != game.rows() || profile.col.probs.size() != game.cols())
        throw ShapeError("profile shape does not match the game");
    Rational total(0);
    for (std::size_t r = 0; r < game.rows(); ++r) {
        if (profile.row.probs[r] == 0) continue;
        for (std::size_t c = 0; c < game.cols(); ++c) {
            if (profile.col.probs[c] == 0) continue;
            total += profile.row.probs[r] * profile.col.probs[c] * game.payoff(player, r, c);
        }
    }
    return total;
}

std::vector<std::size_t> best_responses(const NormalFormGame& game, const MixedStrategy& opponent,
                                        Player player) {
    const std::size_t n = game.actions(player);
    std::vector<Rational> values;
    values.reserve(n);
    for (std::size_t i = 0; i < n; ++i) values.push_back(action_payoff(game, player, i, opponent));
    Rational best = values[0];
    for (std::size_t i = 1; i < n; ++i)
        if (values[i] > best) best = values[i];
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n; ++i)
        if (values[i] == best) out.push_back(i);
    return out;
}

// ---------------------------------------------------------------------------
// Strict dominance and IESDS
// ---------------------------------------------------------------------------

std::optional<MixedStrategy> strict_domination_certificate(const NormalFormGame& game,
                                                           Player player, std::size_t action) {
    const std::size_t n_own = game.actions(player);
    const std::size_t n_opp = game.actions(opponent_of(player));
    if (action >= n_own) throw ShapeError("action index out of range");
    if (n_own < 2) return std::nullopt;

    std::vector<std::size_t> others;
    for (std::size_t i = 0; i < n_own; ++i)
        if (i != action) others.push_back(i);
    const std::size_t last = others.back();
    const std::size_t n_free = others.size() - 1;  // weight on `last` is 1 - sum

    // Variables: free weights, then eps+ and eps-. Maximize eps = eps+ - eps-
    // subject to margin(sigma, j) >= eps for every opponent action j; the
    // margin against j with sigma substituted is affine in the free weights.
    const std::size_t n_vars = n_free + 2;
    Matrix a;
    std::vector<Rational> b;
    for (std::size_t j = 0; j < n_opp; ++j) {
        std::vector<Rational> con(n_vars, Rational(0));
        for (std::size_t k = 0; k < n_free; ++k)
            con[k] = game.payoff_own(player, last, j) - game.payoff_own(player, others[k], j);
        con[n_free] = 1;       // eps+
        con[n_free + 1] = -1;  // eps-
        a.push_back(std::move(con));
        b.push_back(game.payoff_own(player, last, j) - game.payoff_own(player, action, j));
    }
    {
        std::vector<Rational> con(n_vars, Rational(0));
        for (std::size_t k = 0; k < n_free; ++k) con[k] = 1;
        a.push_back(std::move(con));
        b.push_back(Rational(1));
    }
    {
        std::vector<Rational> con(n_vars, Rational(0));
        con[n_free] = 1;
        a.push_back(std::move(con));
        b.push_back(Rational(1));  // bound eps+ so the LP stays bounded
    }
    std::vector<Rational> c(n_vars, Rational(0));
    c[n_free] = 1;
    c[n_free + 1] = -1;

    auto lp = solve_lp_max(a, b, c);
    if (!lp) throw Error("internal: dominance LP reported infeasible");
    if (lp->objective <= 0) return std::nullopt;

    MixedStrategy cert;
    cert.probs.assign(n_own, Rational(0));
    Rational rest(1);
    for (std::size_t k = 0; k < n_free; ++k) {
        cert.probs[others[k]] = lp->x[k];
        rest -= lp->x[k];
    }
    cert.probs[last] = rest;
    cert.validate();
    return cert;
}

namespace {

EliminationTrace iesds_impl(const NormalFormGame& game, std::optional<std::uint64_t> seed) {
    NormalFormGame current = game;
    std::vector<std::size_t> rows_left(game.rows());
    std::vector<std::size_t> cols_left(game.cols());
    std::iota(rows_left.begin(), rows_left.end(), 0u);
    std::iota(cols_left.begin(), cols_left.end(), 0u);
    std::vector<EliminationStep> steps;
    std::uint64_t round = 0;
    for (;;) {
        std::vector<std::pair<Player, std::size_t>> candidates;
        for (std::size_t r = 0; r < current.rows(); ++r) candidates.emplace_back(Player::row, r);
        for (std::size_t c = 0; c < current.cols(); ++c) candidates.emplace_back(Player::col, c);
        if (seed) {
            StreamRng rng(*seed, round++);
            for (std::size_t i = candidates.size(); i > 1; --i)
                std::swap(candidates[i - 1], candidates[rng.next_u64() % i]);
        }
        bool eliminated = false;
        for (auto [player, index] : candidates) {
            if (current.actions(player) < 2) continue;
            auto cert = strict_domination_certificate(current, player, index);
            if (!cert) continue;
            steps.push_back(EliminationStep{player, index,
                                            current.action_label(player, index), *cert});
            current = current.without_action(player, index);
            auto& left = player == Player::row ? rows_left : cols_left;
            left.erase(left.begin() + static_cast<std::ptrdiff_t>(index));
            eliminated = true;
            break;
        }
        if (!eliminated) break;
    }
    return EliminationTrace{std::move(steps), std::move(current), std::move(rows_left),
                            std::move(cols_left)};
}

}  // namespace

EliminationTrace iesds(const NormalFormGame& game) { return iesds_impl(game, std::nullopt); }

EliminationTrace iesds(const NormalFormGame& game, std::uint64_t shuffle_seed) {
    return iesds_impl(game, shuffle_seed);
}

bool replay_elimination_trace(const NormalFormGame& original, const EliminationTrace& trace) {
    NormalFormGame current = original;
    for (const auto& step : trace.steps) {
        if (step.action_index >= current.actions(step.player)) return false;
        if (current.action_label(step.player, step.action_index) != step.action) return false;
        const auto& dom = step.dominator;
        if (dom.probs.size() != current.actions(step.player)) return false;
        if (dom.probs[step.action_index] != 0) return false;
        try {
            dom.validate();
        } catch (const DomainError&) {
            return false;
        }
        const std::size_t n_opp = current.actions(opponent_of(step.player));
        for (std::size_t j = 0; j < n_opp; ++j) {
            Rational mix_value(0);
            for (std::size_t k = 0; k < dom.probs.size(); ++k) {
                if (dom.probs[k] == 0) continue;
                mix_value += dom.probs[k] * current.payoff_own(step.player, k, j);
            }
            if (!(mix_value > current.payoff_own(step.player, step.action_index, j)))
                return false;
        }
        current = current.without_action(step.player, step.action_index);
    }
    return current == trace.reduced;
}

// ---------------------------------------------------------------------------
// Equilibrium enumeration
// ---------------------------------------------------------------------------

std::vector<PureProfile> enumerate_pure_nash(const NormalFormGame& game) {
    std::vector<PureProfile> out;
    for (std::size_t r = 0; r < game.rows(); ++r) {
        for (std::size_t c = 0; c < game.cols(); ++c) {
            bool stable = true;
            for (std::size_t r2 = 0; r2 < game.rows() && stable; ++r2)
                if (game.payoff(Player::row, r2, c) > game.payoff(Player::row, r, c))
                    stable = false;
            for (std::size_t c2 = 0; c2 < game.cols() && stable; ++c2)
                if (game.payoff(Player::col, r, c2) > game.payoff(Player::col, r, c))
                    stable = false;
            if (stable) out.push_back(PureProfile{r, c});
        }
    }
    return out;
}

bool is_nash(const NormalFormGame& game, const MixedProfile& profile) {
    if (profile.row.probs.size() != game.rows() || profile.col.probs.size() != game.cols())
        throw ShapeError("profile shape does not match the game");
    profile.row.validate();
    profile.col.validate();
    for (Player p : {Player::row, Player::col}) {
        const MixedStrategy& own = p == Player::row ? profile.row : profile.col;
        const MixedStrategy& opp = p == Player::row ? profile.col : profile.row;
        const std::size_t n = game.actions(p);
        std::vector<Rational> values;
        values.reserve(n);
        for (std::size_t i = 0; i < n; ++i) values.push_back(action_payoff(game, p, i, opp));
        Rational best = values[0];
        for (std::size_t i = 1; i < n; ++i)
            if (values[i] > best) best = values[i];
        for (std::size_t i = 0; i < n; ++i)
            if (own.probs[i] > 0 && values[i] != best) return false;
    }
    return true;
}

std::vector<MixedProfile> enumerate_mixed_nash(const NormalFormGame& game) {
    if (game.rows() > kSupportEnumerationMaxActions ||
        game.cols() > kSupportEnumerationMaxActions)
        throw CapacityError("support enumeration is limited to games of at most 8x8 actions");
    std::vector<MixedProfile> out;
    const std::uint32_t row_masks = 1u << game.rows();
    const std::uint32_t col_masks = 1u << game.cols();
    for (std::uint32_t rmask = 1; rmask < row_masks; ++rmask) {
        const auto row_support = mask_indices(rmask);
        for (std::uint32_t cmask = 1; cmask < col_masks; ++cmask) {
            const auto col_support = mask_indices(cmask);
            auto col_candidates =
                indifference_candidates(game, Player::row, row_support, col_support);
            if (col_candidates.empty()) continue;
            auto row_candidates =
                indifference_candidates(game, Player::col, col_support, row_support);
            for (const auto& row_strategy : row_candidates) {
                for (const auto& col_strategy : col_candidates) {
                    MixedProfile profile{row_strategy, col_strategy};
                    if (!is_nash(game, profile)) continue;
                    if (std::find(out.begin(), out.end(), profile) == out.end())
                        out.push_back(std::move(profile));
                }
            }
        }
    }
    return out;
}

}  // namespace roadgames
