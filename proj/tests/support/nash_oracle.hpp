#pragma once

// Test-only brute-force equilibrium oracle. Walks every support pair, solves
// the indifference systems with determinant-based (Cramer) linear algebra and
// verifies candidates with its own deviation loops — independent of the
// library's Gaussian-elimination solver path.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

#include "roadgames/normal_form.hpp"

namespace nash_oracle {

using roadgames::MixedProfile;
using roadgames::MixedStrategy;
using roadgames::NormalFormGame;
using roadgames::Player;
using roadgames::Rational;

using Matrix = std::vector<std::vector<Rational>>;

inline Rational determinant(const Matrix& m) {
    const std::size_t n = m.size();
    if (n == 0) return Rational(1);
    if (n == 1) return m[0][0];
    Rational total(0);
    for (std::size_t c = 0; c < n; ++c) {
        if (m[0][c] == 0) continue;
        Matrix minor(n - 1, std::vector<Rational>(n - 1));
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t mc = 0;
            for (std::size_t cc = 0; cc < n; ++cc) {
                if (cc == c) continue;
                minor[r - 1][mc++] = m[r][cc];
            }
        }
        const Rational term = m[0][c] * determinant(minor);
        total += (c % 2 == 0) ? term : Rational(-term);
    }
    return total;
}

// Cramer solve of a square system; nullopt when singular.
inline std::optional<std::vector<Rational>> cramer(const Matrix& m,
                                                   const std::vector<Rational>& rhs) {
    const Rational d = determinant(m);
    if (d == 0) return std::nullopt;
    std::vector<Rational> x;
    for (std::size_t c = 0; c < m.size(); ++c) {
        Matrix replaced = m;
        for (std::size_t r = 0; r < m.size(); ++r) replaced[r][c] = rhs[r];
        x.push_back(determinant(replaced) / d);
    }
    return x;
}

// Rank via the largest nonsingular square submatrix.
inline std::size_t rank_of(const Matrix& m) {
    const std::size_t n_rows = m.size();
    const std::size_t n_cols = n_rows == 0 ? 0 : m[0].size();
    for (std::size_t k = std::min(n_rows, n_cols); k >= 1; --k) {
        for (std::uint32_t rmask = 0; rmask < (1u << n_rows); ++rmask) {
            if (static_cast<std::size_t>(std::popcount(rmask)) != k) continue;
            for (std::uint32_t cmask = 0; cmask < (1u << n_cols); ++cmask) {
                if (static_cast<std::size_t>(std::popcount(cmask)) != k) continue;
                Matrix sub;
                for (std::size_t r = 0; r < n_rows; ++r) {
                    if (!(rmask & (1u << r))) continue;
                    std::vector<Rational> line;
                    for (std::size_t c = 0; c < n_cols; ++c)
                        if (cmask & (1u << c)) line.push_back(m[r][c]);
                    sub.push_back(std::move(line));
                }
                if (determinant(sub) != 0) return k;
            }
        }
    }
    return 0;
}

// All basic solutions of M x = rhs: pin every (n_cols - rank)-subset of the
// first `pinnable` variables to zero, solve each uniquely solvable
// restriction via Cramer on an independent row subset, and keep solutions
// consistent with every row.
inline std::vector<std::vector<Rational>> basic_solutions(const Matrix& m,
                                                          const std::vector<Rational>& rhs,
                                                          std::size_t pinnable) {
    const std::size_t n_rows = m.size();
    const std::size_t n_cols = n_rows == 0 ? 0 : m[0].size();
    const std::size_t rank = rank_of(m);
    std::vector<std::vector<Rational>> out;
    for (std::uint32_t zero_mask = 0; zero_mask < (1u << pinnable); ++zero_mask) {
        if (static_cast<std::size_t>(std::popcount(zero_mask)) != n_cols - rank) continue;
        std::vector<std::size_t> kept;
        for (std::size_t c = 0; c < n_cols; ++c)
            if (!(zero_mask & (1u << c))) kept.push_back(c);
        // find an independent row subset of size rank over the kept columns
        std::optional<std::vector<Rational>> solution;
        for (std::uint32_t rmask = 0; rmask < (1u << n_rows) && !solution; ++rmask) {
            if (static_cast<std::size_t>(std::popcount(rmask)) != kept.size()) continue;
            Matrix sub;
            std::vector<Rational> sub_rhs;
            for (std::size_t r = 0; r < n_rows; ++r) {
                if (!(rmask & (1u << r))) continue;
                std::vector<Rational> line;
                for (std::size_t c : kept) line.push_back(m[r][c]);
                sub.push_back(std::move(line));
                sub_rhs.push_back(rhs[r]);
            }
            auto partial = cramer(sub, sub_rhs);
            if (!partial) continue;
            std::vector<Rational> full(n_cols, Rational(0));
            for (std::size_t j = 0; j < kept.size(); ++j) full[kept[j]] = (*partial)[j];
            bool consistent = true;
            for (std::size_t r = 0; r < n_rows && consistent; ++r) {
                Rational lhs(0);
                for (std::size_t c = 0; c < n_cols; ++c) lhs += m[r][c] * full[c];
                consistent = lhs == rhs[r];
            }
            if (consistent) solution = std::move(full);
        }
        if (solution && std::find(out.begin(), out.end(), *solution) == out.end())
            out.push_back(std::move(*solution));
    }
    return out;
}

inline Rational payoff_vs(const NormalFormGame& game, Player p, std::size_t own,
                          const std::vector<Rational>& opp_probs) {
    Rational total(0);
    for (std::size_t j = 0; j < opp_probs.size(); ++j)
        total += opp_probs[j] * game.payoff_own(p, own, j);
    return total;
}

inline bool is_equilibrium(const NormalFormGame& game, const std::vector<Rational>& row_probs,
                           const std::vector<Rational>& col_probs) {
    for (Player p : {Player::row, Player::col}) {
        const auto& own = p == Player::row ? row_probs : col_probs;
        const auto& opp = p == Player::row ? col_probs : row_probs;
        Rational best = payoff_vs(game, p, 0, opp);
        for (std::size_t i = 1; i < own.size(); ++i) {
            const Rational v = payoff_vs(game, p, i, opp);
            if (v > best) best = v;
        }
        for (std::size_t i = 0; i < own.size(); ++i)
            if (own[i] > 0 && payoff_vs(game, p, i, opp) != best) return false;
    }
    return true;
}

// Candidate opponent mixes making `p` indifferent across own_support, with
// support inside opp_support.
inline std::vector<std::vector<Rational>> candidates(const NormalFormGame& game, Player p,
                                                     const std::vector<std::size_t>& own_support,
                                                     const std::vector<std::size_t>& opp_support,
                                                     std::size_t opp_actions) {
    Matrix m;
    std::vector<Rational> rhs;
    for (std::size_t i : own_support) {
        std::vector<Rational> eq;
        for (std::size_t j : opp_support) eq.push_back(game.payoff_own(p, i, j));
        eq.push_back(Rational(-1));
        m.push_back(std::move(eq));
        rhs.push_back(Rational(0));
    }
    std::vector<Rational> norm(opp_support.size(), Rational(1));
    norm.push_back(Rational(0));
    m.push_back(std::move(norm));
    rhs.push_back(Rational(1));

    std::vector<std::vector<Rational>> out;
    for (const auto& sol : basic_solutions(m, rhs, opp_support.size())) {
        bool ok = true;
        for (std::size_t j = 0; j + 1 < sol.size(); ++j)
            if (sol[j] < 0) ok = false;
        if (!ok) continue;
        std::vector<Rational> probs(opp_actions, Rational(0));
        for (std::size_t j = 0; j < opp_support.size(); ++j) probs[opp_support[j]] = sol[j];
        if (std::find(out.begin(), out.end(), probs) == out.end()) out.push_back(std::move(probs));
    }
    return out;
}

inline std::vector<MixedProfile> mixed_nash(const NormalFormGame& game) {
    std::vector<MixedProfile> out;
    for (std::uint32_t rmask = 1; rmask < (1u << game.rows()); ++rmask) {
        std::vector<std::size_t> rsup;
        for (std::size_t i = 0; i < game.rows(); ++i)
            if (rmask & (1u << i)) rsup.push_back(i);
        for (std::uint32_t cmask = 1; cmask < (1u << game.cols()); ++cmask) {
            std::vector<std::size_t> csup;
            for (std::size_t j = 0; j < game.cols(); ++j)
                if (cmask & (1u << j)) csup.push_back(j);
            auto col_mixes = candidates(game, Player::row, rsup, csup, game.cols());
            if (col_mixes.empty()) continue;
            auto row_mixes = candidates(game, Player::col, csup, rsup, game.rows());
            for (const auto& row_probs : row_mixes) {
                for (const auto& col_probs : col_mixes) {
                    if (!is_equilibrium(game, row_probs, col_probs)) continue;
                    MixedProfile profile{MixedStrategy{row_probs}, MixedStrategy{col_probs}};
                    if (std::find(out.begin(), out.end(), profile) == out.end())
                        out.push_back(std::move(profile));
                }
            }
        }
    }
    return out;
}

inline std::vector<MixedProfile> sorted(std::vector<MixedProfile> profiles) {
    std::sort(profiles.begin(), profiles.end(), roadgames::profile_less);
    return profiles;
}

}  // namespace nash_oracle
