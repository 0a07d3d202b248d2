#include <doctest.h>

#include <algorithm>

#include "roadgames/rng.hpp"
#include "roadgames/scenario.hpp"
#include "roadgames/solver.hpp"
#include "support/nash_oracle.hpp"

using namespace roadgames;

namespace {

NormalFormGame human_medium() { return zebra_human_game(SpeedClassLabel::medium); }
NormalFormGame av_medium() { return zebra_av_game(SpeedClassLabel::medium); }

NormalFormGame human_reduced() {  // rows {Y, C} x cols {G, S}
    return NormalFormGame({"Y", "C"}, {"G", "S"},
                          {{Rational(8), Rational(15)},
                           {Rational(6), Rational(1)},
                           {Rational(-500), Rational(-200)},
                           {Rational(20), Rational(7)}});
}

NormalFormGame matching_pennies() {
    return NormalFormGame({"H", "T"}, {"h", "t"},
                          {{Rational(1), Rational(-1)},
                           {Rational(-1), Rational(1)},
                           {Rational(-1), Rational(1)},
                           {Rational(1), Rational(-1)}});
}

// The paper's mixed equilibrium of the human-type subgame on {Y,C} x {G,S}.
const Rational kRowY = make_rational(207, 221);
const Rational kRowC = make_rational(14, 221);
const Rational kColG = make_rational(7, 261);
const Rational kColS = make_rational(254, 261);

MixedProfile reduced_mixed_equilibrium() {
    return MixedProfile{MixedStrategy{{kRowY, kRowC}}, MixedStrategy{{kColG, kColS}}};
}

NormalFormGame random_game(StreamRng& rng, std::size_t rows, std::size_t cols) {
    std::vector<PayoffPair> cells;
    for (std::size_t i = 0; i < rows * cols; ++i) {
        const long a = static_cast<long>(rng.next_u64() % 11) - 5;
        const long b = static_cast<long>(rng.next_u64() % 11) - 5;
        cells.push_back({Rational(a), Rational(b)});
    }
    std::vector<std::string> row_labels, col_labels;
    for (std::size_t r = 0; r < rows; ++r) row_labels.push_back("r" + std::to_string(r));
    for (std::size_t c = 0; c < cols; ++c) col_labels.push_back("c" + std::to_string(c));
    return NormalFormGame(row_labels, col_labels, cells);
}

}  // namespace

TEST_CASE("expected payoff") {
    const auto human = human_medium();
    // pure (C, S): cycling against a yielding vehicle
    MixedProfile pure_cs{MixedStrategy::pure(3, 2), MixedStrategy::pure(2, 1)};
    CHECK(expected_payoff(human, pure_cs, Player::row) == 20);

    const NormalFormGame degenerate({"only"}, {"only"}, {{Rational(0), Rational(0)}});
    MixedProfile trivial{MixedStrategy::pure(1, 0), MixedStrategy::pure(1, 0)};
    CHECK(expected_payoff(degenerate, trivial, Player::row) == 0);

    // at the mixed equilibrium of the reduced subgame the row value is
    // 6 + 2 * (7/261) = 1580/261, attained by both supported actions
    const auto reduced = human_reduced();
    const auto eq = reduced_mixed_equilibrium();
    CHECK(expected_payoff(reduced, eq, Player::row) == make_rational(1580, 261));
    CHECK(action_payoff(reduced, Player::row, 0, eq.col) == make_rational(1580, 261));
    CHECK(action_payoff(reduced, Player::row, 1, eq.col) == make_rational(1580, 261));

    MixedProfile misshaped{MixedStrategy::pure(2, 0), MixedStrategy::pure(2, 1)};
    CHECK_THROWS_AS(expected_payoff(human, misshaped, Player::row), ShapeError);
}

TEST_CASE("best responses") {
    const auto human = human_medium();
    // against a stopping vehicle the cyclist cycles (20 beats 6 and 15)
    CHECK(best_responses(human, MixedStrategy::pure(2, 1), Player::row) ==
          std::vector<std::size_t>{2});

    const NormalFormGame zero({"a", "b"}, {"x", "y"},
                              std::vector<PayoffPair>(4, {Rational(0), Rational(0)}));
    CHECK(best_responses(zero, MixedStrategy::uniform(2), Player::row) ==
          std::vector<std::size_t>{0, 1});

    // at the equilibrium column mix the cyclist is indifferent between Y and C
    MixedStrategy col_mix{{kColG, kColS}};
    CHECK(best_responses(human, col_mix, Player::row) == std::vector<std::size_t>{0, 2});
}

TEST_CASE("strict domination certificates") {
    const auto av = av_medium();
    // stopping dominates going for the AV: 10>7, 8>-500, 12>-300
    auto cert = strict_domination_certificate(av, Player::col, 0);
    REQUIRE(cert.has_value());
    CHECK(cert->probs == std::vector<Rational>{Rational(0), Rational(1)});

    for (Player p : {Player::row, Player::col}) {
        CHECK_FALSE(strict_domination_certificate(matching_pennies(), p, 0).has_value());
        CHECK_FALSE(strict_domination_certificate(matching_pennies(), p, 1).has_value());
    }

    // walking is dominated only by a mix of yielding and cycling; any valid
    // certificate puts weight alpha on Y with alpha in (25/127, 5/14)
    const auto human = human_medium();
    auto walk_cert = strict_domination_certificate(human, Player::row, 1);
    REQUIRE(walk_cert.has_value());
    CHECK(walk_cert->probs[1] == 0);
    CHECK(walk_cert->support().size() == 2);
    CHECK(walk_cert->probs[0] > make_rational(25, 127));
    CHECK(walk_cert->probs[0] < make_rational(5, 14));
    // replay the strict inequalities directly
    for (std::size_t j = 0; j < human.cols(); ++j) {
        Rational mix(0);
        for (std::size_t k = 0; k < 3; ++k)
            mix += walk_cert->probs[k] * human.payoff(Player::row, k, j);
        CHECK(mix > human.payoff(Player::row, 1, j));
    }
}

TEST_CASE("iesds on the paper games") {
    const auto human = human_medium();
    auto trace = iesds(human);
    REQUIRE(trace.steps.size() == 1);
    CHECK(trace.steps[0].player == Player::row);
    CHECK(trace.steps[0].action == "W");
    CHECK(trace.steps[0].dominator.support().size() == 2);  // needs the mixed dominator
    CHECK(trace.reduced == human_reduced());
    CHECK(trace.surviving_rows == std::vector<std::size_t>{0, 2});
    CHECK(trace.surviving_cols == std::vector<std::size_t>{0, 1});
    CHECK(replay_elimination_trace(human, trace));

    const NormalFormGame one({"a"}, {"x"}, {{Rational(1), Rational(1)}});
    CHECK(iesds(one).steps.empty());

    auto fined_trace = iesds(fined_game());
    CHECK(replay_elimination_trace(fined_game(), fined_trace));
    CHECK(fined_trace.reduced.rows() == 1);
    CHECK(fined_trace.reduced.cols() == 1);
    CHECK(fined_trace.reduced.action_label(Player::row, 0) == "Yield");
    CHECK(fined_trace.reduced.action_label(Player::col, 0) == "Go");
    CHECK(enumerate_pure_nash(fined_trace.reduced) ==
          std::vector<PureProfile>{PureProfile{0, 0}});
}

TEST_CASE("iesds surviving set is order independent") {
    StreamRng rng(2024, 0);
    for (int trial = 0; trial < 40; ++trial) {
        const auto game = random_game(rng, 1 + rng.next_u64() % 3, 1 + rng.next_u64() % 3);
        const auto base = iesds(game);
        for (std::uint64_t seed = 1; seed <= 4; ++seed) {
            const auto shuffled = iesds(game, seed);
            CHECK(shuffled.surviving_rows == base.surviving_rows);
            CHECK(shuffled.surviving_cols == base.surviving_cols);
            CHECK(replay_elimination_trace(game, shuffled));
        }
    }
    const auto human = human_medium();
    for (std::uint64_t seed = 0; seed < 8; ++seed)
        CHECK(iesds(human, seed).reduced == human_reduced());
}

TEST_CASE("pure equilibria") {
    CHECK(enumerate_pure_nash(human_reduced()) ==
          std::vector<PureProfile>{PureProfile{0, 0}, PureProfile{1, 1}});
    CHECK(enumerate_pure_nash(human_medium()) ==
          std::vector<PureProfile>{PureProfile{0, 0}, PureProfile{2, 1}});
    CHECK(enumerate_pure_nash(fined_game()) == std::vector<PureProfile>{PureProfile{0, 0}});
    CHECK(enumerate_pure_nash(matching_pennies()).empty());
}

TEST_CASE("mixed equilibria of the paper games") {
    // reduced human subgame: the two pure profiles plus the published mix
    const auto reduced = human_reduced();
    auto eqs = enumerate_mixed_nash(reduced);
    REQUIRE(eqs.size() == 3);
    const auto expected = reduced_mixed_equilibrium();
    CHECK(std::count(eqs.begin(), eqs.end(), expected) == 1);
    for (const auto& eq : eqs) CHECK(is_nash(reduced, eq));

    // full 3x2 human subgame: the same mix with zero weight on W
    const auto human = human_medium();
    auto full = enumerate_mixed_nash(human);
    REQUIRE(full.size() == 3);
    MixedProfile full_mixed{MixedStrategy{{kRowY, Rational(0), kRowC}},
                            MixedStrategy{{kColG, kColS}}};
    CHECK(std::count(full.begin(), full.end(), full_mixed) == 1);

    // AV subgame: stop dominant, (C, S) the only equilibrium even in mixes
    auto av_eqs = enumerate_mixed_nash(av_medium());
    REQUIRE(av_eqs.size() == 1);
    CHECK(av_eqs[0] == to_mixed_profile(PureProfile{2, 1}, 3, 2));

    auto pennies = enumerate_mixed_nash(matching_pennies());
    REQUIRE(pennies.size() == 1);
    CHECK(pennies[0].row == MixedStrategy::uniform(2));
    CHECK(pennies[0].col == MixedStrategy::uniform(2));

    const NormalFormGame big(
        std::vector<std::string>{"1", "2", "3", "4", "5", "6", "7", "8", "9"},
        std::vector<std::string>{"a"},
        std::vector<PayoffPair>(9, {Rational(0), Rational(0)}));
    CHECK_THROWS_AS(enumerate_mixed_nash(big), CapacityError);
}

TEST_CASE("support enumeration matches the brute-force oracle on random games") {
    StreamRng rng(7, 0);
    int nontrivial = 0;
    for (int trial = 0; trial < 120; ++trial) {
        const std::size_t rows = 1 + rng.next_u64() % 3;
        const std::size_t cols = 1 + rng.next_u64() % 3;
        const auto game = random_game(rng, rows, cols);
        auto ours = enumerate_mixed_nash(game);
        std::sort(ours.begin(), ours.end(), profile_less);
        const auto expected = nash_oracle::sorted(nash_oracle::mixed_nash(game));
        REQUIRE(ours == expected);
        for (const auto& eq : ours) {
            CHECK(is_nash(game, eq));
            Rational sum_row(0), sum_col(0);
            for (const auto& p : eq.row.probs) sum_row += p;
            for (const auto& p : eq.col.probs) sum_col += p;
            CHECK(sum_row == 1);
            CHECK(sum_col == 1);
        }
        if (ours.size() > 1) ++nontrivial;
        // every pure equilibrium shows up as a singleton-support profile
        for (const auto& pure : enumerate_pure_nash(game)) {
            const auto as_mixed = to_mixed_profile(pure, rows, cols);
            CHECK(std::count(ours.begin(), ours.end(), as_mixed) == 1);
        }
    }
    CHECK(nontrivial > 5);  // the sample is not all trivial games
}

TEST_CASE("iesds never eliminates equilibrium support") {
    StreamRng rng(99, 1);
    for (int trial = 0; trial < 60; ++trial) {
        const auto game = random_game(rng, 1 + rng.next_u64() % 3, 1 + rng.next_u64() % 3);
        const auto trace = iesds(game);
        CHECK(replay_elimination_trace(game, trace));
        for (const auto& eq : nash_oracle::mixed_nash(game)) {
            for (std::size_t i : eq.row.support())
                CHECK(std::count(trace.surviving_rows.begin(), trace.surviving_rows.end(), i) ==
                      1);
            for (std::size_t j : eq.col.support())
                CHECK(std::count(trace.surviving_cols.begin(), trace.surviving_cols.end(), j) ==
                      1);
        }
    }
}

TEST_CASE("positive affine payoff transforms preserve equilibrium structure") {
    StreamRng rng(123, 5);
    for (int trial = 0; trial < 30; ++trial) {
        const auto game = random_game(rng, 1 + rng.next_u64() % 3, 1 + rng.next_u64() % 3);
        NormalFormGame scaled = game;
        const Rational a = make_rational(1 + static_cast<long>(rng.next_u64() % 5), 2);
        const Rational b = Rational(static_cast<long>(rng.next_u64() % 9) - 4);
        for (std::size_t r = 0; r < scaled.rows(); ++r)
            for (std::size_t c = 0; c < scaled.cols(); ++c)
                scaled.at(r, c).row = a * scaled.at(r, c).row + b;

        CHECK(enumerate_pure_nash(scaled) == enumerate_pure_nash(game));

        auto supports = [](const std::vector<MixedProfile>& eqs) {
            std::vector<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> out;
            for (const auto& eq : eqs) out.emplace_back(eq.row.support(), eq.col.support());
            std::sort(out.begin(), out.end());
            out.erase(std::unique(out.begin(), out.end()), out.end());
            return out;
        };
        CHECK(supports(enumerate_mixed_nash(scaled)) == supports(enumerate_mixed_nash(game)));
    }
}

TEST_CASE("certificate replay on random games") {
    StreamRng rng(55, 9);
    for (int trial = 0; trial < 50; ++trial) {
        const auto game = random_game(rng, 2 + rng.next_u64() % 2, 2 + rng.next_u64() % 2);
        for (Player p : {Player::row, Player::col}) {
            for (std::size_t i = 0; i < game.actions(p); ++i) {
                auto cert = strict_domination_certificate(game, p, i);
                if (!cert) continue;
                CHECK(cert->probs[i] == 0);
                CHECK_NOTHROW(cert->validate());
                for (std::size_t j = 0; j < game.actions(opponent_of(p)); ++j) {
                    Rational mix(0);
                    for (std::size_t k = 0; k < game.actions(p); ++k)
                        mix += cert->probs[k] * game.payoff_own(p, k, j);
                    CHECK(mix > game.payoff_own(p, i, j));
                }
            }
        }
    }
}
