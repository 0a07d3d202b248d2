#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "roadgames/errors.hpp"

namespace roadgames {

using NodeId = std::size_t;

// Finite two-player perfect-information game tree. Leaf payoffs are
// real-valued (the entry game uses time differences in seconds).
struct GameTree {
    struct Leaf {
        std::array<double, 2> payoffs{0.0, 0.0};
    };
    struct Decision {
        int player = 0;  // 0 or 1
        std::vector<std::pair<std::string, NodeId>> children;
    };
    using Node = std::variant<Leaf, Decision>;

    std::vector<Node> nodes;
    NodeId root = 0;

    NodeId add_leaf(double p0, double p1);
    NodeId add_decision(int player, std::vector<std::pair<std::string, NodeId>> children);

    const Decision* decision(NodeId id) const;
    const Leaf* leaf(NodeId id) const;

    // Tree-shaped (every node reached exactly once from the root), players in
    // {0,1}, every decision node has a child. Throws StructureError.
    void validate() const;
};

// A pure strategy for both players: a chosen child ordinal for every decision
// node, on and off the induced path.
struct StrategyMap {
    std::map<NodeId, std::size_t> choice;
    std::vector<NodeId> path;             // root to the reached leaf
    std::array<double, 2> leaf_payoffs{};  // payoffs at that leaf
};

// Subgame perfect equilibrium by backward induction. Payoff ties break to the
// first-listed child, which makes the result deterministic.
StrategyMap backward_induction(const GameTree& tree);

// One-shot-deviation check, independent of backward_induction: true iff at
// every decision node the prescribed child maximizes that player's
// continuation value under the strategy. Throws StructureError when the
// strategy leaves a decision node uncovered.
bool verify_spe(const GameTree& tree, const StrategyMap& strategy);

}  // namespace roadgames
