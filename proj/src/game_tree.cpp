#include "roadgames/game_tree.hpp"

namespace roadgames {

NodeId GameTree::add_leaf(double p0, double p1) {
    nodes.push_back(Leaf{{p0, p1}});
    return nodes.size() - 1;
}

NodeId GameTree::add_decision(int player, std::vector<std::pair<std::string, NodeId>> children) {
    nodes.push_back(Decision{player, std::move(children)});
    return nodes.size() - 1;
}

const GameTree::Decision* GameTree::decision(NodeId id) const {
    if (id >= nodes.size()) throw StructureError("node id out of range");
    return std::get_if<Decision>(&nodes[id]);
}

const GameTree::Leaf* GameTree::leaf(NodeId id) const {
    if (id >= nodes.size()) throw StructureError("node id out of range");
    return std::get_if<Leaf>(&nodes[id]);
}

void GameTree::validate() const {
    if (nodes.empty()) throw StructureError("empty tree");
    if (root >= nodes.size()) throw StructureError("root id out of range");
    std::vector<int> visits(nodes.size(), 0);
    std::vector<NodeId> stack{root};
    while (!stack.empty()) {
        NodeId id = stack.back();
        stack.pop_back();
        if (++visits[id] > 1) throw StructureError("node reached more than once");
        if (const auto* d = decision(id)) {
            if (d->player != 0 && d->player != 1)
                throw StructureError("decision player must be 0 or 1");
            if (d->children.empty()) throw StructureError("decision node without children");
            for (const auto& [label, child] : d->children) {
                if (label.empty()) throw StructureError("empty action label");
                if (child >= nodes.size()) throw StructureError("child id out of range");
                stack.push_back(child);
            }
        }
    }
}

namespace {

std::array<double, 2> induction_values(const GameTree& tree, NodeId id, StrategyMap& out) {
    if (const auto* l = tree.leaf(id)) return l->payoffs;
    const auto* d = tree.decision(id);
    std::size_t best = 0;
    std::array<double, 2> best_value{};
    for (std::size_t i = 0; i < d->children.size(); ++i) {
        auto value = induction_values(tree, d->children[i].second, out);
        if (i == 0 || value[d->player] > best_value[d->player]) {
            best = i;
            best_value = value;
        }
    }
    out.choice[id] = best;
    return best_value;
}

// continuation value of every node under a fixed strategy
std::array<double, 2> strategy_values(const GameTree& tree, const StrategyMap& strategy,
                                      NodeId id, std::vector<std::array<double, 2>>& memo,
                                      std::vector<bool>& known) {
    if (known[id]) return memo[id];
    std::array<double, 2> value{};
    if (const auto* l = tree.leaf(id)) {
        value = l->payoffs;
    } else {
        const auto* d = tree.decision(id);
        auto it = strategy.choice.find(id);
        if (it == strategy.choice.end())
            throw StructureError("strategy leaves a decision node uncovered");
        if (it->second >= d->children.size())
            throw StructureError("strategy chooses a nonexistent child");
        value = strategy_values(tree, strategy, d->children[it->second].second, memo, known);
    }
    memo[id] = value;
    known[id] = true;
    return value;
}

}  // namespace

StrategyMap backward_induction(const GameTree& tree) {
    tree.validate();
    StrategyMap out;
    out.leaf_payoffs = induction_values(tree, tree.root, out);
    NodeId id = tree.root;
    out.path.push_back(id);
    while (const auto* d = tree.decision(id)) {
        id = d->children[out.choice.at(id)].second;
        out.path.push_back(id);
    }
    return out;
}

bool verify_spe(const GameTree& tree, const StrategyMap& strategy) {
    tree.validate();
    std::vector<std::array<double, 2>> memo(tree.nodes.size());
    std::vector<bool> known(tree.nodes.size(), false);
    std::vector<NodeId> reachable{tree.root};
    for (std::size_t i = 0; i < reachable.size(); ++i) {
        if (const auto* d = tree.decision(reachable[i]))
            for (const auto& [label, child] : d->children) reachable.push_back(child);
    }
    strategy_values(tree, strategy, tree.root, memo, known);
    for (NodeId id : reachable) {
        const auto* d = tree.decision(id);
        if (!d) continue;
        auto it = strategy.choice.find(id);
        if (it == strategy.choice.end())
            throw StructureError("strategy leaves a decision node uncovered");
        const double chosen =
            strategy_values(tree, strategy, d->children[it->second].second, memo, known)[d->player];
        for (const auto& [label, child] : d->children) {
            if (strategy_values(tree, strategy, child, memo, known)[d->player] > chosen)
                return false;
        }
    }
    return true;
}

}  // namespace roadgames
