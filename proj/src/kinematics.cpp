#include "roadgames/kinematics.hpp"

#include <algorithm>
#include <cmath>

namespace roadgames {

void PedestrianParams::validate() const {
    if (!(lane_width_m > 0.0)) throw DomainError("lane_width must be positive");
    if (!(walk_speed_mps > 0.0)) throw DomainError("walk_speed must be positive");
}

void VehicleParams::validate() const {
    if (!(distance_m > 0.0)) throw DomainError("distance must be positive");
    if (!(speed_mps > 0.0)) throw DomainError("speed must be positive");
    if (!(decel_mps2 > 0.0)) throw DomainError("decel must be positive");
    if (!(reaction_time_s >= 0.0)) throw DomainError("reaction_time must be nonnegative");
}

VehicleParams VehicleParams::with_reaction(double reaction_s) const {
    VehicleParams out = *this;
    out.reaction_time_s = reaction_s;
    return out;
}

double crossing_time(const PedestrianParams& ped) {
    ped.validate();
    return ped.lane_width_m / ped.walk_speed_mps;
}

double arrival_keep(const VehicleParams& veh) {
    veh.validate();
    return veh.distance_m / veh.speed_mps;
}

double arrival_brake(const VehicleParams& veh) {
    veh.validate();
    const double reaction_distance = veh.speed_mps * veh.reaction_time_s;
    if (veh.reaction_time_s > 0.0 && reaction_distance >= veh.distance_m)
        return veh.distance_m / veh.speed_mps;  // passes the point before braking starts
    const double braking_distance = veh.distance_m - reaction_distance;
    const double disc = veh.speed_mps * veh.speed_mps - 2.0 * veh.decel_mps2 * braking_distance;
    if (disc < 0.0) return std::numeric_limits<double>::infinity();  // halts short of the point
    return veh.reaction_time_s + (veh.speed_mps - std::sqrt(disc)) / veh.decel_mps2;
}

ArrivalTimes arrival_times(const PedestrianParams& ped, const VehicleParams& veh) {
    return ArrivalTimes{crossing_time(ped), arrival_keep(veh), arrival_brake(veh)};
}

const char* to_string(CrossingCase c) {
    switch (c) {
        case CrossingCase::cross_keep: return "CROSS_KEEP";
        case CrossingCase::cross_brake: return "CROSS_BRAKE";
        case CrossingCase::out: return "OUT";
    }
    throw DomainError("bad crossing case");
}

CrossingCase classify_case(const ArrivalTimes& t) {
    if (t.t_a < t.t_c) return CrossingCase::cross_keep;
    if (t.t_a < t.t_c_brake) return CrossingCase::cross_brake;
    return CrossingCase::out;
}

GameTree build_entry_game(const PedestrianParams& ped, const VehicleParams& veh,
                          std::optional<double> assumed_reaction_s) {
    const ArrivalTimes true_times = arrival_times(ped, veh);
    const ArrivalTimes ped_times =
        assumed_reaction_s ? arrival_times(ped, veh.with_reaction(*assumed_reaction_s))
                           : true_times;
    const double brake_clamped = std::min(ped_times.t_c_brake, kBrakeTimeSentinel);

    GameTree tree;
    const NodeId out_leaf = tree.add_leaf(ped_times.t_a - brake_clamped, 0.0);
    const NodeId brake_leaf = tree.add_leaf(brake_clamped - ped_times.t_a, 0.0);
    const NodeId keep_leaf =
        tree.add_leaf(ped_times.t_c - ped_times.t_a, true_times.t_c - true_times.t_a);
    const NodeId vehicle_node =
        tree.add_decision(1, {{"Brake", brake_leaf}, {"Keep", keep_leaf}});
    tree.root = tree.add_decision(0, {{"Out", out_leaf}, {"Cross", vehicle_node}});
    return tree;
}

CrossingCase entry_case(const GameTree& tree, const StrategyMap& strategy) {
    NodeId id = tree.root;
    while (const auto* d = tree.decision(id)) {
        auto it = strategy.choice.find(id);
        if (it == strategy.choice.end() || it->second >= d->children.size())
            throw StructureError("strategy does not cover the entry-game path");
        const auto& [label, child] = d->children[it->second];
        if (label == "Out") return CrossingCase::out;
        if (label == "Keep") return CrossingCase::cross_keep;
        if (label == "Brake") return CrossingCase::cross_brake;
        id = child;
    }
    throw StructureError("tree is not an entry game");
}

}  // namespace roadgames
