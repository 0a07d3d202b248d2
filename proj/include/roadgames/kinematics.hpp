#pragma once

#include <limits>
#include <optional>

#include "roadgames/errors.hpp"
#include "roadgames/game_tree.hpp"

namespace roadgames {

struct PedestrianParams {
    double lane_width_m = 3.75;
    double walk_speed_mps = 1.4;

    void validate() const;
};

// Deceleration is stored as a positive magnitude; the braking formulas below
// are the signed-acceleration ones rewritten for it. reaction_time_s is 0 for
// an automated vehicle.
struct VehicleParams {
    double distance_m = 0.0;
    double speed_mps = 0.0;
    double decel_mps2 = 2.5;
    double reaction_time_s = 0.0;

    void validate() const;
    VehicleParams with_reaction(double reaction_s) const;
};

// t_a: pedestrian crossing time; t_c: no-brake vehicle arrival;
// t_c_brake: braking arrival, +infinity when the vehicle halts before the
// conflict point.
struct ArrivalTimes {
    double t_a = 0.0;
    double t_c = 0.0;
    double t_c_brake = 0.0;
};

double crossing_time(const PedestrianParams& ped);
double arrival_keep(const VehicleParams& veh);

// Braking arrival time. With reaction time t_r, the vehicle covers
// d_r = v * t_r at full speed first; if d_r already reaches the conflict
// point, braking has no effect and the time is d/v. If the remaining speed
// reaches zero before the point, returns +infinity.
double arrival_brake(const VehicleParams& veh);

ArrivalTimes arrival_times(const PedestrianParams& ped, const VehicleParams& veh);

enum class CrossingCase { cross_keep = 0, cross_brake = 1, out = 2 };

const char* to_string(CrossingCase c);

// Equilibrium case by arrival times: CROSS_KEEP when t_a < t_c, CROSS_BRAKE
// when t_c <= t_a < t_c_brake, OUT when t_a >= t_c_brake. Boundary ties go to
// the braking-safe side.
CrossingCase classify_case(const ArrivalTimes& t);

// Clamp applied to an infinite braking arrival inside leaf payoffs; ordinal
// comparisons are unaffected.
inline constexpr double kBrakeTimeSentinel = 1e4;

// Entry game: the pedestrian picks Out or Cross, then the vehicle picks Brake
// or Keep. Leaf payoffs (pedestrian, vehicle):
//   Out         -> (t_a - t_c_brake, 0)
//   Cross/Keep  -> (t_c - t_a, t_c - t_a)
//   Cross/Brake -> (t_c_brake - t_a, 0)
// The braking-safe action is listed first at each node so that backward
// induction's first-listed tie-break matches classify_case on boundaries.
// When assumed_reaction_s is given, the pedestrian-facing payoff entries are
// computed from arrival times under that reaction time instead of the true
// one (misjudgment modeling); the vehicle's entries always use true times.
GameTree build_entry_game(const PedestrianParams& ped, const VehicleParams& veh,
                          std::optional<double> assumed_reaction_s = std::nullopt);

// The crossing case an SPE strategy walks into, read off the path labels.
CrossingCase entry_case(const GameTree& tree, const StrategyMap& strategy);

}  // namespace roadgames
