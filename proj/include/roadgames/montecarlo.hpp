#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "roadgames/distributions.hpp"
#include "roadgames/kinematics.hpp"
#include "roadgames/scenario.hpp"

namespace roadgames {

// Every experiment here derives one RNG stream per iteration from the
// configured seed, and aggregates integer counts only. Results are therefore
// bit-identical for any worker count; the *_serial variants are plain-loop
// reference implementations of the OpenMP kernels, kept for testing and
// benchmarked against them by tools/mc_bench.

// ---------------------------------------------------------------------------
// AV-share sweep over the zebra-crossing equilibrium
// ---------------------------------------------------------------------------

struct SweepConfig {
    std::uint64_t iterations = 1'000'000;
    std::uint64_t seed = 42;
    int workers = 1;
    std::vector<double> av_share_grid = {0.0, 0.1, 0.2, 0.3, 0.4, 0.5,
                                         0.6, 0.7, 0.8, 0.9, 1.0};
    std::vector<SpeedClassLabel> speed_classes = {SpeedClassLabel::low, SpeedClassLabel::medium,
                                                  SpeedClassLabel::high};
    SeverityScaling severity;

    void validate() const;
};

// Config text (all keys optional):
//   iterations = 1000000
//   seed = 42
//   workers = 1
//   av_share_grid = 0,0.1,...,1
//   speed_classes = low,medium,high
//   severity_low = 3/5
//   severity_high = 8/5
SweepConfig parse_sweep_config(std::string_view text);

struct SweepPoint {
    double av_share = 0.0;
    SpeedClassLabel speed = SpeedClassLabel::medium;
    std::uint64_t iterations = 0;
    std::uint64_t collisions = 0;
    double collision_rate = 0.0;
    double fatality_rate = 0.0;
    double standard_error = 0.0;  // sqrt(rate * (1 - rate) / iterations)
};

struct SweepResult {
    std::vector<SweepPoint> points;
};

// Per grid point: draw the vehicle type from the AV share, sample both
// players' equilibrium actions for the realized type, count collisions.
SweepResult sweep_av_share(const SweepConfig& config);
SweepResult sweep_av_share_serial(const SweepConfig& config);

// fatality_rate := collision_rate * fatality rate of the speed class.
SweepResult fatality_curve(SweepResult sweep);

// CSV schema: p,speed_class,collision_rate,fatality_rate,stderr,iterations
std::string sweep_csv(const SweepResult& result);

// ---------------------------------------------------------------------------
// Entry-game outcome histogram (AV vs human driving profile)
// ---------------------------------------------------------------------------

struct EntryProfile {
    std::string name;           // CSV profile column
    DistributionSpec speed_kmh;
    DistributionSpec reaction_s;
};

struct EntryConfig {
    std::uint64_t iterations = 1'000'000;
    std::uint64_t seed = 42;
    int workers = 1;
    DistributionSpec distance_m = DistributionSpec::uniform(10.0, 50.0);
    double decel_mps2 = 2.5;
    PedestrianParams pedestrian;
    std::vector<EntryProfile> profiles = {
        {"av", DistributionSpec::gaussian(30.0, 10.0, 1.0), DistributionSpec::constant(0.0)},
        {"human", DistributionSpec::gaussian(50.0, 10.0, 1.0), DistributionSpec::constant(1.5)},
    };

    void validate() const;
};

// Config text (all keys optional):
//   iterations, seed, workers
//   distance = uniform(10,50)
//   decel = 2.5
//   lane_width = 3.75
//   walk_speed = 1.4
//   profiles = av,human
//   av.speed = gaussian(30,10,1)
//   av.reaction = constant(0)
//   human.speed = gaussian(50,10,1)
//   human.reaction = constant(1.5)
EntryConfig parse_entry_config(std::string_view text);

struct OutcomeHistogram {
    std::string profile;
    std::uint64_t iterations = 0;
    std::array<std::uint64_t, 3> cases{};  // indexed by CrossingCase
    bool reaction_experiment = false;      // carries the three fields below
    std::uint64_t collisions = 0;
    std::uint64_t misjudged = 0;      // assumed < actual reaction and crossed
    std::uint64_t misjudged_any = 0;  // assumed < actual reaction, crossed or not

    std::uint64_t count(CrossingCase c) const { return cases[static_cast<std::size_t>(c)]; }
    double fraction(CrossingCase c) const;
    double standard_error(CrossingCase c) const;  // sqrt(f * (1 - f) / iterations)
    double cross_fraction() const;                // CROSS_KEEP + CROSS_BRAKE
};

std::vector<OutcomeHistogram> entry_histogram(const EntryConfig& config);
std::vector<OutcomeHistogram> entry_histogram_serial(const EntryConfig& config);

// CSV schema: profile,case,count,fraction; entry rows carry the three cases,
// misjudgment rows add COLLISION / MISJUDGED / MISJUDGED_ANY.
std::string histogram_csv(const std::vector<OutcomeHistogram>& histograms);

// ---------------------------------------------------------------------------
// Reaction-time misjudgment experiment
// ---------------------------------------------------------------------------

struct MisjudgeConfig {
    std::uint64_t iterations = 1'000'000;
    std::uint64_t seed = 42;
    int workers = 1;
    DistributionSpec distance_m = DistributionSpec::uniform(10.0, 50.0);
    DistributionSpec speed_kmh = DistributionSpec::gaussian(50.0, 10.0, 1.0);
    DistributionSpec reaction_s = DistributionSpec::shifted_exponential(0.8, 0.2);
    // The pedestrian plans for the worst-case driver reaction from the main
    // human-driver experiment. With the actual reaction at 0.8 + Exp(mean
    // 0.2) s this undershoots reality about 3% of the time and roughly
    // 0.036% of episodes end in a collision.
    double assumed_reaction_s = 1.5;
    double decel_mps2 = 2.5;
    PedestrianParams pedestrian;

    void validate() const;
};

// Config text (all keys optional): iterations, seed, workers,
// distance, speed, reaction, assumed_reaction, decel, lane_width, walk_speed.
MisjudgeConfig parse_misjudge_config(std::string_view text);

// The pedestrian classifies the situation with the assumed reaction time; the
// vehicle's true arrival uses the sampled one. A collision is a crossing with
// true arrival before t_a; a misjudgment is a crossing whose assumed reaction
// time undershot the actual one.
OutcomeHistogram misjudgment_experiment(const MisjudgeConfig& config);
OutcomeHistogram misjudgment_experiment_serial(const MisjudgeConfig& config);

inline constexpr double kKmhToMps = 1.0 / 3.6;

}  // namespace roadgames
