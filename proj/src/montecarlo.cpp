#include "roadgames/montecarlo.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "roadgames/config.hpp"
#include "roadgames/solver.hpp"

namespace roadgames {

namespace {

std::string format_number(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

double binomial_stderr(double rate, std::uint64_t n) {
    return std::sqrt(rate * (1.0 - rate) / static_cast<double>(n));
}

// Cumulative action distribution of one mixed strategy, as doubles; the last
// entry is pinned to 1 so a unit draw always lands.
std::vector<double> cumulative(const MixedStrategy& strategy) {
    std::vector<double> cum;
    cum.reserve(strategy.probs.size());
    Rational run(0);
    for (const auto& p : strategy.probs) {
        run += p;
        cum.push_back(to_double(run));
    }
    cum.back() = 1.0;
    return cum;
}

std::size_t sample_index(const std::vector<double>& cum, double u) {
    for (std::size_t i = 0; i + 1 < cum.size(); ++i)
        if (u < cum[i]) return i;
    return cum.size() - 1;
}

}  // namespace

// ---------------------------------------------------------------------------
// Sweep
// ---------------------------------------------------------------------------

void SweepConfig::validate() const {
    if (iterations < 1) throw DomainError("iterations must be positive");
    if (workers < 1) throw DomainError("workers must be positive");
    if (av_share_grid.empty()) throw DomainError("av_share_grid must be nonempty");
    for (double p : av_share_grid)
        if (!(p >= 0.0 && p <= 1.0)) throw DomainError("av_share values must lie in [0,1]");
    if (speed_classes.empty()) throw DomainError("speed_classes must be nonempty");
}

namespace {

struct ZebraSamplers {
    // per type: cumulative row/col strategies and the collision mask
    std::array<std::vector<double>, 2> row_cum;
    std::array<std::vector<double>, 2> col_cum;
    std::array<std::array<bool, 6>, 2> collision{};  // 3x2 cells row-major
};

ZebraSamplers make_zebra_samplers(SpeedClassLabel speed, const SeverityScaling& severity) {
    const TypeContingentProfile eq = zebra_equilibrium(speed, severity);
    const auto cells = zebra_collision_cells();
    ZebraSamplers s;
    for (std::size_t t = 0; t < 2; ++t) {
        s.row_cum[t] = cumulative(eq.per_type[t].row);
        s.col_cum[t] = cumulative(eq.per_type[t].col);
        for (const auto& cell : cells[t]) s.collision[t][cell.row * 2 + cell.col] = true;
    }
    return s;
}

// One zebra interaction: nature draws the type, both players draw their
// equilibrium actions; reports whether the outcome cell is a collision.
inline bool sweep_iteration(std::uint64_t seed, std::uint64_t stream, double av_share,
                            const ZebraSamplers& s) {
    StreamRng rng(seed, stream);
    const std::size_t type = rng.next_unit() < av_share ? 0 : 1;
    const std::size_t row = sample_index(s.row_cum[type], rng.next_unit());
    const std::size_t col = sample_index(s.col_cum[type], rng.next_unit());
    return s.collision[type][row * 2 + col];
}

template <bool Parallel>
SweepResult run_sweep(const SweepConfig& config) {
    config.validate();
    SweepResult result;
    std::uint64_t point_index = 0;
    for (SpeedClassLabel speed : config.speed_classes) {
        const ZebraSamplers samplers = make_zebra_samplers(speed, config.severity);
        for (double p : config.av_share_grid) {
            const std::uint64_t base = point_index * config.iterations;
            const std::int64_t n = static_cast<std::int64_t>(config.iterations);
            std::uint64_t collisions = 0;
            if constexpr (Parallel) {
#pragma omp parallel for schedule(static) num_threads(config.workers) reduction(+ : collisions)
                for (std::int64_t k = 0; k < n; ++k)
                    collisions += sweep_iteration(config.seed, base + static_cast<std::uint64_t>(k),
                                                  p, samplers)
                                      ? 1u
                                      : 0u;
            } else {
                for (std::int64_t k = 0; k < n; ++k)
                    collisions += sweep_iteration(config.seed, base + static_cast<std::uint64_t>(k),
                                                  p, samplers)
                                      ? 1u
                                      : 0u;
            }
            SweepPoint point;
            point.av_share = p;
            point.speed = speed;
            point.iterations = config.iterations;
            point.collisions = collisions;
            point.collision_rate =
                static_cast<double>(collisions) / static_cast<double>(config.iterations);
            point.standard_error = binomial_stderr(point.collision_rate, config.iterations);
            result.points.push_back(point);
            ++point_index;
        }
    }
    return result;
}

}  // namespace

SweepResult sweep_av_share(const SweepConfig& config) { return run_sweep<true>(config); }

SweepResult sweep_av_share_serial(const SweepConfig& config) { return run_sweep<false>(config); }

SweepResult fatality_curve(SweepResult sweep) {
    for (auto& point : sweep.points)
        point.fatality_rate = point.collision_rate * speed_class(point.speed).fatality_rate;
    return sweep;
}

std::string sweep_csv(const SweepResult& result) {
    std::ostringstream out;
    out << "p,speed_class,collision_rate,fatality_rate,stderr,iterations\n";
    for (const auto& point : result.points) {
        out << format_number(point.av_share) << ',' << to_string(point.speed) << ','
            << format_number(point.collision_rate) << ',' << format_number(point.fatality_rate)
            << ',' << format_number(point.standard_error) << ',' << point.iterations << '\n';
    }
    return out.str();
}

SweepConfig parse_sweep_config(std::string_view text) {
    ConfigReader reader(text);
    SweepConfig config;
    config.iterations = static_cast<std::uint64_t>(
        reader.take_int("iterations", static_cast<long long>(config.iterations)));
    config.seed = static_cast<std::uint64_t>(
        reader.take_int("seed", static_cast<long long>(config.seed)));
    config.workers = static_cast<int>(reader.take_int("workers", config.workers));
    if (reader.has("av_share_grid")) {
        config.av_share_grid.clear();
        for (const auto& item : reader.take_list("av_share_grid")) {
            try {
                config.av_share_grid.push_back(std::stod(item));
            } catch (const std::exception&) {
                throw ParseError("av_share_grid: bad number '" + item + "'");
            }
        }
    }
    if (reader.has("speed_classes")) {
        config.speed_classes.clear();
        for (const auto& item : reader.take_list("speed_classes"))
            config.speed_classes.push_back(parse_speed_class(item));
    }
    try {
        if (reader.has("severity_low"))
            config.severity.low = parse_rational(reader.take("severity_low", ""));
        if (reader.has("severity_high"))
            config.severity.high = parse_rational(reader.take("severity_high", ""));
    } catch (const ParseError& err) {
        throw ParseError(std::string("sweep config: ") + err.what());
    }
    reader.finish();
    config.validate();
    return config;
}

// ---------------------------------------------------------------------------
// Entry histogram
// ---------------------------------------------------------------------------

void EntryConfig::validate() const {
    if (iterations < 1) throw DomainError("iterations must be positive");
    if (workers < 1) throw DomainError("workers must be positive");
    if (!(decel_mps2 > 0.0)) throw DomainError("decel must be positive");
    if (profiles.empty()) throw DomainError("profiles must be nonempty");
    pedestrian.validate();
    distance_m.validate();
    for (const auto& profile : profiles) {
        profile.speed_kmh.validate();
        profile.reaction_s.validate();
    }
}

double OutcomeHistogram::fraction(CrossingCase c) const {
    return static_cast<double>(count(c)) / static_cast<double>(iterations);
}

double OutcomeHistogram::standard_error(CrossingCase c) const {
    return binomial_stderr(fraction(c), iterations);
}

double OutcomeHistogram::cross_fraction() const {
    return fraction(CrossingCase::cross_keep) + fraction(CrossingCase::cross_brake);
}

namespace {

inline CrossingCase entry_iteration(std::uint64_t seed, std::uint64_t stream,
                                    const EntryConfig& config, const EntryProfile& profile) {
    StreamRng rng(seed, stream);
    VehicleParams veh;
    veh.distance_m = config.distance_m.sample(rng);
    veh.speed_mps = profile.speed_kmh.sample(rng) * kKmhToMps;
    veh.decel_mps2 = config.decel_mps2;
    veh.reaction_time_s = profile.reaction_s.sample(rng);
    return classify_case(arrival_times(config.pedestrian, veh));
}

template <bool Parallel>
std::vector<OutcomeHistogram> run_entry(const EntryConfig& config) {
    config.validate();
    std::vector<OutcomeHistogram> out;
    for (std::size_t pi = 0; pi < config.profiles.size(); ++pi) {
        const EntryProfile& profile = config.profiles[pi];
        const std::uint64_t base = pi * config.iterations;
        const std::int64_t n = static_cast<std::int64_t>(config.iterations);
        std::uint64_t keep = 0, brake = 0, stay_out = 0;
        if constexpr (Parallel) {
#pragma omp parallel for schedule(static) num_threads(config.workers) \
    reduction(+ : keep, brake, stay_out)
            for (std::int64_t k = 0; k < n; ++k) {
                switch (entry_iteration(config.seed, base + static_cast<std::uint64_t>(k), config,
                                        profile)) {
                    case CrossingCase::cross_keep: ++keep; break;
                    case CrossingCase::cross_brake: ++brake; break;
                    case CrossingCase::out: ++stay_out; break;
                }
            }
        } else {
            for (std::int64_t k = 0; k < n; ++k) {
                switch (entry_iteration(config.seed, base + static_cast<std::uint64_t>(k), config,
                                        profile)) {
                    case CrossingCase::cross_keep: ++keep; break;
                    case CrossingCase::cross_brake: ++brake; break;
                    case CrossingCase::out: ++stay_out; break;
                }
            }
        }
        OutcomeHistogram hist;
        hist.profile = profile.name;
        hist.iterations = config.iterations;
        hist.cases = {keep, brake, stay_out};
        out.push_back(std::move(hist));
    }
    return out;
}

}  // namespace

std::vector<OutcomeHistogram> entry_histogram(const EntryConfig& config) {
    return run_entry<true>(config);
}

std::vector<OutcomeHistogram> entry_histogram_serial(const EntryConfig& config) {
    return run_entry<false>(config);
}

std::string histogram_csv(const std::vector<OutcomeHistogram>& histograms) {
    std::ostringstream out;
    out << "profile,case,count,fraction\n";
    auto row = [&](const OutcomeHistogram& h, const char* label, std::uint64_t count) {
        out << h.profile << ',' << label << ',' << count << ','
            << format_number(static_cast<double>(count) / static_cast<double>(h.iterations))
            << '\n';
    };
    for (const auto& h : histograms) {
        for (CrossingCase c :
             {CrossingCase::cross_keep, CrossingCase::cross_brake, CrossingCase::out})
            row(h, to_string(c), h.count(c));
        if (h.reaction_experiment) {
            row(h, "COLLISION", h.collisions);
            row(h, "MISJUDGED", h.misjudged);
            row(h, "MISJUDGED_ANY", h.misjudged_any);
        }
    }
    return out.str();
}

EntryConfig parse_entry_config(std::string_view text) {
    ConfigReader reader(text);
    EntryConfig config;
    config.iterations = static_cast<std::uint64_t>(
        reader.take_int("iterations", static_cast<long long>(config.iterations)));
    config.seed = static_cast<std::uint64_t>(
        reader.take_int("seed", static_cast<long long>(config.seed)));
    config.workers = static_cast<int>(reader.take_int("workers", config.workers));
    if (reader.has("distance"))
        config.distance_m = parse_distribution(reader.take("distance", ""), "distance");
    config.decel_mps2 = reader.take_double("decel", config.decel_mps2);
    config.pedestrian.lane_width_m =
        reader.take_double("lane_width", config.pedestrian.lane_width_m);
    config.pedestrian.walk_speed_mps =
        reader.take_double("walk_speed", config.pedestrian.walk_speed_mps);
    if (reader.has("profiles")) {
        std::vector<EntryProfile> chosen;
        for (const auto& name : reader.take_list("profiles")) {
            bool found = false;
            for (const auto& profile : config.profiles) {
                if (profile.name == name) {
                    chosen.push_back(profile);
                    found = true;
                    break;
                }
            }
            if (!found) throw ParseError("profiles: unknown profile '" + name + "'");
        }
        config.profiles = std::move(chosen);
    }
    for (auto& profile : config.profiles) {
        const std::string speed_key = profile.name + ".speed";
        const std::string reaction_key = profile.name + ".reaction";
        if (reader.has(speed_key))
            profile.speed_kmh = parse_distribution(reader.take(speed_key, ""), speed_key);
        if (reader.has(reaction_key))
            profile.reaction_s = parse_distribution(reader.take(reaction_key, ""), reaction_key);
    }
    reader.finish();
    config.validate();
    return config;
}

// ---------------------------------------------------------------------------
// Misjudgment experiment
// ---------------------------------------------------------------------------

void MisjudgeConfig::validate() const {
    if (iterations < 1) throw DomainError("iterations must be positive");
    if (workers < 1) throw DomainError("workers must be positive");
    if (!(decel_mps2 > 0.0)) throw DomainError("decel must be positive");
    if (!(assumed_reaction_s >= 0.0)) throw DomainError("assumed_reaction must be nonnegative");
    pedestrian.validate();
    distance_m.validate();
    speed_kmh.validate();
    reaction_s.validate();
}

namespace {

struct MisjudgeOutcome {
    CrossingCase decided;
    bool collision;
    bool misjudged;
    bool misjudged_any;
};

inline MisjudgeOutcome misjudge_iteration(std::uint64_t seed, std::uint64_t stream,
                                          const MisjudgeConfig& config) {
    StreamRng rng(seed, stream);
    VehicleParams veh;
    veh.distance_m = config.distance_m.sample(rng);
    veh.speed_mps = config.speed_kmh.sample(rng) * kKmhToMps;
    veh.decel_mps2 = config.decel_mps2;
    veh.reaction_time_s = config.reaction_s.sample(rng);

    // the pedestrian reasons with the assumed reaction time
    const ArrivalTimes assumed =
        arrival_times(config.pedestrian, veh.with_reaction(config.assumed_reaction_s));
    const CrossingCase decided = classify_case(assumed);

    MisjudgeOutcome outcome{decided, false, false, false};
    outcome.misjudged_any = config.assumed_reaction_s < veh.reaction_time_s;
    if (decided == CrossingCase::out) return outcome;
    outcome.misjudged = outcome.misjudged_any;

    // the vehicle plays the true game: keep when it passes first, else brake
    const double true_arrival =
        assumed.t_a < assumed.t_c ? assumed.t_c : arrival_brake(veh);
    outcome.collision = true_arrival < assumed.t_a;
    return outcome;
}

template <bool Parallel>
OutcomeHistogram run_misjudge(const MisjudgeConfig& config) {
    config.validate();
    const std::int64_t n = static_cast<std::int64_t>(config.iterations);
    std::uint64_t keep = 0, brake = 0, stay_out = 0, collisions = 0, misjudged = 0,
                  misjudged_any = 0;
    if constexpr (Parallel) {
#pragma omp parallel for schedule(static) num_threads(config.workers) \
    reduction(+ : keep, brake, stay_out, collisions, misjudged, misjudged_any)
        for (std::int64_t k = 0; k < n; ++k) {
            const MisjudgeOutcome o =
                misjudge_iteration(config.seed, static_cast<std::uint64_t>(k), config);
            switch (o.decided) {
                case CrossingCase::cross_keep: ++keep; break;
                case CrossingCase::cross_brake: ++brake; break;
                case CrossingCase::out: ++stay_out; break;
            }
            collisions += o.collision ? 1u : 0u;
            misjudged += o.misjudged ? 1u : 0u;
            misjudged_any += o.misjudged_any ? 1u : 0u;
        }
    } else {
        for (std::int64_t k = 0; k < n; ++k) {
            const MisjudgeOutcome o =
                misjudge_iteration(config.seed, static_cast<std::uint64_t>(k), config);
            switch (o.decided) {
                case CrossingCase::cross_keep: ++keep; break;
                case CrossingCase::cross_brake: ++brake; break;
                case CrossingCase::out: ++stay_out; break;
            }
            collisions += o.collision ? 1u : 0u;
            misjudged += o.misjudged ? 1u : 0u;
            misjudged_any += o.misjudged_any ? 1u : 0u;
        }
    }
    OutcomeHistogram hist;
    hist.profile = "misjudge";
    hist.iterations = config.iterations;
    hist.cases = {keep, brake, stay_out};
    hist.reaction_experiment = true;
    hist.collisions = collisions;
    hist.misjudged = misjudged;
    hist.misjudged_any = misjudged_any;
    return hist;
}

}  // namespace

OutcomeHistogram misjudgment_experiment(const MisjudgeConfig& config) {
    return run_misjudge<true>(config);
}

OutcomeHistogram misjudgment_experiment_serial(const MisjudgeConfig& config) {
    return run_misjudge<false>(config);
}

MisjudgeConfig parse_misjudge_config(std::string_view text) {
    ConfigReader reader(text);
    MisjudgeConfig config;
    config.iterations = static_cast<std::uint64_t>(
        reader.take_int("iterations", static_cast<long long>(config.iterations)));
    config.seed = static_cast<std::uint64_t>(
        reader.take_int("seed", static_cast<long long>(config.seed)));
    config.workers = static_cast<int>(reader.take_int("workers", config.workers));
    if (reader.has("distance"))
        config.distance_m = parse_distribution(reader.take("distance", ""), "distance");
    if (reader.has("speed"))
        config.speed_kmh = parse_distribution(reader.take("speed", ""), "speed");
    if (reader.has("reaction"))
        config.reaction_s = parse_distribution(reader.take("reaction", ""), "reaction");
    config.assumed_reaction_s = reader.take_double("assumed_reaction", config.assumed_reaction_s);
    config.decel_mps2 = reader.take_double("decel", config.decel_mps2);
    config.pedestrian.lane_width_m =
        reader.take_double("lane_width", config.pedestrian.lane_width_m);
    config.pedestrian.walk_speed_mps =
        reader.take_double("walk_speed", config.pedestrian.walk_speed_mps);
    reader.finish();
    config.validate();
    return config;
}

}  // namespace roadgames
