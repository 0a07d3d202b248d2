#pragma once

#include <cmath>
#include <string>
#include <string_view>

#include "roadgames/errors.hpp"
#include "roadgames/rng.hpp"

namespace roadgames {

double normal_pdf(double x, double mean, double sd);
double normal_cdf(double x, double mean, double sd);

// Mean of a gaussian truncated below at `lo`.
double truncated_gaussian_mean(double mean, double sd, double lo);

// One gaussian draw via Box-Muller; consumes exactly two uniforms.
inline double gaussian_sample(StreamRng& rng, double mean, double sd) {
    const double u1 = rng.next_unit_open();
    const double u2 = rng.next_unit();
    return mean + sd * std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586477 * u2);
}

// Parametric sampling distribution for simulation inputs.
//   constant(v)
//   uniform(lo, hi)
//   gaussian(mean, sd[, truncated_below])
//   shifted_exponential(shift, mean)      -- shift + Exp with the given mean
struct DistributionSpec {
    enum class Kind { constant, uniform, gaussian, shifted_exponential };

    Kind kind = Kind::constant;
    double a = 0.0;
    double b = 0.0;
    double c = -std::numeric_limits<double>::infinity();  // gaussian truncation bound

    static DistributionSpec constant(double value);
    static DistributionSpec uniform(double lo, double hi);
    static DistributionSpec gaussian(double mean, double sd,
                                     double truncated_below = -std::numeric_limits<double>::infinity());
    static DistributionSpec shifted_exponential(double shift, double mean);

    void validate() const;
    double mean() const;  // analytic, truncation included

    double sample(StreamRng& rng) const {
        switch (kind) {
            case Kind::constant:
                return a;
            case Kind::uniform:
                return a + (b - a) * rng.next_unit();
            case Kind::gaussian: {
                for (;;) {
                    const double x = gaussian_sample(rng, a, b);
                    if (x > c) return x;
                }
            }
            case Kind::shifted_exponential:
                return a - b * std::log(rng.next_unit_open());
        }
        throw DomainError("bad distribution kind");
    }

    std::string to_text() const;
    bool operator==(const DistributionSpec&) const = default;
};

// Parses the forms listed above; error messages name the field via `field`.
DistributionSpec parse_distribution(std::string_view text, const std::string& field);

}  // namespace roadgames
