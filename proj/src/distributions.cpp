#include "roadgames/distributions.hpp"

#include <cstdio>
#include <vector>

namespace roadgames {

double normal_pdf(double x, double mean, double sd) {
    const double z = (x - mean) / sd;
    return std::exp(-0.5 * z * z) / (sd * 2.5066282746310005024);
}

double normal_cdf(double x, double mean, double sd) {
    return 0.5 * std::erfc(-(x - mean) / (sd * 1.4142135623730950488));
}

double truncated_gaussian_mean(double mean, double sd, double lo) {
    if (std::isinf(lo) && lo < 0) return mean;
    const double alpha = (lo - mean) / sd;
    const double tail = 0.5 * std::erfc(alpha / 1.4142135623730950488);
    return mean + sd * normal_pdf(alpha, 0.0, 1.0) / tail;
}

DistributionSpec DistributionSpec::constant(double value) {
    DistributionSpec d;
    d.kind = Kind::constant;
    d.a = value;
    d.validate();
    return d;
}

DistributionSpec DistributionSpec::uniform(double lo, double hi) {
    DistributionSpec d;
    d.kind = Kind::uniform;
    d.a = lo;
    d.b = hi;
    d.validate();
    return d;
}

DistributionSpec DistributionSpec::gaussian(double mean, double sd, double truncated_below) {
    DistributionSpec d;
    d.kind = Kind::gaussian;
    d.a = mean;
    d.b = sd;
    d.c = truncated_below;
    d.validate();
    return d;
}

DistributionSpec DistributionSpec::shifted_exponential(double shift, double mean) {
    DistributionSpec d;
    d.kind = Kind::shifted_exponential;
    d.a = shift;
    d.b = mean;
    d.validate();
    return d;
}

void DistributionSpec::validate() const {
    switch (kind) {
        case Kind::constant:
            if (!std::isfinite(a)) throw DomainError("constant distribution needs a finite value");
            return;
        case Kind::uniform:
            if (!(a < b)) throw DomainError("uniform distribution needs lo < hi");
            return;
        case Kind::gaussian:
            if (!(b > 0.0)) throw DomainError("gaussian distribution needs sd > 0");
            if (!(c < a)) throw DomainError("gaussian truncation bound must lie below the mean");
            return;
        case Kind::shifted_exponential:
            if (!(b > 0.0)) throw DomainError("shifted_exponential needs mean > 0");
            return;
    }
    throw DomainError("bad distribution kind");
}

double DistributionSpec::mean() const {
    switch (kind) {
        case Kind::constant: return a;
        case Kind::uniform: return 0.5 * (a + b);
        case Kind::gaussian: return truncated_gaussian_mean(a, b, c);
        case Kind::shifted_exponential: return a + b;
    }
    throw DomainError("bad distribution kind");
}

namespace {

std::string format_number(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

}  // namespace

std::string DistributionSpec::to_text() const {
    switch (kind) {
        case Kind::constant:
            return "constant(" + format_number(a) + ")";
        case Kind::uniform:
            return "uniform(" + format_number(a) + "," + format_number(b) + ")";
        case Kind::gaussian:
            if (std::isinf(c)) return "gaussian(" + format_number(a) + "," + format_number(b) + ")";
            return "gaussian(" + format_number(a) + "," + format_number(b) + "," +
                   format_number(c) + ")";
        case Kind::shifted_exponential:
            return "shifted_exponential(" + format_number(a) + "," + format_number(b) + ")";
    }
    throw DomainError("bad distribution kind");
}

DistributionSpec parse_distribution(std::string_view text, const std::string& field) {
    auto fail = [&](const std::string& why) -> ParseError {
        return ParseError(field + ": " + why + " in '" + std::string(text) + "'");
    };
    const auto open = text.find('(');
    if (open == std::string_view::npos || text.back() != ')')
        throw fail("expected name(args)");
    const std::string name{text.substr(0, open)};
    std::string_view body = text.substr(open + 1, text.size() - open - 2);
    std::vector<double> args;
    while (!body.empty()) {
        const auto comma = body.find(',');
        const std::string token{body.substr(0, comma)};
        try {
            std::size_t used = 0;
            args.push_back(std::stod(token, &used));
            if (used != token.size()) throw std::invalid_argument(token);
        } catch (const std::exception&) {
            throw fail("bad number '" + token + "'");
        }
        if (comma == std::string_view::npos) break;
        body.remove_prefix(comma + 1);
    }
    try {
        if (name == "constant" && args.size() == 1) return DistributionSpec::constant(args[0]);
        if (name == "uniform" && args.size() == 2)
            return DistributionSpec::uniform(args[0], args[1]);
        if (name == "gaussian" && args.size() == 2)
            return DistributionSpec::gaussian(args[0], args[1]);
        if (name == "gaussian" && args.size() == 3)
            return DistributionSpec::gaussian(args[0], args[1], args[2]);
        if (name == "shifted_exponential" && args.size() == 2)
            return DistributionSpec::shifted_exponential(args[0], args[1]);
    } catch (const DomainError& err) {
        throw fail(err.what());
    }
    throw fail("unknown distribution or wrong argument count");
}

}  // namespace roadgames
