#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace roadgames {

// Exact rational number. Every solver in this library computes over these;
// floating point only appears at the simulation and CSV boundary.
using Rational = mpq_class;

// Builds num/den in canonical (reduced) form. Throws DomainError on den == 0.
Rational make_rational(long num, long den);

// Parses "a" or "a/b" with an optional leading sign on the numerator.
// Throws ParseError on anything else, including a zero denominator.
Rational parse_rational(std::string_view text);

// Canonical text form: "n" when the denominator is 1, otherwise "n/d".
std::string to_string(const Rational& value);

double to_double(const Rational& value);

}  // namespace roadgames
