#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace toricfano {

using Rational = boost::multiprecision::mpq_rational;
using RationalVector = std::vector<Rational>;

// Canonical reduced form: "p/q", or "p" when q == 1.
std::string to_string(const Rational& q);

// Accepts "p", "p/q", "-p/q" with optional surrounding whitespace.
// Throws InputError on anything else, or on a zero denominator.
Rational parse_rational(std::string_view text);

bool is_integer(const Rational& q);

Rational dot(const RationalVector& a, const RationalVector& b);

double to_double(const Rational& q);

}  // namespace toricfano
