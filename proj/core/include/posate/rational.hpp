#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace posate {

using Integer = boost::multiprecision::mpz_int;

/// Exact rational number, always in lowest terms with positive denominator.
using Rational = boost::multiprecision::mpq_rational;

using Vector = std::vector<Rational>;

/// Parses `p`, `-p`, `p/q` (q > 0). Throws ParseError on anything else.
Rational parse_rational(std::string_view text);

/// `p` when the denominator is 1, otherwise `p/q`.
std::string to_string(const Rational& value);

/// "(a,b,c)" with each entry in to_string form.
std::string to_string(const Vector& values);

bool denominator_is_power_of_two(const Rational& value);

Integer ceil(const Rational& value);
Rational abs(const Rational& value);
int sign(const Rational& value);

Rational dot(const Vector& a, const Vector& b);

}  // namespace posate
