#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>
#include <optional>

namespace treemod {

using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

/// Parses "p/q", an integer, or a plain decimal ("1.25", "-0.5") exactly.
/// Returns nullopt on malformed input.
std::optional<Rational> parse_rational(std::string_view text);

/// Always "p/q", including integers ("2/1") and zero ("0/1").
std::string format_rational(const Rational& value);

double to_double(const Rational& value);

/// Smallest-denominator rational within `radius` of `x` (Stern-Brocot /
/// continued-fraction best approximation).
Rational snap_to_rational(double x, double radius);

inline Rational floor_rational(const Rational& value) {
    BigInt q = boost::multiprecision::numerator(value) / boost::multiprecision::denominator(value);
    if (value < 0 && Rational(q) != value) q -= 1;
    return Rational(q);
}

}  // namespace treemod
