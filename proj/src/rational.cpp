#include "treemod/rational.hpp"

#include <cctype>
#include <cmath>

namespace treemod {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

// mpz reads a leading 0 as an octal prefix.
BigInt from_digits(std::string_view s) {
    auto first = s.find_first_not_of('0');
    if (first == std::string_view::npos) return BigInt(0);
    return BigInt(std::string(s.substr(first)));
}

std::optional<Rational> parse_unsigned_decimal(std::string_view s) {
    auto dot = s.find('.');
    std::string_view whole = s.substr(0, dot);
    std::string_view frac = dot == std::string_view::npos ? std::string_view{} : s.substr(dot + 1);
    if (dot != std::string_view::npos && whole.empty() && frac.empty()) return std::nullopt;
    if (!whole.empty() && !all_digits(whole)) return std::nullopt;
    if (dot != std::string_view::npos && !frac.empty() && !all_digits(frac)) return std::nullopt;
    if (whole.empty() && frac.empty()) return std::nullopt;

    std::string digits = std::string(whole) + std::string(frac);
    if (digits.empty()) return std::nullopt;
    BigInt num = from_digits(digits);
    BigInt den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    return Rational(num, den);
}

// Simplest rational in the closed interval [lo, hi], 0 < lo <= hi.
Rational simplest_positive(const Rational& lo, const Rational& hi) {
    Rational fl = floor_rational(lo);
    if (fl == lo) return lo;
    if (fl + 1 <= hi) return fl + 1;
    return fl + 1 / simplest_positive(1 / (hi - fl), 1 / (lo - fl));
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text) {
    if (text.empty()) return std::nullopt;
    bool negative = false;
    if (text.front() == '-' || text.front() == '+') {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    auto slash = text.find('/');
    Rational value;
    if (slash != std::string_view::npos) {
        auto p = text.substr(0, slash);
        auto q = text.substr(slash + 1);
        if (!all_digits(p) || !all_digits(q)) return std::nullopt;
        BigInt den = from_digits(q);
        if (den == 0) return std::nullopt;
        value = Rational(from_digits(p), den);
    } else {
        auto parsed = parse_unsigned_decimal(text);
        if (!parsed) return std::nullopt;
        value = *parsed;
    }
    return negative ? Rational(-value) : value;
}

std::string format_rational(const Rational& value) {
    return boost::multiprecision::numerator(value).str() + "/" +
           boost::multiprecision::denominator(value).str();
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

Rational snap_to_rational(double x, double radius) {
    Rational lo(x - radius);
    Rational hi(x + radius);
    if (lo <= 0 && hi >= 0) return Rational(0);
    if (hi < 0) return -simplest_positive(-hi, -lo);
    return simplest_positive(lo, hi);
}

}  // namespace treemod
