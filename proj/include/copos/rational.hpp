#pragma once

// Exact rational scalar used by every exact decision path.

#include <boost/multiprecision/gmp.hpp>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace copos {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

/// Exact conversion; every finite double is a dyadic rational.
inline Rational to_rational(double v) {
    if (!std::isfinite(v)) throw std::invalid_argument("non-finite value has no rational form");
    return Rational(v);
}

inline Rational to_rational(const Rational& v) { return v; }

inline double to_double(const Rational& q) { return q.convert_to<double>(); }
inline double to_double(double v) { return v; }

/// Parses "p/q", integers, and decimals with optional exponent ("-1.25e-3")
/// without passing through binary floating point.
inline Rational parse_rational(std::string_view text) {
    auto fail = [&] { throw std::invalid_argument("malformed rational literal: '" + std::string(text) + "'"); };
    while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
    if (text.empty()) fail();

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        Rational num = parse_rational(text.substr(0, slash));
        Rational den = parse_rational(text.substr(slash + 1));
        if (den == 0) fail();
        return num / den;
    }

    bool negative = false;
    std::size_t pos = 0;
    if (text[pos] == '+' || text[pos] == '-') {
        negative = text[pos] == '-';
        ++pos;
    }
    std::string digits;
    long exponent = 0;
    bool seen_digit = false;
    bool seen_point = false;
    for (; pos < text.size(); ++pos) {
        char ch = text[pos];
        if (ch >= '0' && ch <= '9') {
            digits.push_back(ch);
            seen_digit = true;
            if (seen_point) --exponent;
        } else if (ch == '.' && !seen_point) {
            seen_point = true;
        } else if (ch == 'e' || ch == 'E') {
            break;
        } else {
            fail();
        }
    }
    if (!seen_digit) fail();
    if (pos < text.size()) {
        std::string exp_text(text.substr(pos + 1));
        if (exp_text.empty()) fail();
        std::size_t used = 0;
        long e = 0;
        try {
            e = std::stol(exp_text, &used);
        } catch (const std::exception&) {
            fail();
        }
        if (used != exp_text.size() || e > 4000 || e < -4000) fail();
        exponent += e;
    }

    Rational value{Integer(digits)};
    Rational ten_power{Integer(1)};
    for (long i = 0; i < (exponent < 0 ? -exponent : exponent); ++i) ten_power *= 10;
    if (exponent < 0) value /= ten_power;
    else value *= ten_power;
    return negative ? Rational(-value) : value;
}

inline std::string to_string(const Rational& q) { return q.str(); }

}  // namespace copos
