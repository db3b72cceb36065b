#pragma once

// Three-valued sign decisions shared by the float and exact evaluation paths.
//
// Every criterion in this library is a boolean combination of sign tests on
// expressions of the form  p,  p + q*sqrt(r)  and  u*sqrt(x) + v*sqrt(y).
// A context object decides those signs:
//
//   * FloatContext evaluates in double precision and answers Sign::unknown
//     whenever the value lies within eps * (magnitude of its terms) of zero.
//   * ExactContext works over Rational and reduces every surd comparison to
//     rational sign tests by squaring, so it never answers unknown.
//
// Callers feed both contexts the same Bounded<T> quantities; the magnitude
// half is what the float band is measured against and is ignored when exact.

#include "copos/rational.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string_view>

namespace copos {

enum class Truth : std::uint8_t { no, yes, unknown };

/// Kleene conjunction.
constexpr Truth operator&(Truth a, Truth b) {
    if (a == Truth::no || b == Truth::no) return Truth::no;
    if (a == Truth::unknown || b == Truth::unknown) return Truth::unknown;
    return Truth::yes;
}

/// Kleene disjunction.
constexpr Truth operator|(Truth a, Truth b) {
    if (a == Truth::yes || b == Truth::yes) return Truth::yes;
    if (a == Truth::unknown || b == Truth::unknown) return Truth::unknown;
    return Truth::no;
}

constexpr Truth from_bool(bool b) { return b ? Truth::yes : Truth::no; }

constexpr std::string_view to_string(Truth t) {
    switch (t) {
        case Truth::no: return "no";
        case Truth::yes: return "yes";
        case Truth::unknown: return "unknown";
    }
    return "unknown";
}

enum class Sign : std::int8_t { negative = -1, zero = 0, positive = 1, unknown = 2 };

constexpr Truth is_pos(Sign s) { return s == Sign::unknown ? Truth::unknown : from_bool(s == Sign::positive); }
constexpr Truth is_neg(Sign s) { return s == Sign::unknown ? Truth::unknown : from_bool(s == Sign::negative); }
constexpr Truth is_zero(Sign s) { return s == Sign::unknown ? Truth::unknown : from_bool(s == Sign::zero); }
constexpr Truth is_nonneg(Sign s) { return s == Sign::unknown ? Truth::unknown : from_bool(s != Sign::negative); }
constexpr Truth is_nonpos(Sign s) { return s == Sign::unknown ? Truth::unknown : from_bool(s != Sign::positive); }

template <class T>
constexpr Sign exact_sign(const T& v) {
    if (v > 0) return Sign::positive;
    if (v < 0) return Sign::negative;
    return Sign::zero;
}

template <class T>
T abs_value(const T& v) {
    return v < 0 ? T(-v) : v;
}

/// A value together with an upper bound on the magnitudes of the terms that
/// produced it; the bound is the yardstick for the float indeterminate band.
template <class T>
struct Bounded {
    T value{};
    T mag{};

    Bounded() = default;
    Bounded(const T& v) : value(v), mag(abs_value(v)) {}  // NOLINT: implicit from scalars is the point
    Bounded(int v) : Bounded(T(v)) {}                     // NOLINT
    Bounded(const T& v, const T& m) : value(v), mag(m) {}

    friend Bounded operator+(const Bounded& a, const Bounded& b) { return {a.value + b.value, a.mag + b.mag}; }
    friend Bounded operator-(const Bounded& a, const Bounded& b) { return {a.value - b.value, a.mag + b.mag}; }
    friend Bounded operator*(const Bounded& a, const Bounded& b) { return {a.value * b.value, a.mag * b.mag}; }
    friend Bounded operator-(const Bounded& a) { return {-a.value, a.mag}; }
};

struct Tolerance {
    double eps_decision = 1e-10;

    explicit Tolerance(double eps = 1e-10) : eps_decision(eps) {
        if (!(eps >= 0.0) || !std::isfinite(eps)) throw std::invalid_argument("eps_decision must be finite and >= 0");
    }
};

class FloatContext {
public:
    using scalar = double;

    explicit FloatContext(Tolerance tol = Tolerance{}) : eps_(tol.eps_decision) {}

    /// Sign of an input coefficient; inputs carry no rounding error.
    Sign sign(double v) const { return exact_sign(v); }

    Sign sign(const Bounded<double>& b) const { return banded(b.value, b.mag); }

    /// sign(p + q*sqrt(r)), r >= 0.
    Sign sign_lin(const Bounded<double>& p, const Bounded<double>& q, const Bounded<double>& r) const {
        if (r.value < 0) throw std::domain_error("negative radicand in sign_lin");
        double root = std::sqrt(r.value);
        return banded(p.value + q.value * root, p.mag + q.mag * std::sqrt(r.mag));
    }

    /// sign(u*sqrt(x) + v*sqrt(y)), x, y >= 0.
    Sign sign_sum(const Bounded<double>& u, const Bounded<double>& x, const Bounded<double>& v,
                  const Bounded<double>& y) const {
        if (x.value < 0 || y.value < 0) throw std::domain_error("negative radicand in sign_sum");
        double lhs = u.value * std::sqrt(x.value);
        double rhs = v.value * std::sqrt(y.value);
        return banded(lhs + rhs, u.mag * std::sqrt(x.mag) + v.mag * std::sqrt(y.mag));
    }

    double eps() const { return eps_; }

private:
    Sign banded(double value, double scale) const {
        if (!std::isfinite(value)) return Sign::unknown;
        if (scale == 0.0) return exact_sign(value);
        if (std::abs(value) <= eps_ * scale) return Sign::unknown;
        return exact_sign(value);
    }

    double eps_;
};

class ExactContext {
public:
    using scalar = Rational;

    Sign sign(const Rational& v) const { return exact_sign(v); }
    Sign sign(const Bounded<Rational>& b) const { return exact_sign(b.value); }

    Sign sign_lin(const Bounded<Rational>& p, const Bounded<Rational>& q, const Bounded<Rational>& r) const {
        if (r.value < 0) throw std::domain_error("negative radicand in sign_lin");
        int sp = static_cast<int>(exact_sign(p.value));
        return sum_of_roots(Rational(sp), p.value * p.value, q.value, r.value);
    }

    Sign sign_sum(const Bounded<Rational>& u, const Bounded<Rational>& x, const Bounded<Rational>& v,
                  const Bounded<Rational>& y) const {
        if (x.value < 0 || y.value < 0) throw std::domain_error("negative radicand in sign_sum");
        return sum_of_roots(u.value, x.value, v.value, y.value);
    }

private:
    // sign(u*sqrt(x) + v*sqrt(y)): compare squared magnitudes when the two
    // terms have opposite signs.
    static Sign sum_of_roots(const Rational& u, const Rational& x, const Rational& v, const Rational& y) {
        Sign su = x == 0 ? Sign::zero : exact_sign(u);
        Sign sv = y == 0 ? Sign::zero : exact_sign(v);
        if (su == Sign::zero) return sv;
        if (sv == Sign::zero || su == sv) return su;
        Rational lhs = u * u * x;
        Rational rhs = v * v * y;
        if (lhs > rhs) return su;
        if (lhs < rhs) return sv;
        return Sign::zero;
    }
};

enum class Decision : std::uint8_t { copositive, not_copositive, boundary };

constexpr Decision to_decision(Truth t) {
    switch (t) {
        case Truth::yes: return Decision::copositive;
        case Truth::no: return Decision::not_copositive;
        case Truth::unknown: return Decision::boundary;
    }
    return Decision::boundary;
}

constexpr std::string_view to_string(Decision d) {
    switch (d) {
        case Decision::copositive: return "copositive";
        case Decision::not_copositive: return "not_copositive";
        case Decision::boundary: return "boundary";
    }
    return "boundary";
}

}  // namespace copos
