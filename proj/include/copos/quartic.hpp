#pragma once

// Nonnegativity of quadratics and quartics on the positive half-line.
//
// quartic_nonneg_pos implements the closed-form three-case criterion for
//   f(t) = a t^4 + b t^3 + c t^2 + d t + e,   a > 0, e > 0,
// as a boolean combination of sign tests decided by a FloatContext or an
// ExactContext (see sign.hpp). Writing s = sqrt(ae), L = b sqrt(e) + d sqrt(a):
//
//   (1)  disc <= 0  and  L > 0
//   (2)  b >= 0, d >= 0, c + 2s >= 0
//   (3)  disc >= 0, |b sqrt(e) - d sqrt(a)| <= 4 sqrt(ace + 2ae s), and
//        (i)  -2s <= c <= 6s, or
//        (ii) c > 6s and L >= -4 sqrt(ace - 2ae s)
//
// Square-root bounds are compared after squaring, so the exact context stays
// inside Q(sqrt(ae)). A bound whose radicand is negative cannot hold.
//
// quartic_nonneg_pos_exact is the independent ground truth (Sturm sequences).

#include "copos/polynomial.hpp"
#include "copos/rational.hpp"
#include "copos/sign.hpp"
#include "copos/sturm.hpp"

#include <optional>
#include <stdexcept>
#include <string_view>

namespace copos {

template <class T>
struct QuadraticCoeffs {
    T a{}, b{}, c{};
};

template <class T>
struct QuarticCoeffs {
    T a{}, b{}, c{}, d{}, e{};

    QuarticCoeffs reversed() const { return {e, d, c, b, a}; }

    /// Coefficients in ascending degree, t^0 first.
    Polynomial<T> polynomial() const { return Polynomial<T>({e, d, c, b, a}); }

    T operator()(const T& t) const { return T((((a * t + b) * t + c) * t + d) * t + e); }
};

template <class T>
QuarticCoeffs<Rational> to_rational(const QuarticCoeffs<T>& q) {
    return {to_rational(q.a), to_rational(q.b), to_rational(q.c), to_rational(q.d), to_rational(q.e)};
}

inline QuarticCoeffs<double> to_double(const QuarticCoeffs<Rational>& q) {
    return {to_double(q.a), to_double(q.b), to_double(q.c), to_double(q.d), to_double(q.e)};
}

/// f(t) = a t^2 + b t + c > 0 (strict) or >= 0 for all t >= 0; requires a > 0.
template <class T>
bool quadratic_nonneg_pos(const QuadraticCoeffs<T>& q, bool strict) {
    if (!(q.a > 0)) throw std::domain_error("quadratic_nonneg_pos requires a > 0");
    if (q.b >= 0) return strict ? q.c > 0 : q.c >= 0;
    T gap = T(4 * q.a * q.c - q.b * q.b);
    return strict ? gap > 0 : gap >= 0;
}

/// Quartic discriminant 4(12ae - 3bd + c^2)^3 - (72ace + 9bcd - 2c^3 - 27ad^2 - 27b^2e)^2,
/// carrying the magnitude of its terms for banded sign tests.
template <class T>
Bounded<T> quartic_discriminant_bounded(const QuarticCoeffs<Bounded<T>>& q) {
    using B = Bounded<T>;
    const B &a = q.a, &b = q.b, &c = q.c, &d = q.d, &e = q.e;
    B x = B(12) * a * e - B(3) * b * d + c * c;
    B y = B(72) * a * c * e + B(9) * b * c * d - B(2) * c * c * c - B(27) * a * d * d - B(27) * b * b * e;
    return B(4) * x * x * x - y * y;
}

template <class T>
QuarticCoeffs<Bounded<T>> bounded(const QuarticCoeffs<T>& q) {
    return {Bounded<T>(q.a), Bounded<T>(q.b), Bounded<T>(q.c), Bounded<T>(q.d), Bounded<T>(q.e)};
}

template <class T>
T quartic_discriminant(const QuarticCoeffs<T>& q) {
    return quartic_discriminant_bounded(bounded(q)).value;
}

enum class QuarticCase { none, case1, case2, case3i, case3ii };

constexpr std::string_view to_string(QuarticCase c) {
    switch (c) {
        case QuarticCase::none: return "none";
        case QuarticCase::case1: return "1";
        case QuarticCase::case2: return "2";
        case QuarticCase::case3i: return "3i";
        case QuarticCase::case3ii: return "3ii";
    }
    return "none";
}

/// Outcome of the closed-form test, with every branch recorded.
struct QuarticTest {
    Truth holds = Truth::unknown;
    QuarticCase fired = QuarticCase::none;
    Truth case1 = Truth::no;
    Truth case2 = Truth::no;
    Truth case3i = Truth::no;
    Truth case3ii = Truth::no;
    Sign disc_sign = Sign::unknown;
};

/// Closed-form test of f(t) >= 0 for all t > 0 on coefficients that carry
/// their own term magnitudes (derived quantities). Requires a > 0 and e > 0.
template <class Ctx, class T = typename Ctx::scalar>
QuarticTest quartic_criterion(const QuarticCoeffs<Bounded<T>>& q, const Ctx& ctx) {
    if (!(q.a.value > 0) || !(q.e.value > 0)) throw std::domain_error("quartic_nonneg_pos requires a > 0 and e > 0");
    using B = Bounded<T>;
    const B &a = q.a, &b = q.b, &c = q.c, &d = q.d, &e = q.e;
    const B ae = a * e;
    const B ace = a * c * e;

    QuarticTest out;
    out.disc_sign = ctx.sign(quartic_discriminant_bounded(q));

    const Sign lin = ctx.sign_sum(b, e, d, a);  // b sqrt(e) + d sqrt(a)

    out.case1 = is_nonpos(out.disc_sign) & is_pos(lin);

    out.case2 = is_nonneg(ctx.sign(b)) & is_nonneg(ctx.sign(d)) & is_nonneg(ctx.sign_lin(c, B(2), ae));

    // |b sqrt(e) - d sqrt(a)| <= 4 sqrt(ace + 2ae s)
    //   <=>  ace + 2ae s >= 0  and  (b^2 e + d^2 a - 16ace) + (-2bd - 32ae) s <= 0
    const B sq_terms = b * b * e + d * d * a - B(16) * ace;
    const Truth spread = is_nonneg(ctx.sign_lin(ace, B(2) * ae, ae)) &
                         is_nonpos(ctx.sign_lin(sq_terms, -(B(2) * b * d) - B(32) * ae, ae));
    const Truth common3 = is_nonneg(out.disc_sign) & spread;

    const Truth c_lower = is_nonneg(ctx.sign_lin(c, B(2), ae));   // c >= -2s
    const Truth c_upper = is_nonpos(ctx.sign_lin(c, B(-6), ae));  // c <= 6s
    out.case3i = common3 & c_lower & c_upper;

    // L >= -4 sqrt(ace - 2ae s)  <=>  radicand >= 0 and (L >= 0 or L^2 <= 16(ace - 2ae s))
    const Truth c_high = is_pos(ctx.sign_lin(c, B(-6), ae));
    const Truth radicand_ok = is_nonneg(ctx.sign_lin(ace, -(B(2) * ae), ae));
    const Truth lin_bound = is_nonneg(lin) | is_nonpos(ctx.sign_lin(sq_terms, B(2) * b * d + B(32) * ae, ae));
    out.case3ii = common3 & c_high & radicand_ok & lin_bound;

    out.holds = out.case1 | out.case2 | out.case3i | out.case3ii;
    if (out.case1 == Truth::yes) out.fired = QuarticCase::case1;
    else if (out.case2 == Truth::yes) out.fired = QuarticCase::case2;
    else if (out.case3i == Truth::yes) out.fired = QuarticCase::case3i;
    else if (out.case3ii == Truth::yes) out.fired = QuarticCase::case3ii;
    return out;
}

/// Closed-form test of f(t) >= 0 for all t > 0. Requires a > 0 and e > 0.
template <class Ctx, class T = typename Ctx::scalar>
QuarticTest quartic_nonneg_pos(const QuarticCoeffs<T>& q, const Ctx& ctx) {
    return quartic_criterion(bounded(q), ctx);
}

inline QuarticTest quartic_nonneg_pos(const QuarticCoeffs<double>& q, const Tolerance& tol) {
    return quartic_nonneg_pos(q, FloatContext(tol));
}

/// Ground truth for f(t) >= 0 on (0, inf), any coefficients (a = 0 or e = 0 allowed).
inline bool quartic_nonneg_pos_exact(const QuarticCoeffs<Rational>& q) {
    return sturm_nonneg_on_interval(q.polynomial(), Endpoint::at(Rational(0)), Endpoint::plus_infinity());
}

enum class Route { closed_form_float, closed_form_exact, sturm };

constexpr std::string_view to_string(Route r) {
    switch (r) {
        case Route::closed_form_float: return "closed_form_float";
        case Route::closed_form_exact: return "closed_form_exact";
        case Route::sturm: return "sturm";
    }
    return "sturm";
}

struct QuarticDecision {
    Decision decision = Decision::boundary;
    Route route = Route::sturm;
    std::optional<QuarticTest> float_test;
    std::optional<QuarticTest> exact_test;
};

/// Float closed form first; band hits escalate to the exact closed form, and
/// inputs outside a > 0, e > 0 go to the Sturm oracle.
inline QuarticDecision decide_quartic(const QuarticCoeffs<Rational>& q, const Tolerance& tol = Tolerance{}) {
    QuarticDecision out;
    if (!(q.a > 0) || !(q.e > 0)) {
        out.decision = quartic_nonneg_pos_exact(q) ? Decision::copositive : Decision::not_copositive;
        out.route = Route::sturm;
        return out;
    }
    const auto qd = to_double(q);
    if (qd.a > 0 && qd.e > 0) {
        out.float_test = quartic_nonneg_pos(qd, FloatContext(tol));
        if (out.float_test->holds != Truth::unknown) {
            out.decision = to_decision(out.float_test->holds);
            out.route = Route::closed_form_float;
            return out;
        }
    }
    out.exact_test = quartic_nonneg_pos(q, ExactContext{});
    out.decision = to_decision(out.exact_test->holds);
    out.route = Route::closed_form_exact;
    return out;
}

}  // namespace copos
