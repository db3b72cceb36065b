#pragma once

// Copositivity of 4th-order 2-dimensional symmetric tensors.
//
// With t = x2 / x1 the form A x^4 becomes x1^4 f(t) for the quartic
//   f(t) = a2222 t^4 + 4 a1222 t^3 + 6 a1122 t^2 + 4 a1112 t + a1111,
// whose discriminant factors as 6912 (I^3 - 27 J^2) with
//   I = a1111 a2222 - 4 a1112 a1222 + 3 a1122^2
//   J = a1111 a1122 a2222 + 2 a1112 a1122 a1222 - a1122^3 - a2222 a1112^2 - a1111 a1222^2.
//
// tensor2_closed_form states the necessary-and-sufficient test directly in
// tensor entries (positive diagonal). The weaker sufficient-only hypotheses
// for plain copositivity (disc >= 0 with the spread bound) are a sub-region
// of its case (3) and need no separate code path.

#include "copos/quartic.hpp"
#include "copos/rational.hpp"
#include "copos/sign.hpp"
#include "copos/sturm.hpp"
#include "copos/sym_tensor.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string_view>

namespace copos {

template <class T>
struct InvariantsIJ {
    T I{};
    T J{};
    T disc{};  // I^3 - 27 J^2
};

namespace detail {

template <class T>
struct Entries2 {
    T a1111, a1112, a1122, a1222, a2222;
};

template <class T>
Entries2<T> entries2(const SymTensor4<T>& t) {
    if (t.dim() != 2) throw std::invalid_argument("expected a dimension-2 tensor, got dim " + std::to_string(t.dim()));
    return {t(0, 0, 0, 0), t(0, 0, 0, 1), t(0, 0, 1, 1), t(0, 1, 1, 1), t(1, 1, 1, 1)};
}

template <class T>
InvariantsIJ<Bounded<T>> invariants_bounded(const SymTensor4<T>& t) {
    using B = Bounded<T>;
    auto e = entries2(t);
    B a1(e.a1111), a2(e.a1112), a3(e.a1122), a4(e.a1222), a5(e.a2222);
    B I = a1 * a5 - B(4) * a2 * a4 + B(3) * a3 * a3;
    B J = a1 * a3 * a5 + B(2) * a2 * a3 * a4 - a3 * a3 * a3 - a5 * a2 * a2 - a1 * a4 * a4;
    B disc = I * I * I - B(27) * J * J;
    return {I, J, disc};
}

}  // namespace detail

template <class T>
InvariantsIJ<T> invariants_ij(const SymTensor4<T>& t) {
    auto b = detail::invariants_bounded(t);
    return {b.I.value, b.J.value, b.disc.value};
}

/// (a, b, c, d, e) = (a2222, 4 a1222, 6 a1122, 4 a1112, a1111).
template <class T>
QuarticCoeffs<T> mapped_quartic(const SymTensor4<T>& t) {
    auto e = detail::entries2(t);
    return {e.a2222, T(4 * e.a1222), T(6 * e.a1122), T(4 * e.a1112), e.a1111};
}

enum class Copos2Case { case1, case2, case3i, case3ii, diag_fail, none };

constexpr std::string_view to_string(Copos2Case c) {
    switch (c) {
        case Copos2Case::case1: return "1";
        case Copos2Case::case2: return "2";
        case Copos2Case::case3i: return "3i";
        case Copos2Case::case3ii: return "3ii";
        case Copos2Case::diag_fail: return "diag_fail";
        case Copos2Case::none: return "none";
    }
    return "none";
}

struct Tensor2Test {
    Truth holds = Truth::unknown;
    Copos2Case fired = Copos2Case::none;
    Truth case1 = Truth::no;
    Truth case2 = Truth::no;
    Truth case3i = Truth::no;
    Truth case3ii = Truth::no;
    Sign disc_sign = Sign::unknown;
};

/// Necessary-and-sufficient closed form; requires a1111 > 0 and a2222 > 0.
template <class Ctx, class T = typename Ctx::scalar>
Tensor2Test tensor2_closed_form(const SymTensor4<T>& t, const Ctx& ctx) {
    using B = Bounded<T>;
    const auto raw = detail::entries2(t);
    if (!(raw.a1111 > 0) || !(raw.a2222 > 0))
        throw std::domain_error("closed-form test requires a1111 > 0 and a2222 > 0");
    const B a1111(raw.a1111), a1112(raw.a1112), a1122(raw.a1122), a1222(raw.a1222), a2222(raw.a2222);
    const B p = a1111 * a2222;  // sqrt(p) enters every bound

    Tensor2Test out;
    out.disc_sign = ctx.sign(detail::invariants_bounded(t).disc);

    // a1222 sqrt(a1111) + a1112 sqrt(a2222)
    const Sign lin = ctx.sign_sum(a1222, a1111, a1112, a2222);
    out.case1 = is_nonpos(out.disc_sign) & is_pos(lin);

    const Truth lower = is_nonneg(ctx.sign_lin(B(3) * a1122, B(1), p));  // 3 a1122 >= -sqrt(p)
    out.case2 = is_nonneg(ctx.sign(raw.a1222)) & is_nonneg(ctx.sign(raw.a1112)) & lower;

    // |a1112 sqrt(a2222) - a1222 sqrt(a1111)| <= sqrt(6 p a1122 + 2 p sqrt(p)), squared out
    const B squares = a1112 * a1112 * a2222 + a1222 * a1222 * a1111 - B(6) * p * a1122;
    const Truth spread = is_nonneg(ctx.sign_lin(B(6) * p * a1122, B(2) * p, p)) &
                         is_nonpos(ctx.sign_lin(squares, -(B(2) * a1112 * a1222) - B(2) * p, p));
    const Truth common3 = is_nonneg(out.disc_sign) & spread;

    const Truth upper = is_nonpos(ctx.sign_lin(B(3) * a1122, B(-3), p));  // 3 a1122 <= 3 sqrt(p)
    out.case3i = common3 & lower & upper;

    // a1122 > sqrt(p) and lin >= -sqrt(6 p a1122 - 2 p sqrt(p))
    const Truth high = is_pos(ctx.sign_lin(a1122, B(-1), p));
    const Truth radicand_ok = is_nonneg(ctx.sign_lin(B(6) * p * a1122, -(B(2) * p), p));
    const Truth lin_bound =
        is_nonneg(lin) | is_nonpos(ctx.sign_lin(squares, B(2) * a1112 * a1222 + B(2) * p, p));
    out.case3ii = common3 & high & radicand_ok & lin_bound;

    out.holds = out.case1 | out.case2 | out.case3i | out.case3ii;
    if (out.case1 == Truth::yes) out.fired = Copos2Case::case1;
    else if (out.case2 == Truth::yes) out.fired = Copos2Case::case2;
    else if (out.case3i == Truth::yes) out.fired = Copos2Case::case3i;
    else if (out.case3ii == Truth::yes) out.fired = Copos2Case::case3ii;
    return out;
}

/// Locates t > 0 with f(t) < 0 by exact root isolation, then refines within
/// the negative gap numerically. Returns (t, f(t)/(1+t^2)^2), i.e. the form
/// value at the unit vector (1, t)/|(1, t)|.
inline std::optional<std::pair<double, double>> quartic_negative_point(const QuarticCoeffs<Rational>& q) {
    const auto poly = q.polynomial();
    if (poly.is_zero()) return std::nullopt;
    const auto qd = to_double(q);
    auto unit_value = [&](double t) {
        double n2 = 1.0 + t * t;
        return qd(t) / (n2 * n2);
    };
    std::optional<std::pair<double, double>> best;
    for (const auto& gap : root_gaps(poly, Endpoint::at(Rational(0)), Endpoint::plus_infinity())) {
        if (!(poly(gap.sample) < 0)) continue;
        double s = to_double(gap.sample);
        double lo = std::max(gap.lower, 0.0);
        double hi = std::isfinite(gap.upper) ? gap.upper : 4.0 * (s + 1.0);
        auto consider = [&](double t) {
            if (!(t > 0) || !std::isfinite(t)) return;
            double v = unit_value(t);
            if (v < 0 && (!best || v < best->second)) best = std::make_pair(t, v);
        };
        consider(s);
        constexpr int kGrid = 128;
        for (int i = 1; i < kGrid; ++i) consider(lo + (hi - lo) * i / kGrid);
    }
    return best;
}

struct Copos2Verdict {
    Decision decision = Decision::boundary;
    Copos2Case case_label = Copos2Case::none;
    Route route = Route::sturm;
    InvariantsIJ<double> invariants{};
    std::optional<Tensor2Test> float_test;
    std::optional<Tensor2Test> exact_test;
    std::optional<std::array<double, 2>> witness;  // nonnegative, unit norm
    double witness_value = 0.0;
};

/// Complete decision for a dimension-2 tensor. Negative diagonals fail with an
/// axis witness, a zero diagonal goes to the Sturm oracle, otherwise the closed
/// form runs in floating point and escalates band hits to exact arithmetic.
inline Copos2Verdict tensor2_copositive(const SymTensor4<Rational>& t, const Tolerance& tol = Tolerance{}) {
    const auto raw = detail::entries2(t);
    Copos2Verdict out;
    auto inv = invariants_ij(t);
    out.invariants = {to_double(inv.I), to_double(inv.J), to_double(inv.disc)};

    if (raw.a1111 < 0 || raw.a2222 < 0) {
        out.decision = Decision::not_copositive;
        out.case_label = Copos2Case::diag_fail;
        out.route = Route::closed_form_exact;
        if (raw.a1111 < 0) {
            out.witness = std::array<double, 2>{1.0, 0.0};
            out.witness_value = to_double(raw.a1111);
        } else {
            out.witness = std::array<double, 2>{0.0, 1.0};
            out.witness_value = to_double(raw.a2222);
        }
        return out;
    }

    const auto quartic = mapped_quartic(t);
    if (raw.a1111 == 0 || raw.a2222 == 0) {
        out.route = Route::sturm;
        out.decision = quartic_nonneg_pos_exact(quartic) ? Decision::copositive : Decision::not_copositive;
    } else {
        const auto td = t.cast<double>();
        if (td(0, 0, 0, 0) > 0 && td(1, 1, 1, 1) > 0) {
            out.float_test = tensor2_closed_form(td, FloatContext(tol));
            if (out.float_test->holds != Truth::unknown) {
                out.route = Route::closed_form_float;
                out.decision = to_decision(out.float_test->holds);
                out.case_label = out.float_test->fired;
            }
        }
        if (out.decision == Decision::boundary) {
            out.exact_test = tensor2_closed_form(t, ExactContext{});
            out.route = Route::closed_form_exact;
            out.decision = to_decision(out.exact_test->holds);
            out.case_label = out.exact_test->fired;
        }
    }

    if (out.decision == Decision::not_copositive) {
        if (auto hit = quartic_negative_point(quartic)) {
            double n = std::hypot(1.0, hit->first);
            out.witness = std::array<double, 2>{1.0 / n, hit->first / n};
            out.witness_value = eval_quartic_form(t.cast<double>(), std::vector<double>{(*out.witness)[0], (*out.witness)[1]});
            if (!(out.witness_value < 0)) out.witness.reset();
        }
    }
    return out;
}

inline Copos2Verdict tensor2_copositive(const SymTensor4<double>& t, const Tolerance& tol = Tolerance{}) {
    return tensor2_copositive(t.cast<Rational>(), tol);
}

/// Result of the sufficient strict-copositivity test.
struct StrictSufficientResult {
    bool precondition_met = false;  // a1111 > 0 and a2222 > 0
    Truth holds = Truth::no;
    int branch = 0;  // 1 or 2 when holds
    // Branch (1) is evaluated with the equality a1222^2 + 2 a2222 sqrt(p) = 6 a1122 a2222
    // exactly as stated; the quartic-substitution reading has 4 a1222^2 in place
    // of a1222^2. Set when the two readings give different answers for branch (1).
    bool reading_mismatch = false;
};

template <class Ctx, class T = typename Ctx::scalar>
StrictSufficientResult tensor2_strict_sufficient_test(const SymTensor4<T>& t, const Ctx& ctx) {
    using B = Bounded<T>;
    const auto raw = detail::entries2(t);
    StrictSufficientResult out;
    if (!(raw.a1111 > 0) || !(raw.a2222 > 0)) return out;
    out.precondition_met = true;

    const B a1111(raw.a1111), a1112(raw.a1112), a1122(raw.a1122), a1222(raw.a1222), a2222(raw.a2222);
    const B p = a1111 * a2222;
    const Sign disc = ctx.sign(detail::invariants_bounded(t).disc);

    // (1) disc = 0, a1222 sqrt(a1111) = a1112 sqrt(a2222),
    //     a1222^2 + 2 a2222 sqrt(p) = 6 a1122 a2222 < 6 a2222 sqrt(p)
    const Truth balanced = is_zero(ctx.sign_sum(a1222, a1111, -a1112, a2222));
    const Truth below = is_neg(ctx.sign_lin(B(6) * a1122 * a2222, B(-6) * a2222, p));
    const Truth printed_eq = is_zero(ctx.sign_lin(a1222 * a1222 - B(6) * a1122 * a2222, B(2) * a2222, p));
    const Truth substituted_eq =
        is_zero(ctx.sign_lin(B(4) * a1222 * a1222 - B(6) * a1122 * a2222, B(2) * a2222, p));
    const Truth base1 = is_zero(disc) & balanced & below;
    const Truth branch1 = base1 & printed_eq;
    out.reading_mismatch = branch1 != (base1 & substituted_eq);

    // (2) disc > 0, spread bound, and (i) or (ii) with |lin| <= sqrt(6 p a1122 - 2 p sqrt(p))
    const B squares = a1112 * a1112 * a2222 + a1222 * a1222 * a1111 - B(6) * p * a1122;
    const Truth spread = is_nonneg(ctx.sign_lin(B(6) * p * a1122, B(2) * p, p)) &
                         is_nonpos(ctx.sign_lin(squares, -(B(2) * a1112 * a1222) - B(2) * p, p));
    const Truth sub_i = is_nonneg(ctx.sign_lin(B(3) * a1122, B(1), p)) &
                        is_nonpos(ctx.sign_lin(B(3) * a1122, B(-3), p));
    const Truth sub_ii = is_pos(ctx.sign_lin(a1122, B(-1), p)) &
                         is_nonneg(ctx.sign_lin(B(6) * p * a1122, -(B(2) * p), p)) &
                         is_nonpos(ctx.sign_lin(squares, B(2) * a1112 * a1222 + B(2) * p, p));
    const Truth branch2 = is_pos(disc) & spread & (sub_i | sub_ii);

    out.holds = branch1 | branch2;
    if (branch1 == Truth::yes) out.branch = 1;
    else if (branch2 == Truth::yes) out.branch = 2;
    return out;
}

/// Sufficient test only: false means "not shown strictly copositive by this test".
inline StrictSufficientResult tensor2_strictly_copositive_sufficient(const SymTensor4<Rational>& t,
                                                                     const Tolerance& tol = Tolerance{}) {
    if (t.dim() != 2) throw std::invalid_argument("expected a dimension-2 tensor, got dim " + std::to_string(t.dim()));
    const auto td = t.cast<double>();
    if (td(0, 0, 0, 0) > 0 && td(1, 1, 1, 1) > 0) {
        auto r = tensor2_strict_sufficient_test(td, FloatContext(tol));
        if (r.holds != Truth::unknown) return r;
    }
    return tensor2_strict_sufficient_test(t, ExactContext{});
}

inline StrictSufficientResult tensor2_strictly_copositive_sufficient(const SymTensor4<double>& t,
                                                                     const Tolerance& tol = Tolerance{}) {
    return tensor2_strictly_copositive_sufficient(t.cast<Rational>(), tol);
}

}  // namespace copos
