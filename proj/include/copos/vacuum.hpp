#pragma once

// Vacuum stability of the Z3 scalar dark matter potential
//
//   V(h1, h2, s) = lambdaS s^4 + M(h1, h2) s^2 + Vt(h1, h2)
//   M  = lambdaS1 h1^2 + lambdaS2 h2^2 - |lambdaS12| rho h1 h2
//   Vt = lambda1 h1^4 + lambda2 h2^4 + (lambda3 + lambda4 rho^2) h1^2 h2^2
//
// as copositivity of the 4th-order 3-dimensional tensor of V.
//
// Two deciders are provided and always reported side by side:
//   * thm36: the closed-form test (lambdaS > 0 and either M and Vt are both
//     copositive, or M < 0 on the whole cone and 4 lambdaS Vt - M^2 >= 0 by
//     the quartic criterion on the primed coefficients);
//   * complete: minimizes over s pointwise (a quadratic in t = s^2) and
//     checks, exactly, Vt >= 0 on the cone and 4 lambdaS Vt - M^2 >= 0 on the
//     sub-cone where M < 0. This is a decision procedure for every coupling.
// The closed form never claims copositivity when the complete check refutes
// it; the converse gap (M indefinite on the cone) is logged as disagreement.

#include "copos/copos2.hpp"
#include "copos/quartic.hpp"
#include "copos/rational.hpp"
#include "copos/sign.hpp"
#include "copos/sturm.hpp"
#include "copos/sym_tensor.hpp"

#include <array>
#include <cmath>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace copos {

template <class T = double>
struct BasicCouplings {
    T lambda1{}, lambda2{}, lambda3{}, lambda4{};
    T lambdaS{}, lambdaS1{}, lambdaS2{};
    T absLambdaS12{};  // |lambdaS12|
    T rho{};           // orbit-space parameter in [0, 1]

    template <class U, class F>
    BasicCouplings<U> map(F&& f) const {
        return {f(lambda1), f(lambda2), f(lambda3), f(lambda4), f(lambdaS),
                f(lambdaS1), f(lambdaS2), f(absLambdaS12), f(rho)};
    }
};

using Couplings = BasicCouplings<double>;

template <class T>
void validate(const BasicCouplings<T>& c) {
    if constexpr (std::is_same_v<T, double>) {
        for (double v : {c.lambda1, c.lambda2, c.lambda3, c.lambda4, c.lambdaS, c.lambdaS1, c.lambdaS2,
                         c.absLambdaS12, c.rho})
            if (!std::isfinite(v)) throw std::invalid_argument("couplings must be finite");
    }
    if (c.absLambdaS12 < 0) throw std::invalid_argument("absLambdaS12 must be >= 0");
    if (c.rho < 0 || c.rho > 1) throw std::invalid_argument("rho must lie in [0, 1]");
}

inline BasicCouplings<Rational> to_rational(const Couplings& c) {
    return c.map<Rational>([](double v) { return to_rational(v); });
}

inline Couplings to_double(const BasicCouplings<Rational>& c) {
    return c.map<double>([](const Rational& v) { return to_double(v); });
}

/// v1111 = l1, v2222 = l2, v3333 = lS, v1122 = (l3 + l4 rho^2)/6, v1133 = lS1/6,
/// v2233 = lS2/6, v1233 = -|lS12| rho / 12; variables ordered (h1, h2, s).
template <class T>
SymTensor4<T> build_vacuum_tensor(const BasicCouplings<T>& c) {
    validate(c);
    SymTensor4<T> v(3);
    v.set({0, 0, 0, 0}, c.lambda1);
    v.set({1, 1, 1, 1}, c.lambda2);
    v.set({2, 2, 2, 2}, c.lambdaS);
    v.set({0, 0, 1, 1}, T((c.lambda3 + c.lambda4 * c.rho * c.rho) / 6));
    v.set({0, 0, 2, 2}, T(c.lambdaS1 / 6));
    v.set({1, 1, 2, 2}, T(c.lambdaS2 / 6));
    v.set({0, 1, 2, 2}, T(-c.absLambdaS12 * c.rho / 12));
    return v;
}

template <class T>
T eval_m(const BasicCouplings<T>& c, const T& h1, const T& h2) {
    return T(c.lambdaS1 * h1 * h1 + c.lambdaS2 * h2 * h2 - c.absLambdaS12 * c.rho * h1 * h2);
}

template <class T>
T eval_vtilde(const BasicCouplings<T>& c, const T& h1, const T& h2) {
    T h1s = T(h1 * h1), h2s = T(h2 * h2);
    return T(c.lambda1 * h1s * h1s + c.lambda2 * h2s * h2s + (c.lambda3 + c.lambda4 * c.rho * c.rho) * h1s * h2s);
}

template <class T>
T eval_potential(const BasicCouplings<T>& c, const T& h1, const T& h2, const T& s) {
    T s2 = T(s * s);
    return T(c.lambdaS * s2 * s2 + eval_m(c, h1, h2) * s2 + eval_vtilde(c, h1, h2));
}

/// min over s >= 0 of V(h1, h2, s): Vt if M >= 0, else Vt - M^2 / (4 lambdaS).
inline double min_over_s(const Couplings& c, double h1, double h2) {
    if (!(c.lambdaS > 0)) throw std::domain_error("min_over_s requires lambdaS > 0");
    if (h1 < 0 || h2 < 0) throw std::domain_error("min_over_s requires h1, h2 >= 0");
    double m = eval_m(c, h1, h2);
    double vt = eval_vtilde(c, h1, h2);
    return m >= 0 ? vt : vt - m * m / (4.0 * c.lambdaS);
}

/// Coefficient matrix of M as a quadratic form in (h1, h2).
template <class T>
Matrix2<T> m_matrix(const BasicCouplings<T>& c) {
    return {c.lambdaS1, T(-c.absLambdaS12 * c.rho / 2), c.lambdaS2};
}

/// Coefficient matrix of Vt as a quadratic form in (h1^2, h2^2).
template <class T>
Matrix2<T> vtilde_matrix(const BasicCouplings<T>& c) {
    return {c.lambda1, T((c.lambda3 + c.lambda4 * c.rho * c.rho) / 2), c.lambda2};
}

inline bool m_copositive(const Couplings& c, bool strict) {
    auto q = to_rational(c);
    return matrix2_copositive(m_matrix(q), strict, ExactContext{}) == Truth::yes;
}

/// M < 0 on the whole nonnegative cone minus the origin.
inline bool m_negative_definite_on_cone(const Couplings& c) { return c.lambdaS1 < 0 && c.lambdaS2 < 0; }

/// Coefficients of 4 lambdaS Vt - M^2 = l40 h1^4 + l31 h1^3 h2 + l22 h1^2 h2^2 + l13 h1 h2^3 + l04 h2^4.
template <class T>
struct DerivedQuartic {
    T l40{}, l04{}, l13{}, l31{}, l22{};

    /// The quartic in t = h2 / h1: (a, b, c, d, e) = (l04, l13, l22, l31, l40).
    QuarticCoeffs<T> quartic() const { return {l04, l13, l22, l31, l40}; }

    /// Always recomputed from the five coefficients.
    T delta_prime() const {
        if constexpr (std::is_same_v<T, Bounded<double>> || std::is_same_v<T, Bounded<Rational>>)
            return quartic_discriminant_bounded(quartic());
        else
            return quartic_discriminant(quartic());
    }

    /// Q(h1, h2); for Bounded values this carries term magnitudes.
    T operator()(const T& h1, const T& h2) const {
        T h1s = h1 * h1, h2s = h2 * h2;
        return l40 * h1s * h1s + l31 * h1s * h1 * h2 + l22 * h1s * h2s + l13 * h1 * h2s * h2 + l04 * h2s * h2s;
    }
};

template <class T>
DerivedQuartic<T> derived_quartic(const BasicCouplings<T>& c) {
    const T four(4), two(2);
    const T& lS = c.lambdaS;
    DerivedQuartic<T> d;
    d.l40 = T(four * lS * c.lambda1 - c.lambdaS1 * c.lambdaS1);
    d.l04 = T(four * lS * c.lambda2 - c.lambdaS2 * c.lambdaS2);
    d.l13 = T(two * c.lambdaS2 * c.absLambdaS12 * c.rho);
    d.l31 = T(two * c.lambdaS1 * c.absLambdaS12 * c.rho);
    d.l22 = T(four * lS * c.lambda3 + four * lS * c.lambda4 * c.rho * c.rho -
              c.absLambdaS12 * c.absLambdaS12 * c.rho * c.rho - two * c.lambdaS1 * c.lambdaS2);
    return d;
}

struct Prop35Test {
    Truth holds = Truth::unknown;
    Truth l40_positive = Truth::unknown;
    Truth l04_positive = Truth::unknown;
    std::optional<QuarticTest> quartic;  // present once both leading coefficients are positive
};

/// l40 > 0, l04 > 0 and the quartic criterion on (l04, l13, l22, l31, l40).
template <class Ctx, class T = typename Ctx::scalar>
Prop35Test prop35_test(const DerivedQuartic<Bounded<T>>& d, const Ctx& ctx) {
    Prop35Test out;
    out.l40_positive = is_pos(ctx.sign(d.l40));
    out.l04_positive = is_pos(ctx.sign(d.l04));
    Truth lead = out.l40_positive & out.l04_positive;
    if (lead != Truth::yes) {
        out.holds = lead;
        return out;
    }
    out.quartic = quartic_criterion(d.quartic(), ctx);
    out.holds = out.quartic->holds;
    return out;
}

template <class T>
DerivedQuartic<Bounded<T>> bounded(const DerivedQuartic<T>& d) {
    return {Bounded<T>(d.l40), Bounded<T>(d.l04), Bounded<T>(d.l13), Bounded<T>(d.l31), Bounded<T>(d.l22)};
}

struct Prop35Result {
    bool holds = false;
    QuarticCase fired = QuarticCase::none;
    bool degenerate = false;  // l40 <= 0 or l04 <= 0
    // Truth of "Q >= 0 on the cone" from the Sturm oracle, computed whenever
    // the closed form is inapplicable.
    std::optional<bool> exact_oracle;
};

inline Prop35Result prop35_check(const DerivedQuartic<Rational>& d, const Tolerance& tol = Tolerance{}) {
    Prop35Result out;
    if (!(d.l40 > 0) || !(d.l04 > 0)) {
        out.degenerate = true;
        auto q = d.quartic();
        bool axes = d.l40 >= 0 && d.l04 >= 0;
        out.exact_oracle = axes && quartic_nonneg_pos_exact(q);
        return out;
    }
    DerivedQuartic<double> dd{to_double(d.l40), to_double(d.l04), to_double(d.l13), to_double(d.l31), to_double(d.l22)};
    Prop35Test t;
    if (dd.l40 > 0 && dd.l04 > 0) t = prop35_test(bounded(dd), FloatContext(tol));
    if (t.holds == Truth::unknown) t = prop35_test(bounded(d), ExactContext{});
    out.holds = t.holds == Truth::yes;
    if (t.quartic) out.fired = t.quartic->fired;
    return out;
}

inline Prop35Result prop35_check(const DerivedQuartic<double>& d, const Tolerance& tol = Tolerance{}) {
    return prop35_check(DerivedQuartic<Rational>{to_rational(d.l40), to_rational(d.l04), to_rational(d.l13),
                                                 to_rational(d.l31), to_rational(d.l22)},
                        tol);
}

enum class VacuumCase { case1, case2_1, case2_2, case2_3i, case2_3ii, none };

constexpr std::string_view to_string(VacuumCase c) {
    switch (c) {
        case VacuumCase::case1: return "case1";
        case VacuumCase::case2_1: return "case2_1";
        case VacuumCase::case2_2: return "case2_2";
        case VacuumCase::case2_3i: return "case2_3i";
        case VacuumCase::case2_3ii: return "case2_3ii";
        case VacuumCase::none: return "none";
    }
    return "none";
}

struct Thm36Test {
    Truth holds = Truth::no;
    VacuumCase fired = VacuumCase::none;
    Truth lambdaS_positive = Truth::no;
    Truth m_copositive = Truth::no;
    Truth vtilde_copositive = Truth::no;
    Truth case1 = Truth::no;
    Truth case2 = Truth::no;
    std::optional<Prop35Test> prop35;
};

/// Closed-form vacuum test in the given context.
template <class Ctx, class T = typename Ctx::scalar>
Thm36Test thm36_test(const BasicCouplings<T>& c, const Ctx& ctx) {
    using B = Bounded<T>;
    Thm36Test out;
    out.lambdaS_positive = is_pos(ctx.sign(c.lambdaS));
    if (out.lambdaS_positive == Truth::no) return out;

    out.m_copositive = matrix2_copositive(m_matrix(c), false, ctx);
    Truth diag = is_nonneg(ctx.sign(c.lambda1)) & is_nonneg(ctx.sign(c.lambda2));
    out.vtilde_copositive = diag;
    if (diag != Truth::no) {
        const B mixed = B(c.lambda3) + B(c.lambda4) * B(c.rho) * B(c.rho);
        out.vtilde_copositive = diag & is_nonneg(ctx.sign_lin(mixed, B(2), B(c.lambda1) * B(c.lambda2)));
    }
    out.case1 = out.m_copositive & out.vtilde_copositive;

    Truth negative_m = is_neg(ctx.sign(c.lambdaS1)) & is_neg(ctx.sign(c.lambdaS2));
    out.case2 = negative_m;
    if (negative_m != Truth::no) {
        auto bc = c.template map<B>([](const T& v) { return B(v); });
        out.prop35 = prop35_test(derived_quartic(bc), ctx);
        out.case2 = negative_m & out.prop35->holds;
    }

    out.holds = out.lambdaS_positive & (out.case1 | out.case2);
    if (out.holds == Truth::yes) {
        if (out.case1 == Truth::yes) {
            out.fired = VacuumCase::case1;
        } else {
            switch (out.prop35->quartic->fired) {
                case QuarticCase::case1: out.fired = VacuumCase::case2_1; break;
                case QuarticCase::case2: out.fired = VacuumCase::case2_2; break;
                case QuarticCase::case3i: out.fired = VacuumCase::case2_3i; break;
                case QuarticCase::case3ii: out.fired = VacuumCase::case2_3ii; break;
                case QuarticCase::none: break;
            }
        }
    }
    return out;
}

/// Unit vector (h1, h2, s) with V < 0, and the value of V there.
struct VacuumWitness {
    std::array<double, 3> x{};
    double value = 0.0;
};

namespace detail {

/// x >= 0 with x^T M x < 0, for a matrix known not to be copositive.
inline std::optional<std::array<double, 2>> quadratic_negative_point(const Matrix2<double>& m) {
    std::array<double, 2> x{};
    if (m.a11 < 0) x = {1.0, 0.0};
    else if (m.a22 < 0) x = {0.0, 1.0};
    else if (m.a12 >= 0) return std::nullopt;
    else if (m.a22 > 0) x = {1.0, -m.a12 / m.a22};
    else if (m.a11 > 0) x = {-m.a12 / m.a11, 1.0};
    else x = {1.0, 1.0};
    double v = m.a11 * x[0] * x[0] + 2 * m.a12 * x[0] * x[1] + m.a22 * x[1] * x[1];
    if (!(v < 0)) return std::nullopt;
    return x;
}

inline std::optional<VacuumWitness> make_witness(const Couplings& c, double h1, double h2, double s) {
    double n = std::sqrt(h1 * h1 + h2 * h2 + s * s);
    if (!(n > 0) || !std::isfinite(n)) return std::nullopt;
    VacuumWitness w{{h1 / n, h2 / n, s / n}, 0.0};
    w.value = eval_potential(c, w.x[0], w.x[1], w.x[2]);
    if (!(w.value < 0)) return std::nullopt;
    return w;
}

/// Best s for a fixed h: the vertex of lambdaS t^2 + M t + Vt when lambdaS > 0;
/// for lambdaS = 0 any s with M s^2 < -2 max(Vt, 0) works.
inline std::optional<VacuumWitness> witness_along(const Couplings& c, double h1, double h2) {
    if (!(h1 >= 0) || !(h2 >= 0)) return std::nullopt;
    const double m = eval_m(c, h1, h2);
    double s = 0.0;
    if (m < 0) {
        if (c.lambdaS > 0) s = std::sqrt(-m / (2.0 * c.lambdaS));
        else s = std::sqrt(2.0 * std::max(eval_vtilde(c, h1, h2), 0.0) / (-m) + 1.0);
    }
    return make_witness(c, h1, h2, s);
}

/// Most negative witness over the directions h = (cos a, sin a): the seeds,
/// a uniform grid, then golden-section refinement around the best grid cell.
inline std::optional<VacuumWitness> search_witness(const Couplings& c, const std::vector<std::array<double, 2>>& seeds) {
    std::optional<VacuumWitness> best;
    auto offer = [&](std::optional<VacuumWitness> w) {
        if (w && (!best || w->value < best->value)) best = w;
    };
    for (const auto& h : seeds) offer(witness_along(c, h[0], h[1]));

    constexpr int kGrid = 4096;
    const double quarter = std::acos(0.0);
    auto at = [&](double a) { return witness_along(c, std::cos(a), std::sin(a)); };
    auto value = [&](double a) {
        auto w = at(a);
        return w ? w->value : 0.0;
    };
    int best_k = -1;
    double best_v = 0.0;
    for (int k = 0; k <= kGrid; ++k) {
        const double a = quarter * k / kGrid;
        const double v = value(a);
        if (v < best_v) {
            best_v = v;
            best_k = k;
        }
    }
    if (best_k >= 0) {
        offer(at(quarter * best_k / kGrid));
        double lo = quarter * std::max(best_k - 1, 0) / kGrid;
        double hi = quarter * std::min(best_k + 1, kGrid) / kGrid;
        const double g = (std::sqrt(5.0) - 1.0) / 2.0;
        double x1 = hi - g * (hi - lo), x2 = lo + g * (hi - lo);
        double f1 = value(x1), f2 = value(x2);
        for (int it = 0; it < 80; ++it) {
            if (f1 < f2) {
                hi = x2;
                x2 = x1;
                f2 = f1;
                x1 = hi - g * (hi - lo);
                f1 = value(x1);
            } else {
                lo = x1;
                x1 = x2;
                f1 = f2;
                x2 = lo + g * (hi - lo);
                f2 = value(x2);
            }
        }
        offer(at(f1 < f2 ? x1 : x2));
    }
    return best;
}

}  // namespace detail

enum class CompletePath { lambdaS_positive, lambdaS_zero, lambdaS_negative };

constexpr std::string_view to_string(CompletePath p) {
    switch (p) {
        case CompletePath::lambdaS_positive: return "lambdaS_positive";
        case CompletePath::lambdaS_zero: return "lambdaS_zero";
        case CompletePath::lambdaS_negative: return "lambdaS_negative";
    }
    return "lambdaS_positive";
}

struct CompleteResult {
    Decision decision = Decision::boundary;
    CompletePath path = CompletePath::lambdaS_positive;
    bool vtilde_copositive = false;  // condition (a)
    bool reduced_quartic_ok = false;  // condition (b), or M copositive when lambdaS = 0
    std::optional<VacuumWitness> witness;
};

/// Exact decision of "min over s >= 0 of V(h, s) >= 0 for all h >= 0".
/// lambdaS = 0 is decided as M copositive and Vt copositive; lambdaS < 0 is an error.
inline CompleteResult vacuum_copositive_complete(const BasicCouplings<Rational>& c) {
    validate(c);
    if (c.lambdaS < 0) throw std::domain_error("complete check requires lambdaS >= 0");
    const Couplings cd = to_double(c);
    CompleteResult out;
    out.vtilde_copositive = matrix2_copositive(vtilde_matrix(c), false, ExactContext{}) == Truth::yes;

    // Seeds are exact-derived points where V < 0 is known; the search only improves on them.
    std::vector<std::array<double, 2>> seeds;
    if (!out.vtilde_copositive)
        if (auto x = detail::quadratic_negative_point(vtilde_matrix(cd)))
            seeds.push_back({std::sqrt((*x)[0]), std::sqrt((*x)[1])});
    auto finish = [&](bool ok) {
        out.decision = ok ? Decision::copositive : Decision::not_copositive;
        if (!ok) out.witness = detail::search_witness(cd, seeds);
        return out;
    };

    if (c.lambdaS == 0) {
        out.path = CompletePath::lambdaS_zero;
        out.reduced_quartic_ok = matrix2_copositive(m_matrix(c), false, ExactContext{}) == Truth::yes;
        if (!out.reduced_quartic_ok)
            if (auto h = detail::quadratic_negative_point(m_matrix(cd))) seeds.push_back(*h);
        return finish(out.vtilde_copositive && out.reduced_quartic_ok);
    }

    out.path = CompletePath::lambdaS_positive;
    if (!out.vtilde_copositive) return finish(false);

    // Where M < 0 the minimum over s is Q / (4 lambdaS) with Q = 4 lambdaS Vt - M^2.
    const auto dq = derived_quartic(c);
    const Polynomial<Rational> m_poly({c.lambdaS1, Rational(-c.absLambdaS12 * c.rho), c.lambdaS2});
    const Polynomial<Rational> q_poly({dq.l40, dq.l31, dq.l22, dq.l13, dq.l04});

    bool violated = false;
    if (c.lambdaS1 < 0 && dq.l40 < 0) {  // h = (1, 0)
        violated = true;
        seeds.push_back({1.0, 0.0});
    }
    if (c.lambdaS2 < 0 && dq.l04 < 0) {  // h = (0, 1)
        violated = true;
        seeds.push_back({0.0, 1.0});
    }
    if (!m_poly.is_zero() && !q_poly.is_zero()) {
        for (const auto& gap : root_gaps(m_poly * q_poly, Endpoint::at(Rational(0)), Endpoint::plus_infinity())) {
            if (!(m_poly(gap.sample) < 0 && q_poly(gap.sample) < 0)) continue;
            violated = true;
            seeds.push_back({1.0, to_double(gap.sample)});
        }
    }
    out.reduced_quartic_ok = !violated;
    return finish(!violated);
}

inline CompleteResult vacuum_copositive_complete(const Couplings& c) { return vacuum_copositive_complete(to_rational(c)); }

/// Complete check extended to lambdaS < 0, where V(0, 0, 1) = lambdaS < 0.
inline CompleteResult vacuum_complete_total(const BasicCouplings<Rational>& c) {
    if (c.lambdaS >= 0) return vacuum_copositive_complete(c);
    CompleteResult out;
    out.decision = Decision::not_copositive;
    out.path = CompletePath::lambdaS_negative;
    out.vtilde_copositive = matrix2_copositive(vtilde_matrix(c), false, ExactContext{}) == Truth::yes;
    out.witness = detail::make_witness(to_double(c), 0.0, 0.0, 1.0);
    return out;
}

struct VacuumVerdict {
    Decision decision = Decision::boundary;
    VacuumCase thm36_case = VacuumCase::none;
    Route route = Route::closed_form_float;
    std::optional<Thm36Test> float_test;
    std::optional<Thm36Test> exact_test;
    std::optional<VacuumWitness> witness;
    Decision complete_decision = Decision::boundary;
    CompletePath complete_path = CompletePath::lambdaS_positive;
    bool agreement = false;
};

/// Closed-form verdict (float, escalated to exact on band hits) alongside the
/// complete checker's verdict.
inline VacuumVerdict vacuum_copositive_thm36(const Couplings& c, const Tolerance& tol = Tolerance{}) {
    validate(c);
    const auto cq = to_rational(c);
    VacuumVerdict out;

    out.float_test = thm36_test(c, FloatContext(tol));
    const Thm36Test* used = &*out.float_test;
    if (out.float_test->holds == Truth::unknown) {
        out.exact_test = thm36_test(cq, ExactContext{});
        out.route = Route::closed_form_exact;
        used = &*out.exact_test;
    }
    out.decision = to_decision(used->holds);
    out.thm36_case = used->fired;

    auto complete = vacuum_complete_total(cq);
    out.complete_decision = complete.decision;
    out.complete_path = complete.path;
    if (out.decision == Decision::not_copositive) out.witness = complete.witness;
    out.agreement = out.decision == out.complete_decision;
    return out;
}

struct RhoSweep {
    std::vector<double> rhos;
    std::vector<VacuumVerdict> verdicts;
    Decision thm36_all = Decision::copositive;
    Decision complete_all = Decision::copositive;
};

/// n uniform points on [0, 1]; n == 1 gives {0}.
inline std::vector<double> uniform_rho_grid(std::size_t n) {
    if (n == 0) throw std::invalid_argument("rho grid needs at least one point");
    std::vector<double> g(n);
    for (std::size_t i = 0; i < n; ++i) g[i] = n == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(n - 1);
    return g;
}

/// Evaluates the couplings at every rho of the grid (the input rho is ignored)
/// and reports the conjunction; points are independent, aggregation is in grid order.
inline RhoSweep sweep_rho(const Couplings& c, std::span<const double> rhos, const Tolerance& tol = Tolerance{}) {
    RhoSweep out;
    auto fold = [](Decision acc, Decision d) {
        if (acc == Decision::not_copositive || d == Decision::not_copositive) return Decision::not_copositive;
        if (acc == Decision::boundary || d == Decision::boundary) return Decision::boundary;
        return Decision::copositive;
    };
    for (double rho : rhos) {
        Couplings at = c;
        at.rho = rho;
        out.rhos.push_back(rho);
        out.verdicts.push_back(vacuum_copositive_thm36(at, tol));
        out.thm36_all = fold(out.thm36_all, out.verdicts.back().decision);
        out.complete_all = fold(out.complete_all, out.verdicts.back().complete_decision);
    }
    return out;
}

}  // namespace copos
