#include "copos/vacuum.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

using namespace copos;
using copos::testing::RationalGen;

namespace {

Couplings base() { return Couplings{}; }

Couplings random_couplings(std::mt19937_64& rng, double lambdaS_lo = 0.0) {
    std::uniform_real_distribution<double> u(-10, 10), pos(0, 10), unit(0, 1);
    Couplings c;
    c.lambda1 = u(rng);
    c.lambda2 = u(rng);
    c.lambda3 = u(rng);
    c.lambda4 = u(rng);
    c.lambdaS = std::max(pos(rng), lambdaS_lo);
    c.lambdaS1 = u(rng);
    c.lambdaS2 = u(rng);
    c.absLambdaS12 = pos(rng);
    c.rho = unit(rng);
    return c;
}

// Mostly copositive-looking couplings: positive diagonals, mixed signs elsewhere.
Couplings physical_couplings(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-3, 3), pos(0.1, 5), unit(0, 1);
    Couplings c;
    c.lambda1 = pos(rng);
    c.lambda2 = pos(rng);
    c.lambda3 = u(rng);
    c.lambda4 = u(rng);
    c.lambdaS = pos(rng);
    c.lambdaS1 = u(rng);
    c.lambdaS2 = u(rng);
    c.absLambdaS12 = pos(rng);
    c.rho = unit(rng);
    return c;
}

void expect_valid_witness(const Couplings& c, const VacuumWitness& w) {
    for (double v : w.x) EXPECT_GE(v, 0.0);
    EXPECT_NEAR(std::hypot(w.x[0], w.x[1], w.x[2]), 1.0, 1e-12);
    const double v = eval_potential(c, w.x[0], w.x[1], w.x[2]);
    EXPECT_LT(v, 0.0);
    EXPECT_DOUBLE_EQ(v, w.value);
    EXPECT_NEAR(eval_quartic_form(build_vacuum_tensor(c), std::vector<double>{w.x[0], w.x[1], w.x[2]}), v, 1e-12);
}

double scale_of(const Couplings& c) {
    return 1 + std::max({std::abs(c.lambda1), std::abs(c.lambda2), std::abs(c.lambda3), std::abs(c.lambda4),
                         std::abs(c.lambdaS), std::abs(c.lambdaS1), std::abs(c.lambdaS2), c.absLambdaS12});
}

}  // namespace

TEST(Couplings, ValidationRejectsOutOfRange) {
    Couplings c = base();
    c.rho = 1.5;
    EXPECT_THROW(validate(c), std::invalid_argument);
    c.rho = 0.5;
    c.absLambdaS12 = -1;
    EXPECT_THROW(validate(c), std::invalid_argument);
    c.absLambdaS12 = 0;
    c.lambda1 = std::nan("");
    EXPECT_THROW(validate(c), std::invalid_argument);
    EXPECT_THROW(build_vacuum_tensor(c), std::invalid_argument);
}

TEST(BuildVacuumTensor, Examples) {
    Couplings c = base();
    c.lambda1 = c.lambda2 = c.lambdaS = 1;
    c.rho = 0.5;
    auto t = build_vacuum_tensor(c);
    EXPECT_EQ(std::count_if(t.values().begin(), t.values().end(), [](double v) { return v != 0; }), 3);
    EXPECT_EQ(eval_quartic_form(t, std::vector<double>{1, 1, 1}), 3);

    Couplings s1 = base();
    s1.lambdaS1 = 6;
    auto t1 = build_vacuum_tensor(s1);
    EXPECT_EQ(t1(0, 0, 2, 2), 1);
    EXPECT_EQ(eval_quartic_form(t1, std::vector<double>{1, 0, 1}), 6);

    Couplings s12 = base();
    s12.absLambdaS12 = 12;
    s12.rho = 1;
    auto t12 = build_vacuum_tensor(s12);
    EXPECT_EQ(t12(0, 1, 2, 2), -1);
    EXPECT_EQ(eval_quartic_form(t12, std::vector<double>{1, 1, 1}), -12);
}

TEST(BuildVacuumTensor, MatchesPotentialFormula) {
    std::mt19937_64 rng(101);
    std::uniform_real_distribution<double> x(0, 2);
    for (int i = 0; i < 2000; ++i) {
        auto c = random_couplings(rng);
        auto t = build_vacuum_tensor(c);
        double h1 = x(rng), h2 = x(rng), s = x(rng);
        double direct = c.lambdaS * std::pow(s, 4) + eval_m(c, h1, h2) * s * s + eval_vtilde(c, h1, h2);
        double via = eval_quartic_form(t, std::vector<double>{h1, h2, s});
        double mag = scale_of(c) * std::pow(h1 + h2 + s, 4);
        EXPECT_LE(std::abs(direct - via), 1e-12 * mag);
    }
}

TEST(BuildVacuumTensor, ExactOverRationals) {
    RationalGen gen(102);
    for (int i = 0; i < 200; ++i) {
        BasicCouplings<Rational> c{gen.in(-5, 5), gen.in(-5, 5), gen.in(-5, 5), gen.in(-5, 5), gen.in(0, 5),
                                   gen.in(-5, 5), gen.in(-5, 5), gen.in(0, 5),  gen.in(0, 1)};
        Rational h1 = gen.in(0, 3), h2 = gen.in(0, 3), s = gen.in(0, 3);
        EXPECT_EQ(eval_quartic_form(build_vacuum_tensor(c), std::vector<Rational>{h1, h2, s}),
                  eval_potential(c, h1, h2, s));
    }
}

TEST(EvalM, Examples) {
    Couplings c = base();
    c.lambdaS1 = c.lambdaS2 = 1;
    EXPECT_EQ(eval_m(c, 1.0, 1.0), 2);
    c.absLambdaS12 = 2;
    c.rho = 1;
    EXPECT_EQ(eval_m(c, 1.0, 1.0), 0);
    Couplings n = base();
    n.lambdaS1 = n.lambdaS2 = -1;
    EXPECT_EQ(eval_m(n, 2.0, 0.0), -4);
}

TEST(EvalVtilde, Examples) {
    Couplings c = base();
    c.lambda1 = c.lambda2 = 1;
    EXPECT_EQ(eval_vtilde(c, 1.0, 1.0), 2);
    c.lambda3 = -4;
    EXPECT_EQ(eval_vtilde(c, 1.0, 1.0), -2);
    std::mt19937_64 rng(103);
    for (int i = 0; i < 20; ++i) EXPECT_EQ(eval_vtilde(random_couplings(rng), 0.0, 0.0), 0);
}

TEST(MinOverS, Examples) {
    Couplings pure = base();
    pure.lambdaS = 1;
    EXPECT_EQ(min_over_s(pure, 0.3, 0.7), 0);
    EXPECT_EQ(min_over_s(pure, 2.0, 0.0), 0);

    Couplings neg = base();
    neg.lambdaS = 1;
    neg.lambdaS1 = neg.lambdaS2 = -1;
    neg.lambda1 = neg.lambda2 = 1;
    EXPECT_DOUBLE_EQ(min_over_s(neg, 1.0, 0.0), 0.75);

    Couplings flat = base();
    flat.lambdaS = 1;
    flat.lambda1 = flat.lambda2 = 1;
    flat.lambda3 = -4;
    EXPECT_EQ(min_over_s(flat, 1.0, 1.0), -2);
}

TEST(MinOverS, RejectsNonPositiveLambdaS) {
    Couplings c = base();
    EXPECT_THROW(min_over_s(c, 1.0, 1.0), std::domain_error);
    c.lambdaS = -1;
    EXPECT_THROW(min_over_s(c, 1.0, 1.0), std::domain_error);
    c.lambdaS = 1;
    EXPECT_THROW(min_over_s(c, -1.0, 1.0), std::domain_error);
}

TEST(MinOverS, MatchesDenseGridWithRefinement) {
    std::mt19937_64 rng(104);
    std::uniform_real_distribution<double> x(0, 2);
    for (int i = 0; i < 200; ++i) {
        auto c = random_couplings(rng, 0.05);
        double h1 = x(rng), h2 = x(rng);
        auto v = [&](double s) { return eval_potential(c, h1, h2, s); };
        const int n = 10000;
        int best = 0;
        for (int k = 1; k <= n; ++k)
            if (v(100.0 * k / n) < v(100.0 * best / n)) best = k;
        double lo = 100.0 * std::max(best - 1, 0) / n, hi = 100.0 * std::min(best + 1, n) / n;
        for (int it = 0; it < 200; ++it) {
            double m1 = lo + (hi - lo) / 3, m2 = hi - (hi - lo) / 3;
            if (v(m1) < v(m2)) hi = m2;
            else lo = m1;
        }
        const double grid = std::min(v(0.0), v((lo + hi) / 2));
        const double closed = min_over_s(c, h1, h2);
        EXPECT_LE(std::abs(grid - closed), 1e-6 * (1 + std::abs(closed)));
        EXPECT_LE(closed, grid + 1e-9 * (1 + std::abs(closed)));
    }
}

TEST(MCopositive, Examples) {
    Couplings c = base();
    c.lambdaS1 = c.lambdaS2 = 1;
    c.absLambdaS12 = 2;
    c.rho = 1;
    EXPECT_TRUE(m_copositive(c, false));
    EXPECT_FALSE(m_copositive(c, true));
    Couplings n = base();
    n.lambdaS1 = -1;
    EXPECT_FALSE(m_copositive(n, false));
    Couplings p = base();
    p.lambdaS1 = 4;
    p.lambdaS2 = 1;
    EXPECT_TRUE(m_copositive(p, false));
}

TEST(MNegativeDefiniteOnCone, Examples) {
    Couplings c = base();
    c.lambdaS1 = c.lambdaS2 = -1;
    EXPECT_TRUE(m_negative_definite_on_cone(c));
    c.lambdaS1 = 0;
    EXPECT_FALSE(m_negative_definite_on_cone(c));
    c.lambdaS1 = 1;
    EXPECT_FALSE(m_negative_definite_on_cone(c));
}

TEST(DerivedQuartic, Examples) {
    Couplings c = base();
    c.lambdaS = 1;
    c.lambda1 = c.lambda2 = 1;
    c.lambdaS1 = c.lambdaS2 = -1;
    auto d = derived_quartic(c);
    EXPECT_EQ(d.l40, 3);
    EXPECT_EQ(d.l31, 0);
    EXPECT_EQ(d.l22, -2);
    EXPECT_EQ(d.l13, 0);
    EXPECT_EQ(d.l04, 3);

    auto z = derived_quartic(base());
    EXPECT_EQ(z.l40, 0);
    EXPECT_EQ(z.l04, 0);
    EXPECT_EQ(z.l13, 0);
    EXPECT_EQ(z.l31, 0);
    EXPECT_EQ(z.l22, 0);
    EXPECT_EQ(z.delta_prime(), 0);

    Couplings one = base();
    one.lambdaS = 1;
    one.lambda1 = 1;
    auto o = derived_quartic(one);
    EXPECT_EQ(o.l40, 4);
    EXPECT_EQ(o.l04, 0);
    EXPECT_EQ(o.l22, 0);
}

TEST(DerivedQuartic, DeltaPrimeIsTheQuarticDiscriminant) {
    RationalGen gen(105);
    for (int i = 0; i < 100; ++i) {
        DerivedQuartic<Rational> d{gen.in(-5, 5), gen.in(-5, 5), gen.in(-5, 5), gen.in(-5, 5), gen.in(-5, 5)};
        EXPECT_EQ(d.delta_prime(), quartic_discriminant(QuarticCoeffs<Rational>{d.l04, d.l13, d.l22, d.l31, d.l40}));
        // Reversal leaves the discriminant unchanged.
        EXPECT_EQ(d.delta_prime(), quartic_discriminant(d.quartic().reversed()));
    }
}

TEST(DerivedQuartic, ExpansionIdentity) {
    std::mt19937_64 rng(106);
    std::uniform_real_distribution<double> x(0, 2);
    for (int i = 0; i < 2000; ++i) {
        auto c = random_couplings(rng);
        auto d = derived_quartic(c);
        double h1 = x(rng), h2 = x(rng);
        const double m = eval_m(c, h1, h2);
        const double lhs = 4 * c.lambdaS * eval_vtilde(c, h1, h2) - m * m;
        const double mag = scale_of(c) * scale_of(c) * std::pow(h1 + h2, 4) * 16;
        EXPECT_LE(std::abs(lhs - d(h1, h2)), 1e-12 * mag);
    }
    RationalGen gen(107);
    for (int i = 0; i < 200; ++i) {
        BasicCouplings<Rational> c{gen.in(-5, 5), gen.in(-5, 5), gen.in(-5, 5), gen.in(-5, 5), gen.in(0, 5),
                                   gen.in(-5, 5), gen.in(-5, 5), gen.in(0, 5),  gen.in(0, 1)};
        Rational h1 = gen.in(0, 3), h2 = gen.in(0, 3);
        const Rational m = eval_m(c, h1, h2);
        EXPECT_EQ(4 * c.lambdaS * eval_vtilde(c, h1, h2) - m * m, derived_quartic(c)(h1, h2));
    }
}

TEST(DerivedQuarticCriterion, Examples) {
    auto a = prop35_check(DerivedQuartic<double>{3, 3, 0, 0, -2});
    EXPECT_TRUE(a.holds);
    EXPECT_EQ(a.fired, QuarticCase::case2);
    EXPECT_FALSE(a.degenerate);
    for (int k = 0; k <= 100; ++k) {
        double t = k / 25.0;
        EXPECT_GE(3 - 2 * t * t + 3 * t * t * t * t, 0);
    }

    auto b = prop35_check(DerivedQuartic<double>{4, 0, 0, 0, 0});
    EXPECT_FALSE(b.holds);
    EXPECT_TRUE(b.degenerate);
    ASSERT_TRUE(b.exact_oracle.has_value());
    EXPECT_TRUE(*b.exact_oracle);

    auto c = prop35_check(DerivedQuartic<double>{1, 1, 0, 0, -10});
    EXPECT_FALSE(c.holds);
    EXPECT_EQ(DerivedQuartic<double>({1, 1, 0, 0, -10})(1.0, 1.0), -8);
}

TEST(DerivedQuarticCriterion, ReversedMappingGivesTheSameAnswer) {
    RationalGen gen(108);
    for (int i = 0; i < 1000; ++i) {
        DerivedQuartic<Rational> d{gen.in(Rational(1, 10), 10), gen.in(Rational(1, 10), 10), gen.in(-10, 10),
                                   gen.in(-10, 10), gen.in(-10, 10)};
        DerivedQuartic<Rational> r{d.l04, d.l40, d.l31, d.l13, d.l22};
        auto fwd = prop35_check(d), rev = prop35_check(r);
        ASSERT_EQ(fwd.holds, rev.holds);
        ASSERT_EQ(fwd.holds, quartic_nonneg_pos_exact(d.quartic()));
    }
}

TEST(VacuumClosedForm, Examples) {
    Couplings c = base();
    c.lambda1 = c.lambda2 = c.lambdaS = 1;
    c.rho = 0.5;
    auto v = vacuum_copositive_thm36(c);
    EXPECT_EQ(v.decision, Decision::copositive);
    EXPECT_EQ(v.thm36_case, VacuumCase::case1);
    EXPECT_EQ(v.complete_decision, Decision::copositive);
    EXPECT_TRUE(v.agreement);

    Couplings two = base();
    two.lambdaS = two.lambda1 = two.lambda2 = 1;
    two.lambdaS1 = two.lambdaS2 = -1;
    auto v2 = vacuum_copositive_thm36(two);
    EXPECT_EQ(v2.decision, Decision::copositive);
    EXPECT_EQ(v2.thm36_case, VacuumCase::case2_2);
    EXPECT_EQ(v2.complete_decision, Decision::copositive);

    Couplings bad = base();
    bad.lambdaS = bad.lambda1 = bad.lambda2 = 1;
    bad.lambda3 = -4;
    auto v3 = vacuum_copositive_thm36(bad);
    EXPECT_EQ(v3.decision, Decision::not_copositive);
    EXPECT_EQ(v3.thm36_case, VacuumCase::none);
    EXPECT_EQ(v3.complete_decision, Decision::not_copositive);
    ASSERT_TRUE(v3.witness.has_value());
    expect_valid_witness(bad, *v3.witness);
    const double r = 1 / std::sqrt(2.0);
    EXPECT_NEAR(v3.witness->x[0], r, 1e-9);
    EXPECT_NEAR(v3.witness->x[1], r, 1e-9);
    EXPECT_NEAR(v3.witness->x[2], 0, 1e-9);
    EXPECT_EQ(eval_potential(bad, 1.0, 1.0, 0.0), -2);
}

TEST(VacuumClosedForm, SoundAgainstCompleteChecker) {
    std::mt19937_64 rng(109);
    int copositive = 0, gaps = 0;
    for (int i = 0; i < 1500; ++i) {
        auto c = i % 2 ? physical_couplings(rng) : random_couplings(rng, 1e-3);
        auto v = vacuum_copositive_thm36(c);
        if (v.decision == Decision::copositive) {
            ++copositive;
            ASSERT_EQ(v.complete_decision, Decision::copositive);
        }
        if (v.complete_decision == Decision::not_copositive) {
            ASSERT_EQ(v.decision, Decision::not_copositive);
        }
        if (!v.agreement) ++gaps;
        if (v.witness) expect_valid_witness(c, *v.witness);
        if (v.decision == Decision::not_copositive && v.complete_decision == Decision::not_copositive) {
            EXPECT_TRUE(v.witness.has_value());
        }
    }
    EXPECT_GT(copositive, 0);
    RecordProperty("necessity_gap", gaps);
}

TEST(VacuumClosedForm, CompleteCheckerAgreesWithDenseSampling) {
    std::mt19937_64 rng(110);
    for (int i = 0; i < 150; ++i) {
        auto c = physical_couplings(rng);
        auto complete = vacuum_copositive_complete(c);
        double lo = INFINITY;
        const int n = 2000;
        for (int k = 0; k <= n; ++k) {
            double a = std::acos(0.0) * k / n;
            lo = std::min(lo, min_over_s(c, std::cos(a), std::sin(a)));
        }
        if (complete.decision == Decision::copositive) EXPECT_GE(lo, -1e-9 * scale_of(c));
        else {
            ASSERT_TRUE(complete.witness.has_value());
            expect_valid_witness(c, *complete.witness);
        }
    }
}

TEST(VacuumClosedForm, RhoZeroIgnoresLambda4AndLambdaS12) {
    std::mt19937_64 rng(111);
    std::uniform_real_distribution<double> u(-10, 10), pos(0, 10);
    for (int i = 0; i < 300; ++i) {
        auto c = i % 2 ? physical_couplings(rng) : random_couplings(rng, 1e-3);
        c.rho = 0;
        auto ref = vacuum_copositive_thm36(c);
        c.lambda4 = u(rng);
        c.absLambdaS12 = pos(rng);
        auto other = vacuum_copositive_thm36(c);
        EXPECT_EQ(ref.decision, other.decision);
        EXPECT_EQ(ref.thm36_case, other.thm36_case);
        EXPECT_EQ(ref.complete_decision, other.complete_decision);
    }
}

TEST(VacuumClosedForm, LambdaSZeroAndNegativePaths) {
    Couplings zero = base();
    zero.lambda1 = zero.lambda2 = 1;
    zero.lambdaS1 = zero.lambdaS2 = 1;
    auto v = vacuum_copositive_thm36(zero);
    EXPECT_EQ(v.decision, Decision::not_copositive);  // the closed form demands lambdaS > 0
    EXPECT_EQ(v.complete_path, CompletePath::lambdaS_zero);
    EXPECT_EQ(v.complete_decision, Decision::copositive);
    EXPECT_FALSE(v.agreement);

    zero.lambdaS1 = -1;
    auto w = vacuum_copositive_thm36(zero);
    EXPECT_EQ(w.complete_decision, Decision::not_copositive);
    ASSERT_TRUE(w.witness.has_value());
    expect_valid_witness(zero, *w.witness);

    Couplings neg = base();
    neg.lambdaS = -1;
    neg.lambda1 = neg.lambda2 = 1;
    EXPECT_THROW(vacuum_copositive_complete(neg), std::domain_error);
    auto n = vacuum_copositive_thm36(neg);
    EXPECT_EQ(n.decision, Decision::not_copositive);
    EXPECT_EQ(n.complete_path, CompletePath::lambdaS_negative);
    EXPECT_TRUE(n.agreement);
    ASSERT_TRUE(n.witness.has_value());
    EXPECT_EQ(n.witness->x, (std::array<double, 3>{0, 0, 1}));
    EXPECT_EQ(n.witness->value, -1);
}

TEST(VacuumClosedForm, FloatAndExactContextsAgreeOutsideTheBand) {
    std::mt19937_64 rng(112);
    for (int i = 0; i < 1000; ++i) {
        auto c = i % 2 ? physical_couplings(rng) : random_couplings(rng, 1e-3);
        auto fl = thm36_test(c, FloatContext{});
        auto ex = thm36_test(to_rational(c), ExactContext{});
        if (fl.holds != Truth::unknown) {
            EXPECT_EQ(fl.holds, ex.holds);
        }
    }
}

TEST(SweepRho, ConjunctionOverGrid) {
    EXPECT_EQ(uniform_rho_grid(101).size(), 101u);
    EXPECT_EQ(uniform_rho_grid(101).front(), 0.0);
    EXPECT_EQ(uniform_rho_grid(101).back(), 1.0);
    EXPECT_EQ(uniform_rho_grid(1), std::vector<double>{0.0});
    EXPECT_THROW(uniform_rho_grid(0), std::invalid_argument);

    // lambda4 rho^2 pushes the mixed coefficient below the case (1) threshold as rho grows.
    Couplings c = base();
    c.lambda1 = c.lambda2 = c.lambdaS = 1;
    c.lambda4 = -4;
    auto grid = uniform_rho_grid(11);
    auto s = sweep_rho(c, grid);
    ASSERT_EQ(s.verdicts.size(), 11u);
    EXPECT_EQ(s.verdicts.front().decision, Decision::copositive);
    EXPECT_EQ(s.verdicts.back().decision, Decision::not_copositive);
    EXPECT_EQ(s.thm36_all, Decision::not_copositive);
    EXPECT_EQ(s.complete_all, Decision::not_copositive);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        // rho^2 <= 1/2 keeps -4 rho^2 + 2 >= 0
        const bool expect = grid[i] * grid[i] <= 0.5;
        EXPECT_EQ(s.verdicts[i].decision == Decision::copositive, expect) << grid[i];
    }

    Couplings safe = base();
    safe.lambda1 = safe.lambda2 = safe.lambdaS = 1;
    auto all = sweep_rho(safe, grid);
    EXPECT_EQ(all.thm36_all, Decision::copositive);
    EXPECT_EQ(all.complete_all, Decision::copositive);
}
