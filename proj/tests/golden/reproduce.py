"""Recomputes the frozen regression values from first principles.

Uses only exact rationals (fractions, sympy) and numpy sampling, never the
C++ library. Exits nonzero if any recomputed value differs from the value
frozen in the C++ tests.
"""

import itertools
import math
import sys
from fractions import Fraction as F

import numpy as np
import sympy as sp

t = sp.symbols("t")
failures = []


def check(name, got, want):
    ok = got == want if not isinstance(want, float) else abs(got - want) <= 1e-12 * max(1.0, abs(want))
    print(f"{'ok  ' if ok else 'FAIL'} {name}: {got!r} (frozen {want!r})")
    if not ok:
        failures.append(name)


def disc(a, b, c, d, e):
    return 4 * (12 * a * e - 3 * b * d + c * c) ** 3 - (
        72 * a * c * e + 9 * b * c * d - 2 * c**3 - 27 * a * d * d - 27 * b * b * e
    ) ** 2


def nonneg_pos(coeffs_desc):
    """Exact: no odd-multiplicity root in (0, inf) and positive somewhere."""
    p = sp.Poly(coeffs_desc, t, domain="QQ")
    if p.is_zero:
        return True
    _, factors = p.sqf_list()
    for f, k in factors:
        if k % 2 and f.count_roots(0, None) - (1 if f.eval(0) == 0 else 0) > 0:
            return False
    for s in (F(1, 3), F(2, 7), F(5, 3), F(11, 2)):
        v = p.eval(sp.Rational(s.numerator, s.denominator))
        if v != 0:
            return bool(v > 0)
    return True


def quartic_form_dense(entries, x):
    """Brute force over all n^4 index tuples."""
    n = len(x)
    total = F(0)
    for idx in itertools.product(range(n), repeat=4):
        total += entries.get(tuple(sorted(idx)), F(0)) * x[idx[0]] * x[idx[1]] * x[idx[2]] * x[idx[3]]
    return total


# Quadratic (1, -3, 1): f(1) = -1, dense sampling on [0, 10].
grid = np.linspace(0.0, 10.0, 100001)
check("quadratic_1_-3_1_min_negative", bool((grid**2 - 3 * grid + 1).min() < 0), True)
check("quadratic_1_-3_1_f1", 1 - 3 + 1, -1)

check("disc_1_0_0_0_1", disc(1, 0, 0, 0, 1), 6912)
check("disc_1_-4_6_-4_1", disc(1, -4, 6, -4, 1), 0)
check("quartic_1_0_-2_0_1_nonneg", nonneg_pos([1, 0, -2, 0, 1]), True)
check("quartic_1_0_-5_0_4_f1.5", float(F(3, 2) ** 4 - 5 * F(3, 2) ** 2 + 4), -2.1875)
check("quartic_1_0_-5_0_4_nonneg", nonneg_pos([1, 0, -5, 0, 4]), False)
check("quartic_t-1^4_nonneg", nonneg_pos([1, -4, 6, -4, 1]), True)
roots = sp.Poly(sp.expand((t**2 - 1) * (t**2 - 4)), t).count_roots(0, None)
check("sturm_(t2-1)(t2-4)_roots_pos", roots, 2)
check("sturm_(t2-1)(t2-4)_nonneg", nonneg_pos(sp.Poly(sp.expand((t**2 - 1) * (t**2 - 4)), t).all_coeffs()), False)

# Tensor evaluation by brute-force n^4 summation.
check("eval_a1233_ones", quartic_form_dense({(0, 1, 2, 2): F(1)}, [1, 1, 1]), 12)
a1122 = {(0, 0, 1, 1): F(1)}
contract = [sum(a1122.get(tuple(sorted((i, j, k, l))), 0) for j in range(2) for k in range(2) for l in range(2)) for i in range(2)]
check("contract3_a1122_ones", contract, [3, 3])
check("matrix2_1_-2_1_at_11", 1 - 4 + 1, -2)


def invariants(a1111, a1112, a1122, a1222, a2222):
    I = a1111 * a2222 - 4 * a1112 * a1222 + 3 * a1122**2
    J = a1111 * a1122 * a2222 + 2 * a1112 * a1122 * a1222 - a1122**3 - a2222 * a1112**2 - a1111 * a1222**2
    return I, J, I**3 - 27 * J**2


check("invariants_diag", invariants(1, 0, 0, 0, 1), (1, 0, 1))
check("invariants_t-1^4", invariants(1, -1, 1, -1, 1)[2], 0)
# The factorization behind the invariants, symbolically.
A = sp.symbols("a1111 a1112 a1122 a1222 a2222")
I, J, D = invariants(*A)
check("disc_factorization_6912", sp.expand(disc(A[4], 4 * A[3], 6 * A[2], 4 * A[1], A[0]) - 6912 * D), 0)

check("tensor2_-1/3_nonneg", nonneg_pos([1, 0, -2, 0, 1]), True)
check("tensor2_-5/6_f0.75", float(4 * F(3, 4) ** 4 - 5 * F(3, 4) ** 2 + 1), -0.546875)
check("tensor2_-5/6_nonneg", nonneg_pos([4, 0, -5, 0, 1]), False)
check("strict_a1122_1_disc_positive", invariants(1, 0, 1, 0, 1)[2] > 0, True)
check("strict_a1122_1_spread", 0 <= math.sqrt(6 + 2), True)


def V(c, h1, h2, s):
    M = c["lambdaS1"] * h1**2 + c["lambdaS2"] * h2**2 - c["absLambdaS12"] * c["rho"] * h1 * h2
    Vt = c["lambda1"] * h1**4 + c["lambda2"] * h2**4 + (c["lambda3"] + c["lambda4"] * c["rho"] ** 2) * h1**2 * h2**2
    return c["lambdaS"] * s**4 + M * s**2 + Vt


def couplings(**kw):
    base = dict(lambda1=0, lambda2=0, lambda3=0, lambda4=0, lambdaS=0, lambdaS1=0, lambdaS2=0, absLambdaS12=0, rho=0)
    base.update(kw)
    return {k: F(v) for k, v in base.items()}


def vacuum_entries(c):
    return {
        (0, 0, 0, 0): c["lambda1"],
        (1, 1, 1, 1): c["lambda2"],
        (2, 2, 2, 2): c["lambdaS"],
        (0, 0, 1, 1): (c["lambda3"] + c["lambda4"] * c["rho"] ** 2) / 6,
        (0, 0, 2, 2): c["lambdaS1"] / 6,
        (1, 1, 2, 2): c["lambdaS2"] / 6,
        (0, 1, 2, 2): -c["absLambdaS12"] * c["rho"] / 12,
    }


c = couplings(lambdaS1=6)
check("vacuum_lS1_6_V101", quartic_form_dense(vacuum_entries(c), [1, 0, 1]), 6)
c = couplings(absLambdaS12=12, rho=1)
check("vacuum_lS12_12_V111", quartic_form_dense(vacuum_entries(c), [1, 1, 1]), -12)
c3 = couplings(lambda1=1, lambda2=1, lambda3=-4, lambdaS=1)
check("vtilde_l3_-4_at_11", V(c3, 1, 1, 0), -2)
check("vacuum_l3_-4_unit", V(c3, 1, 1, 0) / 4, F(-1, 2))

c2 = couplings(lambdaS=1, lambda1=1, lambda2=1, lambdaS1=-1, lambdaS2=-1)
s_grid = np.linspace(0.0, 100.0, 10001)
k = int(np.argmin(s_grid**4 - s_grid**2 + 1))
lo, hi = s_grid[max(k - 1, 0)], s_grid[min(k + 1, len(s_grid) - 1)]
for _ in range(200):
    m1, m2 = lo + (hi - lo) / 3, hi - (hi - lo) / 3
    if m1**4 - m1**2 < m2**4 - m2**2:
        hi = m2
    else:
        lo = m1
dense = lo**4 - lo**2 + 1
check("min_over_s_case2_at_10", round(float(dense), 9), 0.75)
check("min_over_s_case2_formula", 1 - F(1, 4), F(3, 4))
check("min_over_s_l3_-4_at_11", V(c3, 1, 1, 0), -2)


def derived(c):
    return (
        4 * c["lambdaS"] * c["lambda1"] - c["lambdaS1"] ** 2,
        2 * c["lambdaS1"] * c["absLambdaS12"] * c["rho"],
        4 * c["lambdaS"] * c["lambda3"] + 4 * c["lambdaS"] * c["lambda4"] * c["rho"] ** 2
        - c["absLambdaS12"] ** 2 * c["rho"] ** 2 - 2 * c["lambdaS1"] * c["lambdaS2"],
        2 * c["lambdaS2"] * c["absLambdaS12"] * c["rho"],
        4 * c["lambdaS"] * c["lambda2"] - c["lambdaS2"] ** 2,
    )


check("derived_case2", derived(c2), (3, 0, -2, 0, 3))
check("derived_criterion_3_0_-2_0_3_nonneg", nonneg_pos([3, 0, -2, 0, 3]), True)
check("derived_criterion_1_0_-10_0_1_f1", 1 - 10 + 1, -8)

# Sampling oracle over 10^6 points of the nonnegative sphere for the case-2 couplings.
rng = np.random.default_rng(20260101)
x = np.abs(rng.standard_normal((1_000_000, 3)))
x /= np.linalg.norm(x, axis=1, keepdims=True)
h1, h2, s = x[:, 0], x[:, 1], x[:, 2]
vals = s**4 - (h1**2 + h2**2) * s**2 + h1**4 + h2**4
check("vacuum_case2_sampled_min_nonneg", bool(vals.min() >= 0), True)

# Oracle: x1^4 + x2^4 on the unit circle.
th = np.linspace(0, np.pi / 2, 200001)
check("oracle_diag_min", round(float((np.cos(th) ** 4 + np.sin(th) ** 4).min()), 9), 0.5)
check("certify_l3_-4_raw", quartic_form_dense(vacuum_entries(c3), [1, 1, 0]), -2)

if failures:
    print(f"{len(failures)} mismatches", file=sys.stderr)
    sys.exit(1)
print("all frozen values reproduced")
