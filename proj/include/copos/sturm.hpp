#pragma once

// Exact real-root machinery over the rationals: Sturm sequences, square-free
// decomposition, root isolation and sign-invariant sampling. This is the
// ground truth every closed-form criterion is checked against.

#include "copos/polynomial.hpp"
#include "copos/rational.hpp"

#include <cstddef>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

namespace copos {

/// A point of the extended real line with rational finite values.
struct Endpoint {
    enum class Kind { finite, plus_infinity, minus_infinity };

    Kind kind = Kind::finite;
    Rational value{};

    static Endpoint at(Rational v) { return {Kind::finite, std::move(v)}; }
    static Endpoint plus_infinity() { return {Kind::plus_infinity, Rational(0)}; }
    static Endpoint minus_infinity() { return {Kind::minus_infinity, Rational(0)}; }

    bool finite() const { return kind == Kind::finite; }
};

inline bool endpoint_less(const Endpoint& a, const Endpoint& b) {
    if (a.kind == Endpoint::Kind::minus_infinity) return b.kind != Endpoint::Kind::minus_infinity;
    if (a.kind == Endpoint::Kind::plus_infinity) return false;
    if (b.kind == Endpoint::Kind::plus_infinity) return true;
    if (b.kind == Endpoint::Kind::minus_infinity) return false;
    return a.value < b.value;
}

namespace detail {

inline int sign_of(const Rational& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

}  // namespace detail

/// Square-free part p / gcd(p, p'), scaled to a primitive integer polynomial.
inline Polynomial<Rational> squarefree_part(const Polynomial<Rational>& p) {
    if (p.degree() <= 0) return primitive_part(p);
    auto g = gcd(p, p.derivative());
    return primitive_part(exact_quotient(p, g));
}

/// Yun's algorithm: result[k] is the product of the irreducible factors of
/// multiplicity exactly k + 1 (monic), so p = lc * prod result[k]^(k+1).
inline std::vector<Polynomial<Rational>> squarefree_decomposition(const Polynomial<Rational>& p) {
    std::vector<Polynomial<Rational>> out;
    if (p.degree() <= 0) return out;
    const auto m = p.monic();
    auto dp = m.derivative();
    auto g = gcd(m, dp);
    auto c = exact_quotient(m, g);
    auto d = exact_quotient(dp, g) - c.derivative();
    while (c.degree() > 0) {
        auto a = gcd(c, d);
        out.push_back(a);
        c = exact_quotient(c, a);
        d = exact_quotient(d, a) - c.derivative();
    }
    return out;
}

/// Product of the factors whose multiplicity is odd; its roots are exactly
/// the points where p changes sign.
inline Polynomial<Rational> odd_multiplicity_part(const Polynomial<Rational>& p) {
    Polynomial<Rational> acc = Polynomial<Rational>::constant(Rational(1));
    auto factors = squarefree_decomposition(p);
    for (std::size_t k = 0; k < factors.size(); k += 2) acc = acc * factors[k];
    return primitive_part(acc);
}

/// Sturm sequence of the square-free part of a nonzero polynomial, with each
/// remainder reduced to a primitive integer polynomial.
class SturmSequence {
public:
    explicit SturmSequence(const Polynomial<Rational>& p) {
        if (p.is_zero()) throw std::domain_error("Sturm sequence of the zero polynomial");
        base_ = squarefree_part(p);
        seq_.push_back(base_);
        if (base_.degree() <= 0) return;
        seq_.push_back(primitive_part(base_.derivative()));
        while (seq_.back().degree() > 0) {
            auto rem = seq_[seq_.size() - 2].divmod(seq_.back()).second;
            if (rem.is_zero()) break;
            seq_.push_back(primitive_part(-rem));
        }
    }

    const Polynomial<Rational>& squarefree() const { return base_; }
    const std::vector<Polynomial<Rational>>& chain() const { return seq_; }

    /// Sign variations with zeros dropped.
    int variations(const Endpoint& x) const {
        int count = 0;
        int last = 0;
        for (const auto& q : seq_) {
            int s = 0;
            if (x.finite()) {
                s = detail::sign_of(q(x.value));
            } else {
                s = detail::sign_of(q.leading());
                if (x.kind == Endpoint::Kind::minus_infinity && q.degree() % 2 != 0) s = -s;
            }
            if (s == 0) continue;
            if (last != 0 && s != last) ++count;
            last = s;
        }
        return count;
    }

    /// Number of distinct real roots in the open interval (lo, hi).
    std::size_t count_roots(const Endpoint& lo, const Endpoint& hi) const {
        if (!endpoint_less(lo, hi)) return 0;
        int n = variations(lo) - variations(hi);
        if (hi.finite() && base_(hi.value) == 0) --n;
        return n > 0 ? static_cast<std::size_t>(n) : 0;
    }

    bool is_root(const Rational& x) const { return base_(x) == 0; }

private:
    Polynomial<Rational> base_;
    std::vector<Polynomial<Rational>> seq_;
};

/// Strict upper bound on the absolute value of every real root.
inline Rational cauchy_root_bound(const Polynomial<Rational>& p) {
    if (p.degree() <= 0) return Rational(1);
    Rational worst(0);
    const Rational& lead = p.leading();
    for (long i = 0; i < p.degree(); ++i) {
        Rational r = abs(Rational(p.coefficients()[static_cast<std::size_t>(i)] / lead));
        if (r > worst) worst = r;
    }
    return worst + 1;
}

/// Isolated root: either known exactly (lo == hi) or the unique root inside
/// the open interval (lo, hi), whose endpoints are not roots.
struct RootCell {
    bool exact = false;
    Rational lo{};
    Rational hi{};
};

namespace detail {

inline void isolate(const SturmSequence& s, const Rational& l, const Rational& r, std::vector<RootCell>& out) {
    std::size_t n = s.count_roots(Endpoint::at(l), Endpoint::at(r));
    if (n == 0) return;
    if (n == 1 && !s.is_root(l) && !s.is_root(r)) {
        out.push_back({false, l, r});
        return;
    }
    Rational m = (l + r) / 2;
    isolate(s, l, m, out);
    if (s.is_root(m)) out.push_back({true, m, m});
    isolate(s, m, r, out);
}

// Shrinks an interval cell until both endpoints lie strictly inside (lo, hi).
inline void pull_inside(const SturmSequence& s, RootCell& cell, const Endpoint& lo, const Endpoint& hi) {
    auto outside = [&] {
        return (lo.finite() && cell.lo <= lo.value) || (hi.finite() && cell.hi >= hi.value);
    };
    while (!cell.exact && outside()) {
        Rational m = (cell.lo + cell.hi) / 2;
        if (s.is_root(m)) {
            cell = {true, m, m};
        } else if (s.count_roots(Endpoint::at(cell.lo), Endpoint::at(m)) == 1) {
            cell.hi = m;
        } else {
            cell.lo = m;
        }
    }
}

}  // namespace detail

/// Isolates every distinct real root of p in the open interval (lo, hi).
/// Cells are sorted, disjoint, and lie strictly inside (lo, hi).
inline std::vector<RootCell> isolate_roots(const Polynomial<Rational>& p, const Endpoint& lo, const Endpoint& hi) {
    if (!endpoint_less(lo, hi)) throw std::invalid_argument("empty interval");
    if (p.is_zero()) throw std::domain_error("roots of the zero polynomial are not isolated");
    SturmSequence s(p);
    std::vector<RootCell> cells;
    if (s.squarefree().degree() <= 0) return cells;
    Rational bound = cauchy_root_bound(s.squarefree());
    Rational l = lo.finite() ? lo.value : Rational(-bound);
    Rational r = hi.finite() ? hi.value : bound;
    if (lo.finite() && !hi.finite() && l >= r) return cells;
    if (!lo.finite() && hi.finite() && l >= r) return cells;
    detail::isolate(s, l, r, cells);
    for (auto& c : cells) detail::pull_inside(s, c, lo, hi);
    return cells;
}

/// Maximal root-free open sub-interval of (lo, hi) with a rational sample
/// point. Bounds are double approximations of the neighbouring roots (or of
/// the interval ends), for use by numerical refinement only.
struct RootGap {
    Rational sample{};
    double lower = -std::numeric_limits<double>::infinity();
    double upper = std::numeric_limits<double>::infinity();
};

/// Partitions (lo, hi) minus the roots of p into gaps; the sign of p, and of
/// every divisor of p, is constant on each gap.
inline std::vector<RootGap> root_gaps(const Polynomial<Rational>& p, const Endpoint& lo, const Endpoint& hi) {
    auto cells = isolate_roots(p, lo, hi);
    const double inf = std::numeric_limits<double>::infinity();
    auto approx = [](const RootCell& c) { return to_double((c.lo + c.hi) / 2); };
    double lo_d = lo.finite() ? to_double(lo.value) : -inf;
    double hi_d = hi.finite() ? to_double(hi.value) : inf;

    std::vector<RootGap> gaps;
    if (cells.empty()) {
        Rational sample;
        if (lo.finite() && hi.finite()) sample = (lo.value + hi.value) / 2;
        else if (lo.finite()) sample = lo.value + 1;
        else if (hi.finite()) sample = hi.value - 1;
        else sample = 0;
        gaps.push_back({sample, lo_d, hi_d});
        return gaps;
    }

    {
        const auto& first = cells.front();
        Rational sample;
        if (!first.exact) sample = first.lo;
        else if (lo.finite()) sample = (lo.value + first.lo) / 2;
        else sample = first.lo - 1;
        gaps.push_back({sample, lo_d, approx(first)});
    }
    for (std::size_t i = 0; i + 1 < cells.size(); ++i) {
        const auto& a = cells[i];
        const auto& b = cells[i + 1];
        Rational sample;
        if (!a.exact) sample = a.hi;
        else if (!b.exact) sample = b.lo;
        else sample = (a.lo + b.lo) / 2;
        gaps.push_back({sample, approx(a), approx(b)});
    }
    {
        const auto& last = cells.back();
        Rational sample;
        if (!last.exact) sample = last.hi;
        else if (hi.finite()) sample = (last.hi + hi.value) / 2;
        else sample = last.hi + 1;
        gaps.push_back({sample, approx(last), hi_d});
    }
    return gaps;
}

/// True iff p(t) >= 0 for every t in the open interval (lo, hi).
/// p >= 0 there iff p has no root of odd multiplicity inside and is
/// nonnegative at one interior point that is not a root.
inline bool sturm_nonneg_on_interval(const Polynomial<Rational>& p, const Endpoint& lo, const Endpoint& hi) {
    if (!endpoint_less(lo, hi)) throw std::invalid_argument("empty interval");
    if (p.is_zero()) return true;
    auto odd = odd_multiplicity_part(p);
    if (odd.degree() > 0) {
        SturmSequence s(odd);
        if (s.count_roots(lo, hi) > 0) return false;
    }
    auto gaps = root_gaps(p, lo, hi);
    return p(gaps.front().sample) > 0;
}

}  // namespace copos
