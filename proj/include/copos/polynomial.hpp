#pragma once

#include "copos/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace copos {

/// Dense univariate polynomial, coefficients in ascending degree.
/// The highest stored coefficient is nonzero unless the polynomial is zero,
/// in which case no coefficients are stored.
template <class T>
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(std::initializer_list<T> ascending) : c_(ascending) { trim(); }
    explicit Polynomial(std::vector<T> ascending) : c_(std::move(ascending)) { trim(); }

    static Polynomial constant(const T& v) { return Polynomial(std::vector<T>{v}); }
    static Polynomial monomial(const T& coef, std::size_t degree) {
        std::vector<T> c(degree + 1, T(0));
        c[degree] = coef;
        return Polynomial(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    /// Degree of the zero polynomial is reported as -1.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<T>& coefficients() const { return c_; }
    T operator[](std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }
    const T& leading() const {
        if (c_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
        return c_.back();
    }

    T operator()(const T& x) const {
        T acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = T(acc * x + *it);
        return acc;
    }

    Polynomial derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<T> d(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = T(c_[i] * T(static_cast<long>(i)));
        return Polynomial(std::move(d));
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<T> r(std::max(a.c_.size(), b.c_.size()), T(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
        return Polynomial(std::move(r));
    }

    friend Polynomial operator-(const Polynomial& a) {
        std::vector<T> r(a.c_);
        for (auto& v : r) v = T(-v);
        return Polynomial(std::move(r));
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<T> r(a.c_.size() + b.c_.size() - 1, T(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return Polynomial(std::move(r));
    }

    friend Polynomial operator*(const T& s, const Polynomial& p) {
        std::vector<T> r(p.c_);
        for (auto& v : r) v = T(v * s);
        return Polynomial(std::move(r));
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

    /// Euclidean division over a field: *this = q * divisor + r, deg r < deg divisor.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const {
        if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
        std::vector<T> rem(c_);
        const long dd = divisor.degree();
        if (degree() < dd) return {Polynomial{}, *this};
        std::vector<T> quo(static_cast<std::size_t>(degree() - dd + 1), T(0));
        const T& lead = divisor.leading();
        for (long k = degree() - dd; k >= 0; --k) {
            auto top = static_cast<std::size_t>(k + dd);
            T factor = T(rem[top] / lead);
            quo[static_cast<std::size_t>(k)] = factor;
            if (factor == 0) continue;
            for (long j = 0; j <= dd; ++j) {
                auto idx = static_cast<std::size_t>(k + j);
                rem[idx] -= factor * divisor.c_[static_cast<std::size_t>(j)];
            }
        }
        rem.resize(static_cast<std::size_t>(dd));
        return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
    }

    Polynomial monic() const {
        if (is_zero()) return {};
        return T(T(1) / leading()) * *this;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<T> c_;
};

template <class T>
Polynomial<T> gcd(Polynomial<T> a, Polynomial<T> b) {
    while (!b.is_zero()) {
        auto r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// Exact quotient; throws if the division leaves a remainder.
template <class T>
Polynomial<T> exact_quotient(const Polynomial<T>& a, const Polynomial<T>& b) {
    auto [q, r] = a.divmod(b);
    if (!r.is_zero()) throw std::logic_error("polynomial division was expected to be exact");
    return q;
}

/// Scales a rational polynomial by a positive constant so its coefficients are
/// coprime integers. Signs of values are preserved everywhere.
inline Polynomial<Rational> primitive_part(const Polynomial<Rational>& p) {
    if (p.is_zero()) return p;
    Integer den_lcm(1);
    for (const auto& v : p.coefficients()) den_lcm = boost::multiprecision::lcm(den_lcm, Integer(denominator(v)));
    Integer num_gcd(0);
    for (const auto& v : p.coefficients()) {
        Integer scaled = Integer(numerator(v)) * (den_lcm / Integer(denominator(v)));
        num_gcd = boost::multiprecision::gcd(num_gcd, scaled);
    }
    if (num_gcd < 0) num_gcd = -num_gcd;
    return Rational(den_lcm, num_gcd) * p;
}

template <class T>
std::ostream& operator<<(std::ostream& os, const Polynomial<T>& p) {
    if (p.is_zero()) return os << "0";
    bool first = true;
    for (long i = p.degree(); i >= 0; --i) {
        const T& v = p.coefficients()[static_cast<std::size_t>(i)];
        if (v == 0) continue;
        if (!first) os << " + ";
        os << "(" << v << ")";
        if (i > 0) os << "*t";
        if (i > 1) os << "^" << i;
        first = false;
    }
    return os;
}

}  // namespace copos
