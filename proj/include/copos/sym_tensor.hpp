#pragma once

#include "copos/rational.hpp"
#include "copos/sign.hpp"

#include <algorithm>
#include <array>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

namespace copos {

/// 0-based index tuple of a 4th-order tensor entry.
using Index4 = std::array<std::size_t, 4>;

inline Index4 sorted(Index4 idx) {
    std::sort(idx.begin(), idx.end());
    return idx;
}

/// Number of distinct orderings of the multiset {i,j,k,l}: 1, 4, 6, 12 or 24.
inline int multiplicity(const Index4& idx) {
    Index4 s = sorted(idx);
    int denom = 1;
    int run = 1;
    for (std::size_t p = 1; p <= 4; ++p) {
        if (p < 4 && s[p] == s[p - 1]) {
            ++run;
        } else {
            for (int f = 2; f <= run; ++f) denom *= f;
            run = 1;
        }
    }
    return 24 / denom;
}

/// Symmetric 4th-order tensor of dimension n stored as its C(n+3, 4)
/// independent entries, one per sorted index tuple. Lookup of any
/// permutation resolves to the sorted tuple.
template <class T = double>
class SymTensor4 {
public:
    explicit SymTensor4(std::size_t dim) : dim_(dim) {
        if (dim == 0) throw std::invalid_argument("tensor dimension must be positive");
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = i; j < dim; ++j)
                for (std::size_t k = j; k < dim; ++k)
                    for (std::size_t l = k; l < dim; ++l) tuples_.push_back({i, j, k, l});
        values_.assign(tuples_.size(), T(0));
    }

    std::size_t dim() const { return dim_; }
    std::size_t size() const { return tuples_.size(); }

    /// Sorted tuples in lexicographic order, parallel to values().
    const std::vector<Index4>& tuples() const { return tuples_; }
    const std::vector<T>& values() const { return values_; }

    const T& operator()(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
        return values_[slot({i, j, k, l})];
    }
    const T& at(const Index4& idx) const { return values_[slot(idx)]; }

    void set(const Index4& idx, const T& v) { values_[slot(idx)] = v; }

    std::size_t slot(const Index4& idx) const {
        for (auto v : idx)
            if (v >= dim_) throw std::out_of_range("tensor index " + std::to_string(v) + " outside dimension " + std::to_string(dim_));
        Index4 s = sorted(idx);
        auto it = std::lower_bound(tuples_.begin(), tuples_.end(), s);
        return static_cast<std::size_t>(it - tuples_.begin());
    }

    template <class U>
    SymTensor4<U> cast() const {
        SymTensor4<U> out(dim_);
        for (std::size_t p = 0; p < tuples_.size(); ++p) {
            if constexpr (std::is_same_v<U, Rational>) out.set(tuples_[p], to_rational(values_[p]));
            else if constexpr (std::is_same_v<U, double>) out.set(tuples_[p], to_double(values_[p]));
            else out.set(tuples_[p], U(values_[p]));
        }
        return out;
    }

    friend bool operator==(const SymTensor4& a, const SymTensor4& b) {
        return a.dim_ == b.dim_ && a.values_ == b.values_;
    }

private:
    std::size_t dim_;
    std::vector<Index4> tuples_;
    std::vector<T> values_;
};

inline void check_dim(std::size_t tensor_dim, std::size_t vec_len) {
    if (tensor_dim != vec_len)
        throw std::invalid_argument("dimension mismatch: tensor has dim " + std::to_string(tensor_dim) +
                                    ", vector has length " + std::to_string(vec_len));
}

/// A x^4 = sum over all n^4 index tuples of a_ijkl x_i x_j x_k x_l.
template <class T>
T eval_quartic_form(const SymTensor4<T>& t, std::span<const T> x) {
    check_dim(t.dim(), x.size());
    T acc(0);
    const auto& tuples = t.tuples();
    const auto& vals = t.values();
    for (std::size_t p = 0; p < tuples.size(); ++p) {
        if (vals[p] == 0) continue;
        const auto& [i, j, k, l] = tuples[p];
        acc += T(multiplicity(tuples[p])) * vals[p] * x[i] * x[j] * x[k] * x[l];
    }
    return acc;
}

template <class T>
T eval_quartic_form(const SymTensor4<T>& t, const std::vector<T>& x) {
    return eval_quartic_form(t, std::span<const T>(x));
}

/// (A x^3)_i = sum over j,k,l of a_ijkl x_j x_k x_l.
template <class T>
std::vector<T> contract3(const SymTensor4<T>& t, std::span<const T> x) {
    check_dim(t.dim(), x.size());
    std::vector<T> out(t.dim(), T(0));
    const auto& tuples = t.tuples();
    const auto& vals = t.values();
    for (std::size_t p = 0; p < tuples.size(); ++p) {
        if (vals[p] == 0) continue;
        const Index4& s = tuples[p];
        // Each distinct index m of the tuple receives the remaining three
        // factors once per ordering of that remaining multiset.
        for (std::size_t pos = 0; pos < 4; ++pos) {
            if (pos > 0 && s[pos] == s[pos - 1]) continue;
            std::array<std::size_t, 3> rest{};
            std::size_t r = 0;
            for (std::size_t q = 0; q < 4; ++q)
                if (q != pos) rest[r++] = s[q];
            int orderings = 6;
            if (rest[0] == rest[1] && rest[1] == rest[2]) orderings = 1;
            else if (rest[0] == rest[1] || rest[1] == rest[2]) orderings = 3;
            out[s[pos]] += T(orderings) * vals[p] * x[rest[0]] * x[rest[1]] * x[rest[2]];
        }
    }
    return out;
}

template <class T>
std::vector<T> contract3(const SymTensor4<T>& t, const std::vector<T>& x) {
    return contract3(t, std::span<const T>(x));
}

/// Symmetric 2x2 matrix [[a11, a12], [a12, a22]].
template <class T = double>
struct Matrix2 {
    T a11{}, a12{}, a22{};
};

/// Copositivity of a symmetric 2x2 matrix: a11 >= 0, a22 >= 0 and
/// a12 + sqrt(a11 a22) >= 0 (all strict for strict copositivity). The
/// square root is only formed once both diagonal signs have passed.
template <class Ctx, class T = typename Ctx::scalar>
Truth matrix2_copositive(const Matrix2<T>& m, bool strict, const Ctx& ctx) {
    auto test = [strict](Sign s) { return strict ? is_pos(s) : is_nonneg(s); };
    Truth diag = test(ctx.sign(m.a11)) & test(ctx.sign(m.a22));
    if (diag == Truth::no) return Truth::no;
    using B = Bounded<T>;
    return diag & test(ctx.sign_lin(B(m.a12), B(1), B(m.a11) * B(m.a22)));
}

/// Exact decision on the given (double) entries.
inline bool matrix2_copositive(const Matrix2<double>& m, bool strict) {
    Matrix2<Rational> q{to_rational(m.a11), to_rational(m.a12), to_rational(m.a22)};
    return matrix2_copositive(q, strict, ExactContext{}) == Truth::yes;
}

}  // namespace copos
