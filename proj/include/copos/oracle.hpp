#pragma once

// Sampling oracle: minimizes A x^4 over the nonnegative unit sphere.
// One-sided: a reported violation is certified, a clean report proves nothing.

#include "copos/sym_tensor.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace copos {

inline std::size_t default_samples(std::size_t dim) { return dim >= 3 ? 1'000'000 : 100'000; }

struct OracleConfig {
    std::size_t samples = 100'000;
    std::uint64_t seed = 0;
    std::size_t refine_steps = 200;

    static OracleConfig for_dim(std::size_t dim, std::uint64_t seed = 0) {
        OracleConfig c;
        c.samples = default_samples(dim);
        c.seed = seed;
        return c;
    }

    void validate() const {
        if (samples == 0) throw std::invalid_argument("oracle samples must be >= 1");
    }
};

enum class VerdictHint { no_violation_found, violation, near_boundary };

constexpr std::string_view to_string(VerdictHint h) {
    switch (h) {
        case VerdictHint::no_violation_found: return "no_violation_found";
        case VerdictHint::violation: return "violation";
        case VerdictHint::near_boundary: return "near_boundary";
    }
    return "near_boundary";
}

struct OracleReport {
    double min_value = 0.0;
    std::vector<double> argmin;  // nonnegative, unit norm
    std::size_t samples_used = 0;
    VerdictHint verdict_hint = VerdictHint::no_violation_found;

    friend bool operator==(const OracleReport&, const OracleReport&) = default;
};

/// Relative band used by the verdict hint, measured against max |entry|.
inline constexpr double kOracleBand = 1e-9;

/// true iff x >= 0, |x| > 0 and A (x/|x|)^4 < 0.
inline bool certify_violation(const SymTensor4<double>& t, std::span<const double> x) {
    if (x.size() != t.dim()) return false;
    double n2 = 0.0;
    for (double v : x) {
        if (!(v >= 0) || !std::isfinite(v)) return false;
        n2 += v * v;
    }
    if (!(n2 > 0)) return false;
    const double n = std::sqrt(n2);
    std::vector<double> u(x.begin(), x.end());
    for (double& v : u) v /= n;
    return eval_quartic_form(t, u) < 0;
}

inline bool certify_violation(const SymTensor4<double>& t, const std::vector<double>& x) {
    return certify_violation(t, std::span<const double>(x));
}

/// The sample point set depends only on (dim, seed, samples), so it can be
/// built once and reused across tensors. Coordinates are stored per axis.
class SamplePlan {
public:
    static constexpr std::size_t kChunk = 4096;

    SamplePlan(std::size_t dim, const OracleConfig& cfg) : dim_(dim), seed_(cfg.seed), random_(cfg.samples) {
        if (dim == 0) throw std::invalid_argument("tensor dimension must be positive");
        cfg.validate();
        coords_.assign(dim, std::vector<double>());
        add_deterministic();
        add_random();
    }

    std::size_t dim() const { return dim_; }
    std::size_t size() const { return coords_[0].size(); }
    std::uint64_t seed() const { return seed_; }
    std::size_t random_samples() const { return random_; }
    const std::vector<double>& axis(std::size_t i) const { return coords_[i]; }

    std::vector<double> point(std::size_t p) const {
        std::vector<double> x(dim_);
        for (std::size_t i = 0; i < dim_; ++i) x[i] = coords_[i][p];
        return x;
    }

private:
    void push(const std::vector<double>& x) {
        for (std::size_t i = 0; i < dim_; ++i) coords_[i].push_back(x[i]);
    }

    // Axis vectors, then uniform mixtures of every 2- and 3-subset of axes.
    void add_deterministic() {
        std::vector<double> x(dim_, 0.0);
        for (std::size_t i = 0; i < dim_; ++i) {
            x.assign(dim_, 0.0);
            x[i] = 1.0;
            push(x);
        }
        const double r2 = 1.0 / std::sqrt(2.0), r3 = 1.0 / std::sqrt(3.0);
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = i + 1; j < dim_; ++j) {
                x.assign(dim_, 0.0);
                x[i] = x[j] = r2;
                push(x);
            }
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = i + 1; j < dim_; ++j)
                for (std::size_t k = j + 1; k < dim_; ++k) {
                    x.assign(dim_, 0.0);
                    x[i] = x[j] = x[k] = r3;
                    push(x);
                }
    }

    // |N(0,1)| componentwise, normalized; chunk c draws from its own stream keyed by (seed, c).
    void add_random() {
        for (auto& axis : coords_) axis.reserve(axis.size() + random_);
        std::vector<double> x(dim_);
        for (std::size_t begin = 0, chunk = 0; begin < random_; begin += kChunk, ++chunk) {
            std::seed_seq seq{static_cast<std::uint32_t>(seed_), static_cast<std::uint32_t>(seed_ >> 32),
                              static_cast<std::uint32_t>(chunk), static_cast<std::uint32_t>(chunk >> 32)};
            std::mt19937_64 rng(seq);
            std::normal_distribution<double> normal(0.0, 1.0);
            const std::size_t end = std::min(random_, begin + kChunk);
            for (std::size_t p = begin; p < end; ++p) {
                double n2 = 0.0;
                do {
                    n2 = 0.0;
                    for (auto& v : x) {
                        v = std::abs(normal(rng));
                        n2 += v * v;
                    }
                } while (!(n2 > 0));
                const double n = std::sqrt(n2);
                for (auto& v : x) v /= n;
                push(x);
            }
        }
    }

    std::size_t dim_;
    std::uint64_t seed_;
    std::size_t random_;
    std::vector<std::vector<double>> coords_;
};

namespace detail {

inline bool lex_less(std::span<const double> a, std::span<const double> b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// (value, lexicographic point) ordering, so the reduction is order independent.
struct Candidate {
    double value;
    std::size_t index;
};

inline void normalize(std::vector<double>& x) {
    double n2 = 0.0;
    for (double v : x) n2 += v * v;
    const double n = std::sqrt(n2);
    for (double& v : x) v /= n;
}

/// Projected gradient descent on the sphere; the step restarts at 0.1 and halves until f decreases.
inline double refine(const SymTensor4<double>& t, std::vector<double>& x, std::size_t steps) {
    double fx = eval_quartic_form(t, x);
    std::vector<double> y(x.size());
    for (std::size_t it = 0; it < steps; ++it) {
        const auto g = contract3(t, x);
        bool moved = false;
        for (double step = 0.1; step > 1e-14; step *= 0.5) {
            double n2 = 0.0;
            for (std::size_t i = 0; i < x.size(); ++i) {
                y[i] = std::max(0.0, x[i] - step * 4.0 * g[i]);
                n2 += y[i] * y[i];
            }
            if (!(n2 > 0)) continue;
            normalize(y);
            const double fy = eval_quartic_form(t, y);
            if (fy < fx) {
                x = y;
                fx = fy;
                moved = true;
                break;
            }
        }
        if (!moved) break;
    }
    return fx;
}

}  // namespace detail

/// Minimum of A x^4 over the plan's points followed by local refinement of the best 16.
inline OracleReport sample_min(const SymTensor4<double>& t, const SamplePlan& plan, const OracleConfig& cfg) {
    check_dim(t.dim(), plan.dim());
    const std::size_t n = plan.size();
    const std::size_t dim = plan.dim();

    struct Term {
        double coef;
        Index4 idx;
    };
    std::vector<Term> terms;
    double scale = 0.0;
    for (std::size_t p = 0; p < t.size(); ++p) {
        const double v = t.values()[p];
        scale = std::max(scale, std::abs(v));
        if (v != 0) terms.push_back({v * multiplicity(t.tuples()[p]), t.tuples()[p]});
    }

    constexpr std::size_t kKeep = 16;
    std::vector<detail::Candidate> best;
    auto point_less = [&](const detail::Candidate& a, const detail::Candidate& b) {
        if (a.value != b.value) return a.value < b.value;
        for (std::size_t i = 0; i < dim; ++i) {
            const double xa = plan.axis(i)[a.index], xb = plan.axis(i)[b.index];
            if (xa != xb) return xa < xb;
        }
        return false;
    };

    constexpr std::size_t kBlock = 1024;
    std::array<double, kBlock> acc{};
    for (std::size_t begin = 0; begin < n; begin += kBlock) {
        const std::size_t len = std::min(kBlock, n - begin);
        std::fill(acc.begin(), acc.begin() + static_cast<std::ptrdiff_t>(len), 0.0);
        for (const auto& term : terms) {
            const double* xi = plan.axis(term.idx[0]).data() + begin;
            const double* xj = plan.axis(term.idx[1]).data() + begin;
            const double* xk = plan.axis(term.idx[2]).data() + begin;
            const double* xl = plan.axis(term.idx[3]).data() + begin;
            const double c = term.coef;
            for (std::size_t p = 0; p < len; ++p) acc[p] += c * xi[p] * xj[p] * xk[p] * xl[p];
        }
        for (std::size_t p = 0; p < len; ++p) {
            detail::Candidate cand{acc[p], begin + p};
            if (best.size() < kKeep) {
                best.push_back(cand);
                std::push_heap(best.begin(), best.end(), point_less);
            } else if (point_less(cand, best.front())) {
                std::pop_heap(best.begin(), best.end(), point_less);
                best.back() = cand;
                std::push_heap(best.begin(), best.end(), point_less);
            }
        }
    }
    std::sort_heap(best.begin(), best.end(), point_less);

    OracleReport out;
    out.samples_used = n;
    out.min_value = std::numeric_limits<double>::infinity();
    for (const auto& cand : best) {
        auto x = plan.point(cand.index);
        double v = detail::refine(t, x, cfg.refine_steps);
        if (v < out.min_value || (v == out.min_value && detail::lex_less(x, out.argmin))) {
            out.min_value = v;
            out.argmin = std::move(x);
        }
    }
    out.min_value = eval_quartic_form(t, out.argmin);

    const double band = kOracleBand * scale;
    if (out.min_value < -band && certify_violation(t, out.argmin)) out.verdict_hint = VerdictHint::violation;
    else if (out.min_value <= band) out.verdict_hint = VerdictHint::near_boundary;
    else out.verdict_hint = VerdictHint::no_violation_found;
    return out;
}

inline OracleReport sample_min(const SymTensor4<double>& t, const OracleConfig& cfg) {
    return sample_min(t, SamplePlan(t.dim(), cfg), cfg);
}

}  // namespace copos
