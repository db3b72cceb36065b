#pragma once

// JSON documents for tensors, couplings and quartics.
//
// Scalars are read exactly: JSON integers as integers, JSON floats as the
// shortest decimal that round-trips the double (0.1 reads as 1/10), and
// strings as "p/q" or decimal text.

#include "copos/quartic.hpp"
#include "copos/rational.hpp"
#include "copos/sym_tensor.hpp"
#include "copos/vacuum.hpp"

#include "json.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>

namespace copos {

using json = nlohmann::json;

/// Malformed or invalid input document.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Rational rational_from_json(const json& v, std::string_view field) {
    auto fail = [&](const std::string& why) -> Rational {
        throw InputError("field '" + std::string(field) + "': " + why);
    };
    switch (v.type()) {
        case json::value_t::number_integer: return Rational(v.get<long long>());
        case json::value_t::number_unsigned: return Rational(Integer(v.get<unsigned long long>()));
        case json::value_t::number_float: {
            double d = v.get<double>();
            if (!std::isfinite(d)) return fail("not finite");
            char buf[64];
            auto res = std::to_chars(buf, buf + sizeof buf, d);
            if (res.ec != std::errc{}) return fail("unprintable number");
            return parse_rational(std::string_view(buf, static_cast<std::size_t>(res.ptr - buf)));
        }
        case json::value_t::string: {
            try {
                return parse_rational(v.get_ref<const std::string&>());
            } catch (const std::exception& e) {
                return fail(e.what());
            }
        }
        default: return fail("expected a number or a rational string");
    }
}

inline json rational_to_json(const Rational& q) {
    if (denominator(q) == 1) {
        const Integer n = numerator(q);
        if (n >= Integer(std::numeric_limits<long long>::min()) && n <= Integer(std::numeric_limits<long long>::max()))
            return json(n.convert_to<long long>());
    }
    return json(to_string(q));
}

namespace detail {

inline const json& require_object(const json& doc, std::string_view what) {
    if (!doc.is_object()) throw InputError(std::string(what) + " document must be a JSON object");
    return doc;
}

inline void reject_unknown_keys(const json& doc, std::initializer_list<std::string_view> known, std::string_view what) {
    for (const auto& [key, _] : doc.items()) {
        bool ok = false;
        for (auto k : known) ok = ok || key == k;
        if (!ok) throw InputError("unknown key '" + key + "' in " + std::string(what) + " document");
    }
}

inline const json& require_key(const json& doc, const char* key, std::string_view what) {
    auto it = doc.find(key);
    if (it == doc.end()) throw InputError("missing key '" + std::string(key) + "' in " + std::string(what) + " document");
    return *it;
}

}  // namespace detail

inline constexpr std::size_t kMaxTensorDim = 32;

/// { "dim": n, "entries": [ {"idx": [i,j,k,l], "val": v}, ... ] } with 1-based indices.
/// Unlisted entries are zero; a tuple listed twice (after sorting) is an error.
inline SymTensor4<Rational> tensor_from_json(const json& doc) {
    detail::require_object(doc, "tensor");
    detail::reject_unknown_keys(doc, {"dim", "entries"}, "tensor");
    const json& jd = detail::require_key(doc, "dim", "tensor");
    if (!jd.is_number_integer() || jd.get<long long>() < 1 || jd.get<long long>() > static_cast<long long>(kMaxTensorDim))
        throw InputError("'dim' must be an integer in [1, " + std::to_string(kMaxTensorDim) + "]");
    const auto dim = static_cast<std::size_t>(jd.get<long long>());
    const json& entries = detail::require_key(doc, "entries", "tensor");
    if (!entries.is_array()) throw InputError("'entries' must be an array");

    SymTensor4<Rational> t(dim);
    std::set<Index4> seen;
    for (const auto& e : entries) {
        if (!e.is_object()) throw InputError("each entry must be an object");
        detail::reject_unknown_keys(e, {"idx", "val"}, "entry");
        const json& ji = detail::require_key(e, "idx", "entry");
        if (!ji.is_array() || ji.size() != 4) throw InputError("'idx' must be an array of 4 indices");
        Index4 idx{};
        for (std::size_t p = 0; p < 4; ++p) {
            if (!ji[p].is_number_integer()) throw InputError("indices must be integers");
            long long v = ji[p].get<long long>();
            if (v < 1 || v > static_cast<long long>(dim))
                throw InputError("index " + std::to_string(v) + " outside 1.." + std::to_string(dim));
            idx[p] = static_cast<std::size_t>(v - 1);
        }
        idx = sorted(idx);
        if (!seen.insert(idx).second) throw InputError("duplicate entry for a sorted index tuple");
        t.set(idx, rational_from_json(detail::require_key(e, "val", "entry"), "val"));
    }
    return t;
}

/// Nonzero entries only, 1-based sorted indices.
template <class T>
json tensor_to_json(const SymTensor4<T>& t) {
    json entries = json::array();
    for (std::size_t p = 0; p < t.size(); ++p) {
        if (t.values()[p] == 0) continue;
        const auto& s = t.tuples()[p];
        json val;
        if constexpr (std::is_same_v<T, Rational>) val = rational_to_json(t.values()[p]);
        else val = t.values()[p];
        entries.push_back({{"idx", {s[0] + 1, s[1] + 1, s[2] + 1, s[3] + 1}}, {"val", val}});
    }
    return {{"dim", t.dim()}, {"entries", entries}};
}

inline BasicCouplings<Rational> couplings_from_json(const json& doc) {
    detail::require_object(doc, "couplings");
    detail::reject_unknown_keys(
        doc, {"lambda1", "lambda2", "lambda3", "lambda4", "lambdaS", "lambdaS1", "lambdaS2", "absLambdaS12", "rho"},
        "couplings");
    auto get = [&](const char* key) { return rational_from_json(detail::require_key(doc, key, "couplings"), key); };
    BasicCouplings<Rational> c{get("lambda1"), get("lambda2"), get("lambda3"),  get("lambda4"), get("lambdaS"),
                               get("lambdaS1"), get("lambdaS2"), get("absLambdaS12"), get("rho")};
    try {
        validate(c);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    return c;
}

template <class T>
json couplings_to_json(const BasicCouplings<T>& c) {
    auto v = [](const T& x) {
        if constexpr (std::is_same_v<T, Rational>) return rational_to_json(x);
        else return json(x);
    };
    return {{"lambda1", v(c.lambda1)},   {"lambda2", v(c.lambda2)},   {"lambda3", v(c.lambda3)},
            {"lambda4", v(c.lambda4)},   {"lambdaS", v(c.lambdaS)},   {"lambdaS1", v(c.lambdaS1)},
            {"lambdaS2", v(c.lambdaS2)}, {"absLambdaS12", v(c.absLambdaS12)}, {"rho", v(c.rho)}};
}

/// { "a": .., "b": .., "c": .., "d": .., "e": .. } for a t^4 + b t^3 + c t^2 + d t + e.
inline QuarticCoeffs<Rational> quartic_from_json(const json& doc) {
    detail::require_object(doc, "quartic");
    detail::reject_unknown_keys(doc, {"a", "b", "c", "d", "e"}, "quartic");
    auto get = [&](const char* key) { return rational_from_json(detail::require_key(doc, key, "quartic"), key); };
    return {get("a"), get("b"), get("c"), get("d"), get("e")};
}

}  // namespace copos
