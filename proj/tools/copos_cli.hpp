#pragma once

// Command-line front end. run() is the whole program minus process plumbing,
// so tests drive it in-process.
//
// Exit status: 0 copositive, 1 not copositive, 2 boundary, 64 input error.
// The oracle command exits 0/1/2 for no_violation_found/violation/near_boundary.

#include "copos/copos.hpp"
#include "copos/json_io.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace copos::cli {

inline constexpr int kExitCopositive = 0;
inline constexpr int kExitNotCopositive = 1;
inline constexpr int kExitBoundary = 2;
inline constexpr int kExitInputError = 64;

enum class Mode { float_only, exact, both };

struct RunRequest {
    std::string command;
    std::string input_path;
    std::string inline_json;
    Mode mode = Mode::both;
    double eps = 1e-10;
    std::optional<std::size_t> samples;
    std::uint64_t seed = 0;
    std::size_t rho_grid = 101;
    bool oracle = false;
    bool text = false;
};

inline int exit_code(Decision d) {
    switch (d) {
        case Decision::copositive: return kExitCopositive;
        case Decision::not_copositive: return kExitNotCopositive;
        case Decision::boundary: return kExitBoundary;
    }
    return kExitBoundary;
}

inline std::string_view mode_name(Mode m) {
    switch (m) {
        case Mode::float_only: return "float";
        case Mode::exact: return "exact";
        case Mode::both: return "both";
    }
    return "both";
}

namespace detail {

inline json str(std::string_view s) { return json(std::string(s)); }

inline json sign_json(Sign s) {
    switch (s) {
        case Sign::negative: return "negative";
        case Sign::zero: return "zero";
        case Sign::positive: return "positive";
        case Sign::unknown: return "unknown";
    }
    return "unknown";
}

inline json quartic_test_json(const QuarticTest& t) {
    return {{"holds", str(to_string(t.holds))},       {"fired", str(to_string(t.fired))},
            {"case1", str(to_string(t.case1))},       {"case2", str(to_string(t.case2))},
            {"case3i", str(to_string(t.case3i))},     {"case3ii", str(to_string(t.case3ii))},
            {"disc_sign", sign_json(t.disc_sign)}};
}

inline json tensor2_test_json(const Tensor2Test& t) {
    return {{"holds", str(to_string(t.holds))},   {"fired", str(to_string(t.fired))},
            {"case1", str(to_string(t.case1))},   {"case2", str(to_string(t.case2))},
            {"case3i", str(to_string(t.case3i))}, {"case3ii", str(to_string(t.case3ii))},
            {"disc_sign", sign_json(t.disc_sign)}};
}

inline json thm36_test_json(const Thm36Test& t) {
    json j = {{"holds", str(to_string(t.holds))},
              {"fired", str(to_string(t.fired))},
              {"lambdaS_positive", str(to_string(t.lambdaS_positive))},
              {"m_copositive", str(to_string(t.m_copositive))},
              {"vtilde_copositive", str(to_string(t.vtilde_copositive))},
              {"case1", str(to_string(t.case1))},
              {"case2", str(to_string(t.case2))},
              {"prop35", nullptr}};
    if (t.prop35) {
        j["prop35"] = {{"holds", str(to_string(t.prop35->holds))},
                       {"l40_positive", str(to_string(t.prop35->l40_positive))},
                       {"l04_positive", str(to_string(t.prop35->l04_positive))},
                       {"quartic", t.prop35->quartic ? quartic_test_json(*t.prop35->quartic) : json(nullptr)}};
    }
    return j;
}

/// One evaluation arm (float or exact) of a check.
struct Arm {
    Decision decision = Decision::boundary;
    std::string case_label = "none";
    Route route = Route::sturm;
    json detail = nullptr;

    json to_json() const {
        return {{"decision", str(copos::to_string(decision))},
                {"case", case_label},
                {"route", str(copos::to_string(route))},
                {"test", detail}};
    }
};

/// Fills the common decision fields from the requested arms.
inline void merge_arms(json& report, Mode mode, const std::optional<Arm>& flt, const std::optional<Arm>& ex) {
    const Arm& chosen = mode == Mode::float_only ? *flt : *ex;
    report["decision"] = str(copos::to_string(chosen.decision));
    report["case"] = chosen.case_label;
    report["route"] = str(copos::to_string(chosen.route));
    report["float"] = flt ? flt->to_json() : json(nullptr);
    report["exact"] = ex ? ex->to_json() : json(nullptr);
    report["mismatch"] = flt && ex ? json(flt->decision != ex->decision) : json(nullptr);
}

inline Decision decision_of(const json& report) {
    const auto& d = report.at("decision").get_ref<const std::string&>();
    if (d == "copositive") return Decision::copositive;
    if (d == "not_copositive") return Decision::not_copositive;
    return Decision::boundary;
}

inline json oracle_json(const OracleReport& r, const OracleConfig& cfg) {
    return {{"min_value", r.min_value},
            {"argmin", r.argmin},
            {"samples_used", r.samples_used},
            {"verdict_hint", str(to_string(r.verdict_hint))},
            {"seed", cfg.seed},
            {"refine_steps", cfg.refine_steps}};
}

inline OracleConfig oracle_config(const RunRequest& req, std::size_t dim) {
    OracleConfig cfg = OracleConfig::for_dim(dim, req.seed);
    if (req.samples) cfg.samples = *req.samples;
    cfg.validate();
    return cfg;
}

inline SymTensor4<Rational> quartic_tensor(const QuarticCoeffs<Rational>& q) {
    SymTensor4<Rational> t(2);
    t.set({1, 1, 1, 1}, q.a);
    t.set({0, 1, 1, 1}, Rational(q.b / 4));
    t.set({0, 0, 1, 1}, Rational(q.c / 6));
    t.set({0, 0, 0, 1}, Rational(q.d / 4));
    t.set({0, 0, 0, 0}, q.e);
    return t;
}

inline void attach_oracle(json& report, const RunRequest& req, const SymTensor4<Rational>& t) {
    if (!req.oracle) return;
    auto cfg = oracle_config(req, t.dim());
    report["oracle"] = oracle_json(sample_min(t.cast<double>(), cfg), cfg);
}

// ---- check-quartic -------------------------------------------------------

inline Arm quartic_arm(const QuarticCoeffs<Rational>& q, bool exact, const Tolerance& tol) {
    Arm arm;
    const auto qd = to_double(q);
    const bool closed = exact ? (q.a > 0 && q.e > 0) : (qd.a > 0 && qd.e > 0);
    if (!closed) {
        arm.route = Route::sturm;
        arm.decision = quartic_nonneg_pos_exact(q) ? Decision::copositive : Decision::not_copositive;
        return arm;
    }
    QuarticTest t = exact ? quartic_nonneg_pos(q, ExactContext{}) : quartic_nonneg_pos(qd, FloatContext(tol));
    arm.route = exact ? Route::closed_form_exact : Route::closed_form_float;
    arm.decision = to_decision(t.holds);
    arm.case_label = std::string(to_string(t.fired));
    arm.detail = quartic_test_json(t);
    return arm;
}

inline json check_quartic(const json& doc, const RunRequest& req) {
    const auto q = quartic_from_json(doc);
    const Tolerance tol(req.eps);
    json report = {{"command", "check-quartic"}, {"mode", str(mode_name(req.mode))}};
    std::optional<Arm> flt, ex;
    if (req.mode != Mode::exact) flt = quartic_arm(q, false, tol);
    if (req.mode != Mode::float_only) ex = quartic_arm(q, true, tol);
    merge_arms(report, req.mode, flt, ex);

    const Rational disc = quartic_discriminant(q);
    const bool sturm = quartic_nonneg_pos_exact(q);
    report["quantities"] = {{"coefficients", {{"a", to_double(q.a)}, {"b", to_double(q.b)}, {"c", to_double(q.c)},
                                               {"d", to_double(q.d)}, {"e", to_double(q.e)}}},
                            {"discriminant", to_double(disc)},
                            {"discriminant_exact", to_string(disc)},
                            {"sturm_nonneg", sturm}};
    report["witness"] = nullptr;
    if (decision_of(report) == Decision::not_copositive) {
        if (auto hit = quartic_negative_point(q)) {
            const double t = hit->first;
            report["witness"] = {{"t", t}, {"value", to_double(q)(t)}};
        }
    }
    attach_oracle(report, req, quartic_tensor(q));
    return report;
}

// ---- check-tensor2 -------------------------------------------------------

inline Arm tensor2_arm(const SymTensor4<Rational>& t, bool exact, const Tolerance& tol) {
    Arm arm;
    const Rational a1 = t(0, 0, 0, 0), a2 = t(1, 1, 1, 1);
    if (a1 < 0 || a2 < 0) {
        arm.decision = Decision::not_copositive;
        arm.case_label = "diag_fail";
        arm.route = exact ? Route::closed_form_exact : Route::closed_form_float;
        return arm;
    }
    const auto td = t.cast<double>();
    const bool closed = exact ? (a1 > 0 && a2 > 0) : (td(0, 0, 0, 0) > 0 && td(1, 1, 1, 1) > 0);
    if (!closed) {
        arm.route = Route::sturm;
        arm.decision = quartic_nonneg_pos_exact(mapped_quartic(t)) ? Decision::copositive : Decision::not_copositive;
        return arm;
    }
    Tensor2Test test = exact ? tensor2_closed_form(t, ExactContext{}) : tensor2_closed_form(td, FloatContext(tol));
    arm.route = exact ? Route::closed_form_exact : Route::closed_form_float;
    arm.decision = to_decision(test.holds);
    arm.case_label = std::string(to_string(test.fired));
    arm.detail = tensor2_test_json(test);
    return arm;
}

inline json check_tensor2(const json& doc, const RunRequest& req) {
    const auto t = tensor_from_json(doc);
    if (t.dim() != 2) throw InputError("check-tensor2 needs a dimension-2 tensor, got dim " + std::to_string(t.dim()));
    const Tolerance tol(req.eps);
    json report = {{"command", "check-tensor2"}, {"mode", str(mode_name(req.mode))}};
    std::optional<Arm> flt, ex;
    if (req.mode != Mode::exact) flt = tensor2_arm(t, false, tol);
    if (req.mode != Mode::float_only) ex = tensor2_arm(t, true, tol);
    merge_arms(report, req.mode, flt, ex);

    const auto inv = invariants_ij(t);
    const auto q = mapped_quartic(t);
    const auto strict = tensor2_strictly_copositive_sufficient(t, tol);
    report["quantities"] = {
        {"I", to_double(inv.I)},
        {"J", to_double(inv.J)},
        {"disc", to_double(inv.disc)},
        {"I_exact", to_string(inv.I)},
        {"J_exact", to_string(inv.J)},
        {"disc_exact", to_string(inv.disc)},
        {"quartic_discriminant", to_double(quartic_discriminant(q))},
        {"mapped_quartic", {{"a", to_double(q.a)}, {"b", to_double(q.b)}, {"c", to_double(q.c)},
                            {"d", to_double(q.d)}, {"e", to_double(q.e)}}},
        {"sturm_nonneg", quartic_nonneg_pos_exact(q)},
        {"strict_sufficient", {{"precondition_met", strict.precondition_met},
                               {"holds", str(to_string(strict.holds))},
                               {"branch", strict.branch},
                               {"reading_mismatch", strict.reading_mismatch}}}};
    report["witness"] = nullptr;
    if (decision_of(report) == Decision::not_copositive) {
        auto v = tensor2_copositive(t, tol);
        if (v.witness) report["witness"] = {{"x", *v.witness}, {"value", v.witness_value}};
    }
    attach_oracle(report, req, t);
    return report;
}

// ---- check-vacuum --------------------------------------------------------

inline Arm vacuum_arm(const BasicCouplings<Rational>& c, bool exact, const Tolerance& tol) {
    Thm36Test t = exact ? thm36_test(c, ExactContext{}) : thm36_test(to_double(c), FloatContext(tol));
    Arm arm;
    arm.route = exact ? Route::closed_form_exact : Route::closed_form_float;
    arm.decision = to_decision(t.holds);
    arm.case_label = std::string(to_string(t.fired));
    arm.detail = thm36_test_json(t);
    return arm;
}

inline json matrix_json(const Matrix2<Rational>& m) {
    return {{"a11", to_double(m.a11)}, {"a12", to_double(m.a12)}, {"a22", to_double(m.a22)}};
}

inline json check_vacuum(const BasicCouplings<Rational>& c, const RunRequest& req) {
    const Tolerance tol(req.eps);
    json report = {{"command", "check-vacuum"}, {"mode", str(mode_name(req.mode))}};
    std::optional<Arm> flt, ex;
    if (req.mode != Mode::exact) flt = vacuum_arm(c, false, tol);
    if (req.mode != Mode::float_only) ex = vacuum_arm(c, true, tol);
    merge_arms(report, req.mode, flt, ex);

    const auto complete = vacuum_complete_total(c);
    const auto dq = derived_quartic(c);
    const auto dp = dq.delta_prime();
    const auto p35 = prop35_check(dq, tol);
    const ExactContext exact;
    report["quantities"] = {
        {"m_matrix", matrix_json(m_matrix(c))},
        {"vtilde_matrix", matrix_json(vtilde_matrix(c))},
        {"m_copositive", matrix2_copositive(m_matrix(c), false, exact) == Truth::yes},
        {"vtilde_copositive", matrix2_copositive(vtilde_matrix(c), false, exact) == Truth::yes},
        {"m_negative_definite_on_cone", c.lambdaS1 < 0 && c.lambdaS2 < 0},
        {"derived", {{"l40", to_double(dq.l40)}, {"l31", to_double(dq.l31)}, {"l22", to_double(dq.l22)},
                     {"l13", to_double(dq.l13)}, {"l04", to_double(dq.l04)}, {"delta_prime", to_double(dp)},
                     {"delta_prime_exact", to_string(dp)}}},
        {"prop35", {{"holds", p35.holds}, {"fired", str(to_string(p35.fired))}, {"degenerate", p35.degenerate},
                    {"exact_oracle", p35.exact_oracle ? json(*p35.exact_oracle) : json(nullptr)}}},
        {"complete", {{"path", str(to_string(complete.path))},
                      {"vtilde_copositive", complete.vtilde_copositive},
                      {"reduced_quartic_ok", complete.reduced_quartic_ok}}}};
    report["complete_decision"] = str(to_string(complete.decision));
    report["agreement"] = decision_of(report) == complete.decision;
    report["witness"] = nullptr;
    if (decision_of(report) == Decision::not_copositive && complete.witness)
        report["witness"] = {{"x", complete.witness->x}, {"value", complete.witness->value}};
    attach_oracle(report, req, build_vacuum_tensor(c));
    return report;
}

inline json sweep(const BasicCouplings<Rational>& c, const RunRequest& req) {
    json points = json::array();
    Decision all = Decision::copositive, all_complete = Decision::copositive;
    auto fold = [](Decision acc, Decision d) {
        if (acc == Decision::not_copositive || d == Decision::not_copositive) return Decision::not_copositive;
        if (acc == Decision::boundary || d == Decision::boundary) return Decision::boundary;
        return Decision::copositive;
    };
    std::size_t disagreements = 0;
    RunRequest point_req = req;
    point_req.oracle = false;
    for (double rho : uniform_rho_grid(req.rho_grid)) {
        auto at = c;
        at.rho = to_rational(rho);
        json r = check_vacuum(at, point_req);
        const Decision d = decision_of(r);
        const Decision dc = r["complete_decision"] == "copositive" ? Decision::copositive
                            : r["complete_decision"] == "not_copositive" ? Decision::not_copositive
                                                                         : Decision::boundary;
        all = fold(all, d);
        all_complete = fold(all_complete, dc);
        if (!r["agreement"].get<bool>()) ++disagreements;
        points.push_back({{"rho", rho},
                          {"decision", r["decision"]},
                          {"case", r["case"]},
                          {"complete_decision", r["complete_decision"]},
                          {"agreement", r["agreement"]},
                          {"witness", r["witness"]}});
    }
    return {{"command", "sweep-rho"},
            {"mode", str(mode_name(req.mode))},
            {"rho_grid", req.rho_grid},
            {"decision", str(to_string(all))},
            {"complete_decision", str(to_string(all_complete))},
            {"disagreements", disagreements},
            {"points", points}};
}

// ---- oracle --------------------------------------------------------------

inline json oracle_command(const json& doc, const RunRequest& req) {
    SymTensor4<Rational> t(1);
    std::string source;
    if (doc.is_object() && doc.contains("lambdaS")) {
        t = build_vacuum_tensor(couplings_from_json(doc));
        source = "couplings";
    } else if (doc.is_object() && doc.contains("a")) {
        t = quartic_tensor(quartic_from_json(doc));
        source = "quartic";
    } else {
        t = tensor_from_json(doc);
        source = "tensor";
    }
    auto cfg = oracle_config(req, t.dim());
    const auto td = t.cast<double>();
    const auto rep = sample_min(td, cfg);
    return {{"command", "oracle"},
            {"source", source},
            {"dim", t.dim()},
            {"verdict_hint", str(to_string(rep.verdict_hint))},
            {"certified", rep.verdict_hint == VerdictHint::violation && certify_violation(td, rep.argmin)},
            {"oracle", oracle_json(rep, cfg)}};
}

}  // namespace detail

// ---- schema --------------------------------------------------------------

/// Empty when the report matches the schema of its command; otherwise the first problem.
inline std::string validate_report(const json& r) {
    auto has = [&](const json& o, const char* key, json::value_t type) -> std::string {
        if (!o.is_object() || !o.contains(key)) return std::string("missing '") + key + "'";
        const auto t = o.at(key).type();
        const bool number = type == json::value_t::number_float &&
                            (t == json::value_t::number_integer || t == json::value_t::number_unsigned);
        const bool unsigned_ok = type == json::value_t::number_integer && t == json::value_t::number_unsigned;
        if (t != type && !number && !unsigned_ok) return std::string("wrong type for '") + key + "'";
        return {};
    };
    auto decision_ok = [](const json& v) {
        return v.is_string() && (v == "copositive" || v == "not_copositive" || v == "boundary");
    };
    auto unit_nonneg = [](const json& x) {
        if (!x.is_array() || x.empty()) return false;
        double n2 = 0;
        for (const auto& v : x) {
            if (!v.is_number() || v.get<double>() < 0) return false;
            n2 += v.get<double>() * v.get<double>();
        }
        return std::abs(n2 - 1.0) < 1e-9;
    };
    auto check_oracle = [&](const json& o) -> std::string {
        for (auto [k, t] : {std::pair{"min_value", json::value_t::number_float}, {"argmin", json::value_t::array},
                            {"samples_used", json::value_t::number_unsigned}, {"verdict_hint", json::value_t::string}})
            if (auto e = has(o, k, t); !e.empty()) return "oracle: " + e;
        if (!unit_nonneg(o["argmin"])) return "oracle: argmin not a nonnegative unit vector";
        const auto& h = o["verdict_hint"];
        if (h != "no_violation_found" && h != "violation" && h != "near_boundary") return "oracle: bad verdict_hint";
        return {};
    };

    if (auto e = has(r, "command", json::value_t::string); !e.empty()) return e;
    const std::string cmd = r["command"];
    if (cmd == "oracle") {
        if (auto e = has(r, "oracle", json::value_t::object); !e.empty()) return e;
        if (auto e = has(r, "verdict_hint", json::value_t::string); !e.empty()) return e;
        return check_oracle(r["oracle"]);
    }
    if (!r.contains("decision") || !decision_ok(r["decision"])) return "missing or invalid 'decision'";
    if (auto e = has(r, "mode", json::value_t::string); !e.empty()) return e;
    if (cmd == "sweep-rho") {
        if (!r.contains("complete_decision") || !decision_ok(r["complete_decision"])) return "invalid 'complete_decision'";
        if (auto e = has(r, "points", json::value_t::array); !e.empty()) return e;
        for (const auto& p : r["points"]) {
            if (auto e = has(p, "rho", json::value_t::number_float); !e.empty()) return "point: " + e;
            if (!p.contains("decision") || !decision_ok(p["decision"])) return "point: invalid decision";
            if (!p.contains("agreement") || !p["agreement"].is_boolean()) return "point: invalid agreement";
        }
        return {};
    }
    if (cmd != "check-quartic" && cmd != "check-tensor2" && cmd != "check-vacuum") return "unknown command '" + cmd + "'";
    for (auto [k, t] : {std::pair{"case", json::value_t::string}, {"route", json::value_t::string},
                        {"quantities", json::value_t::object}})
        if (auto e = has(r, k, t); !e.empty()) return e;
    for (const char* arm : {"float", "exact"}) {
        if (!r.contains(arm)) return std::string("missing '") + arm + "'";
        if (!r[arm].is_null() && (!r[arm].is_object() || !decision_ok(r[arm]["decision"])))
            return std::string("invalid '") + arm + "'";
    }
    if (!r.contains("mismatch") || !(r["mismatch"].is_null() || r["mismatch"].is_boolean())) return "invalid 'mismatch'";
    if (r["mode"] == "both" && !r["mismatch"].is_boolean()) return "mode both requires a mismatch flag";
    if (!r.contains("witness")) return "missing 'witness'";
    const auto& w = r["witness"];
    if (!w.is_null()) {
        if (r["decision"] != "not_copositive") return "witness present without not_copositive";
        if (auto e = has(w, "value", json::value_t::number_float); !e.empty()) return "witness: " + e;
        if (!(w["value"].get<double>() < 0)) return "witness value not negative";
        if (cmd == "check-quartic") {
            if (auto e = has(w, "t", json::value_t::number_float); !e.empty()) return "witness: " + e;
        } else if (!w.contains("x") || !unit_nonneg(w["x"])) {
            return "witness x not a nonnegative unit vector";
        }
    }
    const auto& q = r["quantities"];
    if (cmd == "check-tensor2")
        for (const char* k : {"I", "J", "disc"})
            if (auto e = has(q, k, json::value_t::number_float); !e.empty()) return "quantities: " + e;
    if (cmd == "check-vacuum") {
        if (!r.contains("complete_decision") || !decision_ok(r["complete_decision"])) return "invalid 'complete_decision'";
        if (auto e = has(r, "agreement", json::value_t::boolean); !e.empty()) return e;
        if (auto e = has(q, "derived", json::value_t::object); !e.empty()) return "quantities: " + e;
    }
    if (r.contains("oracle")) return check_oracle(r["oracle"]);
    return {};
}

// ---- dispatch ------------------------------------------------------------

inline json load_input(const RunRequest& req) {
    std::string text;
    if (!req.inline_json.empty()) {
        text = req.inline_json;
    } else {
        std::ifstream in(req.input_path);
        if (!in) throw InputError("cannot open input file '" + req.input_path + "'");
        std::stringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
}

inline void write_text(std::ostream& out, const json& r) {
    for (const auto& [k, v] : r.items()) {
        if (v.is_object() || v.is_array()) continue;
        out << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
    }
    if (r.contains("witness") && !r["witness"].is_null()) out << "witness: " << r["witness"].dump() << '\n';
    if (r.contains("oracle")) out << "oracle: " << r["oracle"].dump() << '\n';
    if (r.contains("points"))
        for (const auto& p : r["points"])
            out << "rho " << p["rho"].get<double>() << ": " << p["decision"].get<std::string>() << " (complete "
                << p["complete_decision"].get<std::string>() << ")\n";
}

/// Runs a parsed request; returns the report.
inline json execute(const RunRequest& req) {
    const json doc = load_input(req);
    if (req.command == "check-quartic") return detail::check_quartic(doc, req);
    if (req.command == "check-tensor2") return detail::check_tensor2(doc, req);
    if (req.command == "check-vacuum") return detail::check_vacuum(couplings_from_json(doc), req);
    if (req.command == "sweep-rho") return detail::sweep(couplings_from_json(doc), req);
    if (req.command == "oracle") return detail::oracle_command(doc, req);
    throw InputError("unknown command '" + req.command + "'");
}

inline int report_exit_code(const json& r) {
    if (r["command"] == "oracle") {
        if (r["verdict_hint"] == "violation") return kExitNotCopositive;
        if (r["verdict_hint"] == "near_boundary") return kExitBoundary;
        return kExitCopositive;
    }
    return exit_code(detail::decision_of(r));
}

/// args excludes the program name. The seed_env argument stands in for COPOS_SEED.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
               const char* seed_env = std::getenv("COPOS_SEED")) {
    RunRequest req;
    CLI::App app{"Copositivity checks for quartics, 2-dimensional tensors and the Z3 vacuum potential", "copos"};
    app.require_subcommand(1, 1);
    std::string mode = "both", format = "json";
    std::size_t samples = 0;
    auto add_common = [&](CLI::App* sub) {
        auto* in = sub->add_option("--input", req.input_path, "path of the input JSON document");
        auto* il = sub->add_option("--inline", req.inline_json, "input JSON document given inline");
        in->excludes(il);
        sub->add_option("--mode", mode, "float, exact or both")->check(CLI::IsMember({"float", "exact", "both"}));
        sub->add_option("--eps", req.eps, "half-width of the float indeterminate band")->check(CLI::NonNegativeNumber);
        sub->add_option("--samples", samples, "oracle sample count")->check(CLI::PositiveNumber);
        sub->add_option("--seed", req.seed, "oracle seed (COPOS_SEED overrides)");
        sub->add_option("--rho-grid", req.rho_grid, "number of uniform rho points for sweep-rho")
            ->check(CLI::PositiveNumber);
        sub->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
        sub->add_flag("--oracle", req.oracle, "attach a sampling-oracle report");
    };
    for (const char* name : {"check-quartic", "check-tensor2", "check-vacuum", "sweep-rho", "oracle"}) {
        auto* sub = app.add_subcommand(name, "");
        add_common(sub);
    }
    app.get_subcommand("check-quartic")->description("nonnegativity of a quartic on t > 0");
    app.get_subcommand("check-tensor2")->description("copositivity of a dimension-2 tensor");
    app.get_subcommand("check-vacuum")->description("vacuum stability of the couplings at their rho");
    app.get_subcommand("sweep-rho")->description("vacuum stability over a uniform rho grid");
    app.get_subcommand("oracle")->description("sampling minimum over the nonnegative unit sphere");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    }

    try {
        req.command = app.get_subcommands().front()->get_name();
        if (req.input_path.empty() && req.inline_json.empty()) throw InputError("one of --input or --inline is required");
        req.mode = mode == "float" ? Mode::float_only : mode == "exact" ? Mode::exact : Mode::both;
        req.text = format == "text";
        if (samples > 0) req.samples = samples;
        if (seed_env && *seed_env) {
            std::string s(seed_env);
            std::size_t used = 0;
            unsigned long long v = 0;
            try {
                v = std::stoull(s, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != s.size() || s.front() == '-') throw InputError("COPOS_SEED must be an unsigned integer");
            req.seed = v;
        }
        const json report = execute(req);
        if (req.text) write_text(out, report);
        else out << report.dump(2) << '\n';
        return report_exit_code(report);
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
    }
    return kExitInputError;
}

}  // namespace copos::cli
