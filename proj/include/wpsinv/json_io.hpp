/**
 * @file json_io.hpp
 * @brief JSON encodings of the library's value types.
 *
 * Rationals are always "p/q" strings. Integers are JSON numbers when they fit
 * in 64 bits and decimal strings otherwise. Objects keep insertion order so a
 * document re-renders byte-identically after a parse.
 */
#pragma once

#include <string>

#include <json.hpp>

#include "wpsinv/basket_solver.hpp"
#include "wpsinv/checker.hpp"
#include "wpsinv/core.hpp"
#include "wpsinv/hilbert.hpp"
#include "wpsinv/noether.hpp"
#include "wpsinv/reid_rr.hpp"

namespace wpsinv {

using Json = nlohmann::ordered_json;

inline Json to_json(const BigInt& v) {
    if (v <= BigInt(INT64_MAX) && v >= BigInt(INT64_MIN)) return v.convert_to<std::int64_t>();
    return v.str();
}

inline Json to_json(const Rational& r) { return r.str(); }

inline Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    throw InvalidInput("expected a rational \"p/q\", got " + j.dump());
}

inline Json to_json(const WeightSystem& w) {
    Json out = Json::array();
    for (auto x : w.weights()) out.push_back(x);
    return out;
}

inline Json to_json(const Basket& basket) {
    Json out = Json::array();
    for (const auto& it : basket.items())
        out.push_back(Json{{"mult", it.mult}, {"b", it.entry.b()}, {"r", it.entry.r()}});
    return out;
}

inline Basket basket_from_json(const Json& j) {
    if (!j.is_array()) throw InvalidInput("basket must be a JSON array");
    std::vector<BasketTerm> terms;
    for (const auto& e : j)
        terms.push_back({e.value("mult", std::int64_t{1}), e.at("b").get<std::int64_t>(), e.at("r").get<std::int64_t>()});
    return normalize_basket(terms);
}

inline Json to_json(const NumericalData& d) { return Json{{"k3", to_json(d.k3)}, {"chi", d.chi}, {"pg", d.pg}}; }

inline Json to_json(const FamilyRecord& f) {
    Json out{{"name", f.name}, {"ambient", to_json(f.ambient)}, {"degrees", f.degrees}};
    out["k3"] = to_json(f.data.k3);
    out["chi"] = f.data.chi;
    out["pg"] = f.data.pg;
    out["basket"] = to_json(f.basket);
    if (f.moduli_dim) out["moduli_dim"] = *f.moduli_dim;
    if (f.specializes) out["specializes"] = *f.specializes;
    if (!f.sources.empty()) {
        Json src = Json::object();
        for (const auto& [k, v] : f.sources) src[k] = v;
        out["sources"] = src;
    }
    return out;
}

inline FamilyRecord family_from_json(const Json& j) {
    try {
        FamilyRecord f{j.at("name").get<std::string>(),
                       WeightSystem(j.at("ambient").get<std::vector<std::int64_t>>()),
                       j.at("degrees").get<std::vector<std::int64_t>>(),
                       NumericalData(rational_from_json(j.at("k3")), j.at("chi").get<std::int64_t>(),
                                     j.at("pg").get<std::int64_t>()),
                       basket_from_json(j.at("basket")),
                       std::nullopt,
                       std::nullopt,
                       {}};
        if (f.degrees.empty()) throw InvalidInput("family " + f.name + " has no degrees");
        if (j.contains("moduli_dim")) f.moduli_dim = j.at("moduli_dim").get<std::int64_t>();
        if (j.contains("specializes")) f.specializes = j.at("specializes").get<std::string>();
        if (j.contains("sources"))
            for (const auto& [k, v] : j.at("sources").items()) f.sources[k] = v.get<std::string>();
        return f;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("malformed family record: ") + e.what());
    }
}

inline Json series_to_json(const WeightSystem& w, std::span<const std::int64_t> degrees, const SeriesPrefix& s) {
    Json coeffs = Json::array();
    for (const auto& c : s.coefficients) coeffs.push_back(to_json(c));
    return Json{{"weights", to_json(w)},
                {"degrees", std::vector<std::int64_t>(degrees.begin(), degrees.end())},
                {"coefficients", coeffs}};
}

inline Json to_json(const PlurigenusTable& t) {
    Json values = Json::array();
    values.push_back(Json{{"m", 1}, {"P", t.p1}});
    for (const auto& [m, p] : t.values) values.push_back(Json{{"m", m}, {"P", to_json(p)}});
    return Json{{"k3", to_json(t.data.k3)},
                {"chi", t.data.chi},
                {"pg", t.data.pg},
                {"basket", to_json(t.basket)},
                {"plurigenera", values}};
}

inline Json to_json(const SolverScenario& s) {
    Json shape = Json::array();
    for (const auto& t : s.shape)
        shape.push_back(Json{{"b", t.type.b()}, {"r", t.type.r()}, {"min", t.mult.lo}, {"max", t.mult.hi}});
    Json constraints = Json::array();
    for (const auto& c : s.constraints) constraints.push_back(c.str());
    return Json{{"name", s.name},
                {"k3", to_json(s.k3)},
                {"pg", s.pg},
                {"shape", shape},
                {"chi_range", Json::array({s.chi_range.lo, s.chi_range.hi})},
                {"constraints", constraints}};
}

inline Json to_json(const SolverScenario& s, const SolverSolution& sol) {
    Json mults = Json::array();
    for (std::size_t i = 0; i < s.shape.size(); ++i)
        mults.push_back(Json{{"b", s.shape[i].type.b()}, {"r", s.shape[i].type.r()}, {"mult", sol.multiplicities[i]}});
    Json plurigenera = Json::array();
    plurigenera.push_back(Json{{"m", 1}, {"P", sol.table.p1}});
    for (const auto& [m, p] : sol.table.values) plurigenera.push_back(Json{{"m", m}, {"P", to_json(p)}});
    return Json{{"multiplicities", mults}, {"chi", sol.chi}, {"basket", to_json(sol.table.basket)},
                {"plurigenera", plurigenera}};
}

inline Json to_json(const CheckResult& c) {
    return Json{{"name", c.name}, {"passed", c.passed}, {"expected", c.expected}, {"actual", c.actual}};
}

inline Json to_json(const CheckReport& r) {
    Json checks = Json::array();
    for (const auto& c : r.checks) checks.push_back(to_json(c));
    return Json{{"family", to_json(r.family)}, {"passed", r.passed()}, {"checks", checks},
                {"assumptions", r.assumptions}};
}

inline Json to_json(const NoetherBound& b) {
    Json cases = Json::array();
    for (auto c : b.cases) cases.push_back(std::string(label(c)));
    return Json{{"value", to_json(b.value)}, {"cases", cases}};
}

inline Json to_json(const NoetherRow& row) {
    Json bounds{{std::string(label(NoetherCase::non_12_pencil)), to_json(row.non12)},
                {std::string(label(NoetherCase::irrational_pencil)), to_json(row.irrational)},
                {std::string(label(NoetherCase::rational_12_pencil)), to_json(row.rational12)}};
    Json cases = Json::array();
    for (auto c : row.min.cases) cases.push_back(std::string(label(c)));
    return Json{{"pg", row.pg},
                {"bounds", bounds},
                {"min", to_json(row.min.value)},
                {"cases", cases},
                {"expected", to_json(row.expected)},
                {"exceeds_expected", row.min.value > row.expected}};
}

}  // namespace wpsinv
