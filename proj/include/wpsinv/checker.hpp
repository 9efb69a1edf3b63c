/**
 * @file checker.hpp
 * @brief Numeric screening of a candidate (polarized 3-fold, weighted hypersurface) pair.
 *
 * A 3-fold with data (K^3, chi, p_g, basket) is compared against a general
 * X_d in P(1, a1, a2, a3, a4) with a1 <= a2 <= a3 < a4 and d = 2 a4:
 *   - volume:      K^3 = d / prod w = 2 / (a1 a2 a3)
 *   - plurigenera: Riemann-Roch P_k equals the k-th Hilbert coefficient of X_d
 * Quasismoothness and the behavior of |a2 K|, |a3 K|, |a4 K| are geometric and
 * are listed as assumptions, never evaluated.
 */
#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "wpsinv/core.hpp"
#include "wpsinv/hilbert.hpp"
#include "wpsinv/reid_rr.hpp"

namespace wpsinv {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string expected;
    std::string actual;

    std::string detail() const { return passed ? actual : "expected " + expected + ", got " + actual; }
};

struct CheckReport {
    FamilyRecord family;
    std::vector<CheckResult> checks;
    std::vector<std::string> assumptions;

    bool passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }

    const CheckResult* find(std::string_view name) const {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }
};

/// Passes iff dropping any single weight leaves weights with gcd 1.
inline CheckResult check_wellformed(const WeightSystem& w) {
    if (w.size() < 2) throw InvalidInput("well-formedness needs at least two weights");
    CheckResult result{"well-formed", true, "gcd of every n of the n+1 weights is 1", "ok"};
    for (std::size_t skip = 0; skip < w.size(); ++skip) {
        std::int64_t g = 0;
        for (std::size_t i = 0; i < w.size(); ++i)
            if (i != skip) g = std::gcd(g, w[i]);
        if (g != 1) {
            result.passed = false;
            result.actual = "weights without w_" + std::to_string(skip) + "=" + std::to_string(w[skip]) +
                            " have gcd " + std::to_string(g);
            return result;
        }
    }
    return result;
}

namespace detail {

/// Compares Riemann-Roch plurigenera with the given series for 2 <= k <= k_max.
inline CheckResult compare_plurigenera(const NumericalData& data, const Basket& basket, const SeriesPrefix& series,
                                       std::int64_t k_max) {
    CheckResult result{"plurigenera", true, "P_k = c_k for 2 <= k <= " + std::to_string(k_max), ""};
    for (std::int64_t k = 2; k <= k_max; ++k) {
        try {
            const BigInt p = plurigenus(data, basket, k);
            if (p != series[k]) {
                result.passed = false;
                result.expected = "P_" + std::to_string(k) + " = " + series[k].str() + " (Hilbert series)";
                result.actual = p.str() + " (Riemann-Roch)";
                return result;
            }
        } catch (const IntegralityError& e) {
            result.passed = false;
            result.expected = "P_" + std::to_string(k) + " = " + series[k].str() + " (Hilbert series)";
            result.actual = "chi(" + std::to_string(k) + "K) = " + e.value() + " (not a nonnegative integer)";
            return result;
        }
    }
    result.actual = "agree for 2 <= k <= " + std::to_string(k_max);
    return result;
}

inline CheckResult compare_genus(std::int64_t pg, const SeriesPrefix& series) {
    const bool ok = series.truncation() >= 1 && series[1] == pg;
    return {"geometric-genus", ok, "p_g = c_1 = " + (series.truncation() >= 1 ? series[1].str() : std::string("?")),
            std::to_string(pg)};
}

}  // namespace detail

inline const std::vector<std::string>& hypersurface_assumptions() {
    static const std::vector<std::string> lines{
        "quasismooth: a general member is assumed quasismooth (external criterion, not verified here)",
        "|a2 H| is not composed with a pencil: asserted, not computed",
        "|a3 H| defines a generically finite map of degree > 1, or Y is not rational: asserted, not computed",
        "|a4 H| defines a birational map: asserted, not computed",
    };
    return lines;
}

/// Throws InvalidInput unless the record is a hypersurface in a 5-weight ambient
/// with k_max >= d. Shape violations are reported as failed checks.
inline CheckReport check_theorem71_numeric(const FamilyRecord& family, std::int64_t k_max) {
    if (family.ambient.size() != 5 || family.degrees.size() != 1)
        throw InvalidInput("expected a hypersurface in a 5-weight ambient, got " + family.str());
    const auto& w = family.ambient;
    const std::int64_t d = family.degrees.front();
    if (d < 1) throw InvalidInput("degree must be positive");
    if (k_max < d) throw InvalidInput("k_max must be at least the degree " + std::to_string(d));

    CheckReport report{family, {}, hypersurface_assumptions()};

    const bool shape_ok = w[0] == 1 && w[3] < w[4] && d == 2 * w[4];
    report.checks.push_back({"weight-shape", shape_ok,
                             "w = (1,a1,a2,a3,a4) with a3 < a4 and d = 2*a4 = " + std::to_string(2 * w[4]),
                             "w = " + w.str() + ", d = " + std::to_string(d)});

    const Rational volume = degree_volume(w, d);
    bool volume_ok = family.data.k3 == volume;
    std::string volume_expected = "K^3 = d/prod(w) = " + volume.str();
    if (shape_ok) {
        const Rational closed_form{BigInt(2), BigInt(w[1]) * w[2] * w[3]};
        volume_ok = volume_ok && closed_form == volume;
        volume_expected += " = 2/(a1*a2*a3)";
    }
    report.checks.push_back({"volume", volume_ok, volume_expected, "K^3 = " + family.data.k3.str()});

    const SeriesPrefix series = hypersurface_series(w, d, k_max);
    report.checks.push_back(detail::compare_genus(family.data.pg, series));
    report.checks.push_back(detail::compare_plurigenera(family.data, family.basket, series, k_max));
    report.checks.push_back(check_wellformed(w));
    return report;
}

inline CheckReport check_theorem71_numeric(const WeightSystem& w, std::int64_t d, const NumericalData& data,
                                           const Basket& basket, std::int64_t k_max) {
    return check_theorem71_numeric(FamilyRecord{"candidate", w, {d}, data, basket, std::nullopt, std::nullopt, {}},
                                   k_max);
}

}  // namespace wpsinv
