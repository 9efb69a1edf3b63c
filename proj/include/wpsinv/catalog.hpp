/**
 * @file catalog.hpp
 * @brief The shipped family records and verify_all, which closes every
 *        consistency loop between them.
 *
 * The records are embedded as a versioned JSON document (see docs/catalog.md).
 * Each record carries a "sources" object saying where each number comes from.
 */
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "wpsinv/checker.hpp"
#include "wpsinv/hilbert.hpp"
#include "wpsinv/json_io.hpp"
#include "wpsinv/moduli.hpp"

namespace wpsinv {

inline constexpr std::string_view kCatalogJson = R"json({
  "schema": "wpsinv-catalog",
  "version": 1,
  "families": [
    {
      "name": "X16",
      "ambient": [1, 1, 2, 3, 8],
      "degrees": [16],
      "k3": "1/3",
      "chi": -1,
      "pg": 2,
      "basket": [{"mult": 2, "b": 1, "r": 2}, {"mult": 1, "b": 1, "r": 3}],
      "moduli_dim": 189,
      "sources": {
        "ambient": "Fletcher's list of weighted hypersurfaces, Table 3 No. 12",
        "k3": "minimal canonical volume of a 3-fold of general type with p_g = 2",
        "chi": "forced by Riemann-Roch with P2 <= 4, P3 >= P2 + 3, P4 >= P3 + 4 (solve --preset pg2)",
        "basket": "points of index 2 and exactly one of index 3; multiplicities forced with chi (solve --preset pg2)",
        "moduli_dim": "h0(O(16)) - 1 - dim Aut P = 246 - 1 - 56"
      }
    },
    {
      "name": "X12",
      "ambient": [1, 1, 1, 2, 6],
      "degrees": [12],
      "k3": "1",
      "chi": -2,
      "pg": 3,
      "basket": [{"mult": 2, "b": 1, "r": 2}],
      "moduli_dim": 236,
      "sources": {
        "ambient": "Fletcher's list of weighted hypersurfaces, Table 3 No. 7",
        "k3": "minimal canonical volume of a 3-fold of general type with p_g = 3",
        "chi": "forced by Riemann-Roch with P2 <= 7, P3 >= P2 + 6 (solve --preset pg3)",
        "basket": "only points of index 2; multiplicity forced with chi (solve --preset pg3)",
        "moduli_dim": "h0(O(12)) - 1 - dim Aut P = 303 - 1 - 66"
      }
    },
    {
      "name": "X10",
      "ambient": [1, 1, 1, 1, 5],
      "degrees": [10],
      "k3": "2",
      "chi": -3,
      "pg": 4,
      "basket": [],
      "moduli_dim": 270,
      "sources": {
        "ambient": "Fletcher's list of weighted hypersurfaces, Table 3 No. 5",
        "k3": "minimal canonical volume of a 3-fold of general type with p_g = 4",
        "chi": "h1(O) = h2(O) = 0 for a fibration by (1,2)-surfaces",
        "basket": "Gorenstein: P2 = 10 meets the floor bound on P2 (solve --preset pg4)",
        "moduli_dim": "h0(O(10)) - 1 - dim Aut P = 343 - 1 - 72"
      }
    },
    {
      "name": "X2_10",
      "ambient": [1, 1, 1, 1, 2, 5],
      "degrees": [2, 10],
      "k3": "2",
      "chi": -3,
      "pg": 4,
      "basket": [],
      "specializes": "X10",
      "sources": {
        "ambient": "type II degeneration: codimension-2 complete intersection of degrees 2 and 10",
        "series": "(1-q^2)(1-q^10) / ((1-q)^4 (1-q^2)(1-q^5)) cancels to the X10 series"
      }
    }
  ]
})json";

struct Catalog {
    int version = 0;
    std::vector<FamilyRecord> families;

    const FamilyRecord* find(std::string_view name) const {
        for (const auto& f : families)
            if (f.name == name) return &f;
        return nullptr;
    }
};

inline Catalog parse_catalog(std::string_view text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("catalog is not valid JSON: ") + e.what());
    }
    if (doc.value("schema", std::string()) != "wpsinv-catalog") throw InvalidInput("not a wpsinv catalog document");
    Catalog catalog;
    catalog.version = doc.value("version", 0);
    if (catalog.version != 1) throw InvalidInput("unsupported catalog version " + std::to_string(catalog.version));
    for (const auto& f : doc.at("families")) catalog.families.push_back(family_from_json(f));
    return catalog;
}

inline Json to_json(const Catalog& catalog) {
    Json families = Json::array();
    for (const auto& f : catalog.families) families.push_back(to_json(f));
    return Json{{"schema", "wpsinv-catalog"}, {"version", catalog.version}, {"families", families}};
}

inline const Catalog& shipped_catalog() {
    static const Catalog catalog = parse_catalog(kCatalogJson);
    return catalog;
}

struct VerifyReport {
    std::int64_t k_max = 0;
    std::vector<CheckReport> families;

    bool passed() const {
        for (const auto& r : families)
            if (!r.passed()) return false;
        return true;
    }

    struct Failure {
        std::string family;
        CheckResult check;
    };

    std::vector<Failure> failures() const {
        std::vector<Failure> out;
        for (const auto& r : families)
            for (const auto& c : r.checks)
                if (!c.passed) out.push_back({r.family.name, c});
        return out;
    }
};

namespace detail {

inline CheckReport verify_complete_intersection(const FamilyRecord& f, const Catalog& catalog, std::int64_t k_max) {
    CheckReport report{f, {}, {}};
    const Rational volume = complete_intersection_volume(f.ambient, f.degrees);
    report.checks.push_back({"volume", f.data.k3 == volume, "K^3 = prod(d)/prod(w) = " + volume.str(),
                             "K^3 = " + f.data.k3.str()});
    const SeriesPrefix series = ci_series(f.ambient, f.degrees, k_max);
    report.checks.push_back(compare_genus(f.data.pg, series));
    report.checks.push_back(compare_plurigenera(f.data, f.basket, series, k_max));
    report.checks.push_back(check_wellformed(f.ambient));
    if (f.specializes) {
        const FamilyRecord* base = catalog.find(*f.specializes);
        if (!base || !base->is_hypersurface()) {
            report.checks.push_back({"specialization", false, "hypersurface record " + *f.specializes, "missing"});
        } else {
            const SeriesPrefix base_series = hypersurface_series(base->ambient, base->degrees.front(), k_max);
            std::string mismatch;
            for (std::int64_t k = 0; k <= k_max && mismatch.empty(); ++k)
                if (series[k] != base_series[k])
                    mismatch = "c_" + std::to_string(k) + ": " + series[k].str() + " vs " + base_series[k].str();
            report.checks.push_back({"specialization-series", mismatch.empty(),
                                     "series equal to " + base->name + " up to q^" + std::to_string(k_max),
                                     mismatch.empty() ? "equal" : mismatch});
            const bool same = base->data == f.data && base->basket == f.basket;
            report.checks.push_back({"specialization-data", same,
                                     "(K^3, chi, p_g, basket) of " + base->name + " = (" + base->data.k3.str() + ", " +
                                         std::to_string(base->data.chi) + ", " + std::to_string(base->data.pg) +
                                         ", " + base->basket.str() + ")",
                                     "(" + f.data.k3.str() + ", " + std::to_string(f.data.chi) + ", " +
                                         std::to_string(f.data.pg) + ", " + f.basket.str() + ")"});
        }
    }
    return report;
}

inline CheckReport verify_family(const FamilyRecord& f, const Catalog& catalog, std::int64_t k_max) {
    try {
        if (!f.is_hypersurface()) return verify_complete_intersection(f, catalog, k_max);
        CheckReport report = check_theorem71_numeric(f, k_max);
        if (f.moduli_dim) {
            const BigInt dim = moduli_dimension(f.ambient, f.degrees.front());
            report.checks.push_back({"moduli-dimension", dim == *f.moduli_dim,
                                     "dim M = " + std::to_string(*f.moduli_dim), "dim M = " + dim.str()});
        }
        return report;
    } catch (const Error& e) {
        return CheckReport{f, {{"evaluation", false, "well-posed record", e.what()}}, {}};
    }
}

}  // namespace detail

/// Runs every check on every record. Check failures are reported, not thrown.
inline VerifyReport verify_all(const Catalog& catalog, std::int64_t k_max) {
    if (k_max < 16) throw InvalidInput("verify_all needs k_max >= 16, got " + std::to_string(k_max));
    VerifyReport report{k_max, {}};
    for (const auto& f : catalog.families) report.families.push_back(detail::verify_family(f, catalog, k_max));
    return report;
}

inline VerifyReport verify_all(std::int64_t k_max) { return verify_all(shipped_catalog(), k_max); }

inline Json to_json(const VerifyReport& r) {
    Json families = Json::array();
    for (const auto& f : r.families) families.push_back(to_json(f));
    Json failures = Json::array();
    for (const auto& f : r.failures())
        failures.push_back(Json{{"family", f.family}, {"check", f.check.name}, {"expected", f.check.expected},
                                {"actual", f.check.actual}});
    return Json{{"k_max", r.k_max}, {"passed", r.passed()}, {"families", families}, {"failures", failures}};
}

}  // namespace wpsinv
