/**
 * @file cli.hpp
 * @brief Command-line front end. cli_dispatch never touches the process streams,
 *        so it can be driven in-process by tests.
 *
 * Exit codes: 0 success, 1 computation error or a failed check, 2 usage error.
 */
#pragma once

#include <algorithm>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wpsinv/basket_solver.hpp"
#include "wpsinv/catalog.hpp"
#include "wpsinv/checker.hpp"
#include "wpsinv/hilbert.hpp"
#include "wpsinv/json_io.hpp"
#include "wpsinv/moduli.hpp"
#include "wpsinv/noether.hpp"
#include "wpsinv/reid_rr.hpp"

namespace wpsinv {

struct CliResult {
    int exit_code = 0;
    std::string out;
    std::string err;
};

namespace cli_detail {

inline std::string render(const Json& doc) { return doc.dump(2) + "\n"; }

/// Thrown for argument combinations CLI11 cannot express; maps to exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline std::string pad(const std::string& s, std::size_t width) {
    return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

inline void print_report(std::ostream& os, const CheckReport& r) {
    os << r.family.name << ": " << r.family.str() << "\n";
    for (const auto& c : r.checks)
        os << "  [" << (c.passed ? "PASS" : "FAIL") << "] " << c.name << ": " << c.detail() << "\n";
    for (const auto& a : r.assumptions) os << "  [ASSUMED] " << a << "\n";
    os << "  overall: " << (r.passed() ? "PASS" : "FAIL") << "\n";
}

/// Parses a flag value; malformed text is a usage error rather than a computation error.
template <class F>
auto flag_value(const char* flag, F&& parse) {
    try {
        return parse();
    } catch (const InvalidInput& e) {
        throw UsageError(std::string(flag) + ": " + e.what());
    }
}

inline std::vector<std::int64_t> parse_degrees(const std::string& text) {
    auto degrees = parse_int_list(text);
    if (degrees.empty()) throw InvalidInput("at least one degree is required");
    return degrees;
}

inline IntRange parse_table_range(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw UsageError("--table expects FROM:TO, got '" + text + "'");
    return {detail::parse_int64(text.substr(0, colon)), detail::parse_int64(text.substr(colon + 1))};
}

}  // namespace cli_detail

inline CliResult cli_dispatch(const std::vector<std::string>& args) {
    using namespace cli_detail;
    std::ostringstream out;
    std::ostringstream err;

    CLI::App app{"Numerical invariants of canonical 3-folds realized as weighted hypersurfaces", "wpsinv"};
    app.require_subcommand(1);

    bool json = false;
    bool tsv = false;

    // hilbert
    auto* hilbert = app.add_subcommand("hilbert", "Hilbert series prefix of a weighted hypersurface or complete intersection");
    std::string h_weights, h_degrees;
    std::int64_t h_terms = kDefaultTruncation + 1;
    hilbert->add_option("--weights", h_weights, "ambient weights, e.g. 1,1,2,3,8")->required();
    hilbert->add_option("--degree", h_degrees, "degree, or comma-separated degrees of a complete intersection")->required();
    hilbert->add_option("--terms", h_terms, "number of coefficients c_0..c_{terms-1}")->capture_default_str();
    hilbert->add_flag("--json", json);

    // rr
    auto* rr = app.add_subcommand("rr", "Plurigenera from Reid's orbifold Riemann-Roch");
    std::string r_k3, r_basket;
    std::int64_t r_chi = 0, r_pg = 0, r_mmax = kDefaultMaxPlurigenus;
    rr->add_option("--k3", r_k3, "canonical volume p/q")->required();
    rr->add_option("--chi", r_chi, "chi(O_X)")->required();
    rr->add_option("--pg", r_pg, "geometric genus")->required();
    rr->add_option("--basket", r_basket, "e.g. 2x1/2,1x1/3 (empty for Gorenstein)");
    rr->add_option("--m-max", r_mmax, "largest m")->capture_default_str();
    rr->add_flag("--json", json);

    // solve
    auto* solve_cmd = app.add_subcommand("solve", "Search basket multiplicities and chi against plurigenus constraints");
    std::string s_preset, s_k3, s_shape, s_chi, s_constraints;
    std::optional<std::int64_t> s_pg;
    std::int64_t s_bound = 20;
    solve_cmd->add_option("--preset", s_preset, "pg2, pg3 or pg4");
    solve_cmd->add_option("--bound", s_bound, "multiplicity and |chi| bound for presets")->capture_default_str();
    solve_cmd->add_option("--k3", s_k3, "canonical volume p/q");
    solve_cmd->add_option("--pg", s_pg, "geometric genus");
    solve_cmd->add_option("--shape", s_shape, "basket types with ranges, e.g. 0..20x1/2,1..20x1/3");
    solve_cmd->add_option("--chi", s_chi, "chi range lo..hi or a single value");
    solve_cmd->add_option("--constraints", s_constraints, "';'-separated, e.g. 'P2<=4;P3>=P2+3'");
    solve_cmd->add_flag("--json", json);

    // moduli
    auto* moduli = app.add_subcommand("moduli", "dim Aut P(w) and the moduli dimension of X_d");
    std::string m_weights;
    std::int64_t m_degree = 0;
    moduli->add_option("--weights", m_weights, "ambient weights")->required();
    moduli->add_option("--degree", m_degree, "hypersurface degree")->required();
    moduli->add_flag("--json", json);

    // noether
    auto* noether = app.add_subcommand("noether", "Volume lower bounds for p_g >= 5");
    std::optional<std::int64_t> n_pg;
    std::string n_table;
    auto* n_pg_opt = noether->add_option("--pg", n_pg, "geometric genus");
    auto* n_table_opt = noether->add_option("--table", n_table, "range FROM:TO");
    n_pg_opt->excludes(n_table_opt);
    auto* n_json = noether->add_flag("--json", json);
    auto* n_tsv = noether->add_flag("--tsv", tsv);
    n_json->excludes(n_tsv);

    // check
    auto* check = app.add_subcommand("check", "Screen a candidate against the weighted-hypersurface criterion");
    std::string c_family, c_weights, c_k3, c_basket;
    std::optional<std::int64_t> c_degree, c_chi, c_pg;
    std::int64_t c_kmax = 32;
    check->add_option("--family", c_family, "x16, x12 or x10");
    check->add_option("--weights", c_weights, "ambient weights (generic form)");
    check->add_option("--degree", c_degree, "degree (generic form)");
    check->add_option("--k3", c_k3, "canonical volume (generic form)");
    check->add_option("--chi", c_chi, "chi(O_X) (generic form)");
    check->add_option("--pg", c_pg, "geometric genus (generic form)");
    check->add_option("--basket", c_basket, "basket (generic form)");
    check->add_option("--k-max", c_kmax, "compare plurigenera up to this m")->capture_default_str();
    check->add_flag("--json", json);

    // catalog
    auto* catalog_cmd = app.add_subcommand("catalog", "Shipped family records");
    catalog_cmd->require_subcommand(1);
    auto* verify = catalog_cmd->add_subcommand("verify", "Run every consistency check on the catalog");
    std::int64_t v_kmax = 32;
    verify->add_option("--k-max", v_kmax, "compare series up to this degree")->capture_default_str();
    verify->add_flag("--json", json);
    auto* show = catalog_cmd->add_subcommand("show", "Print the catalog");
    show->add_flag("--json", json);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return {code == 0 ? 0 : 2, out.str(), err.str()};
    }

    int status = 0;
    try {
        if (hilbert->parsed()) {
            const WeightSystem w = flag_value("--weights", [&] { return WeightSystem::parse(h_weights); });
            const auto degrees = flag_value("--degree", [&] { return parse_degrees(h_degrees); });
            if (h_terms < 1) throw UsageError("--terms must be at least 1");
            const SeriesPrefix s = ci_series(w, degrees, h_terms - 1);
            if (json) {
                out << render(series_to_json(w, degrees, s));
            } else {
                out << "P" << w.str() << ", degrees " << detail::join(degrees, ",") << "\n";
                out << "   k  c_k\n";
                for (std::int64_t k = 0; k <= s.truncation(); ++k)
                    out << pad(std::to_string(k), 4) << "  " << s[k].str() << "\n";
            }
        } else if (rr->parsed()) {
            const NumericalData data(flag_value("--k3", [&] { return Rational::parse(r_k3); }), r_chi, r_pg);
            const Basket basket = flag_value("--basket", [&] { return parse_basket(r_basket); });
            const PlurigenusTable table = plurigenus_table(data, basket, r_mmax);
            if (json) {
                out << render(to_json(table));
            } else {
                out << "K^3 = " << data.k3 << ", chi = " << data.chi << ", p_g = " << data.pg
                    << ", basket = " << basket.str() << "\n";
                out << "   m  P_m\n" << pad("1", 4) << "  " << table.p1 << "  (p_g)\n";
                for (const auto& [m, p] : table.values) out << pad(std::to_string(m), 4) << "  " << p.str() << "\n";
            }
        } else if (solve_cmd->parsed()) {
            SolverScenario scenario;
            if (!s_preset.empty()) {
                if (!s_k3.empty() || s_pg || !s_shape.empty() || !s_chi.empty() || !s_constraints.empty())
                    throw UsageError("--preset cannot be combined with --k3/--pg/--shape/--chi/--constraints");
                scenario = preset(s_preset, s_bound);
            } else {
                if (s_k3.empty() || !s_pg || s_chi.empty())
                    throw UsageError("solve needs --preset, or --k3, --pg and --chi (plus --shape, --constraints)");
                scenario.name = "custom";
                scenario.k3 = flag_value("--k3", [&] { return Rational::parse(s_k3); });
                scenario.pg = *s_pg;
                scenario.shape = flag_value("--shape", [&] { return parse_shape(s_shape); });
                scenario.chi_range = flag_value("--chi", [&] { return parse_range(s_chi); });
                scenario.constraints = flag_value("--constraints", [&] { return parse_constraints(s_constraints); });
            }
            const auto solutions = solve(scenario);
            if (json) {
                Json list = Json::array();
                for (const auto& sol : solutions) list.push_back(to_json(scenario, sol));
                out << render(Json{{"scenario", to_json(scenario)}, {"solutions", list}});
            } else {
                out << "scenario " << scenario.name << ": K^3 = " << scenario.k3 << ", p_g = " << scenario.pg
                    << ", chi in [" << scenario.chi_range.lo << ", " << scenario.chi_range.hi << "]\n";
                for (const auto& t : scenario.shape)
                    out << "  type " << t.type.str() << " multiplicity in [" << t.mult.lo << ", " << t.mult.hi << "]\n";
                for (const auto& c : scenario.constraints) out << "  constraint " << c.str() << "\n";
                out << solutions.size() << " solution(s)\n";
                for (const auto& sol : solutions) {
                    out << "  basket " << sol.table.basket.str() << ", chi = " << sol.chi;
                    out << ", P1 = " << sol.table.p1;
                    for (const auto& [m, p] : sol.table.values) out << ", P" << m << " = " << p.str();
                    out << "\n";
                }
            }
        } else if (moduli->parsed()) {
            const WeightSystem w = flag_value("--weights", [&] { return WeightSystem::parse(m_weights); });
            const BigInt aut = aut_dimension(w);
            const BigInt h0 = count_monomials(w, m_degree);
            const BigInt dim = moduli_dimension(w, m_degree);
            const bool extrapolated = formula_extrapolated(w);
            if (json) {
                out << render(Json{{"weights", to_json(w)},
                                   {"degree", m_degree},
                                   {"h0", to_json(h0)},
                                   {"aut_dimension", to_json(aut)},
                                   {"moduli_dimension", to_json(dim)},
                                   {"formula_extrapolated", extrapolated}});
            } else {
                out << "h0(O(" << m_degree << ")) = " << h0.str() << "\n";
                out << "dim Aut P" << w.str() << " = " << aut.str() << "\n";
                out << "dim M = " << dim.str() << "\n";
                if (extrapolated) out << "note: formula-extrapolated (Aut formula not confirmed for this ambient)\n";
            }
        } else if (noether->parsed()) {
            if (!n_pg && n_table.empty()) throw UsageError("noether needs --pg or --table");
            const IntRange range = n_pg ? IntRange{*n_pg, *n_pg} : flag_value("--table", [&] { return parse_table_range(n_table); });
            const auto rows = noether_table(range.lo, range.hi);
            if (json) {
                if (n_pg) {
                    out << render(to_json(rows.front()));
                } else {
                    Json list = Json::array();
                    for (const auto& r : rows) list.push_back(to_json(r));
                    out << render(Json{{"rows", list}});
                }
            } else if (tsv) {
                out << "pg\tnon-(1,2)-pencil\tirrational-pencil\trational-(1,2)-pencil\tmin\texpected\n";
                for (const auto& r : rows)
                    out << r.pg << "\t" << r.non12 << "\t" << r.irrational << "\t" << r.rational12 << "\t"
                        << r.min.value << "\t" << r.expected << "\n";
            } else {
                for (const auto& r : rows) {
                    out << "p_g = " << r.pg << "\n";
                    for (auto c : kNoetherCases)
                        out << "  " << std::left << std::setw(24) << label(c) << std::right
                            << noether_case_bound(c, r.pg) << "\n";
                    out << "  min " << r.min.value << " (";
                    for (std::size_t i = 0; i < r.min.cases.size(); ++i)
                        out << (i ? ", " : "") << label(r.min.cases[i]);
                    out << ")\n  expected (4p_g - 10)/3 = " << r.expected << "\n";
                }
            }
        } else if (check->parsed()) {
            FamilyRecord family = [&] {
                if (!c_family.empty()) {
                    if (!c_weights.empty() || c_degree || !c_k3.empty() || c_chi || c_pg || !c_basket.empty())
                        throw UsageError("--family cannot be combined with the generic flags");
                    std::string name = c_family;
                    std::transform(name.begin(), name.end(), name.begin(),
                                   [](unsigned char ch) { return static_cast<char>(std::toupper(ch)); });
                    const FamilyRecord* f = shipped_catalog().find(name);
                    if (!f || !f->is_hypersurface()) throw UsageError("unknown family '" + c_family + "'");
                    return *f;
                }
                if (c_weights.empty() || !c_degree || c_k3.empty() || !c_chi || !c_pg)
                    throw UsageError("check needs --family, or --weights, --degree, --k3, --chi, --pg [--basket]");
                return FamilyRecord{"candidate",
                                    flag_value("--weights", [&] { return WeightSystem::parse(c_weights); }),
                                    {*c_degree},
                                    NumericalData(flag_value("--k3", [&] { return Rational::parse(c_k3); }), *c_chi, *c_pg),
                                    flag_value("--basket", [&] { return parse_basket(c_basket); }),
                                    std::nullopt,
                                    std::nullopt,
                                    {}};
            }();
            const CheckReport report = check_theorem71_numeric(family, c_kmax);
            if (json)
                out << render(to_json(report));
            else
                print_report(out, report);
            if (!report.passed()) status = 1;
        } else if (verify->parsed()) {
            const VerifyReport report = verify_all(v_kmax);
            if (json) {
                out << render(to_json(report));
            } else {
                for (const auto& r : report.families) print_report(out, r);
                out << "catalog: " << report.families.size() << " records, " << report.failures().size()
                    << " failure(s), " << (report.passed() ? "PASS" : "FAIL") << "\n";
            }
            if (!report.passed()) status = 1;
        } else if (show->parsed()) {
            const Catalog& catalog = shipped_catalog();
            if (json) {
                out << render(to_json(catalog));
            } else {
                out << "catalog version " << catalog.version << "\n";
                for (const auto& f : catalog.families) {
                    out << f.name << ": " << f.str() << "\n";
                    out << "  K^3 = " << f.data.k3 << ", chi = " << f.data.chi << ", p_g = " << f.data.pg
                        << ", basket = " << f.basket.str() << "\n";
                    if (f.moduli_dim) out << "  dim M = " << *f.moduli_dim << "\n";
                    if (f.specializes) out << "  specializes to " << *f.specializes << "\n";
                }
            }
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return {2, "", err.str()};
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return {1, out.str(), err.str()};
    }
    return {status, out.str(), err.str()};
}

}  // namespace wpsinv
