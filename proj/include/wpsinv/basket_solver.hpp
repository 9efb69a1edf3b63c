/**
 * @file basket_solver.hpp
 * @brief Brute-force search for (basket multiplicities, chi(O_X)) consistent with
 *        linear constraints on plurigenera.
 *
 * A scenario fixes K^3, p_g, a list of orbifold-point types with multiplicity
 * ranges and an interval for chi. Every point of the box is evaluated with
 * Riemann-Roch; a point survives when P_2..P_M are nonnegative integers (M is
 * the largest index any constraint mentions) and every constraint holds.
 * Results come back in lexicographic order of (multiplicities..., chi).
 */
#pragma once

#include <cctype>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "wpsinv/core.hpp"
#include "wpsinv/reid_rr.hpp"

namespace wpsinv {

enum class Comparator { less_equal, greater_equal, equal };

inline std::string_view to_string(Comparator c) {
    switch (c) {
        case Comparator::less_equal: return "<=";
        case Comparator::greater_equal: return ">=";
        case Comparator::equal: return "=";
    }
    return "?";
}

/// sum_m coefficients[m] * P_m + constant  (cmp)  0
struct LinearConstraint {
    std::map<std::int64_t, Rational> coefficients;
    Rational constant;
    Comparator cmp = Comparator::equal;

    std::int64_t max_index() const { return coefficients.empty() ? 0 : coefficients.rbegin()->first; }

    bool holds(const std::function<BigInt(std::int64_t)>& plurigenus_at) const {
        Rational value = constant;
        for (const auto& [m, c] : coefficients) value += c * Rational(plurigenus_at(m));
        switch (cmp) {
            case Comparator::less_equal: return value.sign() <= 0;
            case Comparator::greater_equal: return value.sign() >= 0;
            case Comparator::equal: return value.sign() == 0;
        }
        return false;
    }

    /// Canonical text, e.g. "-P2 + P3 - 3 >= 0".
    std::string str() const {
        std::string out;
        auto append = [&out](const Rational& c, const std::string& symbol) {
            if (c.sign() == 0) return;
            const Rational mag = c.sign() < 0 ? -c : c;
            if (out.empty())
                out += c.sign() < 0 ? "-" : "";
            else
                out += c.sign() < 0 ? " - " : " + ";
            if (symbol.empty())
                out += mag.str();
            else
                out += (mag == Rational(1) ? "" : mag.str()) + symbol;
        };
        for (const auto& [m, c] : coefficients) append(c, "P" + std::to_string(m));
        append(constant, "");
        if (out.empty()) out = "0";
        return out + " " + std::string(to_string(cmp)) + " 0";
    }

    /// Parses "P2<=4", "P3>=P2+3", "2P4-P3-3P2<=3", "1/2P2 = 5". Indices are >= 1.
    static LinearConstraint parse(std::string_view text);

    friend bool operator==(const LinearConstraint&, const LinearConstraint&) = default;
};

namespace detail {

class ConstraintParser {
public:
    explicit ConstraintParser(std::string_view text) : text_(text) {}

    LinearConstraint parse() {
        LinearConstraint c;
        side(c, Rational(1));
        skip_ws();
        if (match("<="))
            c.cmp = Comparator::less_equal;
        else if (match(">="))
            c.cmp = Comparator::greater_equal;
        else if (match("==") || match("="))
            c.cmp = Comparator::equal;
        else
            fail("expected <=, >= or =");
        side(c, Rational(-1));
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        for (auto it = c.coefficients.begin(); it != c.coefficients.end();)
            it = it->second.sign() == 0 ? c.coefficients.erase(it) : std::next(it);
        return c;
    }

private:
    void side(LinearConstraint& c, const Rational& sign) {
        skip_ws();
        Rational s = sign;
        if (match("-"))
            s = -s;
        else
            match("+");
        term(c, s);
        while (true) {
            skip_ws();
            if (match("+"))
                term(c, sign);
            else if (match("-"))
                term(c, -sign);
            else
                break;
        }
    }

    void term(LinearConstraint& c, const Rational& sign) {
        skip_ws();
        Rational coef(1);
        bool have_coef = false;
        if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            coef = number();
            have_coef = true;
            skip_ws();
            match("*");
            skip_ws();
        }
        if (match("P") || match("p")) {
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (start == pos_) fail("expected a plurigenus index after P");
            const std::int64_t m = parse_int64(text_.substr(start, pos_ - start));
            if (m < 1) fail("plurigenus index must be >= 1");
            c.coefficients[m] += sign * coef;
        } else if (have_coef) {
            c.constant += sign * coef;
        } else {
            fail("expected a number or P<m>");
        }
    }

    Rational number() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ + 1 < text_.size() && text_[pos_] == '/' && std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
            ++pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        }
        return Rational::parse(text_.substr(start, pos_ - start));
    }

    bool match(std::string_view token) {
        if (text_.substr(pos_, token.size()) != token) return false;
        pos_ += token.size();
        return true;
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw InvalidInput("bad constraint '" + std::string(text_) + "' at offset " + std::to_string(pos_) + ": " +
                           what);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline LinearConstraint LinearConstraint::parse(std::string_view text) { return detail::ConstraintParser(text).parse(); }

/// Parses a ';'-separated constraint list.
inline std::vector<LinearConstraint> parse_constraints(std::string_view text) {
    std::vector<LinearConstraint> out;
    for (auto part : detail::split(text, ';')) {
        part = detail::trim(part);
        if (!part.empty()) out.push_back(LinearConstraint::parse(part));
    }
    return out;
}

struct IntRange {
    std::int64_t lo = 0;
    std::int64_t hi = 0;

    std::int64_t size() const { return hi - lo + 1; }
    friend bool operator==(const IntRange&, const IntRange&) = default;
};

/// "lo..hi" or a single integer.
inline IntRange parse_range(std::string_view text) {
    text = detail::trim(text);
    const auto dots = text.find("..");
    if (dots == std::string_view::npos) {
        const auto v = detail::parse_int64(text);
        return {v, v};
    }
    return {detail::parse_int64(text.substr(0, dots)), detail::parse_int64(text.substr(dots + 2))};
}

struct ShapeTerm {
    BasketEntry type;
    IntRange mult;
};

/// "0..20x1/2,1..20x1/3"
inline std::vector<ShapeTerm> parse_shape(std::string_view text) {
    std::vector<ShapeTerm> shape;
    text = detail::trim(text);
    if (text.empty()) return shape;
    for (auto part : detail::split(text, ',')) {
        part = detail::trim(part);
        const auto x = part.find('x');
        const auto slash = part.find('/');
        if (x == std::string_view::npos || slash == std::string_view::npos || slash < x)
            throw InvalidInput("shape term must look like lo..hixb/r, got '" + std::string(part) + "'");
        shape.push_back({BasketEntry(detail::parse_int64(part.substr(x + 1, slash - x - 1)),
                                     detail::parse_int64(part.substr(slash + 1))),
                         parse_range(part.substr(0, x))});
    }
    return shape;
}

struct SolverScenario {
    std::string name;
    Rational k3;
    std::int64_t pg = 0;
    std::vector<ShapeTerm> shape;
    IntRange chi_range;
    std::vector<LinearConstraint> constraints;

    /// Largest m with P_m evaluated: at least 2, otherwise the largest constraint index.
    std::int64_t max_index() const {
        std::int64_t m = 2;
        for (const auto& c : constraints) m = std::max(m, c.max_index());
        return m;
    }

    void validate() const {
        if (k3.sign() <= 0) throw InvalidInput("K^3 must be positive");
        if (pg < 0) throw InvalidInput("p_g must be nonnegative");
        if (chi_range.lo > chi_range.hi) throw InvalidInput("empty chi range");
        long double cells = static_cast<long double>(chi_range.size());
        for (std::size_t i = 0; i < shape.size(); ++i) {
            const auto& t = shape[i];
            if (t.mult.lo < 0 || t.mult.lo > t.mult.hi)
                throw InvalidInput("multiplicity range for " + t.type.str() + " must satisfy 0 <= lo <= hi");
            for (std::size_t j = 0; j < i; ++j)
                if (shape[j].type == t.type) throw InvalidInput("basket type " + t.type.str() + " listed twice");
            cells *= static_cast<long double>(t.mult.size());
        }
        if (cells > 5e7L) throw InvalidInput("search box too large");
    }
};

struct SolverSolution {
    std::vector<std::int64_t> multiplicities;  // parallel to the scenario shape
    std::int64_t chi = 0;
    PlurigenusTable table;

    Basket basket() const { return table.basket; }
};

inline std::vector<SolverSolution> solve(const SolverScenario& scenario) {
    scenario.validate();
    const std::int64_t max_m = scenario.max_index();
    const std::size_t n = scenario.shape.size();

    // l(m) is additive, so tabulate the per-type contributions once.
    std::vector<std::vector<Rational>> per_type(n);
    for (std::size_t t = 0; t < n; ++t)
        for (std::int64_t m = 2; m <= max_m; ++m) per_type[t].push_back(l_term(scenario.shape[t].type, m));
    std::vector<Rational> volume_part;
    for (std::int64_t m = 2; m <= max_m; ++m)
        volume_part.push_back(Rational(BigInt(m) * (m - 1) * (2 * m - 1), BigInt(12)) * scenario.k3);

    std::vector<SolverSolution> solutions;
    std::vector<std::int64_t> mult(n);
    for (std::size_t t = 0; t < n; ++t) mult[t] = scenario.shape[t].mult.lo;

    std::vector<Rational> l_part(volume_part.size());
    std::vector<BigInt> plurigenera(volume_part.size());
    while (true) {
        for (std::size_t i = 0; i < l_part.size(); ++i) {
            l_part[i] = Rational();
            for (std::size_t t = 0; t < n; ++t) l_part[i] += Rational(mult[t]) * per_type[t][i];
        }
        for (std::int64_t chi = scenario.chi_range.lo; chi <= scenario.chi_range.hi; ++chi) {
            bool ok = true;
            for (std::size_t i = 0; i < l_part.size() && ok; ++i) {
                const std::int64_t m = static_cast<std::int64_t>(i) + 2;
                const Rational value = volume_part[i] - Rational((2 * m - 1) * chi) + l_part[i];
                ok = value.is_integer() && value.sign() >= 0;
                if (ok) plurigenera[i] = value.num();
            }
            if (!ok) continue;
            auto at = [&](std::int64_t m) -> BigInt { return m == 1 ? BigInt(scenario.pg) : plurigenera[m - 2]; };
            bool feasible = true;
            for (const auto& c : scenario.constraints)
                if (!c.holds(at)) {
                    feasible = false;
                    break;
                }
            if (!feasible) continue;

            std::vector<BasketTerm> terms;
            for (std::size_t t = 0; t < n; ++t)
                if (mult[t] > 0) terms.push_back({mult[t], scenario.shape[t].type.b(), scenario.shape[t].type.r()});
            PlurigenusTable table{NumericalData(scenario.k3, chi, scenario.pg), normalize_basket(terms), {},
                                  scenario.pg};
            for (std::size_t i = 0; i < plurigenera.size(); ++i)
                table.values.emplace_back(static_cast<std::int64_t>(i) + 2, plurigenera[i]);
            solutions.push_back({mult, chi, std::move(table)});
        }
        // odometer, last type fastest
        std::size_t t = n;
        while (t > 0) {
            --t;
            if (mult[t] < scenario.shape[t].mult.hi) {
                ++mult[t];
                break;
            }
            mult[t] = scenario.shape[t].mult.lo;
            if (t == 0) return solutions;
        }
        if (n == 0) return solutions;
    }
}

/// Hypothesis of the P_2 upper bound below: K^3 < (4/3) p_g - 17/6.
inline bool hz_hypothesis_holds(const Rational& k3, std::int64_t pg) {
    return k3 < Rational(BigInt(4 * pg), BigInt(3)) - Rational(BigInt(17), BigInt(6));
}

/// P_2 <= floor(2K^3) + floor(2K^3 - 5(p_g - 1)/3) + 7, valid when K^3 < (4/3) p_g - 17/6.
inline BigInt hz_p2_bound(const Rational& k3, std::int64_t pg) {
    if (!hz_hypothesis_holds(k3, pg))
        throw InvalidInput("P_2 bound needs K^3 < 4p_g/3 - 17/6; fails for K^3 = " + k3.str() +
                           ", p_g = " + std::to_string(pg));
    const Rational twice = Rational(2) * k3;
    return twice.floor() + (twice - Rational(BigInt(5 * (pg - 1)), BigInt(3))).floor() + 7;
}

inline const std::vector<std::string>& preset_names() {
    static const std::vector<std::string> names{"pg2", "pg3", "pg4"};
    return names;
}

/// The three worked determinations. `bound` caps every multiplicity and |chi|
/// (chi is pinned to -3 in pg4, where it is known beforehand).
inline SolverScenario preset(std::string_view name, std::int64_t bound = 20) {
    if (bound < 1) throw InvalidInput("search bound must be positive");
    SolverScenario s;
    s.name = std::string(name);
    if (name == "pg2") {
        // one point of index 3 at least, the rest of index 2
        s.k3 = Rational(BigInt(1), BigInt(3));
        s.pg = 2;
        s.shape = {{BasketEntry(1, 2), {0, bound}}, {BasketEntry(1, 3), {1, bound}}};
        s.chi_range = {-bound, bound};
        s.constraints = parse_constraints("P2 <= 4; P3 >= P2 + 3; P4 >= P3 + 4");
    } else if (name == "pg3") {
        s.k3 = Rational(1);
        s.pg = 3;
        s.shape = {{BasketEntry(1, 2), {0, bound}}};
        s.chi_range = {-bound, bound};
        s.constraints = parse_constraints("P2 <= 7; P3 >= P2 + 6");
    } else if (name == "pg4") {
        s.k3 = Rational(2);
        s.pg = 4;
        s.shape = {{BasketEntry(1, 2), {0, bound}}};
        s.chi_range = {-3, -3};
        // P2 >= 10 from l(2) >= 0; the upper bound is the floor formula above
        s.constraints = parse_constraints("P2 >= 10");
        s.constraints.push_back(
            LinearConstraint{{{2, Rational(1)}}, Rational(-hz_p2_bound(s.k3, s.pg)), Comparator::less_equal});
    } else {
        throw InvalidInput("unknown preset '" + std::string(name) + "' (expected pg2, pg3 or pg4)");
    }
    return s;
}

}  // namespace wpsinv
