/**
 * @file core.hpp
 * @brief Weight systems, Reid baskets and the numerical invariant package
 *        (K^3, chi(O), p_g) shared by every other module.
 */
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <type_traits>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wpsinv/errors.hpp"
#include "wpsinv/rational.hpp"

namespace wpsinv {

namespace detail {

inline std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = text.find(sep, start);
        parts.push_back(text.substr(start, pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return parts;
}

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

inline std::int64_t parse_int64(std::string_view text) { return to_int64(parse_bigint(trim(text))); }

template <typename Range>
std::string join(const Range& values, std::string_view sep) {
    std::string out;
    bool first = true;
    for (const auto& v : values) {
        if (!first) out += sep;
        first = false;
        if constexpr (std::is_convertible_v<decltype(v), std::string_view>)
            out += v;
        else
            out += std::to_string(v);
    }
    return out;
}

}  // namespace detail

/// "1,1,2,3,8" -> {1,1,2,3,8}.
inline std::vector<std::int64_t> parse_int_list(std::string_view text) {
    std::vector<std::int64_t> values;
    for (auto part : detail::split(text, ',')) values.push_back(detail::parse_int64(part));
    return values;
}

/// Weights of a weighted projective space P(w_0, ..., w_n), kept ascending.
class WeightSystem {
public:
    explicit WeightSystem(std::vector<std::int64_t> weights) : weights_(std::move(weights)) {
        if (weights_.empty()) throw InvalidInput("weight system must be nonempty");
        for (auto w : weights_)
            if (w < 1) throw InvalidInput("weights must be positive, got " + std::to_string(w));
        std::sort(weights_.begin(), weights_.end());
    }
    WeightSystem(std::initializer_list<std::int64_t> weights)
        : WeightSystem(std::vector<std::int64_t>(weights)) {}

    std::span<const std::int64_t> weights() const { return weights_; }
    std::size_t size() const { return weights_.size(); }
    std::int64_t operator[](std::size_t i) const { return weights_[i]; }
    std::int64_t largest() const { return weights_.back(); }

    BigInt product() const {
        BigInt p = 1;
        for (auto w : weights_) p *= w;
        return p;
    }

    std::string str() const { return "(" + detail::join(weights_, ",") + ")"; }

    static WeightSystem parse(std::string_view text) { return WeightSystem(parse_int_list(text)); }

    friend bool operator==(const WeightSystem&, const WeightSystem&) = default;
    friend auto operator<=>(const WeightSystem&, const WeightSystem&) = default;

private:
    std::vector<std::int64_t> weights_;
};

/// Orbifold point of type 1/r(1, -1, b) with 0 < b <= r/2 and gcd(b, r) = 1.
class BasketEntry {
public:
    BasketEntry(std::int64_t b, std::int64_t r) : b_(b), r_(r) {
        if (r < 2 || b <= 0 || 2 * b > r || std::gcd(b, r) != 1)
            throw InvalidInput("malformed basket entry (" + std::to_string(b) + "," + std::to_string(r) +
                               "): need 0 < b <= r/2 and gcd(b, r) = 1");
    }

    std::int64_t b() const { return b_; }
    std::int64_t r() const { return r_; }

    std::string str() const { return "(" + std::to_string(b_) + "," + std::to_string(r_) + ")"; }

    friend bool operator==(const BasketEntry&, const BasketEntry&) = default;
    // canonical order is by (r, b)
    friend std::strong_ordering operator<=>(const BasketEntry& x, const BasketEntry& y) {
        if (auto c = x.r_ <=> y.r_; c != 0) return c;
        return x.b_ <=> y.b_;
    }

private:
    std::int64_t b_;
    std::int64_t r_;
};

/// Raw (mult x (b, r)) input to normalize_basket.
struct BasketTerm {
    std::int64_t mult = 1;
    std::int64_t b = 0;
    std::int64_t r = 0;
};

/// Multiset of orbifold points, canonically sorted by (r, b).
class Basket {
public:
    struct Item {
        BasketEntry entry;
        std::int64_t mult;
        friend bool operator==(const Item&, const Item&) = default;
    };

    Basket() = default;

    const std::vector<Item>& items() const { return items_; }
    bool empty() const { return items_.empty(); }

    std::int64_t multiplicity(const BasketEntry& e) const {
        for (const auto& it : items_)
            if (it.entry == e) return it.mult;
        return 0;
    }

    /// Multiset union.
    Basket merged(const Basket& other) const {
        std::vector<BasketTerm> terms = to_terms();
        for (const auto& t : other.to_terms()) terms.push_back(t);
        return from_terms(terms);
    }

    std::vector<BasketTerm> to_terms() const {
        std::vector<BasketTerm> terms;
        for (const auto& it : items_) terms.push_back({it.mult, it.entry.b(), it.entry.r()});
        return terms;
    }

    /// "{2×(1,2), (1,3)}"; "{}" when empty.
    std::string str() const {
        std::string out = "{";
        for (std::size_t i = 0; i < items_.size(); ++i) {
            if (i) out += ", ";
            if (items_[i].mult != 1) out += std::to_string(items_[i].mult) + "×";
            out += items_[i].entry.str();
        }
        return out + "}";
    }

    /// Compact "2x1/2,1x1/3" form used on the command line; "" when empty.
    std::string spec_str() const {
        std::string out;
        for (std::size_t i = 0; i < items_.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(items_[i].mult) + "x" + std::to_string(items_[i].entry.b()) + "/" +
                   std::to_string(items_[i].entry.r());
        }
        return out;
    }

    friend bool operator==(const Basket&, const Basket&) = default;

    static Basket from_terms(std::span<const BasketTerm> raw) {
        std::map<BasketEntry, std::int64_t> counts;
        for (const auto& t : raw) {
            if (t.mult < 1)
                throw InvalidInput("basket multiplicity must be positive, got " + std::to_string(t.mult));
            counts[BasketEntry(t.b, t.r)] += t.mult;
        }
        Basket basket;
        for (const auto& [entry, mult] : counts) basket.items_.push_back({entry, mult});
        return basket;
    }

private:
    std::vector<Item> items_;
};

/// Validates each (b, r) and collapses the list into a canonical multiset.
/// Entries with b > r/2 are rejected rather than reflected to r - b.
inline Basket normalize_basket(std::span<const BasketTerm> raw) { return Basket::from_terms(raw); }

/// Parses "2x1/2,1x1/3" (multiplicity optional: "1/3" means 1x1/3). Empty text is the empty basket.
inline Basket parse_basket(std::string_view text) {
    text = detail::trim(text);
    std::vector<BasketTerm> terms;
    if (text.empty() || text == "{}" || text == "none") return {};
    for (auto part : detail::split(text, ',')) {
        part = detail::trim(part);
        BasketTerm term;
        if (const auto x = part.find_first_of("x*"); x != std::string_view::npos) {
            term.mult = detail::parse_int64(part.substr(0, x));
            part = part.substr(x + 1);
        }
        const auto slash = part.find('/');
        if (slash == std::string_view::npos)
            throw InvalidInput("basket entry must look like [mult x]b/r, got '" + std::string(part) + "'");
        term.b = detail::parse_int64(part.substr(0, slash));
        term.r = detail::parse_int64(part.substr(slash + 1));
        terms.push_back(term);
    }
    return normalize_basket(terms);
}

/// (K^3, chi(O_X), p_g) of a minimal 3-fold.
struct NumericalData {
    Rational k3;
    std::int64_t chi = 0;
    std::int64_t pg = 0;

    NumericalData(Rational k3_, std::int64_t chi_, std::int64_t pg_) : k3(std::move(k3_)), chi(chi_), pg(pg_) {
        if (k3.sign() <= 0) throw InvalidInput("canonical volume must be positive, got " + k3.str());
        if (pg < 0) throw InvalidInput("geometric genus must be nonnegative");
    }

    friend bool operator==(const NumericalData&, const NumericalData&) = default;
};

/// A weighted hypersurface (one degree) or codimension-2 complete intersection
/// (two degrees) with its full invariant package.
struct FamilyRecord {
    std::string name;
    WeightSystem ambient;
    std::vector<std::int64_t> degrees;
    NumericalData data;
    Basket basket;
    std::optional<std::int64_t> moduli_dim;
    /// Name of the hypersurface family this record specializes to, if any.
    std::optional<std::string> specializes;
    /// Where each number comes from; free text keyed by field name.
    std::map<std::string, std::string> sources;

    bool is_hypersurface() const { return degrees.size() == 1; }

    std::string str() const {
        std::string out = "X_" + detail::join(degrees, ",") + " in P" + ambient.str();
        return out;
    }

    friend bool operator==(const FamilyRecord&, const FamilyRecord&) = default;
};

}  // namespace wpsinv
