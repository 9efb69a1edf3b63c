/**
 * @file noether.hpp
 * @brief Lower bounds for K^3 of minimal 3-folds of general type with p_g >= 5,
 *        split by the behavior of |K_X|, and their minimum.
 */
#pragma once

#include <cstdint>
#include <iterator>
#include <string>
#include <string_view>
#include <vector>

#include "wpsinv/rational.hpp"

namespace wpsinv {

enum class NoetherCase {
    non_12_pencil,       // |K_X| not composed with a pencil of (1,2)-surfaces
    irrational_pencil,   // composed with an irrational pencil
    rational_12_pencil,  // composed with a rational pencil of (1,2)-surfaces
};

inline constexpr NoetherCase kNoetherCases[] = {NoetherCase::non_12_pencil, NoetherCase::irrational_pencil,
                                                NoetherCase::rational_12_pencil};

inline std::string_view label(NoetherCase c) {
    switch (c) {
        case NoetherCase::non_12_pencil: return "non-(1,2)-pencil";
        case NoetherCase::irrational_pencil: return "irrational-pencil";
        case NoetherCase::rational_12_pencil: return "rational-(1,2)-pencil";
    }
    return "?";
}

namespace detail {
inline void require_pg5(std::int64_t pg) {
    if (pg < 5) throw InvalidInput("volume bounds need p_g >= 5, got " + std::to_string(pg));
}
}  // namespace detail

/// (1/4) * ceil((8/3)(2 p_g - 5))
inline Rational bound_non12pencil(std::int64_t pg) {
    detail::require_pg5(pg);
    const Rational surface_bound = Rational(BigInt(8 * (2 * pg - 5)), BigInt(3));
    return Rational(surface_bound.ceil(), BigInt(4));
}

/// Intermediate bounds from the sub-cases of the non-(1,2)-pencil argument.
/// These are proof-internal; the statement is bound_non12pencil.
struct Non12Diagnostics {
    Rational canonical_image_3fold;   // K^3 >= 2p_g - 6
    Rational pencil_not_12;           // K^3 > 2p_g - 6
    Rational surface_image_genus_ge3; // K^3 >= 2p_g - 4
    Rational surface_image_genus2;    // the statement's bound
};

inline Non12Diagnostics non12pencil_diagnostics(std::int64_t pg) {
    detail::require_pg5(pg);
    return {Rational(2 * pg - 6), Rational(2 * pg - 6), Rational(2 * pg - 4), bound_non12pencil(pg)};
}

inline Rational bound_irrational_pencil(std::int64_t pg) {
    detail::require_pg5(pg);
    return Rational(pg);
}

/// Largest m with (m - 1/(p_g-1)) (p_g-1)/p_g > m - 1 + 3/10, i.e. floor((7 p_g - 11)/10).
inline std::int64_t rational_12pencil_m(std::int64_t pg) {
    detail::require_pg5(pg);
    return to_int64(Rational(BigInt(7 * pg - 11), BigInt(10)).floor());
}

/// (p_g - 1)/(m + 1) * ((2 p_g - 2)/p_g + m - 1)
inline Rational bound_rational_12pencil(std::int64_t pg) {
    const std::int64_t m = rational_12pencil_m(pg);
    return Rational(BigInt(pg - 1), BigInt(m + 1)) * (Rational(BigInt(2 * pg - 2), BigInt(pg)) + Rational(m - 1));
}

inline Rational noether_case_bound(NoetherCase c, std::int64_t pg) {
    switch (c) {
        case NoetherCase::non_12_pencil: return bound_non12pencil(pg);
        case NoetherCase::irrational_pencil: return bound_irrational_pencil(pg);
        case NoetherCase::rational_12_pencil: return bound_rational_12pencil(pg);
    }
    throw InvalidInput("unknown case");
}

/// Conjectured Noether line (4/3) p_g - 10/3.
inline Rational expected_noether_bound(std::int64_t pg) { return {BigInt(4 * pg - 10), BigInt(3)}; }

struct NoetherBound {
    Rational value;
    std::vector<NoetherCase> cases;  // every case attaining the minimum
};

inline NoetherBound noether_lower_bound(std::int64_t pg) {
    detail::require_pg5(pg);
    NoetherBound best{noether_case_bound(kNoetherCases[0], pg), {kNoetherCases[0]}};
    for (std::size_t i = 1; i < std::size(kNoetherCases); ++i) {
        const Rational b = noether_case_bound(kNoetherCases[i], pg);
        if (b < best.value)
            best = {b, {kNoetherCases[i]}};
        else if (b == best.value)
            best.cases.push_back(kNoetherCases[i]);
    }
    return best;
}

struct NoetherRow {
    std::int64_t pg;
    Rational non12;
    Rational irrational;
    Rational rational12;
    NoetherBound min;
    Rational expected;
};

inline std::vector<NoetherRow> noether_table(std::int64_t pg_from, std::int64_t pg_to) {
    if (pg_from < 5 || pg_from > pg_to)
        throw InvalidInput("table range must satisfy 5 <= from <= to, got " + std::to_string(pg_from) + ":" +
                           std::to_string(pg_to));
    std::vector<NoetherRow> rows;
    for (std::int64_t pg = pg_from; pg <= pg_to; ++pg)
        rows.push_back({pg, bound_non12pencil(pg), bound_irrational_pencil(pg), bound_rational_12pencil(pg),
                        noether_lower_bound(pg), expected_noether_bound(pg)});
    return rows;
}

}  // namespace wpsinv
