/**
 * @file moduli.hpp
 * @brief dim Aut P(w) and moduli dimensions of hypersurface families.
 *
 * dim Aut P(w) = sum_i h^0(O(w_i)) - 1: each coordinate may be replaced by any
 * weighted-homogeneous polynomial of its own degree, modulo the overall scaling.
 * The formula is confirmed for the three catalog ambients and for ordinary
 * projective space; everything else is reported as formula-extrapolated.
 */
#pragma once

#include "wpsinv/core.hpp"
#include "wpsinv/hilbert.hpp"

namespace wpsinv {

inline BigInt aut_dimension(const WeightSystem& w) {
    const auto counts = monomial_counts(w, w.largest());
    BigInt dim = -1;
    for (auto wi : w.weights()) dim += counts[wi];
    return dim;
}

/// h^0(O(d)) - 1 - dim Aut P(w).
inline BigInt moduli_dimension(const WeightSystem& w, std::int64_t d) {
    if (d < 1) throw InvalidInput("degree must be positive");
    return count_monomials(w, d) - 1 - aut_dimension(w);
}

/// True unless w is P^n or one of the ambients where the Aut formula was checked by hand.
inline bool formula_extrapolated(const WeightSystem& w) {
    static const WeightSystem confirmed[] = {{1, 1, 2, 3, 8}, {1, 1, 1, 2, 6}, {1, 1, 1, 1, 5}};
    if (w.largest() == 1) return false;
    for (const auto& c : confirmed)
        if (c == w) return false;
    return true;
}

}  // namespace wpsinv
