/**
 * @file hilbert.hpp
 * @brief Weighted monomial counts h^0(P(w), O(k)) and truncated Hilbert series
 *        of weighted hypersurfaces and complete intersections.
 *
 * Counting is the coin-change recurrence: after folding in weight w,
 * table[k] += table[k - w]. The series of X_{d_1,...,d_c} in P(w) is
 * prod_j (1 - q^{d_j}) / prod_i (1 - q^{w_i}), so its k-th coefficient is the
 * alternating sum over subsets S of the degrees of count(k - sum S).
 */
#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "wpsinv/core.hpp"

namespace wpsinv {

inline constexpr std::int64_t kDefaultTruncation = 64;

/// Coefficients c_0..c_N of a power series.
struct SeriesPrefix {
    std::vector<BigInt> coefficients;

    std::int64_t truncation() const { return static_cast<std::int64_t>(coefficients.size()) - 1; }
    const BigInt& operator[](std::size_t k) const { return coefficients.at(k); }

    friend bool operator==(const SeriesPrefix&, const SeriesPrefix&) = default;
};

/// counts[k] = number of monomials of weighted degree k, for 0 <= k <= max_degree.
inline std::vector<BigInt> monomial_counts(const WeightSystem& w, std::int64_t max_degree) {
    if (max_degree < 0) return {};
    std::vector<BigInt> table(static_cast<std::size_t>(max_degree) + 1, BigInt(0));
    table[0] = 1;
    for (auto weight : w.weights())
        for (std::int64_t k = weight; k <= max_degree; ++k) table[k] += table[k - weight];
    return table;
}

/// h^0(P(w), O(k)); zero for k < 0.
inline BigInt count_monomials(const WeightSystem& w, std::int64_t k) {
    if (k < 0) return 0;
    return monomial_counts(w, k).back();
}

/// Series prefix of prod_j (1 - q^{d_j}) / prod_i (1 - q^{w_i}) up to q^N.
/// Throws InconsistentData if a coefficient comes out negative.
inline SeriesPrefix ci_series(const WeightSystem& w, std::span<const std::int64_t> degrees, std::int64_t N) {
    if (N < 0) throw InvalidInput("truncation must be nonnegative");
    if (degrees.empty()) throw InvalidInput("at least one degree is required");
    if (degrees.size() > 20) throw InvalidInput("too many degrees");
    for (auto d : degrees)
        if (d < 1) throw InvalidInput("degrees must be positive, got " + std::to_string(d));

    const auto counts = monomial_counts(w, N);
    SeriesPrefix series;
    series.coefficients.assign(static_cast<std::size_t>(N) + 1, BigInt(0));
    const std::size_t subsets = std::size_t{1} << degrees.size();
    for (std::size_t mask = 0; mask < subsets; ++mask) {
        std::int64_t shift = 0;
        int parity = 0;
        for (std::size_t j = 0; j < degrees.size(); ++j)
            if (mask & (std::size_t{1} << j)) {
                shift += degrees[j];
                parity ^= 1;
            }
        for (std::int64_t k = shift; k <= N; ++k) {
            if (parity)
                series.coefficients[k] -= counts[k - shift];
            else
                series.coefficients[k] += counts[k - shift];
        }
    }
    for (std::int64_t k = 0; k <= N; ++k)
        if (series.coefficients[k] < 0)
            throw InconsistentData("Hilbert series coefficient c_" + std::to_string(k) + " = " +
                                   series.coefficients[k].str() + " is negative; not a graded ring");
    return series;
}

inline SeriesPrefix hypersurface_series(const WeightSystem& w, std::int64_t d, std::int64_t N) {
    const std::int64_t degrees[] = {d};
    return ci_series(w, degrees, N);
}

/// H^3 = d / prod w_i for a 3-fold hypersurface X_d in P(w_0..w_4).
inline Rational degree_volume(const WeightSystem& w, std::int64_t d) {
    if (w.size() != 5)
        throw InvalidInput("degree_volume needs a 3-fold hypersurface: 5 weights, got " + std::to_string(w.size()));
    if (d < 1) throw InvalidInput("degree must be positive");
    return {BigInt(d), w.product()};
}

/// prod d_j / prod w_i for a 3-fold complete intersection.
inline Rational complete_intersection_volume(const WeightSystem& w, std::span<const std::int64_t> degrees) {
    if (w.size() != degrees.size() + 4)
        throw InvalidInput("ambient " + w.str() + " with " + std::to_string(degrees.size()) +
                           " equations is not a 3-fold");
    BigInt num = 1;
    for (auto d : degrees) {
        if (d < 1) throw InvalidInput("degrees must be positive");
        num *= d;
    }
    return {num, w.product()};
}

}  // namespace wpsinv
