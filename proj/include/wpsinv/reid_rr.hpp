/**
 * @file reid_rr.hpp
 * @brief Reid's orbifold Riemann-Roch for multiples of K on a terminal 3-fold.
 *
 *   chi(O_X(mK)) = m(m-1)(2m-1)/12 * K^3 - (2m-1) chi(O_X) + l(m)
 *   l(m) = sum_i sum_{j=1}^{m-1} jb_i' (r_i - jb_i') / (2 r_i),  jb_i' = j*b_i mod r_i
 *
 * For a minimal 3-fold of general type and m >= 2, Kawamata-Viehweg vanishing
 * gives P_m = chi(mK). P_1 = p_g is not covered and is always taken from data.
 */
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "wpsinv/core.hpp"

namespace wpsinv {

inline constexpr std::int64_t kDefaultMaxPlurigenus = 50;

/// Contribution of a single orbifold point to l(m).
inline Rational l_term(const BasketEntry& e, std::int64_t m) {
    if (m < 1) throw InvalidInput("l(m) needs m >= 1");
    BigInt sum = 0;
    for (std::int64_t j = 1; j < m; ++j) {
        const std::int64_t res = (j % e.r()) * e.b() % e.r();
        sum += BigInt(res) * (e.r() - res);
    }
    return {sum, BigInt(2 * e.r())};
}

inline Rational l_term(const Basket& basket, std::int64_t m) {
    if (m < 1) throw InvalidInput("l(m) needs m >= 1");
    Rational total;
    for (const auto& item : basket.items()) total += Rational(item.mult) * l_term(item.entry, m);
    return total;
}

inline Rational chi_mK(const NumericalData& data, const Basket& basket, std::int64_t m) {
    if (m < 1) throw InvalidInput("chi(mK) needs m >= 1");
    const Rational cubic{BigInt(m) * (m - 1) * (2 * m - 1), BigInt(12)};
    return cubic * data.k3 - Rational((2 * m - 1) * data.chi) + l_term(basket, m);
}

/// P_m for m >= 2. Throws IntegralityError unless chi(mK) is a nonnegative integer.
inline BigInt plurigenus(const NumericalData& data, const Basket& basket, std::int64_t m) {
    if (m < 2) throw InvalidInput("plurigenus via Riemann-Roch needs m >= 2; P_1 = p_g is an input");
    const Rational value = chi_mK(data, basket, m);
    if (!value.is_integer() || value.sign() < 0) throw IntegralityError(m, value.str());
    return value.num();
}

struct PlurigenusTable {
    NumericalData data;
    Basket basket;
    std::vector<std::pair<std::int64_t, BigInt>> values;  // (m, P_m), m = 2, 3, ...
    std::int64_t p1 = 0;

    /// P_m for 1 <= m <= m_max.
    BigInt at(std::int64_t m) const {
        if (m == 1) return p1;
        for (const auto& [mm, p] : values)
            if (mm == m) return p;
        throw InvalidInput("P_" + std::to_string(m) + " not in table");
    }
    std::int64_t m_max() const { return values.empty() ? 1 : values.back().first; }
};

inline PlurigenusTable plurigenus_table(const NumericalData& data, const Basket& basket,
                                        std::int64_t m_max = kDefaultMaxPlurigenus) {
    if (m_max < 2) throw InvalidInput("m_max must be at least 2");
    PlurigenusTable table{data, basket, {}, data.pg};
    table.values.reserve(static_cast<std::size_t>(m_max - 1));
    for (std::int64_t m = 2; m <= m_max; ++m) table.values.emplace_back(m, plurigenus(data, basket, m));
    return table;
}

}  // namespace wpsinv
