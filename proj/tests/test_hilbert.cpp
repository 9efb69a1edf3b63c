#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "wpsinv/hilbert.hpp"
#include "wpsinv/moduli.hpp"

using namespace wpsinv;

TEST(CountMonomials, KnownValues) {
    const WeightSystem w{1, 1, 2, 3, 8};
    EXPECT_EQ(count_monomials(w, 16), 246);
    EXPECT_EQ(count_monomials(w, 8), 42);
    EXPECT_EQ(count_monomials(w, 1), 2);
    EXPECT_EQ(count_monomials(w, 0), 1);
    EXPECT_EQ(count_monomials(w, -3), 0);
    EXPECT_EQ(count_monomials(WeightSystem{1, 1, 1, 2, 6}, 12), 303);
    EXPECT_EQ(count_monomials(WeightSystem{1, 1, 1, 1, 5}, 10), 343);
}

TEST(CountMonomials, MatchesOracleOnRandomSystems) {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<std::int64_t> weight(1, 10);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<std::int64_t> raw(1 + trial % 6);
        for (auto& x : raw) x = weight(rng);
        const auto expected = oracle::enumerate_monomials(raw, 30);
        const auto counts = monomial_counts(WeightSystem(raw), 30);
        for (std::int64_t k = 0; k <= 30; ++k) ASSERT_EQ(counts[k], expected[k]) << WeightSystem(raw).str() << " k=" << k;
    }
}

TEST(CountMonomials, ExceedsSixtyFourBits) {
    // 12 weights of 1 in degree 400: C(411, 11) ~ 5.5e20
    const WeightSystem w(std::vector<std::int64_t>(12, 1));
    const BigInt c = count_monomials(w, 400);
    BigInt binom = 1;
    for (int i = 1; i <= 11; ++i) binom = binom * (400 + i) / i;
    EXPECT_EQ(c, binom);
    EXPECT_GT(c, BigInt(INT64_MAX));
}

TEST(CountMonomials, NondecreasingWithAUnitWeight) {
    std::mt19937 rng(5);
    std::uniform_int_distribution<std::int64_t> weight(1, 9);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<std::int64_t> raw{1};
        for (int i = 0; i < trial % 5; ++i) raw.push_back(weight(rng));
        const auto counts = monomial_counts(WeightSystem(raw), 60);
        for (std::size_t k = 1; k < counts.size(); ++k) ASSERT_GE(counts[k], counts[k - 1]);
    }
}

TEST(HypersurfaceSeries, CatalogPrefixes) {
    const auto x16 = hypersurface_series(WeightSystem{1, 1, 2, 3, 8}, 16, 20);
    EXPECT_EQ(x16[0], 1);
    EXPECT_EQ(x16[1], 2);
    EXPECT_EQ(x16[2], 4);
    EXPECT_EQ(x16[3], 7);
    EXPECT_EQ(x16[4], 11);
    EXPECT_EQ(x16.truncation(), 20);

    const auto x12 = hypersurface_series(WeightSystem{1, 1, 1, 2, 6}, 12, 5);
    EXPECT_EQ(x12[1], 3);
    EXPECT_EQ(x12[2], 7);

    const auto x10 = hypersurface_series(WeightSystem{1, 1, 1, 1, 5}, 10, 10);
    EXPECT_EQ(x10[2], 10);
    EXPECT_EQ(x10[5], 57);
}

TEST(HypersurfaceSeries, CoefficientIdentity) {
    std::mt19937 rng(17);
    std::uniform_int_distribution<std::int64_t> weight(1, 8);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<std::int64_t> raw{1, weight(rng), weight(rng), weight(rng)};
        const WeightSystem w(raw);
        const std::int64_t d = 1 + static_cast<std::int64_t>(rng() % 20);
        const auto s = hypersurface_series(w, d, 40);
        for (std::int64_t k = 0; k <= 40; ++k)
            ASSERT_EQ(s[k], oracle::brute_count(raw, k) - oracle::brute_count(raw, k - d));
    }
}

TEST(HypersurfaceSeries, ConstantTermIsOne) {
    for (std::int64_t d = 1; d < 10; ++d) EXPECT_EQ(hypersurface_series(WeightSystem{1, 2, 3}, d, 0)[0], 1);
}

TEST(HypersurfaceSeries, NegativeCoefficientIsInconsistent) {
    // (1 - q) / (1 - q^2) = 1 - q + q^2 - ...
    EXPECT_THROW(hypersurface_series(WeightSystem{2}, 1, 3), InconsistentData);
}

TEST(CiSeries, TypeTwoCancellation) {
    const WeightSystem ci{1, 1, 1, 1, 2, 5};
    const std::int64_t degrees[] = {2, 10};
    const auto lhs = ci_series(ci, degrees, 64);
    const auto rhs = hypersurface_series(WeightSystem{1, 1, 1, 1, 5}, 10, 64);
    EXPECT_EQ(lhs, rhs);
    EXPECT_EQ(lhs[5], 57);
    EXPECT_EQ(lhs[10], 342);
    const auto short_prefix = ci_series(ci, degrees, 12);
    EXPECT_EQ(short_prefix, hypersurface_series(WeightSystem{1, 1, 1, 1, 5}, 10, 12));
}

TEST(CiSeries, FullCancellation) {
    const std::int64_t degrees[] = {1, 1};
    const auto s = ci_series(WeightSystem{1, 1}, degrees, 10);
    EXPECT_EQ(s[0], 1);
    for (std::int64_t k = 1; k <= 10; ++k) EXPECT_EQ(s[k], 0);
}

TEST(CiSeries, RejectsBadInput) {
    const std::int64_t zero[] = {0, 2};
    EXPECT_THROW(ci_series(WeightSystem{1, 1}, zero, 4), InvalidInput);
    EXPECT_THROW(ci_series(WeightSystem{1, 1}, std::span<const std::int64_t>{}, 4), InvalidInput);
    // (1 - q^2)^3 / (1 - q)^2 = 1 + 2q - 2q^3 - q^4
    const std::int64_t too_many[] = {2, 2, 2};
    EXPECT_THROW(ci_series(WeightSystem{1, 1}, too_many, 4), InconsistentData);
}

TEST(DegreeVolume, CatalogValues) {
    EXPECT_EQ(degree_volume(WeightSystem{1, 1, 2, 3, 8}, 16), Rational(BigInt(1), BigInt(3)));
    EXPECT_EQ(degree_volume(WeightSystem{1, 1, 1, 2, 6}, 12), Rational(1));
    EXPECT_EQ(degree_volume(WeightSystem{1, 1, 1, 1, 5}, 10), Rational(2));
    EXPECT_THROW(degree_volume(WeightSystem{1, 1, 1, 1}, 4), InvalidInput);
    const std::int64_t degrees[] = {2, 10};
    EXPECT_EQ(complete_intersection_volume(WeightSystem{1, 1, 1, 1, 2, 5}, degrees), Rational(2));
}

TEST(DegreeVolume, MatchesClosedFormWhenDegreeIsTwiceTopWeight) {
    std::mt19937 rng(99);
    std::uniform_int_distribution<std::int64_t> a(1, 12);
    int tested = 0;
    while (tested < 500) {
        std::int64_t a1 = a(rng), a2 = a(rng), a3 = a(rng), a4 = a(rng);
        if (!(a1 <= a2 && a2 <= a3 && a3 < a4)) continue;
        ++tested;
        const Rational expected{BigInt(2), BigInt(a1 * a2 * a3)};
        ASSERT_EQ(degree_volume(WeightSystem{1, a1, a2, a3, a4}, 2 * a4), expected);
    }
}

TEST(Moduli, AutDimensions) {
    EXPECT_EQ(aut_dimension(WeightSystem{1, 1, 2, 3, 8}), 56);
    EXPECT_EQ(aut_dimension(WeightSystem{1, 1, 1, 2, 6}), 66);
    EXPECT_EQ(aut_dimension(WeightSystem{1, 1, 1, 1, 5}), 72);
    EXPECT_EQ(aut_dimension(WeightSystem{1, 1}), 3);
}

TEST(Moduli, ModuliDimensions) {
    EXPECT_EQ(moduli_dimension(WeightSystem{1, 1, 2, 3, 8}, 16), 189);
    EXPECT_EQ(moduli_dimension(WeightSystem{1, 1, 1, 2, 6}, 12), 236);
    EXPECT_EQ(moduli_dimension(WeightSystem{1, 1, 1, 1, 5}, 10), 270);
    EXPECT_THROW(moduli_dimension(WeightSystem{1, 1}, 0), InvalidInput);
}

TEST(Moduli, ProjectiveLinearGroup) {
    for (std::int64_t n = 1; n <= 8; ++n) {
        const WeightSystem pn(std::vector<std::int64_t>(n + 1, 1));
        EXPECT_EQ(aut_dimension(pn), (n + 1) * (n + 1) - 1);
        EXPECT_FALSE(formula_extrapolated(pn));
    }
}

TEST(Moduli, PermutationInvariant) {
    EXPECT_EQ(aut_dimension(WeightSystem{8, 3, 1, 2, 1}), aut_dimension(WeightSystem{1, 1, 2, 3, 8}));
}

TEST(Moduli, ExtrapolationFlag) {
    EXPECT_FALSE(formula_extrapolated(WeightSystem{1, 1, 2, 3, 8}));
    EXPECT_FALSE(formula_extrapolated(WeightSystem{1, 1, 1, 2, 6}));
    EXPECT_FALSE(formula_extrapolated(WeightSystem{1, 1, 1, 1, 5}));
    EXPECT_TRUE(formula_extrapolated(WeightSystem{1, 1, 1, 2, 2}));
}
