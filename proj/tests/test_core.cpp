#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "wpsinv/core.hpp"

using namespace wpsinv;

namespace {

Rational q(std::int64_t n, std::int64_t d) { return {BigInt(n), BigInt(d)}; }

}  // namespace

TEST(Rational, StaysReduced) {
    const Rational r = q(10, -4);
    EXPECT_EQ(r.num(), -5);
    EXPECT_EQ(r.den(), 2);
    EXPECT_EQ(q(0, -7), Rational(0));
    EXPECT_EQ(q(0, -7).den(), 1);
    EXPECT_THROW(q(1, 0), InvalidInput);
}

TEST(Rational, Arithmetic) {
    EXPECT_EQ(q(1, 6) + q(1, 3), q(1, 2));
    EXPECT_EQ(q(1, 4) - q(1, 3), q(-1, 12));
    EXPECT_EQ(q(2, 3) * q(9, 4), q(3, 2));
    EXPECT_EQ(q(2, 3) / q(4, 9), q(3, 2));
    EXPECT_THROW(q(2, 3) / Rational(0), InvalidInput);
    EXPECT_EQ(-q(5, 6), q(-5, 6));
    EXPECT_LT(q(52, 15), q(7, 2));
    EXPECT_GT(q(52, 15), q(10, 3));
}

TEST(Rational, FloorCeilAtBoundaries) {
    EXPECT_EQ(q(40, 3).ceil(), 14);
    EXPECT_EQ(q(39, 3).ceil(), 13);
    EXPECT_EQ(q(-5, 3).floor(), -2);
    EXPECT_EQ(q(-5, 3).ceil(), -1);
    EXPECT_EQ(q(-6, 3).floor(), -2);
    EXPECT_EQ(q(7, 2).floor(), 3);
    EXPECT_EQ(Rational(4).floor(), 4);
    EXPECT_EQ(Rational(4).ceil(), 4);
}

TEST(Rational, ParseAndRender) {
    EXPECT_EQ(Rational::parse("1/3"), q(1, 3));
    EXPECT_EQ(Rational::parse("-2"), Rational(-2));
    EXPECT_EQ(Rational::parse("6/4").str(), "3/2");
    EXPECT_EQ(Rational::parse("-6/4").str(), "-3/2");
    EXPECT_EQ(Rational(7).str(), "7");
    EXPECT_THROW(Rational::parse("1/0"), InvalidInput);
    EXPECT_THROW(Rational::parse("1/-3"), InvalidInput);
    EXPECT_THROW(Rational::parse("x"), InvalidInput);
    EXPECT_THROW(Rational::parse(""), InvalidInput);
    EXPECT_THROW(Rational::parse("1.5"), InvalidInput);
}

TEST(Rational, RenderParseRoundTripProperty) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::int64_t> num(-1'000'000, 1'000'000);
    std::uniform_int_distribution<std::int64_t> den(1, 1'000'000);
    for (int i = 0; i < 2000; ++i) {
        const Rational x = q(num(rng), den(rng));
        EXPECT_EQ(Rational::parse(x.str()), x);
    }
    const Rational huge{BigInt("123456789012345678901234567890"), BigInt("7")};
    EXPECT_EQ(Rational::parse(huge.str()), huge);
}

TEST(WeightSystem, NormalizesOrder) {
    const WeightSystem w{8, 1, 3, 2, 1};
    EXPECT_EQ(w.str(), "(1,1,2,3,8)");
    EXPECT_EQ(w.largest(), 8);
    EXPECT_EQ(w.product(), 48);
    EXPECT_EQ(WeightSystem::parse("1, 1,2,3,8"), w);
    EXPECT_THROW(WeightSystem(std::vector<std::int64_t>{}), InvalidInput);
    EXPECT_THROW(WeightSystem({1, 0, 2}), InvalidInput);
    EXPECT_THROW(WeightSystem::parse("1,-2"), InvalidInput);
}

TEST(WeightSystem, NormalizationIdempotentAndOrderInsensitive) {
    std::mt19937 rng(11);
    std::uniform_int_distribution<std::int64_t> weight(1, 12);
    for (int i = 0; i < 300; ++i) {
        std::vector<std::int64_t> raw(1 + i % 6);
        for (auto& x : raw) x = weight(rng);
        const WeightSystem w(raw);
        std::vector<std::int64_t> again(w.weights().begin(), w.weights().end());
        EXPECT_EQ(WeightSystem(again), w);
        std::shuffle(raw.begin(), raw.end(), rng);
        EXPECT_EQ(WeightSystem(raw), w);
    }
}

TEST(Basket, NormalizesProposedBasket) {
    const std::vector<BasketTerm> raw{{1, 1, 2}, {1, 1, 3}, {1, 1, 2}};
    const Basket b = normalize_basket(raw);
    ASSERT_EQ(b.items().size(), 2u);
    EXPECT_EQ(b.items()[0].entry, BasketEntry(1, 2));
    EXPECT_EQ(b.items()[0].mult, 2);
    EXPECT_EQ(b.items()[1].entry, BasketEntry(1, 3));
    EXPECT_EQ(b.items()[1].mult, 1);
    EXPECT_EQ(b.str(), "{2×(1,2), (1,3)}");
    EXPECT_EQ(b.spec_str(), "2x1/2,1x1/3");
}

TEST(Basket, EmptyIsGorenstein) {
    const Basket b = normalize_basket(std::vector<BasketTerm>{});
    EXPECT_TRUE(b.empty());
    EXPECT_EQ(b.str(), "{}");
    EXPECT_EQ(parse_basket(""), b);
}

TEST(Basket, RejectsMalformedEntries) {
    EXPECT_THROW(normalize_basket(std::vector<BasketTerm>{{1, 2, 3}}), InvalidInput);  // b > r/2, not reflected
    EXPECT_THROW(normalize_basket(std::vector<BasketTerm>{{1, 0, 3}}), InvalidInput);
    EXPECT_THROW(normalize_basket(std::vector<BasketTerm>{{1, -1, 3}}), InvalidInput);
    EXPECT_THROW(normalize_basket(std::vector<BasketTerm>{{1, 2, 4}}), InvalidInput);  // gcd 2
    EXPECT_THROW(normalize_basket(std::vector<BasketTerm>{{0, 1, 2}}), InvalidInput);
    EXPECT_THROW(BasketEntry(1, 1), InvalidInput);
    EXPECT_NO_THROW(BasketEntry(2, 5));
    EXPECT_NO_THROW(BasketEntry(3, 7));
}

TEST(Basket, ParsesCommandLineForm) {
    EXPECT_EQ(parse_basket("2x1/2,1x1/3"), normalize_basket(std::vector<BasketTerm>{{2, 1, 2}, {1, 1, 3}}));
    EXPECT_EQ(parse_basket("1/3, 1/2, 1/2"), parse_basket("2x1/2,1x1/3"));
    EXPECT_THROW(parse_basket("2x2/3"), InvalidInput);
    EXPECT_THROW(parse_basket("2x3"), InvalidInput);
}

TEST(Basket, NormalizeIdempotentAndPermutationInvariant) {
    const std::pair<std::int64_t, std::int64_t> types[] = {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 5}, {3, 7}, {2, 9}};
    std::mt19937 rng(3);
    for (int i = 0; i < 300; ++i) {
        std::vector<BasketTerm> raw;
        const int n = static_cast<int>(rng() % 8);
        for (int k = 0; k < n; ++k) {
            const auto& [b, r] = types[rng() % std::size(types)];
            raw.push_back({1 + static_cast<std::int64_t>(rng() % 3), b, r});
        }
        const Basket basket = normalize_basket(raw);
        EXPECT_EQ(normalize_basket(basket.to_terms()), basket);
        std::shuffle(raw.begin(), raw.end(), rng);
        EXPECT_EQ(normalize_basket(raw), basket);
        EXPECT_TRUE(std::is_sorted(basket.items().begin(), basket.items().end(),
                                   [](const auto& x, const auto& y) { return x.entry < y.entry; }));
    }
}

TEST(NumericalData, RequiresPositiveVolume) {
    EXPECT_THROW(NumericalData(Rational(0), -1, 2), InvalidInput);
    EXPECT_THROW(NumericalData(q(-1, 3), -1, 2), InvalidInput);
    EXPECT_THROW(NumericalData(q(1, 3), -1, -1), InvalidInput);
    EXPECT_NO_THROW(NumericalData(q(1, 3), -1, 2));
}
