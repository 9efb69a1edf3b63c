/**
 * @file rational.hpp
 * @brief Exact rational numbers over arbitrary-precision integers.
 *
 * Values are kept fully reduced with a strictly positive denominator, so
 * equality is structural. Text form is "p/q", or "p" when q = 1.
 */
#pragma once

#include <compare>
#include <ostream>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "wpsinv/errors.hpp"

namespace wpsinv {

using BigInt = boost::multiprecision::cpp_int;

/// Floor division for d > 0.
inline BigInt floor_div(const BigInt& n, const BigInt& d) {
    BigInt q = n / d;
    if (n % d != 0 && n < 0) --q;
    return q;
}

inline BigInt parse_bigint(std::string_view text) {
    std::string_view digits = text;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
    if (digits.empty()) throw InvalidInput("expected an integer, got '" + std::string(text) + "'");
    for (char c : digits)
        if (c < '0' || c > '9') throw InvalidInput("expected an integer, got '" + std::string(text) + "'");
    BigInt v{std::string(digits)};
    return text.front() == '-' ? BigInt(-v) : v;
}

/// Converts to int64, throwing when the value does not fit.
inline std::int64_t to_int64(const BigInt& v) {
    if (v > BigInt(INT64_MAX) || v < BigInt(INT64_MIN))
        throw InconsistentData("integer " + v.str() + " exceeds the 64-bit range");
    return v.convert_to<std::int64_t>();
}

class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(std::int64_t v) : num_(v), den_(1) {}  // NOLINT(google-explicit-constructor)
    Rational(BigInt v) : num_(std::move(v)), den_(1) {}  // NOLINT(google-explicit-constructor)
    Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_ == 0) throw InvalidInput("rational with zero denominator");
        canonicalize();
    }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_.sign(); }

    BigInt floor() const { return floor_div(num_, den_); }
    BigInt ceil() const { return -floor_div(-num_, den_); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return {a.num_ * b.num_, a.den_ * b.den_};
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw InvalidInput("division by zero");
        return {a.num_ * b.den_, a.den_ * b.num_};
    }
    Rational operator-() const {
        Rational r = *this;
        r.num_ = -r.num_;
        return r;
    }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const BigInt lhs = a.num_ * b.den_;
        const BigInt rhs = b.num_ * a.den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    std::string str() const { return den_ == 1 ? num_.str() : num_.str() + "/" + den_.str(); }

    /// Accepts "p", "-p", "p/q"; q must be nonzero. The result is reduced.
    static Rational parse(std::string_view text) {
        const auto slash = text.find('/');
        if (slash == std::string_view::npos) return Rational(parse_bigint(text));
        const std::string_view den = text.substr(slash + 1);
        if (!den.empty() && (den.front() == '-' || den.front() == '+'))
            throw InvalidInput("denominator must be unsigned in '" + std::string(text) + "'");
        return {parse_bigint(text.substr(0, slash)), parse_bigint(den)};
    }

private:
    void canonicalize() {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        const BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    BigInt num_;
    BigInt den_;  // always > 0
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace wpsinv
