#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "pdtest/errors.hpp"

namespace pdtest {

namespace detail {

using int128 = __int128;
using uint128 = unsigned __int128;

inline uint128 abs128(int128 v) {
    return v < 0 ? uint128(0) - uint128(v) : uint128(v);
}

inline uint128 gcd128(uint128 a, uint128 b) {
    while (b != 0) {
        const uint128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace detail

// Exact rational with 64-bit numerator and denominator, always normalized:
// gcd(num, den) = 1 and den > 0. All operations run through 128-bit
// intermediates and throw OverflowError if a reduced result does not fit.
class Rational {
  public:
    constexpr Rational() : num_(0), den_(1) {}
    constexpr Rational(std::int64_t n) : num_(n), den_(1) {}  // NOLINT: implicit on purpose

    Rational(std::int64_t n, std::int64_t d) : Rational(make(detail::int128(n), detail::int128(d))) {}

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_integer() const { return den_ == 1; }

    std::int64_t to_int64() const {
        if (den_ != 1) throw Error("rational " + to_string() + " is not an integer");
        return num_;
    }

    // Accepts "p" or "p/q" with q > 0, optional leading +/- on p only.
    static Rational parse(std::string_view text);

    std::string to_string() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        using detail::int128;
        return make(int128(a.num_) * b.den_ + int128(b.num_) * a.den_, int128(a.den_) * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        using detail::int128;
        return make(int128(a.num_) * b.den_ - int128(b.num_) * a.den_, int128(a.den_) * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        using detail::int128;
        return make(int128(a.num_) * b.num_, int128(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw Error("rational division by zero");
        using detail::int128;
        return make(int128(a.num_) * b.den_, int128(a.den_) * b.num_);
    }

    Rational operator-() const {
        Rational r;
        r.num_ = checked_neg64(num_);
        r.den_ = den_;
        return r;
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator<(const Rational& a, const Rational& b) {
        using detail::int128;
        return int128(a.num_) * b.den_ < int128(b.num_) * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }

  private:
    static std::int64_t checked_neg64(std::int64_t v) {
        std::int64_t r;
        if (__builtin_sub_overflow(std::int64_t(0), v, &r)) throw OverflowError("rational overflow");
        return r;
    }

    static Rational make(detail::int128 num, detail::int128 den) {
        using detail::abs128;
        using detail::gcd128;
        using detail::uint128;
        if (den == 0) throw Error("rational with zero denominator");
        Rational r;
        if (num == 0) return r;
        const bool neg = (num < 0) != (den < 0);
        uint128 un = abs128(num);
        uint128 ud = abs128(den);
        const uint128 g = gcd128(un, ud);
        un /= g;
        ud /= g;
        constexpr uint128 kMax = uint128(INT64_MAX);
        if (un > kMax || ud > kMax) throw OverflowError("rational magnitude exceeds 64 bits");
        r.num_ = neg ? -std::int64_t(un) : std::int64_t(un);
        r.den_ = std::int64_t(ud);
        return r;
    }

    std::int64_t num_;
    std::int64_t den_;
};

}  // namespace pdtest
