#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <numeric>
#include <string>
#include <string_view>

#include "circhi/error.hpp"

namespace circhi {

namespace detail {

inline long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("rational addition overflow");
    return r;
}

inline long long checked_sub(long long a, long long b) {
    long long r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("rational subtraction overflow");
    return r;
}

inline long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("rational multiplication overflow");
    return r;
}

inline long long checked_neg(long long a) {
    return checked_sub(0, a);
}

}  // namespace detail

// Exact fraction on checked 64-bit integers: always reduced, denominator > 0,
// arithmetic throws OverflowError rather than wrapping.
class Rational {
  public:
    Rational() = default;
    Rational(long long value) : num_(value) {}  // NOLINT: implicit by design
    Rational(long long num, long long den) : num_(num), den_(den) { normalize(); }

    long long num() const { return num_; }
    long long den() const { return den_; }
    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    // Accepts "7", "-7", "3/4".
    static Rational parse(std::string_view text);

    std::string str() const;

    friend Rational operator+(const Rational& a, const Rational& b) {
        long long g = std::gcd(a.den_, b.den_);
        long long bd = b.den_ / g;
        long long num = detail::checked_add(detail::checked_mul(a.num_, bd),
                                            detail::checked_mul(b.num_, a.den_ / g));
        return Rational(num, detail::checked_mul(a.den_, bd));
    }

    friend Rational operator-(const Rational& a, const Rational& b) {
        long long g = std::gcd(a.den_, b.den_);
        long long bd = b.den_ / g;
        long long num = detail::checked_sub(detail::checked_mul(a.num_, bd),
                                            detail::checked_mul(b.num_, a.den_ / g));
        return Rational(num, detail::checked_mul(a.den_, bd));
    }

    friend Rational operator*(const Rational& a, const Rational& b) {
        long long g1 = std::gcd(std::abs(a.num_), b.den_);
        long long g2 = std::gcd(std::abs(b.num_), a.den_);
        Rational r;
        r.num_ = detail::checked_mul(a.num_ / g1, b.num_ / g2);
        r.den_ = detail::checked_mul(a.den_ / g2, b.den_ / g1);
        return r;
    }

    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw DomainError("rational division by zero");
        return a * Rational(b.den_, b.num_);
    }

    Rational operator-() const {
        Rational r;
        r.num_ = detail::checked_neg(num_);
        r.den_ = den_;
        return r;
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) = default;

    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        // Cross products of 64-bit values cannot overflow in 128 bits.
        __int128 l = static_cast<__int128>(a.num_) * b.den_;
        __int128 r = static_cast<__int128>(b.num_) * a.den_;
        if (l < r) return std::strong_ordering::less;
        if (l > r) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

  private:
    void normalize();

    long long num_ = 0;
    long long den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// value mod modulus, in [0, modulus); modulus must be positive.
Rational rational_mod(const Rational& value, const Rational& modulus);

namespace detail {

inline long long checked_lcm(long long a, long long b) {
    long long g = std::gcd(a, b);
    return checked_mul(a / g, b);
}

}  // namespace detail

}  // namespace circhi
