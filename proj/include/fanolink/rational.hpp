#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <numeric>
#include <ostream>
#include <string>

#include "fanolink/error.hpp"

namespace fanolink {

/*
 * Exact rational number with 64-bit numerator and denominator.
 *
 * Always stored reduced with a positive denominator. Intermediate products
 * are formed in 128 bits; a result that does not fit back into 64 bits
 * raises InvalidInput rather than wrapping.
 */
class Rational {
public:
    using int_type = std::int64_t;

    constexpr Rational() = default;
    constexpr Rational(int_type n) : num_(n), den_(1) {} // NOLINT: implicit by design of arithmetic types
    Rational(int_type n, int_type d) { assign(n, d); }

    constexpr int_type num() const noexcept { return num_; }
    constexpr int_type den() const noexcept { return den_; }
    constexpr bool is_integer() const noexcept { return den_ == 1; }

    friend Rational operator+(const Rational& a, const Rational& b)
    {
        return make(wide(a.num_) * b.den_ + wide(b.num_) * a.den_, wide(a.den_) * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b)
    {
        return make(wide(a.num_) * b.den_ - wide(b.num_) * a.den_, wide(a.den_) * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b)
    {
        return make(wide(a.num_) * b.num_, wide(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b)
    {
        if (b.num_ == 0) {
            throw Error(ErrorKind::InvalidInput, "rational division by zero");
        }
        return make(wide(a.num_) * b.den_, wide(a.den_) * b.num_);
    }
    Rational operator-() const { return make(-wide(num_), den_); }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        return wide(a.num_) * b.den_ <=> wide(b.num_) * a.den_;
    }

    std::string str() const
    {
        return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

private:
    __extension__ using wide_type = __int128;

    static constexpr wide_type wide(int_type v) { return static_cast<wide_type>(v); }

    static wide_type wide_gcd(wide_type a, wide_type b)
    {
        if (a < 0) a = -a;
        if (b < 0) b = -b;
        while (b != 0) {
            wide_type t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    static Rational make(wide_type n, wide_type d)
    {
        if (d == 0) {
            throw Error(ErrorKind::InvalidInput, "rational with zero denominator");
        }
        if (d < 0) {
            n = -n;
            d = -d;
        }
        const wide_type g = wide_gcd(n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        constexpr wide_type lo = std::numeric_limits<int_type>::min();
        constexpr wide_type hi = std::numeric_limits<int_type>::max();
        if (n < lo || n > hi || d > hi) {
            throw Error(ErrorKind::InvalidInput, "rational overflow");
        }
        Rational q;
        q.num_ = static_cast<int_type>(n);
        q.den_ = static_cast<int_type>(d);
        return q;
    }

    void assign(int_type n, int_type d) { *this = make(wide(n), wide(d)); }

    int_type num_ = 0;
    int_type den_ = 1;
};

} // namespace fanolink
