#pragma once

#include <cstdint>
#include <ostream>
#include <string>

#include "ricci/error.hpp"

namespace ricci {

namespace detail {

using int128 = __int128;
using uint128 = unsigned __int128;

inline uint128 uabs128(int128 v) { return v < 0 ? -static_cast<uint128>(v) : static_cast<uint128>(v); }

inline uint128 gcd128(uint128 a, uint128 b)
{
    while (b != 0) {
        uint128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline std::int64_t narrow128(int128 v)
{
    if (v > static_cast<int128>(INT64_MAX) || v < static_cast<int128>(INT64_MIN))
        fail(errc::arithmetic_overflow, "rational arithmetic overflowed 64-bit storage");
    return static_cast<std::int64_t>(v);
}

} // namespace detail

/// Exact fraction with canonical representation: den > 0, gcd(|num|, den) = 1,
/// zero stored as 0/1. Intermediates run in 128 bits; results that do not fit
/// 64 bits raise errc::arithmetic_overflow instead of wrapping.
class Rational {
public:
    constexpr Rational() = default;
    Rational(std::int64_t value) : num_(value) {} // NOLINT(google-explicit-constructor)

    Rational(std::int64_t num, std::int64_t den)
    {
        if (den == 0) fail(errc::division_by_zero, "rational with zero denominator");
        *this = make(num, den);
    }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ > 0 ? 1 : num_ < 0 ? -1 : 0; }

    friend Rational operator+(const Rational& a, const Rational& b)
    {
        detail::int128 num = static_cast<detail::int128>(a.num_) * b.den_ +
                             static_cast<detail::int128>(b.num_) * a.den_;
        detail::int128 den = static_cast<detail::int128>(a.den_) * b.den_;
        return make128(num, den);
    }

    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

    Rational operator-() const
    {
        Rational r;
        r.num_ = detail::narrow128(-static_cast<detail::int128>(num_));
        r.den_ = den_;
        return r;
    }

    friend Rational operator*(const Rational& a, const Rational& b)
    {
        detail::int128 num = static_cast<detail::int128>(a.num_) * b.num_;
        detail::int128 den = static_cast<detail::int128>(a.den_) * b.den_;
        return make128(num, den);
    }

    friend Rational operator/(const Rational& a, const Rational& b)
    {
        if (b.num_ == 0) fail(errc::division_by_zero, "rational division by zero");
        detail::int128 num = static_cast<detail::int128>(a.num_) * b.den_;
        detail::int128 den = static_cast<detail::int128>(a.den_) * b.num_;
        return make128(num, den);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b)
    {
        return a.num_ == b.num_ && a.den_ == b.den_; // canonical form makes this exact
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }

    friend bool operator<(const Rational& a, const Rational& b)
    {
        return static_cast<detail::int128>(a.num_) * b.den_ <
               static_cast<detail::int128>(b.num_) * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    std::string str() const
    {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    /// Parses "p", "p/q" or "-p/q". Whitespace is not accepted.
    static Rational parse(const std::string& text)
    {
        std::size_t slash = text.find('/');
        try {
            if (slash == std::string::npos) return Rational(std::stoll(text));
            std::int64_t num = std::stoll(text.substr(0, slash));
            std::int64_t den = std::stoll(text.substr(slash + 1));
            return Rational(num, den);
        } catch (const std::logic_error&) {
            fail(errc::invalid_params, "cannot parse rational from '" + text + "'");
        }
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    static Rational make(std::int64_t num, std::int64_t den)
    {
        return make128(num, den);
    }

    static Rational make128(detail::int128 num, detail::int128 den)
    {
        if (den == 0) fail(errc::division_by_zero, "rational with zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        detail::uint128 g = detail::gcd128(detail::uabs128(num), static_cast<detail::uint128>(den));
        if (g > 1) {
            num /= static_cast<detail::int128>(g);
            den /= static_cast<detail::int128>(g);
        }
        Rational r;
        r.num_ = detail::narrow128(num);
        r.den_ = detail::narrow128(den);
        return r;
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

} // namespace ricci
