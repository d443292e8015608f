#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace circroute {

// Raised when inputs violate a documented precondition (bad n, s, d, ...).
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Raised when a proven identity fails at runtime; always indicates a bug.
struct ConsistencyError : std::logic_error {
    using std::logic_error::logic_error;
};

namespace detail {
inline long long narrow_checked(__int128 v) {
    if (v > INT64_MAX || v < INT64_MIN)
        throw std::overflow_error("rational arithmetic overflow");
    return static_cast<long long>(v);
}
}  // namespace detail

// Exact rational on int64 with __int128 intermediates. Denominator is kept
// positive and the fraction reduced. The closed forms in this project only
// ever need denominators {1,2,3,4,6,8,24}, so overflow is checked, not tuned.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long value) : num(value), den(1) {}  // NOLINT(implicit)
    Rational(long long n, long long d) {
        if (d == 0) throw DomainError("rational with zero denominator");
        __int128 nn = n, dd = d;
        if (dd < 0) { nn = -nn; dd = -dd; }
        long long g = std::gcd(detail::narrow_checked(nn < 0 ? -nn : nn),
                               detail::narrow_checked(dd));
        if (g > 1) { nn /= g; dd /= g; }
        num = detail::narrow_checked(nn);
        den = detail::narrow_checked(dd);
    }

    static Rational from_cross(__int128 n, __int128 d) {
        if (d == 0) throw DomainError("rational with zero denominator");
        if (d < 0) { n = -n; d = -d; }
        __int128 a = n < 0 ? -n : n, b = d;
        while (b) { __int128 t = a % b; a = b; b = t; }  // gcd on __int128
        if (a > 1) { n /= a; d /= a; }
        Rational r;
        r.num = detail::narrow_checked(n);
        r.den = detail::narrow_checked(d);
        return r;
    }

    bool is_integer() const { return den == 1; }
    long long as_integer() const {
        if (den != 1) throw ConsistencyError("expected integral value, got " + str());
        return num;
    }
    long long floor() const {
        long long q = num / den;
        if (num % den != 0 && num < 0) --q;
        return q;
    }
    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string str() const {
        return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
    }
};

inline Rational operator+(const Rational& a, const Rational& b) {
    return Rational::from_cross((__int128)a.num * b.den + (__int128)b.num * a.den,
                                (__int128)a.den * b.den);
}
inline Rational operator-(const Rational& a, const Rational& b) {
    return Rational::from_cross((__int128)a.num * b.den - (__int128)b.num * a.den,
                                (__int128)a.den * b.den);
}
inline Rational operator*(const Rational& a, const Rational& b) {
    return Rational::from_cross((__int128)a.num * b.num, (__int128)a.den * b.den);
}
inline Rational operator/(const Rational& a, const Rational& b) {
    if (b.num == 0) throw DomainError("rational division by zero");
    return Rational::from_cross((__int128)a.num * b.den, (__int128)a.den * b.num);
}
inline Rational operator-(const Rational& a) { Rational r; r.num = -a.num; r.den = a.den; return r; }

inline bool operator==(const Rational& a, const Rational& b) { return a.num == b.num && a.den == b.den; }
inline bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
inline bool operator<(const Rational& a, const Rational& b) {
    return (__int128)a.num * b.den < (__int128)b.num * a.den;
}
inline bool operator>(const Rational& a, const Rational& b) { return b < a; }
inline bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
inline bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }
inline Rational min(const Rational& a, const Rational& b) { return a < b ? a : b; }

// floor(sqrt(v)) on integers, exact.
inline long long floor_sqrt(long long v) {
    if (v < 0) throw DomainError("floor_sqrt of negative value");
    long long r = static_cast<long long>(std::sqrt(static_cast<double>(v)));
    while (r > 0 && r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
}

inline bool is_perfect_square(long long v) {
    if (v < 0) return false;
    long long r = floor_sqrt(v);
    return r * r == v;
}

}  // namespace circroute
