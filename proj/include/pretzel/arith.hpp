#pragma once

#include <cstdint>
#include <string>

#include "pretzel/errors.hpp"

namespace pretzel {

using int128 = __int128;

// Sign in {-1, 0, 1}.
inline int sign3(int128 m) { return m > 0 ? 1 : (m < 0 ? -1 : 0); }

inline int128 checked_add(int128 a, int128 b) {
    int128 r;
    if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow("integer addition overflow");
    return r;
}

inline int128 checked_mul(int128 a, int128 b) {
    int128 r;
    if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow("integer multiplication overflow");
    return r;
}

inline long long checked_narrow(int128 v, const char* what = "value") {
    if (v > int128(INT64_MAX) || v < int128(INT64_MIN))
        throw ArithmeticOverflow(std::string(what) + " does not fit in 64 bits");
    return static_cast<long long>(v);
}

// Floor division (round toward -infinity) for any sign combination.
// Load-bearing for the Delta formulas: floor(n/q) with q < 0 is -ceil(n/|q|).
inline int128 floor_div(int128 num, int128 den) {
    if (den == 0) throw std::invalid_argument("floor_div: zero denominator");
    int128 q = num / den;
    int128 r = num % den;
    if (r != 0 && ((r < 0) != (den < 0))) --q;
    return q;
}

inline int128 abs128(int128 v) { return v < 0 ? -v : v; }

inline int128 gcd128(int128 a, int128 b) {
    a = abs128(a);
    b = abs128(b);
    while (b != 0) {
        int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline int128 lcm128(int128 a, int128 b) {
    if (a == 0 || b == 0) return 0;
    int128 g = gcd128(a, b);
    return checked_mul(abs128(a) / g, abs128(b));
}

std::string to_string_128(int128 v);

// Exact rational with reduced representation, den > 0. All operations are
// overflow-checked; violations throw instead of wrapping.
struct Rational {
    int128 num = 0;
    int128 den = 1;

    static Rational of(int128 n, int128 d) {
        if (d == 0) throw std::invalid_argument("Rational: zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        int128 g = gcd128(n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        return Rational{n, d};
    }

    static Rational of(int128 n) { return Rational{n, 1}; }

    int sign() const { return sign3(num); }
    bool is_zero() const { return num == 0; }
    bool is_integer() const { return den == 1; }

    Rational operator+(const Rational& o) const {
        return of(checked_add(checked_mul(num, o.den), checked_mul(o.num, den)),
                  checked_mul(den, o.den));
    }
    Rational operator-(const Rational& o) const {
        return of(checked_add(checked_mul(num, o.den), -checked_mul(o.num, den)),
                  checked_mul(den, o.den));
    }
    Rational operator*(const Rational& o) const {
        return of(checked_mul(num, o.num), checked_mul(den, o.den));
    }
    Rational operator/(const Rational& o) const {
        if (o.num == 0) throw std::invalid_argument("Rational: division by zero");
        return of(checked_mul(num, o.den), checked_mul(den, o.num));
    }
    Rational operator-() const { return Rational{-num, den}; }

    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
    bool operator!=(const Rational& o) const { return !(*this == o); }

    std::string str() const;
};

} // namespace pretzel
