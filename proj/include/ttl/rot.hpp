#pragma once

#include "ttl/numbers.hpp"

#include <string>

namespace ttl {

// An exact root of unity e^{2*pi*i*num/den}, stored as num/den in Q/Z.
// Reduced form: 0 <= num < den, gcd(num, den) = 1. Group law is addition mod 1.
// Signs live at {0, 1/2}, fourth roots at {0, 1/4, 1/2, 3/4}.
struct Rot {
    i64 num = 0;
    i64 den = 1;

    Rot() = default;
    Rot(i64 n, i64 d) { *this = reduced(n, d); }

    static Rot one() { return Rot(); }

    static Rot reduced(i64 n, i64 d) {
        require(d >= 1, "Rot: denominator must be positive");
        n %= d;
        if (n < 0) n += d;
        i64 g = gcd_i64(n, d);
        Rot r;
        r.num = n / g;
        r.den = d / g;
        return r;
    }

    static Rot from_sign(int s) {
        require(s == 1 || s == -1, "Rot::from_sign: expected +1 or -1");
        return s == 1 ? Rot() : Rot(1, 2);
    }

    bool is_one() const { return num == 0; }
    bool is_sign() const { return num == 0 || (den == 2); }

    int as_sign() const {
        require(is_sign(), "Rot::as_sign: value is not +-1");
        return num == 0 ? 1 : -1;
    }

    // multiplicative order as a root of unity
    i64 order() const { return den; }

    friend Rot operator+(Rot a, Rot b) {
        i64 d = lcm_i64(a.den, b.den);
        i128 n = (i128)a.num * (d / a.den) + (i128)b.num * (d / b.den);
        return reduced((i64)(n % d), d);
    }
    friend Rot operator-(Rot a, Rot b) { return a + (-b); }
    Rot operator-() const { return reduced(den - num, den); }

    // k-th power of the root of unity
    friend Rot operator*(i64 k, Rot a) {
        i64 kk = k % a.den;
        if (kk < 0) kk += a.den;
        return reduced((i64)(((i128)kk * a.num) % a.den), a.den);
    }

    Rot conj() const { return -*this; }

    friend bool operator==(const Rot&, const Rot&) = default;

    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

} // namespace ttl
