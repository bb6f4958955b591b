#include "ttl/numbers.hpp"

#include <algorithm>

namespace ttl {

i64 gcd_i64(i64 a, i64 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        i64 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

i64 lcm_i64(i64 a, i64 b) {
    require(a > 0 && b > 0, "lcm of nonpositive values");
    i64 g = gcd_i64(a, b);
    i128 l = (i128)(a / g) * b;
    require(l <= (i128)INT64_MAX, "lcm overflow");
    return (i64)l;
}

i64 mulmod(i64 a, i64 b, i64 n) {
    require(n > 0, "mulmod: modulus must be positive");
    a %= n;
    if (a < 0) a += n;
    b %= n;
    if (b < 0) b += n;
    return (i64)((i128)a * b % n);
}

i64 powmod(i64 a, i64 k, i64 n) {
    require(k >= 0, "powmod: negative exponent");
    require(n > 0, "powmod: modulus must be positive");
    if (n == 1) return 0;
    i64 r = 1;
    a %= n;
    if (a < 0) a += n;
    while (k) {
        if (k & 1) r = mulmod(r, a, n);
        a = mulmod(a, a, n);
        k >>= 1;
    }
    return r;
}

i64 ipow_checked(i64 a, i64 k) {
    require(a >= 0 && k >= 0, "ipow: negative input");
    i128 r = 1;
    for (i64 i = 0; i < k; ++i) {
        r *= a;
        require(r <= (i128)INT64_MAX, "ipow overflow");
    }
    return (i64)r;
}

int v2(i64 n) {
    require(n != 0, "v2(0)");
    if (n < 0) n = -n;
    int v = 0;
    while ((n & 1) == 0) {
        n >>= 1;
        ++v;
    }
    return v;
}

int v2_pow_minus_one(i64 q, i64 n) {
    require(q >= 3 && (q & 1) && n >= 1, "v2_pow_minus_one: need odd q >= 3, n >= 1");
    if (n & 1) return v2(q - 1);
    return v2(q - 1) + v2(q + 1) + v2(n) - 1;
}

i64 solve_linear_mod(i64 a, i64 c, i64 n) {
    require(n >= 1, "solve_linear_mod: modulus");
    a %= n;
    if (a < 0) a += n;
    c %= n;
    if (c < 0) c += n;
    if (n == 1) return 0;
    i64 g = gcd_i64(a, n);
    require(c % g == 0, "solve_linear_mod: no solution");
    i64 a1 = a / g, c1 = c / g, n1 = n / g;
    // inverse of a1 mod n1 by extended Euclid
    i64 r0 = a1, r1 = n1, s0 = 1, s1 = 0;
    while (r1) {
        i64 qt = r0 / r1;
        i64 r2 = r0 - qt * r1;
        i64 s2 = s0 - qt * s1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
    }
    i64 inv = s0 % n1;
    if (inv < 0) inv += n1;
    return mulmod(inv, c1, n1);
}

namespace {

// primes below 2^19, enough to factor anything under 2^38 by trial division plus
// at most one leftover prime; the ambient moduli here stay under 2^38
const std::vector<i64>& small_primes() {
    static const std::vector<i64> primes = [] {
        const i64 limit = 1 << 19;
        std::vector<char> comp((size_t)limit, 0);
        std::vector<i64> ps;
        for (i64 i = 2; i < limit; ++i) {
            if (comp[(size_t)i]) continue;
            ps.push_back(i);
            for (i64 j = i * i; j < limit; j += i) comp[(size_t)j] = 1;
        }
        return ps;
    }();
    return primes;
}

} // namespace

std::vector<std::pair<i64, int>> factorize(i64 n) {
    require(n >= 1, "factorize: n >= 1");
    std::vector<std::pair<i64, int>> fs;
    for (i64 d : small_primes()) {
        if ((i128)d * d > n) break;
        if (n % d == 0) {
            int k = 0;
            while (n % d == 0) {
                n /= d;
                ++k;
            }
            fs.push_back({d, k});
        }
    }
    if (n > 1) {
        // no factor below 2^19 survived, so n is prime whenever n < 2^38
        require(n < (1LL << 38), "factorize: input out of supported range");
        fs.push_back({n, 1});
    }
    return fs;
}

std::vector<i64> divisors(i64 n) {
    auto fs = factorize(n);
    std::vector<i64> ds{1};
    for (auto [p, k] : fs) {
        size_t sz = ds.size();
        i64 pe = 1;
        for (int j = 1; j <= k; ++j) {
            pe *= p;
            for (size_t t = 0; t < sz; ++t) ds.push_back(ds[t] * pe);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

i64 euler_phi(i64 n) {
    i64 r = n;
    for (auto [p, k] : factorize(n)) r = r / p * (p - 1);
    return r;
}

i64 mult_order(i64 a, i64 n) {
    require(n >= 1, "mult_order: modulus");
    if (n == 1) return 1;
    a %= n;
    if (a < 0) a += n;
    require(gcd_i64(a, n) == 1, "not a unit");
    i64 ord = euler_phi(n);
    for (auto [p, k] : factorize(ord)) {
        (void)k;
        while (ord % p == 0 && powmod(a, ord / p, n) == 1) ord /= p;
    }
    return ord;
}

int jacobi_symbol(i64 a, i64 n) {
    require(n >= 1 && (n & 1), "jacobi: modulus must be odd positive");
    a %= n;
    if (a < 0) a += n;
    int t = 1;
    while (a != 0) {
        while ((a & 1) == 0) {
            a >>= 1;
            i64 r = n & 7;
            if (r == 3 || r == 5) t = -t;
        }
        std::swap(a, n);
        if ((a & 3) == 3 && (n & 3) == 3) t = -t;
        a %= n;
    }
    return n == 1 ? t : 0;
}

bool is_prime_small(i64 n) {
    if (n < 2) return false;
    for (i64 d = 2; (i128)d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::pair<i64, int> prime_power_split(i64 n) {
    require(n >= 2, "prime_power_split: n >= 2");
    auto fs = factorize(n);
    require(fs.size() == 1, "not a prime power");
    return {fs[0].first, fs[0].second};
}

std::uint64_t SplitMix64::next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

i64 SplitMix64::below(i64 bound) {
    require(bound >= 1, "SplitMix64::below: bound >= 1");
    // modulo bias is irrelevant for test-data sampling
    return (i64)(next() % (std::uint64_t)bound);
}

} // namespace ttl
