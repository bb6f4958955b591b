#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ttl {

using i64 = long long;
using i128 = __int128;

struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw error(msg);
}

i64 gcd_i64(i64 a, i64 b);
i64 lcm_i64(i64 a, i64 b);

// (a*b) mod n and a^k mod n, n < 2^62, via 128-bit intermediates.
i64 mulmod(i64 a, i64 b, i64 n);
i64 powmod(i64 a, i64 k, i64 n);

// a^k as an integer; throws on 64-bit overflow.
i64 ipow_checked(i64 a, i64 k);

// 2-adic valuation; v2(0) is an error.
int v2(i64 n);

// v2(q^n - 1) for odd q >= 3, without forming q^n (lifting the exponent).
int v2_pow_minus_one(i64 q, i64 n);

// x with a*x == c (mod n), smallest nonnegative; throws if unsolvable.
i64 solve_linear_mod(i64 a, i64 c, i64 n);

// Multiplicative order of a mod n (gcd(a,n)=1), via factored Carmichael descent.
i64 mult_order(i64 a, i64 n);

// Kronecker–Jacobi symbol (a/n) for odd n >= 1.
int jacobi_symbol(i64 a, i64 n);

std::vector<std::pair<i64, int>> factorize(i64 n);
std::vector<i64> divisors(i64 n);
i64 euler_phi(i64 n);

bool is_prime_small(i64 n);
// n = p^k with p prime, k >= 1; returns {p, k} or throws.
std::pair<i64, int> prime_power_split(i64 n);

// Deterministic 64-bit PRNG (splitmix64); identical streams on every platform.
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next();
    // uniform in [0, bound), bound >= 1
    i64 below(i64 bound);
};

} // namespace ttl
