#include "ttl/numbers.hpp"
#include "ttl/rot.hpp"

#include <doctest.h>

using namespace ttl;

namespace {

// direct power iteration, the small-input reference for mult_order
i64 mult_order_slow(i64 a, i64 d) {
    i64 t = 1, x = a % d;
    if (d == 1) return 1;
    while (x != 1) {
        x = x * a % d;
        ++t;
        REQUIRE(t <= d);
    }
    return t;
}

} // namespace

TEST_CASE("mult_order basics") {
    CHECK(mult_order(2, 7) == 3);
    CHECK(mult_order(5, 1) == 1);
    CHECK(mult_order(4, 15) == 2);
    CHECK_THROWS_AS(mult_order(6, 15), error);
    for (i64 d = 1; d <= 200; ++d)
        for (i64 a = 2; a <= 12; ++a)
            if (gcd_i64(a, d) == 1) CHECK(mult_order(a, d) == mult_order_slow(a, d));
}

TEST_CASE("jacobi symbol against Euler's criterion") {
    for (i64 p : {3, 5, 7, 11, 13, 101}) {
        for (i64 a = 1; a < p; ++a) {
            i64 euler = powmod(a, (p - 1) / 2, p);
            CHECK(jacobi_symbol(a, p) == (euler == 1 ? 1 : -1));
        }
    }
    CHECK(jacobi_symbol(2, 3) == -1);
    CHECK(jacobi_symbol(-1, 5) == 1);
    CHECK(jacobi_symbol(-1, 7) == -1);
}

TEST_CASE("v2 of q^n - 1 matches the direct value in range") {
    for (i64 q : {3, 5, 7, 9, 11}) {
        for (i64 n = 1; n <= 12; ++n) {
            i64 direct = ipow_checked(q, n) - 1;
            CHECK(v2_pow_minus_one(q, n) == v2(direct));
        }
    }
}

TEST_CASE("solve_linear_mod") {
    CHECK(solve_linear_mod(3, 6, 9) == 2);
    CHECK_THROWS_AS(solve_linear_mod(3, 5, 9), error);
    CHECK(solve_linear_mod(1, 0, 1) == 0);
    for (i64 n = 1; n <= 40; ++n)
        for (i64 a = 0; a < n; ++a)
            for (i64 c = 0; c < n; ++c) {
                if (c % gcd_i64(a, n) != 0) continue;
                i64 x = solve_linear_mod(a, c, n);
                CHECK(mulmod(a, x, n) == c % n);
            }
}

TEST_CASE("Rot group law") {
    Rot a(1, 3), b(1, 6);
    CHECK(a + b == Rot(1, 2));
    CHECK(a - a == Rot());
    CHECK((-a) + a == Rot());
    CHECK(5 * Rot(1, 4) == Rot(1, 4));
    CHECK(Rot(1, 2).as_sign() == -1);
    CHECK(Rot::from_sign(-1) + Rot::from_sign(-1) == Rot());
    // n * (a/b) vanishes exactly when b | n a
    for (i64 b = 1; b <= 12; ++b)
        for (i64 a2 = 0; a2 < b; ++a2)
            for (i64 n = 0; n <= 24; ++n)
                CHECK((n * Rot(a2, b) == Rot()) == ((n * a2) % b == 0));
}

TEST_CASE("factorize and divisors") {
    CHECK(factorize(360).size() == 3);
    CHECK(divisors(12) == std::vector<i64>{1, 2, 3, 4, 6, 12});
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(12) == 4);
    // a large prime leftover survives
    auto fs = factorize((1LL << 37) - 25); // arbitrary large value in range
    i64 back = 1;
    for (auto [p, k] : fs) back *= ipow_checked(p, k);
    CHECK(back == (1LL << 37) - 25);
}

TEST_CASE("deterministic rng stream") {
    SplitMix64 a(42), b(42);
    for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
}
