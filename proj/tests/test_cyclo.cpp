#include "ttl/cyclo.hpp"
#include "ttl/verify.hpp"

#include <doctest.h>

#include <set>

using namespace ttl;

TEST_CASE("jacobi_cyclic small cases") {
    CHECK(jacobi_cyclic(3, CyclicGrp(8)) == -1);
    CHECK(jacobi_cyclic(4, CyclicGrp(8)) == +1);
    CHECK(jacobi_cyclic(3, CyclicGrp(9)) == +1); // odd order: everything is a square
    // against explicit square sets
    for (i64 n = 1; n <= 64; ++n) {
        std::set<i64> squares;
        for (i64 j = 0; j < n; ++j) squares.insert(2 * j % n);
        for (i64 x = 0; x < n; ++x)
            CHECK(jacobi_cyclic(x, CyclicGrp(n)) == (squares.count(x) ? +1 : -1));
    }
}

TEST_CASE("sgn_mult examples and parity oracle") {
    CHECK(sgn_mult(1, 7) == -1); // the 6-cycle on F_7^x is odd
    CHECK(sgn_mult(0, 7) == +1);
    CHECK(sgn_mult(2, 9) == +1);
    CHECK_THROWS_AS(sgn_mult(1, 1), error);
    // multiplicativity in the exponent
    for (i64 Q : {5, 7, 9, 16, 27, 64}) {
        for (i64 a = 0; a < Q - 1; ++a)
            for (i64 b = 0; b < Q - 1; ++b)
                CHECK(sgn_mult(a + b, Q) == sgn_mult(a, Q) * sgn_mult(b, Q));
    }
}

TEST_CASE("gauss_norm_base values and the square law") {
    CHECK(gauss_norm_base(5, 1) == Rot(0, 1));
    CHECK(gauss_norm_base(3, 1) == Rot(1, 4));
    CHECK(gauss_norm_base(3, 2).is_sign()); // q = 9 = 1 mod 4 forces n^2 = +1
    CHECK(gauss_norm_base(3, 1, GaussConv::conjugate) == Rot(3, 4));
    CHECK_THROWS_AS(gauss_norm_base(2, 1), error);
    for (i64 q : {3, 5, 7, 9, 11, 13, 25, 27}) {
        auto [p, m] = prime_power_split(q);
        Rot n = gauss_norm_base(p, m);
        CHECK(2 * n == Rot::from_sign(jacobi_symbol(-1, q)));
    }
}

TEST_CASE("gauss_norm_form reduction") {
    CHECK(gauss_norm_form({0, +1}, 5, 1) == Rot());
    CHECK(gauss_norm_form({1, +1}, 5, 1) == Rot());
    // dim 2, det class -1 over F_3: (-1) * i^2 = +1
    CHECK(gauss_norm_form({2, -1}, 3, 1) == Rot());
}

TEST_CASE("oracle suites stay green") {
    auto signs = run_oracle_signs(400, 1024);
    CHECK(signs.ok());
    auto gauss = run_gauss({3, 5, 9});
    CHECK(gauss.ok());
}
