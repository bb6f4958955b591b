#include "ttl/cosets.hpp"

#include <doctest.h>

#include <map>
#include <set>

using namespace ttl;

TEST_CASE("enumeration matches the worked examples") {
    // e=7, f=1, q=2: orbits {0}, {1,2,4}, {3,6,5}
    ExtShape E = make_ext_shape(2, 1, 7, 1, 0);
    auto cs = enumerate_double_cosets(E);
    REQUIRE(cs.size() == 3);
    CHECK(cs[0].kind == Kind::trivial);
    CHECK(cs[1].k == 1);
    CHECK(cs[2].k == 3);

    // e=1, f=2: the trivial class and the Frobenius class
    ExtShape E2 = make_ext_shape(3, 1, 1, 2, 0);
    auto cs2 = enumerate_double_cosets(E2);
    REQUIRE(cs2.size() == 2);
    CHECK(cs2[1].i == 1);
    CHECK(cs2[1].kind == Kind::sym_unram);

    // e=4, f=1, q=5: every k fixed by multiplication by 5
    ExtShape E3 = make_ext_shape(5, 1, 4, 1, 0);
    auto cs3 = enumerate_double_cosets(E3);
    REQUIRE(cs3.size() == 4);
    CHECK(classify(2, 0, E3) == Kind::sym_ram);
    CHECK(classify(1, 0, E3) == Kind::asym);
}

TEST_CASE("count formula equals enumeration") {
    CHECK(count_formula(7, 2) == 3);
    CHECK(count_formula(1, 5) == 1);
    CHECK(count_formula(4, 5) == 4);
    CHECK_THROWS_AS(count_formula(6, 2), error);
    for (i64 q : {2, 3, 5, 7, 9}) {
        auto [p, m] = prime_power_split(q);
        for (i64 e = 1; e <= 30; ++e) {
            if (gcd_i64(e, q) != 1) continue;
            ExtShape E = make_ext_shape(p, m, e, 1, 0);
            CHECK(count_formula(e, q) == (i64)enumerate_double_cosets(E).size());
        }
    }
}

TEST_CASE("classification is stable under inversion and pairs up") {
    for (i64 q : {2, 3, 5}) {
        auto [p, m] = prime_power_split(q);
        for (i64 e = 1; e <= 10; ++e) {
            if (e % p == 0) continue;
            for (i64 f = 1; f <= 6; ++f) {
                SplitMix64 rng((std::uint64_t)(q * 100 + e * 10 + f));
                i64 z = sample_zeta_ef(p, m, e, f, rng);
                ExtShape E = make_ext_shape(p, m, e, f, z);
                auto cs = enumerate_double_cosets(E);
                std::map<std::pair<i64, i64>, Kind> kinds;
                for (const auto& dc : cs) kinds[{dc.k, dc.i}] = dc.kind;
                std::set<std::pair<i64, i64>> asym_seen;
                for (const auto& dc : cs) {
                    auto inv = inverse_coset_key(dc.k, dc.i, E);
                    CHECK(kinds.at(inv) == dc.kind);
                    if (dc.kind == Kind::asym) {
                        CHECK(inv != std::make_pair(dc.k, dc.i)); // no fixed points
                        asym_seen.insert({dc.k, dc.i});
                    }
                    if (dc.kind == Kind::sym_ram || dc.kind == Kind::sym_unram)
                        CHECK(inv == std::make_pair(dc.k, dc.i));
                }
                // asymmetric classes pair up evenly
                CHECK(asym_seen.size() % 2 == 0);
                // [sigma^{e/2}] is always symmetric ramified
                if (E.e % 2 == 0) CHECK(kinds.at({E.e / 2, 0}) == Kind::sym_ram);
            }
        }
    }
}

TEST_CASE("sym_unram parity equals e(f-1) mod 2") {
    CHECK(sym_unram_parity(make_ext_shape(3, 1, 1, 2, 0)) == 1);
    CHECK(sym_unram_parity(make_ext_shape(2, 1, 3, 1, 0)) == 0);
    CHECK(sym_unram_parity(make_ext_shape(3, 1, 2, 2, 0)) == 0);
}

TEST_CASE("subfield membership") {
    // totally ramified 2-power tower with trivial zeta_{E/F}
    ExtShape E = make_ext_shape(5, 1, 4, 1, 0);
    auto cs = enumerate_double_cosets(E);
    for (const auto& dc : cs) {
        CHECK(subfield_membership(dc, E, 4, 1)); // K = F
        bool in_k1 = subfield_membership(dc, E, 2, 1);
        CHECK(in_k1 == (dc.k % 2 == 0));
        bool in_E = subfield_membership(dc, E, 1, 1);
        CHECK(in_E == (dc.kind == Kind::trivial));
    }
    // unramified subfields see only the Frobenius part
    ExtShape E2 = make_ext_shape(3, 1, 2, 4, 0);
    for (const auto& dc : enumerate_double_cosets(E2)) {
        if (dc.kind == Kind::trivial) continue;
        CHECK(subfield_membership(dc, E2, 2, 1) == (dc.i == 0));
    }
    CHECK_THROWS_AS(subfield_membership(DoubleCoset{}, E, 3, 1), error);
}
