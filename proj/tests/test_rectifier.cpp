#include "ttl/rectifier.hpp"

#include <doctest.h>

using namespace ttl;

namespace {

JumpDatum single_stage(const ExtShape& E, i64 r0) {
    JumpDatum jd;
    jd.shape = E;
    // a primitive leading root keeps the stage generic for every residue degree
    jd.layers = {{1, 1, r0, 1 % E.mu_order}};
    require_valid(jd);
    return jd;
}

} // namespace

TEST_CASE("canonical chain shapes") {
    {
        auto ch = canonical_chain(make_ext_shape(5, 1, 12, 2, 0));
        REQUIRE(ch.size() == 4);
        CHECK(ch[0].kind == LayerKind::unram);
        CHECK(ch[1].kind == LayerKind::quad);
        CHECK(ch[1].e_base == 12);
        CHECK(ch[2].e_base == 6);
        CHECK(ch[3].kind == LayerKind::odd_top);
        CHECK(ch[3].degree == 3);
    }
    CHECK(canonical_chain(make_ext_shape(2, 1, 5, 1, 0)).size() == 1);
    CHECK(canonical_chain(make_ext_shape(2, 1, 1, 3, 0)).size() == 1);
    CHECK(canonical_chain(make_ext_shape(2, 1, 1, 1, 0)).empty());
}

TEST_CASE("rectifier on the smallest shapes") {
    // (e,f) = (1,1): trivial character
    ExtShape E1 = make_ext_shape(3, 1, 1, 1, 0);
    TameChar mu1 = full_rectifier(single_stage(E1, 1), E1);
    CHECK(mu1.mu_mult == 0);
    CHECK(mu1.varpi_val == Rot());

    // (e,f) = (1,2), odd jump: trivial on units, -1 at the prime
    SplitMix64 rng(11);
    for (i64 p : {2, 3, 5}) {
        i64 z = sample_zeta_ef(p, 1, 1, 2, rng);
        ExtShape E = make_ext_shape(p, 1, 1, 2, z);
        TameChar mu = full_rectifier(single_stage(E, 1), E);
        CHECK(mu.mu_mult == 0);
        CHECK(mu.varpi_val == Rot(1, 2));
    }

    // (e,f) = (3,1), q=2: single odd-degree stage, value (2/3) = -1
    ExtShape E3 = make_ext_shape(2, 1, 3, 1, 0);
    TameChar mu3 = full_rectifier(single_stage(E3, 1), E3);
    CHECK(mu3.mu_mult == 0);
    CHECK(mu3.varpi_val == Rot(1, 2));
    CHECK(jacobi_symbol(2, 3) == -1);
}

TEST_CASE("every stage factor is a fourth root with quadratic unit part") {
    SplitMix64 rng(0xabcd);
    for (i64 p : {2, 3, 5, 7}) {
        for (i64 e = 1; e <= 10; ++e) {
            if (e % p == 0) continue;
            for (i64 f = 1; f <= 4; ++f) {
                i64 z = sample_zeta_ef(p, 1, e, f, rng);
                ExtShape E = make_ext_shape(p, 1, e, f, z);
                for (int rep = 0; rep < 3; ++rep) {
                    JumpDatum jd = random_valid(E, rng.next());
                    for (const auto& layer : canonical_chain(E)) {
                        TameChar nu = nu_rectifier(layer, jd, E);
                        CHECK(4 * nu.varpi_val == Rot());
                        CHECK(mulmod(2, nu.mu_mult, E.mu_order) == 0);
                    }
                }
            }
        }
    }
}

TEST_CASE("unramified stage sign on trivial-module data") {
    // all jumps odd and e odd: module empty, value (-1)^{e(f-1)}
    SplitMix64 rng(9);
    for (i64 f : {2, 3, 4}) {
        i64 z = sample_zeta_ef(3, 1, 1, f, rng);
        ExtShape E = make_ext_shape(3, 1, 1, f, z);
        TameChar mu = full_rectifier(single_stage(E, 1), E);
        CHECK(mu.varpi_val == ((f - 1) % 2 ? Rot(1, 2) : Rot()));
        CHECK(mu.mu_mult == 0);
    }
}

TEST_CASE("quadratic stage carries the unique quadratic unit character") {
    // e = 2: one quadratic stage, its unit part is the quadratic character
    ExtShape E = make_ext_shape(3, 1, 2, 1, 0);
    TameChar mu = full_rectifier(single_stage(E, 1), E);
    CHECK(mu.mu_mult == E.mu_order / 2);
}
