#include "ttl/jumps.hpp"
#include "ttl/json_io.hpp"

#include <doctest.h>

using namespace ttl;

namespace {

JumpDatum make(const ExtShape& E, std::vector<JumpLayer> layers) {
    JumpDatum jd;
    jd.shape = E;
    jd.layers = std::move(layers);
    return jd;
}

} // namespace

TEST_CASE("validation catches the gcd clauses") {
    ExtShape E2 = make_ext_shape(3, 1, 2, 1, 0);
    CHECK(validate(make(E2, {{1, 1, 1, 0}})).ok()); // single odd jump over e=2

    ExtShape E4 = make_ext_shape(3, 1, 4, 1, 0);
    // jumps (2,4) with e-chain (1,2): gcd(r_0=2, e_1=2) = 2 != 1
    auto bad = validate(make(E4, {{1, 1, 2, 0}, {2, 1, 4, 0}}));
    CHECK(!bad.ok());

    ExtShape E6 = make_ext_shape(5, 1, 6, 1, 0);
    // e-chain (1,2), jumps (2,3): gcd(2,2)=2 != 1
    CHECK(!validate(make(E6, {{1, 1, 2, 0}, {2, 1, 3, 0}})).ok());
    // e-chain (1,2), jumps (1,2): gcd(1,2)=1, gcd(2,6)=2, both fine
    CHECK(validate(make(E6, {{1, 1, 1, 0}, {2, 1, 2, 0}})).ok());
    // decreasing jumps rejected
    CHECK(!validate(make(E6, {{1, 1, 3, 0}, {2, 1, 2, 0}})).ok());
}

TEST_CASE("derived indexes on hand-built towers") {
    // e=2, single jump r_0 = 1: S = T = 0, i+ = i_- = 1
    ExtShape E2 = make_ext_shape(3, 1, 2, 1, 0);
    auto DI = derive_indexes(make(E2, {{1, 1, 1, 0}}));
    REQUIRE(DI.S.has_value());
    CHECK(*DI.S == 0);
    CHECK(DI.S == DI.T);
    CHECK(*DI.i_plus == 1);
    CHECK(*DI.i_minus == 1);
    CHECK(*DI.d_plus == 1);

    // all jumps even: S empty
    ExtShape E3 = make_ext_shape(3, 1, 1, 1, 0);
    auto DI2 = derive_indexes(make(E3, {{1, 1, 2, 0}}));
    CHECK(!DI2.S.has_value());
    CHECK(DI2.T.has_value());

    // f_varpi: order of zeta_{E/F} under Frobenius
    SplitMix64 rng(7);
    ExtShape E4 = make_ext_shape(3, 1, 1, 2, sample_zeta_ef(3, 1, 1, 2, rng));
    CHECK(E4.f_varpi() * mult_order(E4.q, E4.ord_zeta_ef()) == E4.f);

    // e odd, f even, residue-degree parity flip at stage 1, trivial zeta_{E/F}:
    // R = 1 and f_varpi = f
    ExtShape E5 = make_ext_shape(2, 1, 3, 4, 0);
    JumpDatum jd5 = make(E5, {{1, 1, 1, 1}, {3, 1, 3, 1}, {3, 2, 6, 5}});
    REQUIRE(validate(jd5).ok());
    auto DI5 = derive_indexes(jd5);
    REQUIRE(DI5.R.has_value());
    CHECK(*DI5.R == 1);
    CHECK(DI5.f_varpi == E5.f);
}

TEST_CASE("random data validate and reproduce deterministically") {
    for (i64 p : {2, 3, 5}) {
        for (i64 e = 1; e <= 12; ++e) {
            if (e % p == 0) continue;
            for (i64 f : {1, 2, 4}) {
                SplitMix64 rng((std::uint64_t)(p * 100 + e * 10 + f));
                i64 z = sample_zeta_ef(p, 1, e, f, rng);
                ExtShape E = make_ext_shape(p, 1, e, f, z);
                JumpDatum a = random_valid(E, 99);
                JumpDatum b = random_valid(E, 99);
                CHECK(validate(a).ok());
                REQUIRE(a.layers.size() == b.layers.size());
                for (size_t i = 0; i < a.layers.size(); ++i) {
                    CHECK(a.layers[i].e_i == b.layers[i].e_i);
                    CHECK(a.layers[i].r_i == b.layers[i].r_i);
                    CHECK(a.layers[i].zeta_i == b.layers[i].zeta_i);
                }
            }
        }
    }
    // 1000 samples on a composite shape all validate (and exercise derive_indexes)
    SplitMix64 rng(0xabc);
    ExtShape E = make_ext_shape(5, 1, 12, 4, sample_zeta_ef(5, 1, 12, 4, rng));
    for (int s = 0; s < 1000; ++s) {
        JumpDatum jd = random_valid(E, (std::uint64_t)s);
        CHECK(validate(jd).ok());
        auto DI = derive_indexes(jd);
        // the even-e stage transition always carries an odd jump
        REQUIRE(DI.S.has_value());
        for (size_t i = 0; i < jd.layers.size(); ++i) {
            i64 e_next = i + 1 < jd.layers.size() ? jd.layers[i + 1].e_i : E.e;
            if (jd.layers[i].e_i % 2 == 1 && e_next % 2 == 0)
                CHECK(jd.layers[i].r_i % 2 == 1);
        }
    }
}

TEST_CASE("layer_of_coset walks the tower") {
    ExtShape E = make_ext_shape(3, 1, 2, 1, 0);
    JumpDatum jd = make(E, {{1, 1, 1, 0}});
    for (const auto& dc : enumerate_double_cosets(E)) {
        auto stage = layer_of_coset(dc, jd);
        if (dc.kind == Kind::trivial)
            CHECK(!stage.has_value());
        else
            CHECK(*stage == 0);
    }

    // two-stage chain (1) in (2) in (4): sigma^2 fixes the quadratic subfield, so
    // it sits on the inner stage 0; odd k moves it and sits on stage 1
    ExtShape E4 = make_ext_shape(5, 1, 4, 1, 0);
    JumpDatum jd4 = make(E4, {{1, 1, 1, 0}, {2, 1, 2, 0}});
    REQUIRE(validate(jd4).ok());
    for (const auto& dc : enumerate_double_cosets(E4)) {
        if (dc.kind == Kind::trivial) continue;
        auto stage = layer_of_coset(dc, jd4);
        REQUIRE(stage.has_value());
        CHECK(*stage == (dc.k % 2 == 0 ? 0 : 1));
    }
}

TEST_CASE("restriction to a base keeps jumps of surviving stages") {
    ExtShape E = make_ext_shape(5, 1, 4, 1, 0);
    JumpDatum jd = make(E, {{1, 1, 1, 0}, {2, 1, 2, 0}});
    REQUIRE(validate(jd).ok());
    ExtShape B = subfield_shape(E, 2, 1);
    JumpDatum jdB = restrict_to_base(jd, B, 2, 1);
    REQUIRE(jdB.layers.size() == 1);
    CHECK(jdB.layers[0].e_i == 1);
    CHECK(jdB.layers[0].r_i == 1); // the stage with e-part 2 collapsed into the base
}

TEST_CASE("json round trip") {
    SplitMix64 rng(5);
    ExtShape E = make_ext_shape(3, 1, 8, 2, sample_zeta_ef(3, 1, 8, 2, rng));
    JumpDatum jd = random_valid(E, 17);
    json j = jump_datum_to_json(jd);
    JumpDatum back = jump_datum_from_json(j);
    CHECK(back.shape.zeta_ef == jd.shape.zeta_ef);
    REQUIRE(back.layers.size() == jd.layers.size());
    for (size_t i = 0; i < jd.layers.size(); ++i) {
        CHECK(back.layers[i].e_i == jd.layers[i].e_i);
        CHECK(back.layers[i].f_i == jd.layers[i].f_i);
        CHECK(back.layers[i].r_i == jd.layers[i].r_i);
        CHECK(back.layers[i].zeta_i == jd.layers[i].zeta_i);
    }
}
