#include "ttl/modules.hpp"

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

// explicit permutation parity of multiplication by an element of order N on the
// field with Q elements, on the exponent model plus the fixed zero
int parity_oracle(i64 N, i64 Q) {
    if (N == 1) return +1;
    i64 n = Q - 1;
    REQUIRE(n % N == 0);
    i64 shift = n / N;
    std::vector<char> seen((size_t)n, 0);
    i64 trans = 0;
    for (i64 s = 0; s < n; ++s) {
        if (seen[(size_t)s]) continue;
        i64 len = 0, cur = s;
        do {
            seen[(size_t)cur] = 1;
            cur = (cur + shift) % n;
            ++len;
        } while (cur != s);
        trans += len - 1;
    }
    return trans % 2 == 0 ? +1 : -1;
}

} // namespace

TEST_CASE("component descriptors") {
    ExtShape E = make_ext_shape(2, 1, 7, 1, 0);
    auto cs = enumerate_double_cosets(E);
    CHECK_THROWS_AS(u_component(cs[0], E), error); // trivial coset
    auto u = u_component(cs[1], E);
    CHECK(u.mu_twist == 0);                      // i = 0: mu_E acts trivially
    CHECK(u.size_log == E.m * E.f * cs[1].deg);  // p^{mf deg} elements

    ExtShape E2 = make_ext_shape(3, 1, 1, 2, 0);
    auto cs2 = enumerate_double_cosets(E2);
    auto u2 = u_component(cs2[1], E2);
    CHECK(u2.mu_twist == (E2.q - 1) % E2.mu_order); // zeta -> (zeta^{q-1})^{-1}
}

TEST_CASE("occupancy follows jump parity") {
    ExtShape E = make_ext_shape(3, 1, 2, 1, 0);
    // single stage, odd jump: nothing occupied
    Occupancy occ = occupancy(single_stage(E, 1));
    for (auto& [key, on] : occ.occupied) CHECK(!on);

    // e=3: jump parity flips the k=1 class
    ExtShape E3 = make_ext_shape(2, 1, 3, 1, 0);
    Occupancy odd = occupancy(single_stage(E3, 1));
    Occupancy even = occupancy(single_stage(E3, 2));
    DoubleCoset k1;
    k1.k = 1;
    k1.i = 0;
    k1.kind = classify(1, 0, E3);
    CHECK(!odd.at(k1));
    CHECK(even.at(k1));
}

TEST_CASE("t-factors on the unramified quadratic shape") {
    // e=1, f=2: the Frobenius class is symmetric unramified
    SplitMix64 rng(3);
    for (i64 p : {3, 5, 7}) {
        for (int rep = 0; rep < 8; ++rep) {
            i64 z = sample_zeta_ef(p, 1, 1, 2, rng);
            ExtShape E = make_ext_shape(p, 1, 1, 2, z);
            auto dc = enumerate_double_cosets(E)[1];
            REQUIRE(dc.kind == Kind::sym_unram);
            // occupied: r_0 even
            JumpDatum jd = single_stage(E, 2);
            Occupancy occ = occupancy(jd);
            REQUIRE(occ.at(dc));
            CHECK(t_mu(dc, occ, E).t0 == -1);
            CHECK(2 * t_mu(dc, occ, E).t1 == Rot());
            i64 x = E.unit_exp(dc.k, dc.i);
            auto tv = t_varpi(dc, occ, E);
            if (x == 0) {
                CHECK(tv.t0 == +1);
                CHECK(tv.t1 == Rot());
            } else if (E.order_in_mu_M(x) == 2) {
                CHECK(tv.t0 == +1);
                CHECK(tv.t1 == Rot::from_sign((E.q - 1) / 2 % 2 == 0 ? +1 : -1));
            } else {
                CHECK(tv.t0 == -1);
            }
            // unoccupied: everything trivial, complement sign -1
            JumpDatum jd1 = single_stage(E, 1);
            Occupancy occ1 = occupancy(jd1);
            CHECK(t_mu(dc, occ1, E).t0 == +1);
            CHECK(t_varpi(dc, occ1, E).value() == Rot());
            CHECK(t_complement(dc, occ1, jd1, GaussConv::standard) == Rot(1, 2));
            CHECK(t_complement(dc, occ, jd, GaussConv::standard) == Rot());
        }
    }
}

TEST_CASE("sym_ram factors and the multiplicity parity") {
    // e=5, q=2: all nontrivial classes symmetric ramified with t_min = 2
    ExtShape E = make_ext_shape(2, 1, 5, 1, 0);
    JumpDatum jd = single_stage(E, 2);
    Occupancy occ = occupancy(jd);
    for (const auto& dc : enumerate_double_cosets(E)) {
        if (dc.kind == Kind::trivial) continue;
        REQUIRE(dc.kind == Kind::sym_ram);
        CHECK(dc.deg == 2 * dc.t_min);
        CHECK(occ.at(dc));
        auto tv = t_varpi(dc, occ, E);
        CHECK(tv.t0 == -1);
        CHECK(tv.t1 == Rot()); // p = 2: all symbols trivial
        CHECK(t_mu(dc, occ, E).value() == Rot());
    }
}

TEST_CASE("signs match the explicit permutation oracle on small modules") {
    SplitMix64 rng(0x0ac1e);
    i64 checked = 0;
    for (i64 p : {2, 3, 5, 7}) {
        for (i64 e = 1; e <= 10; ++e) {
            if (e % p == 0) continue;
            for (i64 f = 1; f <= 4; ++f) {
                i64 z = sample_zeta_ef(p, 1, e, f, rng);
                ExtShape E = make_ext_shape(p, 1, e, f, z);
                JumpDatum jd = random_valid(E, rng.next());
                Occupancy occ = occupancy(jd);
                for (const auto& dc : enumerate_double_cosets(E)) {
                    if (dc.kind == Kind::trivial) continue;
                    i64 Q = 1;
                    bool small = true;
                    for (i64 i = 0; i < E.m * E.f * dc.deg && small; ++i) {
                        Q *= p;
                        if (Q > 4096) small = false;
                    }
                    if (!small || !occ.at(dc)) continue;
                    // varpi action
                    i64 Nv = E.order_in_mu_M(E.unit_exp(dc.k, dc.i));
                    auto tv = t_varpi(dc, occ, E);
                    if (dc.kind == Kind::asym)
                        CHECK(tv.t1 == Rot::from_sign(parity_oracle(Nv, Q)));
                    // mu action at the generator
                    i64 twist = (powmod(E.q, dc.i, E.mu_order) - 1 + E.mu_order) % E.mu_order;
                    i64 Nm = E.order_in_mu_E(twist);
                    auto tm = t_mu(dc, occ, E);
                    if (dc.kind == Kind::asym)
                        CHECK(tm.t1 == Rot::from_sign(parity_oracle(Nm, Q)));
                    // quadratic character parts stay quadratic
                    CHECK(2 * tm.t1 == Rot());
                    CHECK(2 * tv.t1 == Rot());
                    ++checked;
                }
            }
        }
    }
    CHECK(checked > 100);
}

TEST_CASE("even anisotropic pairs have trivial mu-sign") {
    // asym classes at i = f/2: the pair is even anisotropic, so the sign character
    // at the generator must vanish
    SplitMix64 rng(77);
    for (i64 p : {3, 5}) {
        for (i64 e : {1, 2, 4, 5}) {
            if (e % p == 0) continue;
            i64 z = sample_zeta_ef(p, 1, e, 4, rng);
            ExtShape E = make_ext_shape(p, 1, e, 4, z);
            JumpDatum jd = random_valid(E, rng.next());
            Occupancy occ = occupancy(jd);
            for (const auto& dc : enumerate_double_cosets(E)) {
                if (dc.kind != Kind::asym || dc.i != E.f / 2) continue;
                CHECK(t_mu(dc, occ, E).t1 == Rot());
            }
        }
    }
}
