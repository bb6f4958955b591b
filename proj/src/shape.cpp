#include "ttl/shape.hpp"

namespace ttl {

i64 ExtShape::mu_embed(i64 x) const {
    x %= mu_order;
    if (x < 0) x += mu_order;
    return mulmod(x, M / mu_order, M);
}

i64 ExtShape::zeta_phi_i(i64 i) const {
    require(i >= 0, "zeta_phi_i: i >= 0");
    // 1 + q + ... + q^{i-1} mod mu_order
    i64 s = 0, t = 1 % mu_order;
    for (i64 j = 0; j < i; ++j) {
        s = (s + t) % mu_order;
        t = mulmod(t, q, mu_order);
    }
    return mulmod(zeta_phi, s, mu_order);
}

i64 ExtShape::unit_exp(i64 k, i64 i) const {
    k %= e;
    if (k < 0) k += e;
    i64 a = mulmod(k, zeta_e_exp(), M);
    return (a + mu_embed(zeta_phi_i(i))) % M;
}

i64 ExtShape::order_in_mu_M(i64 exp) const {
    exp %= M;
    if (exp < 0) exp += M;
    return M / gcd_i64(M, exp);
}

i64 ExtShape::order_in_mu_E(i64 exp) const {
    exp %= mu_order;
    if (exp < 0) exp += mu_order;
    return mu_order / gcd_i64(mu_order, exp);
}

i64 ExtShape::f_varpi() const { return f / mult_order(q, ord_zeta_ef()); }

ExtShape make_ext_shape(i64 p, i64 m, i64 e, i64 f, i64 zeta_ef, i64 phi_choice) {
    require(p >= 2 && is_prime_small(p), "shape: p must be prime");
    require(m >= 1 && e >= 1 && f >= 1, "shape: m, e, f >= 1");
    require(e % p != 0, "shape: extension must be tame (p does not divide e)");
    ExtShape E;
    E.p = p;
    E.m = m;
    E.e = e;
    E.f = f;
    E.q = ipow_checked(p, m);
    E.qf = ipow_checked(E.q, f);
    E.mu_order = E.qf - 1;
    E.M = lcm_i64(e, E.mu_order);
    zeta_ef %= E.mu_order;
    if (zeta_ef < 0) zeta_ef += E.mu_order;
    E.zeta_ef = zeta_ef;

    // zeta_phi = (q-1) y with e*y == zeta_ef (mod s_f), s_f = (q^f-1)/(q-1)
    i64 s_f = E.mu_order / (E.q - 1);
    i64 g = gcd_i64(e, s_f);
    require((zeta_ef % s_f) % g == 0, "shape: zeta_{E/F} admits no compatible Frobenius twist");
    i64 y0 = solve_linear_mod(e, zeta_ef % s_f, s_f);
    i64 step = s_f / g; // y ranges over y0 + step*Z mod s_f, g choices
    phi_choice %= g;
    if (phi_choice < 0) phi_choice += g;
    i64 y = (y0 + mulmod(step, phi_choice, s_f)) % s_f;
    E.zeta_phi = mulmod(E.q - 1, y, E.mu_order);

    // both defining relations, as hard checks
    require(mulmod(e, E.zeta_phi, E.mu_order) == mulmod(E.q - 1, E.zeta_ef, E.mu_order),
            "shape: zeta_phi^e != zeta_{E/F}^{q-1}");
    require(mulmod(s_f, E.zeta_phi, E.mu_order) == 0, "shape: phi^f does not fix varpi_E");
    return E;
}

i64 count_phi_choices(const ExtShape& E) {
    i64 s_f = E.mu_order / (E.q - 1);
    return gcd_i64(E.e, s_f);
}

bool zeta_ef_representable(i64 p, i64 m, i64 e, i64 f, i64 zeta_ef) {
    i64 q = ipow_checked(p, m);
    i64 mu_order = ipow_checked(q, f) - 1;
    i64 s_f = mu_order / (q - 1);
    zeta_ef %= mu_order;
    if (zeta_ef < 0) zeta_ef += mu_order;
    return (zeta_ef % s_f) % gcd_i64(e, s_f) == 0;
}

i64 sample_zeta_ef(i64 p, i64 m, i64 e, i64 f, SplitMix64& rng) {
    i64 q = ipow_checked(p, m);
    i64 mu_order = ipow_checked(q, f) - 1;
    i64 s_f = mu_order / (q - 1);
    i64 g = gcd_i64(e, s_f);
    // z = g*t + j*s_f with t in [0, s_f/g), j in [0, q-1)
    i64 t = rng.below(s_f / g);
    i64 j = rng.below(q - 1);
    return (mulmod(g, t, mu_order) + mulmod(j, s_f, mu_order)) % mu_order;
}

} // namespace ttl
