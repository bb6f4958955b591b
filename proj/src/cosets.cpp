#include "ttl/cosets.hpp"

#include <algorithm>

namespace ttl {

const char* kind_name(Kind k) {
    switch (k) {
        case Kind::trivial: return "trivial";
        case Kind::sym_ram: return "sym_ram";
        case Kind::sym_unram: return "sym_unram";
        case Kind::asym: return "asym";
    }
    return "?";
}

i64 orbit_min_k(i64 k, const ExtShape& E) {
    k %= E.e;
    if (k < 0) k += E.e;
    i64 best = k, cur = k;
    do {
        cur = mulmod(cur, E.qf, E.e);
        best = std::min(best, cur);
    } while (cur != k);
    return best;
}

i64 orbit_len_k(i64 k, const ExtShape& E) {
    k %= E.e;
    if (k < 0) k += E.e;
    if (k == 0) return 1;
    i64 d = E.e / gcd_i64(E.e, k); // order of zeta_e^k
    return mult_order(E.qf, d);
}

Kind classify(i64 k, i64 i, const ExtShape& E, i64* t_min_out) {
    k %= E.e;
    if (k < 0) k += E.e;
    i %= E.f;
    if (i < 0) i += E.f;
    if (t_min_out) *t_min_out = 0;
    if (k == 0 && i == 0) return Kind::trivial;
    i64 bound = E.e * E.f; // q^{ft} cycles mod e with period at most ord(q^f, e)
    if (i == 0) {
        // e | (q^{ft} + 1) k for some t
        for (i64 t = 0; t < bound; ++t) {
            i64 c = (powmod(E.qf, t, E.e) + 1) % E.e;
            if (mulmod(c, k, E.e) == 0) {
                if (t_min_out) *t_min_out = t;
                return Kind::sym_ram;
            }
        }
        return Kind::asym;
    }
    if (E.f % 2 == 0 && i == E.f / 2) {
        // e | (q^{f(2t+1)/2} + 1) k for some t
        i64 h = powmod(E.q, E.f / 2, E.e); // q^{f/2} mod e
        for (i64 t = 0; t < bound; ++t) {
            i64 c = (powmod(h, 2 * t + 1, E.e) + 1) % E.e;
            if (mulmod(c, k, E.e) == 0) {
                if (t_min_out) *t_min_out = t;
                return Kind::sym_unram;
            }
        }
        return Kind::asym;
    }
    return Kind::asym;
}

std::vector<DoubleCoset> enumerate_double_cosets(const ExtShape& E) {
    std::vector<DoubleCoset> out;
    std::vector<char> seen((size_t)E.e, 0);
    for (i64 i = 0; i < E.f; ++i) {
        std::fill(seen.begin(), seen.end(), 0);
        for (i64 k = 0; k < E.e; ++k) {
            if (seen[(size_t)k]) continue;
            // mark the whole orbit of k
            i64 cur = k;
            do {
                seen[(size_t)cur] = 1;
                cur = mulmod(cur, E.qf, E.e);
            } while (cur != k);
            DoubleCoset dc;
            dc.k = k; // k is minimal in its orbit by the scan order
            dc.i = i;
            dc.kind = classify(k, i, E, &dc.t_min);
            dc.deg = orbit_len_k(k, E);
            if (dc.kind == Kind::sym_ram && (E.e % 2 != 0 || k != E.e / 2))
                require(dc.deg == 2 * dc.t_min, "coset: sym_ram degree mismatch");
            if (dc.kind == Kind::sym_unram)
                require(dc.deg == 2 * dc.t_min + 1, "coset: sym_unram degree mismatch");
            out.push_back(dc);
        }
    }
    return out;
}

std::pair<i64, i64> inverse_coset_key(i64 k, i64 i, const ExtShape& E) {
    k %= E.e;
    if (k < 0) k += E.e;
    i %= E.f;
    if (i < 0) i += E.f;
    // inverse of sigma^k phi^i is sigma^{-k qbar^i} phi^{-i}
    i64 qbar = E.e == 1 ? 0 : solve_linear_mod(E.q % E.e, 1 % E.e, E.e);
    i64 kk = E.e == 1 ? 0 : mulmod(E.e - k, powmod(qbar, i, E.e), E.e);
    i64 ii = (E.f - i) % E.f;
    return {orbit_min_k(kk, E), ii};
}

i64 count_formula(i64 e, i64 q_eff) {
    require(e >= 1 && q_eff >= 2, "count_formula: e >= 1, q >= 2");
    require(gcd_i64(e, q_eff) == 1, "not a unit");
    i64 total = 0;
    for (i64 d : divisors(e)) {
        i64 phi = euler_phi(d);
        i64 ord = mult_order(q_eff, d);
        require(phi % ord == 0, "count_formula: ord does not divide phi");
        total += phi / ord;
    }
    return total;
}

int sym_unram_parity(const ExtShape& E) {
    i64 count = 0;
    for (const auto& dc : enumerate_double_cosets(E))
        if (dc.kind == Kind::sym_unram) ++count;
    int parity = (int)(count % 2);
    require(parity == (int)((E.e % 2) * ((E.f - 1) % 2)), "sym_unram parity != e(f-1) parity");
    return parity;
}

bool subfield_membership(const DoubleCoset& dc, const ExtShape& E, i64 e_sub, i64 f_sub) {
    require(e_sub >= 1 && E.e % e_sub == 0 && f_sub >= 1 && E.f % f_sub == 0,
            "subfield_membership: (e_sub, f_sub) must divide (e, f)");
    i64 f_kf = E.f / f_sub; // f(K/F)
    if (dc.i % f_kf != 0) return false;
    // K/F unramified: varpi_F serves as its prime and is fixed by everything, so
    // only the residue condition remains. Otherwise varpi_K = varpi_E^{e_sub}.
    if (e_sub == E.e) return true;
    return mulmod(e_sub, E.unit_exp(dc.k, dc.i), E.M) == 0;
}

} // namespace ttl
