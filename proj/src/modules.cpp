#include "ttl/modules.hpp"

namespace ttl {

UComponent u_component(const DoubleCoset& dc, const ExtShape& E) {
    require(dc.kind != Kind::trivial, "u_component: trivial coset has no component");
    UComponent u;
    u.dc = dc;
    u.size_log = E.m * E.f * dc.deg;
    u.mu_twist = (powmod(E.q, dc.i, E.mu_order) - 1 + E.mu_order) % E.mu_order;
    u.varpi_exp_M = (E.M - E.unit_exp(dc.k, dc.i)) % E.M;
    return u;
}

bool Occupancy::at(const DoubleCoset& dc) const {
    auto it = occupied.find({dc.k, dc.i});
    require(it != occupied.end(), "occupancy: unknown coset");
    return it->second;
}

Occupancy occupancy(const JumpDatum& jd) {
    require_valid(jd);
    Occupancy occ;
    for (const auto& dc : enumerate_double_cosets(jd.shape)) {
        bool on = false;
        if (dc.kind != Kind::trivial) {
            auto layer = layer_of_coset(dc, jd);
            on = layer && jd.layers[(size_t)*layer].r_i % 2 == 0;
        }
        occ.occupied[{dc.k, dc.i}] = on;
    }
    if (jd.shape.e % 2 == 0) {
        // theorem, not a special case: the e/2 stage always sits under an odd jump
        require(!occ.occupied.at({jd.shape.e / 2, 0}),
                "occupancy: component at sigma^{e/2} must be trivial");
    }
    return occ;
}

int norm_kernel_symbol(i64 N, i64 p) {
    require(N >= 3, "norm_kernel_symbol: element of order >= 3 expected");
    i64 two_s = mult_order(p, N);
    require(two_s % 2 == 0, "norm_kernel_symbol: F_p[x] must be of even degree");
    i64 s = two_s / 2;
    require(powmod(p, s, N) == N - 1, "norm_kernel_symbol: x outside the norm-one subgroup");
    // group mu_{p^s + 1}: the symbol is +1 iff N divides (p^s + 1)/2
    if (p == 2) return +1; // odd group, every element is a square
    return powmod(p, s, 2 * N) == 2 * N - 1 ? +1 : -1;
}

TFactorPair t_mu(const DoubleCoset& dc, const Occupancy& occ, const ExtShape& E) {
    require(dc.kind != Kind::trivial, "t_mu: trivial coset");
    TFactorPair t;
    bool on = occ.at(dc);
    switch (dc.kind) {
        case Kind::asym: {
            if (!on) break;
            i64 twist = (powmod(E.q, dc.i, E.mu_order) - 1 + E.mu_order) % E.mu_order;
            i64 Ny = E.order_in_mu_E(twist);
            int s = sgn_mult_by_order(Ny, E.p, E.m * E.f * dc.deg);
            t.t1 = Rot::from_sign(s);
            break;
        }
        case Kind::sym_ram:
            break; // mu_E acts trivially
        case Kind::sym_unram: {
            if (!on) break;
            t.t0 = -1;
            // unique quadratic character of mu_E; at the generator it evaluates as the
            // symbol of a generator of mu_{q^{f/2}+1} in that group
            i64 h = ipow_checked(E.q, E.f / 2) + 1;
            t.t1 = Rot::from_sign(jacobi_cyclic_by_order(h, h));
            break;
        }
        default:
            throw error("t_mu: unexpected kind");
    }
    return t;
}

TFactorPair t_varpi(const DoubleCoset& dc, const Occupancy& occ, const ExtShape& E) {
    require(dc.kind != Kind::trivial, "t_varpi: trivial coset");
    TFactorPair t;
    bool on = occ.at(dc);
    if (!on) return t;
    switch (dc.kind) {
        case Kind::asym: {
            i64 Na = E.order_in_mu_M(E.unit_exp(dc.k, dc.i));
            int s = sgn_mult_by_order(Na, E.p, E.m * E.f * dc.deg);
            t.t1 = Rot::from_sign(s);
            break;
        }
        case Kind::sym_ram: {
            t.t0 = -1;
            i64 Nk = E.e / gcd_i64(E.e, dc.k);
            require(Nk >= 3, "t_varpi: occupied sym_ram needs zeta_e^k != +-1");
            i64 two_s = mult_order(E.p, Nk);
            i64 r = (E.m * E.f * dc.deg) / two_s;
            require((E.m * E.f * dc.deg) % two_s == 0 && r % 2 == 1,
                    "t_varpi: multiplicity over F_p[zeta_e^k] must be odd");
            t.t1 = Rot::from_sign(norm_kernel_symbol(Nk, E.p));
            break;
        }
        case Kind::sym_unram: {
            i64 Nx = E.order_in_mu_M(E.unit_exp(dc.k, dc.i));
            if (Nx == 1) break; // varpi acts trivially
            if (Nx == 2) {
                i64 half = (ipow_checked(E.q, E.f / 2) - 1) / 2;
                t.t1 = Rot::from_sign(half % 2 == 0 ? +1 : -1);
                break;
            }
            t.t0 = -1;
            i64 two_s = mult_order(E.p, Nx);
            i64 r = (E.m * E.f * dc.deg) / two_s;
            require((E.m * E.f * dc.deg) % two_s == 0 && r % 2 == 1,
                    "t_varpi: multiplicity over F_p[x] must be odd");
            t.t1 = Rot::from_sign(norm_kernel_symbol(Nx, E.p));
            break;
        }
        default:
            throw error("t_varpi: unexpected kind");
    }
    return t;
}

Rot quad_stage_sum_sign(const JumpDatum& jdB, GaussConv conv) {
    const ExtShape& B = jdB.shape;
    require(B.f == 1 && B.e % 2 == 0, "quad_stage_sum_sign: totally ramified even stage");
    auto DI = derive_indexes(jdB);
    require(DI.S.has_value(), "quad_stage_sum_sign: no odd jump over an even stage");
    i64 q_res = B.qf;
    int minus_one = jacobi_symbol(-1, q_res);
    if ((B.e / 2) % 2 == 1) {
        require(DI.S == DI.T, "quad_stage_sum_sign: S == T expected when e/2 is odd");
        i64 i_plus = *DI.i_plus;
        i64 d_plus = *DI.d_plus;
        require((B.e / 2) % d_plus == 0, "quad_stage_sum_sign: d_plus must divide e/2");
        Rot r;
        if (((i_plus - 1) / 2) % 2 == 1) r = r + Rot::from_sign(minus_one);
        r = r + Rot::from_sign(jacobi_symbol(d_plus, q_res));
        i64 zeta_S = jdB.layers[(size_t)*DI.S].zeta_i;
        r = r + Rot::from_sign(jacobi_cyclic(zeta_S, CyclicGrp(B.mu_order)));
        r = r + (B.e / (2 * d_plus)) * gauss_norm_base(B.p, B.m, conv);
        return r;
    }
    i64 power = mulmod(B.e / 4, *DI.i_minus, 2); // (-1/q)^{e i_+ / 4}
    return power == 1 ? Rot::from_sign(minus_one) : Rot();
}

Rot t_complement(const DoubleCoset& dc, const Occupancy& occ, const JumpDatum& jd,
                 GaussConv conv) {
    require(dc.kind != Kind::trivial, "t_complement: trivial coset");
    const ExtShape& E = jd.shape;
    if (dc.kind == Kind::asym) return Rot();
    bool is_half = E.e % 2 == 0 && dc.i == 0 && dc.k == E.e / 2;
    if (is_half) {
        require(!occ.at(dc), "t_complement: sigma^{e/2} component must be unoccupied");
        require(E.p != 2, "t_complement: even e cannot occur in residue characteristic 2");
        // The stage total over e(E/K_{l-1}) is the quotient-of-sums sign; dividing
        // out the other symmetric complement components leaves this component's
        // Gauss sum. Everything is relative to the last quadratic stage's base.
        i64 l = v2(E.e);
        i64 e_base = E.e >> (l - 1); // e(E/K_{l-1})
        JumpDatum jdB = restrict_to_base(jd, subfield_shape(E, e_base, 1), e_base, 1);
        Rot value = quad_stage_sum_sign(jdB, conv);
        for (const auto& other : enumerate_double_cosets(E)) {
            if (other.kind != Kind::sym_ram && other.kind != Kind::sym_unram) continue;
            if (other.k == dc.k && other.i == dc.i) continue;
            if (!subfield_membership(other, E, e_base, 1)) continue;
            if (subfield_membership(other, E, e_base / 2, 1)) continue;
            if (!occ.at(other)) value = value + Rot(1, 2); // divide out t(W) = -1
        }
        require(2 * value == Rot::from_sign(jacobi_symbol(-1, E.qf)),
                "t_complement: stage residual is not a square root of (-1/q)");
        return value;
    }
    if (occ.at(dc)) return Rot(); // W_{[g]} trivial
    return Rot(1, 2);
}

} // namespace ttl
