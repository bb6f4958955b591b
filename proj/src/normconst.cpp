#include "ttl/normconst.hpp"

namespace ttl {

namespace {

void check_case_shape(AutoIndCase c, const ExtShape& E, i64 d) {
    switch (c) {
        case AutoIndCase::tot_ram_odd:
            require(E.f == 1 && E.e % 2 == 1, "case I: totally ramified of odd degree");
            require(d >= 1 && E.e % d == 0, "case I: d must divide e");
            require((E.q - 1) % d == 0, "case I: cyclic subextension needs d | q - 1");
            break;
        case AutoIndCase::tot_ram_quad:
            require(E.f == 1 && E.e % 2 == 0, "case II: totally ramified of even degree");
            require(d == 2, "case II: quadratic subextension");
            break;
        case AutoIndCase::unram_base:
            require(d == E.f, "case III: K is the maximal unramified subfield");
            break;
    }
}

} // namespace

Rot langlands_lambda(AutoIndCase c, const ExtShape& E, i64 d, GaussConv conv) {
    check_case_shape(c, E, d);
    switch (c) {
        case AutoIndCase::tot_ram_odd:
            if (d == 1) return Rot();
            return Rot::from_sign(jacobi_symbol(E.q, d));
        case AutoIndCase::tot_ram_quad:
            return gauss_norm_base(E.p, E.m, conv);
        case AutoIndCase::unram_base:
            return (d - 1) % 2 ? Rot(1, 2) : Rot();
    }
    throw error("langlands_lambda: bad case");
}

Rot epsilon_L(AutoIndCase c, const ExtShape& E, i64 d, GaussConv conv) {
    i64 m = E.e * E.f / d;
    return (-m) * langlands_lambda(c, E, d, conv);
}

Rot kappa_x_ab(AutoIndCase c, const JumpDatum& jd, i64 d) {
    const ExtShape& E = jd.shape;
    check_case_shape(c, E, d);
    auto DI = derive_indexes(jd);
    switch (c) {
        case AutoIndCase::tot_ram_odd:
            return Rot();
        case AutoIndCase::tot_ram_quad: {
            int minus_one = jacobi_symbol(-1, E.q);
            if ((E.e / 2) % 2 == 1) {
                require(DI.S && DI.S == DI.T, "case II, e/2 odd: S == T expected");
                i64 d_plus = *DI.d_plus;
                i64 i_plus = *DI.i_plus;
                Rot r;
                if (((d_plus + i_plus) / 2) % 2 == 1) r = r + Rot::from_sign(minus_one);
                r = r + Rot::from_sign(jacobi_symbol(d_plus, E.q));
                i64 zeta_S = jd.layers[(size_t)*DI.S].zeta_i;
                r = r + Rot::from_sign(jacobi_cyclic(zeta_S, CyclicGrp(E.mu_order)));
                return r;
            }
            require(DI.T.has_value(), "case II: no index T");
            i64 power = mulmod(E.e / 4, *DI.i_minus - 1, 2);
            return power == 1 ? Rot::from_sign(minus_one) : Rot();
        }
        case AutoIndCase::unram_base: {
            // zeta_f^{-(1/2)(f(e-1) + sum_i r_i f (|E/E_{i+1}| - |E/E_i|))}
            i64 f = E.f;
            i128 X = (i128)f * (E.e - 1);
            for (size_t i = 0; i < jd.layers.size(); ++i) {
                i64 deg_i = jd.layers[i].e_i * jd.layers[i].f_i;
                i64 deg_next = (i + 1 < jd.layers.size())
                                   ? jd.layers[i + 1].e_i * jd.layers[i + 1].f_i
                                   : E.e * E.f;
                X += (i128)jd.layers[i].r_i * f * (deg_next - deg_i);
            }
            require(X % 2 == 0, "case III: kappa exponent must be even");
            i64 half = (i64)((X / 2) % f);
            Rot kappa = Rot::reduced((f - half) % f, f);
            require(kappa.is_sign(), "case III: kappa(x_ab) must be a sign");

            // the same value from the parity table, as a cross-check
            Rot table;
            if (f % 2 == 1) {
                table = Rot();
            } else if (E.e % 2 == 1) {
                if (DI.f0 % 2 == 1) {
                    i64 rR = jd.layers[(size_t)*DI.R].r_i;
                    table = rR % 2 ? Rot(1, 2) : Rot();
                }
            } else if (DI.f0 % 2 == 0) {
                table = Rot(1, 2);
            } else {
                require(DI.S.has_value(), "case III: even e needs an odd jump");
                if (*DI.S > *DI.R) {
                    i64 rR = jd.layers[(size_t)*DI.R].r_i;
                    table = rR % 2 ? Rot() : Rot(1, 2); // (-1)^{r_R + 1}
                }
            }
            require(kappa == table, "case III: kappa formula disagrees with the parity table");
            return kappa;
        }
    }
    throw error("kappa_x_ab: bad case");
}

Rot c_theta_delta2(AutoIndCase c, const JumpDatum& jd, i64 d, GaussConv conv) {
    const ExtShape& E = jd.shape;
    check_case_shape(c, E, d);
    Occupancy occ = occupancy(jd);
    switch (c) {
        case AutoIndCase::tot_ram_odd: {
            // kappa c_theta Delta^2 reduces to t_varpi(V_{K/F})
            auto range = cosets_between(E, E.e, 1, E.e / d, 1);
            return t_varpi_product(range, occ, E);
        }
        case AutoIndCase::tot_ram_quad:
            return quad_stage_sum_sign(jd, conv);
        case AutoIndCase::unram_base: {
            // c_theta is the induction constant (-1)^{f_0 - 1} t^0_mu(V_{K/F}) with
            // the stage-indexed sign, which is what makes the normalization table
            // close; for odd f it coincides with the t-factor product
            int t0 = t0_mu_unram_closed(jd);
            auto DI = derive_indexes(jd);
            if (E.f % 2 == 1) {
                auto range = cosets_between(E, E.e, E.f, E.e, 1);
                require(t0 == t0_mu_product(range, occ, E),
                        "case III: closed t0_mu disagrees with the t-factor product");
            }
            Rot c_theta = ((DI.f0 - 1) % 2 ? Rot(1, 2) : Rot()) + Rot::from_sign(t0);
            i64 expo = E.e * (E.f - 1) + DI.f_varpi - 1;
            Rot delta2 = expo % 2 ? Rot(1, 2) : Rot();
            return c_theta + delta2;
        }
    }
    throw error("c_theta_delta2: bad case");
}

IdentityReport verify_identity(AutoIndCase c, const JumpDatum& jd, i64 d, GaussConv conv) {
    const ExtShape& E = jd.shape;
    check_case_shape(c, E, d);
    IdentityReport rep;
    rep.lhs = kappa_x_ab(c, jd, d) + c_theta_delta2(c, jd, d, conv);
    Rot eps = epsilon_L(c, E, d, conv);
    switch (c) {
        case AutoIndCase::tot_ram_odd: {
            rep.rhs = eps + delta_II_III2_at(EvalPoint::prime_totally_ramified, jd, E, E.e / d, 1);
            // the parity argument behind t_varpi(V_{K/F}) = 1, replayed per stage
            Occupancy occ = occupancy(jd);
            auto range = cosets_between(E, E.e, 1, E.e / d, 1);
            for (size_t i = 0; i < jd.layers.size(); ++i) {
                i64 nsym = 0;
                for (const auto& dc : range) {
                    if (dc.kind != Kind::sym_ram && dc.kind != Kind::sym_unram) continue;
                    auto stage = layer_of_coset(dc, jd);
                    if (stage && *stage == (i64)i) ++nsym;
                }
                require(nsym % 2 == 0,
                        "case I: symmetric classes on a stage must pair up evenly");
            }
            rep.row = "e=" + std::to_string(E.e) + ",d=" + std::to_string(d);
            break;
        }
        case AutoIndCase::tot_ram_quad: {
            rep.rhs = eps + delta_II_III2_at(EvalPoint::prime_totally_ramified, jd, E, E.e / 2, 1);
            require(rep.lhs == eps, "case II: left side must collapse to n(psi)^{-m}");
            auto DI = derive_indexes(jd);
            i64 r0 = jd.layers[0].r_i;
            if (r0 > 1)
                rep.row = "r0>1";
            else if (DI.i_plus && *DI.i_plus == 1 && *DI.i_minus == 1)
                rep.row = "i+=i-=1";
            else if (DI.i_plus && *DI.i_plus == 1)
                rep.row = "i->i+=1";
            else
                rep.row = "i+>1";
            rep.row += (E.e / 2) % 2 ? ",e/2 odd" : ",e/2 even";
            break;
        }
        case AutoIndCase::unram_base: {
            rep.rhs = eps + delta_II_III2_at(EvalPoint::prime_times_unit_unram, jd, E, E.e, 1);
            auto DI = derive_indexes(jd);
            if (E.f % 2 == 0) {
                Rot want = (DI.f_varpi + 1) % 2 ? Rot(1, 2) : Rot();
                require(rep.lhs == want, "case III: left side must be (-1)^{f_varpi + 1}");
                if (E.e % 2 == 1)
                    rep.row = DI.f0 % 2 ? "e odd,f0 odd" : "e odd,f0 even";
                else if (DI.f0 % 2 == 0)
                    rep.row = "e even,f0 even";
                else
                    rep.row = *DI.S > *DI.R ? "e even,f0 odd,S>R" : "e even,f0 odd,S<=R";
            } else {
                rep.row = "f odd";
            }
            break;
        }
    }
    rep.equal = rep.lhs == rep.rhs;
    return rep;
}

} // namespace ttl
