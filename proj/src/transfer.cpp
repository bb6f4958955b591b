#include "ttl/transfer.hpp"

namespace ttl {

namespace {

// exponent in mu_M of the root lambda(gamma) = gamma (g gamma)^{-1}
i64 root_value_exp(const TameElement& g, const DoubleCoset& dc, const ExtShape& E) {
    i64 twist = (powmod(E.q, dc.i, E.mu_order) - 1 + E.mu_order) % E.mu_order;
    i64 unit = E.mu_embed(mulmod(E.mu_order - twist, ((g.zeta_exp % E.mu_order) + E.mu_order) %
                                                         E.mu_order,
                                 E.mu_order)); // zeta^{(1 - q^i) zeta_exp}
    i64 a = mulmod(((g.varpi_pow % E.M) + E.M) % E.M, E.M - E.unit_exp(dc.k, dc.i), E.M);
    return (unit + a) % E.M;
}

} // namespace

bool regularity(const TameElement& gamma, const ExtShape& E) {
    for (const auto& dc : enumerate_double_cosets(E)) {
        if (dc.kind == Kind::trivial) continue;
        if (root_value_exp(gamma, dc, E) == 0) return false;
    }
    return true;
}

i64 delta_IV_exponent(const TameElement& gamma, const ExtShape& E, i64 e_sub, i64 f_sub) {
    require(regularity(gamma, E), "delta_IV: gamma is not regular");
    i64 v = 0;
    for (const auto& dc : enumerate_double_cosets(E)) {
        if (dc.kind == Kind::trivial) continue;
        if (subfield_membership(dc, E, e_sub, f_sub)) continue;
        // lambda(gamma) is a nontrivial root of unity of order prime to p, so
        // lambda(gamma) - 1 is a unit: zero valuation.
        require(root_value_exp(gamma, dc, E) != 0, "delta_IV: irregular root value");
    }
    require(v % 2 == 0, "delta_IV: exponent must be even");
    return v;
}

Rot delta_II_III2_at(EvalPoint pt, const JumpDatum& jd, const ExtShape& E, i64 e_sub,
                     i64 f_sub) {
    require_valid(jd);
    Occupancy occ = occupancy(jd);
    Rot total;
    switch (pt) {
        case EvalPoint::prime_totally_ramified: {
            require(E.f == 1, "evaluation point outside closed-form domain: need f = 1");
            TameElement gamma{0, 1};
            require(regularity(gamma, E), "delta_II_III2: varpi_E not regular");
            for (const auto& dc : cosets_between(E, E.e, E.f, e_sub, f_sub)) {
                if (dc.kind != Kind::sym_ram && dc.kind != Kind::sym_unram) continue;
                // (gamma - g gamma)/a_{1,g} = 1 for the canonical a-data, so each
                // factor is the assigned character at the identity.
                ChiDatum x = assign_chi(dc, jd, occ, GaussConv::standard);
                total = total + 0 * x.mu_gen_val; // chi_g at the unit argument
            }
            return total;
        }
        case EvalPoint::prime_times_unit_unram: {
            require(e_sub == E.e && f_sub == 1,
                    "evaluation point outside closed-form domain: K must be the maximal "
                    "unramified subfield");
            for (const auto& dc : cosets_between(E, E.e, E.f, e_sub, f_sub)) {
                if (dc.kind != Kind::sym_unram) continue;
                bool fixes_prime = E.unit_exp(dc.k, dc.i) == 0;
                total = total + (fixes_prime ? Rot() : Rot(1, 2));
            }
            if (E.f % 2 == 0) {
                i64 expo = E.e + E.f_varpi() - 1;
                require(total == (expo % 2 ? Rot(1, 2) : Rot()),
                        "delta_II_III2: membership split disagrees with (-1)^{e+f_varpi-1}");
            } else {
                require(total == Rot(), "delta_II_III2: nonempty symmetric set with odd f");
            }
            return total;
        }
    }
    throw error("delta_II_III2_at: unsupported evaluation point");
}

ComparisonReport delta_III2_vs_rectifier(i64 e_sub, i64 f_sub, const JumpDatum& jd,
                                         GaussConv conv) {
    ComparisonReport rep;
    const ExtShape& E = jd.shape;
    Occupancy occ = occupancy(jd);
    auto range = cosets_between(E, E.e, E.f, e_sub, f_sub);
    TameChar lhs = product_restricted(range, jd, occ, conv);

    ExtShape sub = subfield_shape(E, e_sub, f_sub);
    JumpDatum jds = restrict_to_base(jd, sub, e_sub, f_sub);
    TameChar quotient = full_rectifier(jd, E, conv);
    quotient.mul(full_rectifier(jds, sub, conv).inverse());

    if (lhs.mu_mult != quotient.mu_mult) {
        rep.ok = false;
        rep.details.push_back("mu_E parts differ");
    }
    if (!(lhs.varpi_val == quotient.varpi_val)) {
        rep.ok = false;
        rep.details.push_back("values at varpi_E differ");
    }
    return rep;
}

Rot restriction_delta(i64 d, const JumpDatum& jd, GaussConv conv) {
    const ExtShape& E = jd.shape;
    require(d >= 1 && E.f % d == 0, "restriction_delta: K/F unramified of degree d | f");
    i64 rel_deg = E.e * E.f / d; // |E/K|
    Rot closed = ((d - 1) * rel_deg) % 2 ? Rot(1, 2) : Rot();

    Occupancy occ = occupancy(jd);
    auto range = cosets_between(E, E.e, E.f, E.e, E.f / d);
    TameChar chi = product_restricted(range, jd, occ, conv);
    // varpi_F = zeta_{E/F}^{-1} varpi_E^e
    Rot at_varpi_F = chi.at(-E.zeta_ef, E.e);
    require(at_varpi_F == closed,
            "restriction_delta: chi-product restriction disagrees with (-1)^{(d-1)|E/K|}");
    return closed;
}

} // namespace ttl
