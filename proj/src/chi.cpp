#include "ttl/chi.hpp"

#include <algorithm>
#include <map>

namespace ttl {

namespace {

bool is_half_coset(const DoubleCoset& dc, const ExtShape& E) {
    return E.e % 2 == 0 && dc.i == 0 && dc.k == E.e / 2;
}

bool is_unit_fixing(const DoubleCoset& dc, const ExtShape& E) {
    return dc.kind == Kind::sym_unram && E.unit_exp(dc.k, dc.i) == 0;
}

int fixed_part_sign(const DoubleCoset& dc, const Occupancy& occ, const ExtShape& E) {
    return is_unit_fixing(dc, E) && occ.at(dc) ? -1 : +1;
}

// largest divisor of n dividing q^u - 1, without forming q^u
i64 gcd_with_power_minus_one(i64 n, i64 q, i64 u) {
    i64 best = 1;
    for (i64 d : divisors(n))
        if (powmod(q, u, d) == 1 % d) best = std::max(best, d);
    return best;
}

} // namespace

ChiDatum assign_chi(const DoubleCoset& dc, const JumpDatum& jd, const Occupancy& occ,
                    GaussConv conv) {
    require(dc.kind != Kind::trivial, "assign_chi: trivial coset");
    const ExtShape& E = jd.shape;
    ChiDatum x;
    x.dc = dc;
    if (dc.kind == Kind::asym) {
        x.constrained_only = true;
        x.mu_Eg_sign = occ.at(dc) && E.p != 2 ? -1 : +1;
        return x;
    }
    if (is_half_coset(dc, E)) {
        x.mu_gen_val = Rot(1, 2); // the quadratic character of mu_E
        x.varpi_val = t_complement(dc, occ, jd, conv);
        return x;
    }
    x.mu_gen_val = t_mu(dc, occ, E).t1;
    x.varpi_val = Rot::from_sign(fixed_part_sign(dc, occ, E)) + t_varpi(dc, occ, E).value() +
                  t_complement(dc, occ, jd, conv);
    return x;
}

Obstruction feasibility_check(const DoubleCoset& dc, const JumpDatum& jd, const Occupancy& occ,
                              GaussConv conv) {
    require(dc.kind == Kind::sym_ram || dc.kind == Kind::sym_unram,
            "feasibility_check: symmetric coset expected");
    const ExtShape& E = jd.shape;
    Obstruction res;
    ChiDatum x = assign_chi(dc, jd, occ, conv);

    if (dc.kind == Kind::sym_ram) {
        if (is_half_coset(dc, E)) {
            // chi(varpi_E)^2 must be the class of -1 in mu_E
            Rot need = Rot::from_sign(jacobi_cyclic(E.mu_order / 2, CyclicGrp(E.mu_order)));
            if (2 * x.varpi_val != need)
                res.notes.push_back("half coset: chi(varpi)^2 != (-1/mu_E)");
            return res;
        }
        i64 Nk = E.e / gcd_i64(E.e, dc.k);
        // zeta_0 generates mu_{Nk (q^{f t_k} - 1)}; the subgroup generated by
        // mu_{E_{+-g}} and zeta_e^k has index gcd(Nk, q^{f t_k} - 1)
        i64 idx = gcd_with_power_minus_one(Nk, E.q, E.f * dc.t_min);
        if (idx % 2 == 0) return res; // chi(zeta_0) is a free sign
        // odd index forces chi(zeta_0) = 1, so the assigned varpi value must be -1
        if (!(x.varpi_val == Rot(1, 2)))
            res.notes.push_back("sym_ram: odd index but chi(varpi) != -1");
        return res;
    }

    // symmetric unramified
    i64 N = E.order_in_mu_M(E.unit_exp(dc.k, dc.i));
    i64 qhalf = ipow_checked(E.q, E.f / 2);
    if (N == 1) {
        if (!(x.varpi_val == Rot(1, 2)))
            res.notes.push_back("sym_unram, unit-fixing: chi(varpi) != -1");
        return res;
    }
    if (N == 2) {
        Rot zeta0 = occ.at(dc) ? Rot::from_sign((qhalf + 1) / 2 % 2 == 0 ? +1 : -1) : Rot();
        if (!(zeta0 + x.varpi_val == Rot(1, 2)))
            res.notes.push_back("sym_unram, -1 case: chi(zeta_0 varpi) != -1");
        return res;
    }
    i64 g0 = gcd_i64(N, qhalf + 1);
    if ((N / g0) % 2 == 0) {
        res.notes.push_back("sym_unram: index N/gcd(N, q^{f/2}+1) is even");
        return res;
    }
    // forced value of chi at zeta_0 must reproduce the norm-kernel symbol
    int forced = jacobi_cyclic_by_order(g0, qhalf + 1);
    int tfac = norm_kernel_symbol(N, E.p);
    if (forced != tfac)
        res.notes.push_back("sym_unram: forced chi(zeta_0) disagrees with t-factor symbol");
    return res;
}

TameChar product_restricted(const std::vector<DoubleCoset>& cosets, const JumpDatum& jd,
                            const Occupancy& occ, GaussConv conv) {
    const ExtShape& E = jd.shape;
    // inverse-closure check
    std::map<std::pair<i64, i64>, int> have;
    for (const auto& dc : cosets) have[{dc.k, dc.i}]++;
    for (const auto& dc : cosets) {
        auto inv = inverse_coset_key(dc.k, dc.i, E);
        require(have.count(inv) && have[inv] == have[{dc.k, dc.i}],
                "product_restricted: coset set is not closed under inversion");
    }
    TameChar c = TameChar::trivial(E);
    for (const auto& dc : cosets) {
        if (dc.kind == Kind::trivial) continue;
        if (dc.kind == Kind::asym) {
            auto inv = inverse_coset_key(dc.k, dc.i, E);
            if (std::make_pair(dc.k, dc.i) > inv) continue; // one factor per pair
            c.mul_unit_sign(t_mu(dc, occ, E).t1.as_sign());
            c.mul_varpi(t_varpi(dc, occ, E).value());
            continue;
        }
        ChiDatum x = assign_chi(dc, jd, occ, conv);
        c.mul_unit_sign(x.mu_gen_val.as_sign());
        c.mul_varpi(x.varpi_val);
    }
    return c;
}

TheoremReport verify_theorem(const JumpDatum& jd, GaussConv conv) {
    TheoremReport rep;
    const ExtShape& E = jd.shape;
    require_valid(jd);
    Occupancy occ = occupancy(jd);
    auto all = enumerate_double_cosets(E);

    for (const auto& dc : all) {
        if (dc.kind != Kind::sym_ram && dc.kind != Kind::sym_unram) continue;
        auto obs = feasibility_check(dc, jd, occ, conv);
        if (!obs.ok())
            rep.fail("feasibility (k=" + std::to_string(dc.k) + ",i=" + std::to_string(dc.i) +
                     "): " + obs.notes.front());
    }

    TameChar lhs = full_rectifier(jd, E, conv);
    std::vector<DoubleCoset> nontrivial;
    for (const auto& dc : all)
        if (dc.kind != Kind::trivial) nontrivial.push_back(dc);
    TameChar rhs = product_restricted(nontrivial, jd, occ, conv);
    if (!(lhs == rhs)) rep.fail("rectifier != chi product over E/F");

    // subfield refinements along the canonical tower
    i64 l = E.e == 1 ? 0 : v2(E.e);
    std::vector<std::pair<i64, i64>> submembers; // (e(E/K), f(E/K))
    submembers.push_back({E.e, 1});              // K_0
    for (i64 j = 1; j <= l; ++j) submembers.push_back({E.e >> j, 1});
    submembers.push_back({1, 1}); // K = E
    for (auto [es, fs] : submembers) {
        ExtShape sub = subfield_shape(E, es, fs);
        JumpDatum jds = restrict_to_base(jd, sub, es, fs);
        TameChar want = full_rectifier(jds, sub, conv);
        std::vector<DoubleCoset> range;
        for (const auto& dc : all)
            if (dc.kind != Kind::trivial && subfield_membership(dc, E, es, fs))
                range.push_back(dc);
        TameChar got = product_restricted(range, jd, occ, conv);
        if (got.mu_mult != want.mu_mult || !(got.varpi_val == want.varpi_val))
            rep.fail("subfield refinement failed at e(E/K)=" + std::to_string(es) +
                     ", f(E/K)=" + std::to_string(fs));
    }
    return rep;
}

} // namespace ttl
