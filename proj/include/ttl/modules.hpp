#pragma once

#include "ttl/cyclo.hpp"
#include "ttl/jumps.hpp"

#include <map>

namespace ttl {

// Component U_{[g]} of the standard module: mu_E acts through (zeta^{q^i-1})^{-1},
// varpi_E through (zeta_e^k zeta_{phi^i})^{-1}; the component is the field with
// p^{m f deg} elements.
struct UComponent {
    DoubleCoset dc;
    i64 size_log = 0;     // #U_{[g]} = p^size_log
    i64 mu_twist = 0;     // zeta acts via the (q^i - 1)-power map, inverted
    i64 varpi_exp_M = 0;  // exponent in mu_M of the inverse varpi-action root
};

UComponent u_component(const DoubleCoset& dc, const ExtShape& E);

// Which components of V are nonzero, keyed by canonical coset (k, i).
struct Occupancy {
    std::map<std::pair<i64, i64>, bool> occupied;
    bool at(const DoubleCoset& dc) const;
};

Occupancy occupancy(const JumpDatum& jd);

// t^0 (a sign) and t^1 (a quadratic character) of a symplectic module. For Gamma = mu
// the character part is recorded by its value at the fixed generator of mu_E; for
// Gamma = varpi by its value at varpi_E.
struct TFactorPair {
    int t0 = +1;
    Rot t1; // 0 or 1/2
    Rot value() const { return Rot::from_sign(t0) + t1; }
};

// t-factors of V_{[g]} (or of the pair V_{[g]} + V_{[g^{-1}]} when asymmetric).
TFactorPair t_mu(const DoubleCoset& dc, const Occupancy& occ, const ExtShape& E);
TFactorPair t_varpi(const DoubleCoset& dc, const Occupancy& occ, const ExtShape& E);

// The quotient-of-sums sign entering the quadratic stages, over a base with
// residue field of q_res elements and relative ramification degree e_rel (even):
//   e_rel/2 odd : (-1/q)^{(i^+ -1)/2} (d^+/q) (zeta_S/q) n(psi)^{e_rel/(2 d^+)}
//   e_rel/2 even: (-1/q)^{e_rel i_+ / 4}
// It equals the Gauss-sum factor of the whole complementary module over the stage.
Rot quad_stage_sum_sign(const JumpDatum& jd_over_base, GaussConv conv);

// Gauss-sum factor t(W_{[g]}) of the complementary module; mu_4-valued. The
// distinguished coset [sigma^{e/2}] carries the one mu_4 value the stage total
// forces: the quotient-of-sums sign of its stage divided by the -1 factors of the
// other symmetric complement components there (its bare value is the normalized
// Gauss sum of the base residue field up to a computable sign twist).
Rot t_complement(const DoubleCoset& dc, const Occupancy& occ, const JumpDatum& jd,
                 GaussConv conv);

// Jacobi symbol of an element of order N inside the norm-one subgroup of
// F_p[element]; asserts the membership facts used by the t-factor formulas.
int norm_kernel_symbol(i64 N, i64 p);

} // namespace ttl
