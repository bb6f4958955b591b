#pragma once

#include "ttl/chi.hpp"

namespace ttl {

// Elements gamma = zeta_gen^{zeta_exp} varpi_E^{varpi_pow} modulo 1-units: the only
// evaluation points the depth-zero factors ever need.
struct TameElement {
    i64 zeta_exp = 0;
    i64 varpi_pow = 0;
};

// Both factors are the constant 1 under the choices made here; named so the product
// Delta_{I,II,III} is literally Delta_II * Delta_III2.
inline constexpr int delta_I = 1;
inline constexpr int delta_III1 = 1;

// gamma is strongly regular iff no nontrivial coset annihilates it.
bool regularity(const TameElement& gamma, const ExtShape& E);

// Exponent v with Delta_IV(gamma) = q^{-v/2}, relative to the subgroup datum
// (e(E/K), f(E/K)); zero for every supported tame gamma. Asserted even.
i64 delta_IV_exponent(const TameElement& gamma, const ExtShape& E, i64 e_sub, i64 f_sub);

enum class EvalPoint {
    prime_totally_ramified, // gamma = varpi_E, f = 1
    prime_times_unit_unram  // gamma = varpi_E u, K the maximal unramified subfield
};

// Delta_II * Delta_III2 at the supported evaluation points, through the closed
// per-coset evaluations (canonical a-data divide out in the first case; the
// second case splits over membership in W_{F[varpi_E]}).
Rot delta_II_III2_at(EvalPoint pt, const JumpDatum& jd, const ExtShape& E, i64 e_sub,
                     i64 f_sub);

struct ComparisonReport {
    bool ok = true;
    std::vector<std::string> details;
};

// Delta_III2 for the subgroup datum K equals the nu-rectifier of E/K inside E/F:
// chi-product over the cosets outside the K-range against the rectifier quotient.
ComparisonReport delta_III2_vs_rectifier(i64 e_sub, i64 f_sub, const JumpDatum& jd,
                                         GaussConv conv = GaussConv::standard);

// For unramified K/F of degree d: the restriction of Delta_III2 to F^x at varpi_F,
// the closed form (-1)^{(d-1)|E/K|}; asserted against the chi-product restriction.
Rot restriction_delta(i64 d, const JumpDatum& jd, GaussConv conv = GaussConv::standard);

} // namespace ttl
