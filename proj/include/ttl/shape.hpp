#pragma once

#include "ttl/numbers.hpp"

#include <optional>
#include <vector>

namespace ttl {

// A tame extension E/F given by (p, m, e, f, zeta_{E/F}); q = p^m, n = ef, p does not
// divide e. Primes are compatible: varpi_E^e = zeta_{E/F} varpi_F. Roots of unity are
// tracked by exponents: mu_E = Z/(q^f - 1) with an abstract generator, and the ambient
// group mu_M = Z/M with M = lcm(e, q^f - 1) holds zeta_e together with mu_E.
//
// The Frobenius twist zeta_phi (phi(varpi_E) = zeta_phi varpi_E) lies in mu_E and
// satisfies zeta_phi^e = zeta_{E/F}^{q-1} and zeta_phi^{(q^f-1)/(q-1)} = 1; the second
// relation is phi^f acting trivially on E. Not every zeta_{E/F} exponent admits a
// solution; construction rejects those.
struct ExtShape {
    i64 p = 2, m = 1, e = 1, f = 1;
    i64 q = 2;        // p^m
    i64 qf = 2;       // q^f
    i64 mu_order = 1; // q^f - 1
    i64 M = 1;        // lcm(e, mu_order)
    i64 zeta_ef = 0;  // exponent of zeta_{E/F} in mu_E
    i64 zeta_phi = 0; // exponent of zeta_phi in mu_E

    // exponent in mu_M of zeta_e (primitive e-th root)
    i64 zeta_e_exp() const { return M / e; }
    // embed a mu_E exponent into mu_M
    i64 mu_embed(i64 x) const;
    // exponent in mu_E of zeta_{phi^i} = zeta_phi^{1+q+...+q^{i-1}}
    i64 zeta_phi_i(i64 i) const;
    // exponent in mu_M of zeta_e^k zeta_{phi^i} (the varpi-action root for coset (k,i))
    i64 unit_exp(i64 k, i64 i) const;
    i64 order_in_mu_M(i64 exp) const;
    i64 order_in_mu_E(i64 exp) const;

    i64 ord_zeta_ef() const { return order_in_mu_E(zeta_ef); }
    // f_varpi = |E/F[varpi_E]| = f / ord(q on zeta_{E/F})
    i64 f_varpi() const;
};

// Throws on gcd(e,p) != 1, on invalid ranges, and on zeta_ef exponents that admit no
// compatible Frobenius twist. phi_choice selects among the valid twists (0 = minimal);
// used by the convention-flip sweeps.
ExtShape make_ext_shape(i64 p, i64 m, i64 e, i64 f, i64 zeta_ef, i64 phi_choice = 0);

// Number of valid zeta_phi choices for a given shape (all differ by e-th roots of unity
// that respect both relations).
i64 count_phi_choices(const ExtShape& E);

// Whether a zeta_{E/F} exponent is representable for (p, m, e, f).
bool zeta_ef_representable(i64 p, i64 m, i64 e, i64 f, i64 zeta_ef);

// Deterministically sample a representable zeta_{E/F} exponent.
i64 sample_zeta_ef(i64 p, i64 m, i64 e, i64 f, SplitMix64& rng);

} // namespace ttl
