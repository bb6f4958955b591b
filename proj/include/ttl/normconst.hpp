#pragma once

#include "ttl/transfer.hpp"

namespace ttl {

// The three base-change shapes for the normalization-constant identity:
//   I   E/F totally ramified of odd degree, K/F the cyclic subextension of degree d
//       (d | e, d | q-1), gamma = varpi_E
//   II  E/F totally ramified of even degree, K/F quadratic, gamma = varpi_E
//   III E/K totally ramified, K/F unramified of degree f, gamma = varpi_E u
enum class AutoIndCase { tot_ram_odd, tot_ram_quad, unram_base };

// Inductive constant lambda_{K/F} for a level-0 additive character.
Rot langlands_lambda(AutoIndCase c, const ExtShape& E, i64 d,
                     GaussConv conv = GaussConv::standard);

// epsilon_L(V_{G/H}) = lambda_{K/F}^{-m}, m = n/d.
Rot epsilon_L(AutoIndCase c, const ExtShape& E, i64 d, GaussConv conv = GaussConv::standard);

// Whittaker change-of-basis constant kappa(x_ab).
Rot kappa_x_ab(AutoIndCase c, const JumpDatum& jd, i64 d);

// The product c_theta * Delta^2(gamma) at the per-case evaluation point.
Rot c_theta_delta2(AutoIndCase c, const JumpDatum& jd, i64 d,
                   GaussConv conv = GaussConv::standard);

struct IdentityReport {
    Rot lhs, rhs;
    bool equal = false;
    std::string row; // which parity configuration the instance realized
};

// kappa(x_ab) c_theta Delta^2(gamma) = epsilon_L(V_{G/H}) Delta_{I,II,III}(gamma),
// left side from this module, right side from epsilon_L and the transfer-factor
// evaluations; compared exactly.
IdentityReport verify_identity(AutoIndCase c, const JumpDatum& jd, i64 d,
                               GaussConv conv = GaussConv::standard);

} // namespace ttl
