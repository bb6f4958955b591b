#pragma once

#include "ttl/cosets.hpp"
#include "ttl/shape.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ttl {

// One stage E_i of the tower E >= E_0 > E_1 > ... > E_d > F: relative invariants
// (e_i, f_i) = (e(E/E_i), f(E/E_i)), the jump r_i (E-level), and the leading root
// zeta_i in mu_{E_i} given by its exponent in mu_E.
struct JumpLayer {
    i64 e_i = 1;
    i64 f_i = 1;
    i64 r_i = 1;
    i64 zeta_i = 0;
};

struct JumpDatum {
    ExtShape shape;
    std::vector<JumpLayer> layers; // i = 0..d; E_{d+1} = F has (e, f)
};

struct ValidationReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

ValidationReport validate(const JumpDatum& jd);
void require_valid(const JumpDatum& jd);

// Index data read off a valid datum:
//   S: largest index with r_S odd;               i_plus  = r_S
//   T: least index with |E_{T+1}/F| odd;         i_minus = r_T
//   R: index with f(E/E_R) odd, f(E/E_{R+1}) even
//   d_plus = |E_{S+1}/F|; defined when S exists and used only where S == T.
struct DerivedIndexes {
    std::optional<i64> S, T, R;
    std::optional<i64> i_plus;  // r_S
    std::optional<i64> i_minus; // r_T
    std::optional<i64> d_plus;  // |E_{S+1}/F|
    i64 f0 = 1;                 // |E/E_0| = f(E/E_0)
    i64 f_varpi = 1;
};

DerivedIndexes derive_indexes(const JumpDatum& jd);

// The unique i with dc strictly between W_{E_{i+1}} and W_{E_i}; nullopt for the
// trivial coset and for cosets inside W_{E_0}.
std::optional<i64> layer_of_coset(const DoubleCoset& dc, const JumpDatum& jd);

// Deterministic, seeded, always-valid datum for the given shape.
JumpDatum random_valid(const ExtShape& E, std::uint64_t seed);

// The same character regarded over an intermediate field B with (e(E/B), f(E/B)) =
// (e_base, f_base) in the compatible-prime tower: layers map by componentwise gcd,
// runs of equal restricted fields merge keeping the largest jump and its leading
// root, stages collapsing into B are dropped. Result is over the base shape.
JumpDatum restrict_to_base(const JumpDatum& jd, const ExtShape& base_shape, i64 e_base,
                           i64 f_base);

// Shape of E over the chain subfield K with e(E/K) = e_base, f(E/K) = f_base
// (compatible primes: zeta_{E/K} = 1).
ExtShape subfield_shape(const ExtShape& E, i64 e_base, i64 f_base);

} // namespace ttl
