#pragma once

#include "ttl/modules.hpp"
#include "ttl/tamechar.hpp"

#include <vector>

namespace ttl {

// Canonical tower F = B_{-1} in K_0 in K_1 in ... in K_l in E: K_0/F unramified of
// degree f, each K_j/K_{j-1} quadratic totally ramified (l = v_2(e)), E/K_l totally
// ramified of odd degree e/2^l (omitted when that degree is 1, as is the unramified
// stage when f = 1).
enum class LayerKind { unram, quad, odd_top };

struct ChainLayer {
    LayerKind kind = LayerKind::unram;
    i64 j = 0;        // quad stages: 1..l, K_j/K_{j-1}
    i64 degree = 1;   // unram: f; quad: 2; odd_top: e/2^l
    i64 e_base = 1;   // e(E/K_{j-1}) for quad stages
};

std::vector<ChainLayer> canonical_chain(const ExtShape& E);

// Cosets strictly between the ranges of two nested subfields K_out in K_in of E
// (outer given by (e(E/K_out), f(E/K_out)), etc.); (e, f) plays F, (1, 1) plays E.
std::vector<DoubleCoset> cosets_between(const ExtShape& E, i64 e_out, i64 f_out, i64 e_in,
                                        i64 f_in);

// t-factor products over a coset range (asymmetric classes counted once per pair).
Rot t_varpi_product(const std::vector<DoubleCoset>& range, const Occupancy& occ,
                    const ExtShape& E);
int t0_mu_product(const std::vector<DoubleCoset>& range, const Occupancy& occ,
                  const ExtShape& E);
int t1_mu_product_at_gen(const std::vector<DoubleCoset>& range, const Occupancy& occ,
                         const ExtShape& E);

// t^0_mu(V_{K_0/F}) in closed form from the jump indexes; asserted against the
// product over the unramified range wherever both are computed.
int t0_mu_unram_closed(const JumpDatum& jd);

// Sign of the fixed-point part t^0_mu(V^varpi): -1 exactly when the unique unit-fixing
// unramified-symmetric coset exists, is symmetric, and carries a nonzero component.
int t0_mu_fixed_part(const JumpDatum& jd, const Occupancy& occ);

TameChar nu_rectifier(const ChainLayer& layer, const JumpDatum& jd, const ExtShape& E,
                      GaussConv conv = GaussConv::standard);

TameChar full_rectifier(const JumpDatum& jd, const ExtShape& E,
                        GaussConv conv = GaussConv::standard);

} // namespace ttl
