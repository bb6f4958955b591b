#pragma once

#include "ttl/numbers.hpp"
#include "ttl/rot.hpp"

namespace ttl {

// Z/order with elements given as exponents of a fixed abstract generator.
struct CyclicGrp {
    i64 order = 1;
    explicit CyclicGrp(i64 n) : order(n) { require(n >= 1, "CyclicGrp: order >= 1"); }
};

// +1 iff the element with exponent x_exp is a square in H.
int jacobi_cyclic(i64 x_exp, const CyclicGrp& H);

// Same symbol given only the element's multiplicative order N inside H.
int jacobi_cyclic_by_order(i64 elem_order, i64 group_order);

// Sign of the permutation "multiply by x" on the field with Q elements,
// where x has discrete log x_dlog in F_Q^x. Equals (-1)^{(Q-1) - gcd(Q-1, x_dlog)}.
int sgn_mult(i64 x_dlog, i64 Q);

// Same sign given the order N of x and the field F_{p^n}; avoids forming p^n.
// N must divide p^n - 1.
int sgn_mult_by_order(i64 elem_order, i64 p, i64 n);

// Which 4th root of unity: additive characters are fixed as psi_p(x) = e^{2 pi i x / p},
// psi_q = psi_p o Tr; `conjugate` flips to the complex-conjugate convention.
enum class GaussConv { standard, conjugate };

// Normalized quadratic Gauss sum n(psi_q) for q = p^m, p odd, lifted to m > 1 by
// Hasse-Davenport. Lies in mu_4.
Rot gauss_norm_base(i64 p, i64 m, GaussConv conv = GaussConv::standard);

struct QuadForm {
    i64 dim = 0;
    int det_class = +1; // class of det Q in k_F^x / squares
};

// n(Q, psi) = det_class * n(psi_q)^dim.
Rot gauss_norm_form(const QuadForm& Q, i64 p, i64 m, GaussConv conv = GaussConv::standard);

} // namespace ttl
