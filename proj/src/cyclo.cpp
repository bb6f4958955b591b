#include "ttl/cyclo.hpp"

namespace ttl {

int jacobi_cyclic(i64 x_exp, const CyclicGrp& H) {
    if (H.order % 2 == 1) return +1;
    x_exp %= H.order;
    if (x_exp < 0) x_exp += H.order;
    return x_exp % 2 == 0 ? +1 : -1;
}

int jacobi_cyclic_by_order(i64 elem_order, i64 group_order) {
    require(elem_order >= 1 && group_order >= 1 && group_order % elem_order == 0,
            "jacobi_cyclic_by_order: element order must divide group order");
    if (group_order % 2 == 1) return +1;
    return (group_order / 2) % elem_order == 0 ? +1 : -1;
}

int sgn_mult(i64 x_dlog, i64 Q) {
    require(Q >= 2, "sgn_mult: field size must be >= 2");
    i64 n = Q - 1;
    x_dlog %= n;
    if (x_dlog < 0) x_dlog += n;
    if (x_dlog == 0) return +1;
    i64 g = gcd_i64(n, x_dlog);
    return (n - g) % 2 == 0 ? +1 : -1;
}

int sgn_mult_by_order(i64 elem_order, i64 p, i64 n) {
    require(p >= 2 && n >= 1 && elem_order >= 1, "sgn_mult_by_order: bad arguments");
    require(powmod(p, n, elem_order) == 1 % elem_order,
            "sgn_mult_by_order: order does not divide field unit-group order");
    // translation by dlog(x) on Z/(p^n - 1) splits into gcd cycles; parity is odd
    // exactly when N is even and (p^n - 1)/N is odd.
    if (elem_order % 2 == 1) return +1;
    if (p == 2) return +1; // p^n - 1 odd, even N impossible; unreachable with the check above
    return v2_pow_minus_one(p, n) == v2(elem_order) ? -1 : +1;
}

Rot gauss_norm_base(i64 p, i64 m, GaussConv conv) {
    require(p != 2, "residue characteristic two unsupported for Gauss sums");
    require(is_prime_small(p) && p % 2 == 1 && m >= 1, "gauss_norm_base: p odd prime, m >= 1");
    // n(psi_p) = 1 (p = 1 mod 4) or i (p = 3 mod 4); n(psi_{p^m}) = (-1)^{m+1} n(psi_p)^m.
    Rot base = (p % 4 == 1) ? Rot(0, 1) : Rot(1, 4);
    if (conv == GaussConv::conjugate) base = base.conj();
    Rot r = m * base;
    if (m % 2 == 0) r = r + Rot(1, 2);
    return r;
}

Rot gauss_norm_form(const QuadForm& Q, i64 p, i64 m, GaussConv conv) {
    require(Q.dim >= 0, "gauss_norm_form: dim >= 0");
    require(Q.det_class == 1 || Q.det_class == -1, "gauss_norm_form: det class is a sign");
    if (Q.dim == 0) require(Q.det_class == 1, "gauss_norm_form: empty form has trivial det");
    return Rot::from_sign(Q.det_class) + Q.dim * gauss_norm_base(p, m, conv);
}

} // namespace ttl
