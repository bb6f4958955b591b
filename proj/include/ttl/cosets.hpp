#pragma once

#include "ttl/shape.hpp"

#include <vector>

namespace ttl {

enum class Kind { trivial, sym_ram, sym_unram, asym };

const char* kind_name(Kind k);

// A double coset [sigma^k phi^i] of Gamma_E \ Gamma_F / Gamma_E, stored with k the
// minimal representative of its multiply-by-q^f orbit on Z/e.
struct DoubleCoset {
    i64 k = 0;
    i64 i = 0;
    Kind kind = Kind::trivial;
    i64 t_min = 0; // minimal t of the symmetry criterion; 0 for asym/trivial
    i64 deg = 1;   // |E_g/E| = length of the orbit of k under x -> q^f x

    friend bool operator==(const DoubleCoset&, const DoubleCoset&) = default;
};

// minimal element of the orbit of k under multiplication by q^f on Z/e
i64 orbit_min_k(i64 k, const ExtShape& E);
// orbit length of k under multiplication by q^f on Z/e
i64 orbit_len_k(i64 k, const ExtShape& E);

// One coset per (q^f-orbit of Z/e) x (Z/f), classified; ordered lexicographically
// by (i, min orbit k). Includes the trivial coset (0,0).
std::vector<DoubleCoset> enumerate_double_cosets(const ExtShape& E);

Kind classify(i64 k, i64 i, const ExtShape& E, i64* t_min_out = nullptr);

// canonical key (min orbit k, i) of the inverse coset [g^{-1}], g = sigma^k phi^i
std::pair<i64, i64> inverse_coset_key(i64 k, i64 i, const ExtShape& E);

// Sum over d | e of phi(d)/ord(q_eff, d); equals the number of double cosets for a
// totally ramified extension of degree e over residue size q_eff.
i64 count_formula(i64 e, i64 q_eff);

// #sym_unram mod 2, asserted equal to e(f-1) mod 2.
int sym_unram_parity(const ExtShape& E);

// Does sigma^k phi^i fix the intermediate field K with e(E/K) = e_sub, f(E/K) = f_sub
// (compatible-prime convention: varpi_K = varpi_E^{e_sub})?
bool subfield_membership(const DoubleCoset& dc, const ExtShape& E, i64 e_sub, i64 f_sub);

} // namespace ttl
