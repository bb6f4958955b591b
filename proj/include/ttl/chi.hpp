#pragma once

#include "ttl/rectifier.hpp"

#include <string>
#include <vector>

namespace ttl {

// Character datum chi_{g} attached to one double coset. Symmetric cosets carry a
// quadratic mu_E-part (value at the fixed generator) and a mu_4 value at varpi_E.
// Asymmetric cosets carry the sign character of mu_{E_g} on their component; their
// varpi_E value is a free normalization that no consumed product depends on, and is
// defaulted to the identity.
struct ChiDatum {
    DoubleCoset dc;
    Rot mu_gen_val;        // symmetric: chi|_{mu_E} at the generator
    Rot varpi_val;         // symmetric: chi(varpi_E); asymmetric: defaulted
    int mu_Eg_sign = +1;   // asymmetric: sign character of mu_{E_g} (at a generator)
    bool constrained_only = false; // asymmetric: varpi_val carries no information
};

ChiDatum assign_chi(const DoubleCoset& dc, const JumpDatum& jd, const Occupancy& occ,
                    GaussConv conv = GaussConv::standard);

struct Obstruction {
    std::vector<std::string> notes;
    bool ok() const { return notes.empty(); }
};

// Extension feasibility of the assigned values to a genuine character of E_g^x
// satisfying the quadratic-restriction condition: order/index arithmetic on the
// groups generated by the distinguished roots of unity.
Obstruction feasibility_check(const DoubleCoset& dc, const JumpDatum& jd, const Occupancy& occ,
                              GaussConv conv = GaussConv::standard);

// Product over a coset set (closed under inversion) of the restrictions to E^x:
// symmetric cosets contribute their assigned values, asymmetric pairs contribute the
// composite sign characters, independent of the defaulted normalizations.
TameChar product_restricted(const std::vector<DoubleCoset>& cosets, const JumpDatum& jd,
                            const Occupancy& occ, GaussConv conv = GaussConv::standard);

struct TheoremReport {
    bool ok = true;
    std::vector<std::string> details;
    void fail(const std::string& s) {
        ok = false;
        details.push_back(s);
    }
};

// Rectifier = chi-data product, over E/F and over every subfield of the canonical
// tower; also runs the feasibility arithmetic on every symmetric coset.
TheoremReport verify_theorem(const JumpDatum& jd, GaussConv conv = GaussConv::standard);

} // namespace ttl
