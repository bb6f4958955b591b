#pragma once

#include "ttl/rot.hpp"
#include "ttl/shape.hpp"

namespace ttl {

// A tamely ramified character of E^x (trivial on the 1-units), determined by its
// multiplier on mu_E and its value at varpi_E: chi(zeta_gen^z varpi_E^a) =
// e^{2 pi i z mu_mult/(q^f-1)} varpi_val^a.
struct TameChar {
    i64 mu_order = 1;
    i64 mu_mult = 0;
    Rot varpi_val;

    static TameChar trivial(const ExtShape& E) {
        TameChar c;
        c.mu_order = E.mu_order;
        return c;
    }

    Rot at_unit(i64 zeta_exp) const {
        return Rot::reduced(mulmod(mu_mult, ((zeta_exp % mu_order) + mu_order) % mu_order,
                                   mu_order),
                            mu_order);
    }

    Rot at(i64 zeta_exp, i64 varpi_pow) const { return at_unit(zeta_exp) + varpi_pow * varpi_val; }

    TameChar& mul(const TameChar& o) {
        require(mu_order == o.mu_order, "TameChar: mixed unit groups");
        mu_mult = (mu_mult + o.mu_mult) % mu_order;
        varpi_val = varpi_val + o.varpi_val;
        return *this;
    }

    TameChar inverse() const {
        TameChar c = *this;
        c.mu_mult = (mu_order - mu_mult) % mu_order;
        c.varpi_val = -varpi_val;
        return c;
    }

    // multiply by the quadratic character given as a sign at the mu_E generator
    TameChar& mul_unit_sign(int s) {
        if (s == -1) {
            require(mu_order % 2 == 0, "TameChar: no quadratic character on odd mu_E");
            mu_mult = (mu_mult + mu_order / 2) % mu_order;
        }
        return *this;
    }

    TameChar& mul_varpi(Rot r) {
        varpi_val = varpi_val + r;
        return *this;
    }

    friend bool operator==(const TameChar&, const TameChar&) = default;
};

} // namespace ttl
