#include "ttl/jumps.hpp"

#include <algorithm>

namespace ttl {

namespace {

// |E_{i}/F| relative to shape (e, f): total degree divided by |E/E_i|
i64 deg_over_F(const JumpDatum& jd, size_t i) {
    i64 n = jd.shape.e * jd.shape.f;
    if (i >= jd.layers.size()) return 1; // E_{d+1} = F
    const auto& L = jd.layers[i];
    return n / (L.e_i * L.f_i);
}

// exponent divisor: mu_{E_i} = mu_{q^{f/f_i} - 1} inside mu_E
i64 mu_sub_index(const ExtShape& E, i64 f_i) {
    i64 sub = ipow_checked(E.q, E.f / f_i) - 1;
    return E.mu_order / sub;
}

} // namespace

ValidationReport validate(const JumpDatum& jd) {
    ValidationReport rep;
    auto fail = [&](const std::string& s) { rep.violations.push_back(s); };
    const ExtShape& E = jd.shape;
    const auto& L = jd.layers;
    if (L.empty()) {
        fail("no stages: the tower must contain E_0");
        return rep;
    }
    if (L[0].e_i != 1) fail("E/E_0 must be unramified (e_0 = 1)");
    for (size_t i = 0; i < L.size(); ++i) {
        if (L[i].e_i < 1 || E.e % L[i].e_i != 0) fail("e_i must divide e");
        if (L[i].f_i < 1 || E.f % L[i].f_i != 0) fail("f_i must divide f");
        if (L[i].r_i < 1) fail("jumps must be >= 1");
    }
    if (!rep.ok()) return rep;
    for (size_t i = 0; i + 1 < L.size(); ++i) {
        if (L[i + 1].e_i % L[i].e_i != 0 || L[i + 1].f_i % L[i].f_i != 0)
            fail("stage invariants must form a divisor chain");
        if (L[i + 1].e_i == L[i].e_i && L[i + 1].f_i == L[i].f_i)
            fail("consecutive stages must be distinct fields");
        if (L[i + 1].r_i <= L[i].r_i) fail("jumps must be strictly increasing");
    }
    {
        const auto& last = L.back();
        bool last_is_F = (last.e_i == E.e && last.f_i == E.f);
        if (last_is_F && !(E.e == 1 && E.f == 1)) fail("E_d must be a proper extension of F");
    }
    for (size_t i = 0; i < L.size(); ++i) {
        i64 e_next = (i + 1 < L.size()) ? L[i + 1].e_i : E.e;
        if (L[i].r_i % L[i].e_i != 0) fail("e(E/E_i) must divide r_i");
        if (gcd_i64(L[i].r_i, e_next) != L[i].e_i)
            fail("gcd(r_i, e(E/E_{i+1})) must equal e(E/E_i)");
    }
    for (size_t i = 0; i < L.size(); ++i) {
        i64 idx = mu_sub_index(E, L[i].f_i);
        if (L[i].zeta_i % idx != 0) {
            fail("zeta_i must lie in mu_{E_i}");
            continue;
        }
        i64 f_next = (i + 1 < L.size()) ? L[i + 1].f_i : E.f;
        i64 ordz = E.order_in_mu_E(L[i].zeta_i);
        i64 frob = ipow_checked(E.q, E.f / f_next); // Frobenius of E_{i+1}
        if (mult_order(frob, ordz) != f_next / L[i].f_i)
            fail("zeta_i must generate the residue extension of E_i/E_{i+1}");
    }
    return rep;
}

void require_valid(const JumpDatum& jd) {
    auto rep = validate(jd);
    if (!rep.ok()) throw error("invalid jump datum: " + rep.violations.front());
}

DerivedIndexes derive_indexes(const JumpDatum& jd) {
    require_valid(jd);
    DerivedIndexes out;
    const auto& L = jd.layers;
    for (size_t i = 0; i < L.size(); ++i)
        if (L[i].r_i % 2 == 1) out.S = (i64)i;
    for (size_t i = 0; i < L.size(); ++i) {
        if (deg_over_F(jd, i + 1) % 2 == 1) {
            out.T = (i64)i;
            break;
        }
    }
    if (jd.shape.f % 2 == 0) {
        for (size_t i = 0; i < L.size(); ++i) {
            i64 f_next = (i + 1 < L.size()) ? L[i + 1].f_i : jd.shape.f;
            if (L[i].f_i % 2 == 1 && f_next % 2 == 0) {
                out.R = (i64)i;
                break;
            }
        }
    }
    if (out.S) {
        out.i_plus = L[(size_t)*out.S].r_i;
        out.d_plus = deg_over_F(jd, (size_t)*out.S + 1);
    }
    if (out.T) out.i_minus = L[(size_t)*out.T].r_i;
    out.f0 = L[0].f_i; // |E/E_0| = f(E/E_0)
    out.f_varpi = jd.shape.f_varpi();

    // The S/T interplay (S <= T, S == T iff r_T odd, odd degrees below S, even
    // |E_S/E_{S+1}| and r_{S+1}) is a feature of the totally ramified even-degree
    // setting where the quadratic-stage formulas live; assert it exactly there.
    if (out.S && jd.shape.f == 1 && jd.shape.e % 2 == 0) {
        require(out.T.has_value() && *out.S <= *out.T, "jump indexes: S <= T violated");
        require((*out.S == *out.T) == (L[(size_t)*out.T].r_i % 2 == 1),
                "jump indexes: S == T iff r_T odd violated");
        for (i64 i = 0; i < *out.S; ++i) {
            i64 rel = deg_over_F(jd, (size_t)i) / deg_over_F(jd, (size_t)i + 1);
            require(rel % 2 == 1, "jump indexes: |E_i/E_{i+1}| must be odd below S");
        }
        if ((size_t)*out.S + 1 < L.size())
            require(L[(size_t)*out.S + 1].r_i % 2 == 0, "jump indexes: r_{S+1} must be even");
        i64 degS = deg_over_F(jd, (size_t)*out.S) / deg_over_F(jd, (size_t)*out.S + 1);
        require(degS % 2 == 0, "jump indexes: |E_S/E_{S+1}| must be even");
    }
    if (jd.shape.e % 2 == 0)
        require(out.S.has_value(), "jump indexes: even e forces an odd jump");
    return out;
}

std::optional<i64> layer_of_coset(const DoubleCoset& dc, const JumpDatum& jd) {
    if (dc.kind == Kind::trivial) return std::nullopt;
    const auto& L = jd.layers;
    auto member = [&](size_t i) {
        if (i >= L.size()) return true; // E_{d+1} = F
        return subfield_membership(dc, jd.shape, L[i].e_i, L[i].f_i);
    };
    if (member(0)) return std::nullopt; // inside W_{E_0}
    for (size_t i = 0; i < L.size(); ++i)
        if (member(i + 1) && !member(i)) return (i64)i;
    throw error("layer_of_coset: no stage found (datum invalid?)");
}

JumpDatum random_valid(const ExtShape& E, std::uint64_t seed) {
    SplitMix64 rng(seed);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        JumpDatum jd;
        jd.shape = E;
        // divisor chain: start at (1, f_0), grow to a proper divisor pair of (e, f)
        auto ediv = divisors(E.e);
        auto fdiv = divisors(E.f);
        i64 e_cur = 1;
        i64 f_cur = fdiv[(size_t)rng.below((i64)fdiv.size())];
        if (E.e == 1 && E.f > 1 && f_cur == E.f) f_cur = 1; // E_0 must stay above F
        std::vector<std::pair<i64, i64>> chain{{e_cur, f_cur}};
        while (true) {
            if ((e_cur == E.e && f_cur == E.f) || rng.below(3) == 0) break;
            std::vector<std::pair<i64, i64>> nexts;
            for (i64 de : ediv)
                for (i64 df : fdiv)
                    if (de % e_cur == 0 && df % f_cur == 0 && (de != e_cur || df != f_cur) &&
                        !(de == E.e && df == E.f))
                        nexts.push_back({de, df});
            if (nexts.empty()) break;
            auto pick = nexts[(size_t)rng.below((i64)nexts.size())];
            e_cur = pick.first;
            f_cur = pick.second;
            chain.push_back(pick);
        }
        if (E.e == 1 && E.f == 1) chain = {{1, 1}};
        // jumps bottom-up: r_i = e_i * s_i with gcd(s_i, e_{i+1}/e_i) = 1, increasing
        jd.layers.clear();
        i64 prev_r = 0;
        bool ok = true;
        for (size_t i = 0; i < chain.size(); ++i) {
            i64 e_i = chain[i].first;
            i64 e_next = (i + 1 < chain.size()) ? chain[i + 1].first : E.e;
            JumpLayer L;
            L.e_i = e_i;
            L.f_i = chain[i].second;
            i64 s = 0;
            bool found = false;
            for (int tries = 0; tries < 64; ++tries) {
                s = 1 + rng.below(8);
                if (gcd_i64(s, e_next / e_i) == 1 && e_i * s > prev_r) {
                    found = true;
                    break;
                }
            }
            if (!found) {
                // deterministic fallback: smallest admissible multiple
                for (s = prev_r / e_i + 1;; ++s)
                    if (gcd_i64(s, e_next / e_i) == 1 && e_i * s > prev_r) break;
            }
            L.r_i = e_i * s;
            prev_r = L.r_i;
            // leading root in mu_{E_i} with the residue-generation property
            i64 idx = mu_sub_index(E, L.f_i);
            i64 sub_order = E.mu_order / idx;
            i64 f_next = (i + 1 < chain.size()) ? chain[i + 1].second : E.f;
            i64 frob = ipow_checked(E.q, E.f / f_next);
            i64 want = f_next / L.f_i;
            bool zeta_ok = false;
            for (int tries = 0; tries < 100 && !zeta_ok; ++tries) {
                i64 u = rng.below(sub_order);
                L.zeta_i = u * idx;
                zeta_ok = (mult_order(frob, E.order_in_mu_E(L.zeta_i)) == want);
            }
            if (!zeta_ok) {
                // a generator of mu_{E_i} always works
                L.zeta_i = idx;
                zeta_ok = (mult_order(frob, E.order_in_mu_E(L.zeta_i)) == want);
            }
            if (!zeta_ok) {
                ok = false;
                break;
            }
            jd.layers.push_back(L);
        }
        if (!ok) continue;
        if (validate(jd).ok()) return jd;
    }
    throw error("random_valid: exhausted attempts (shape unsupported?)");
}

ExtShape subfield_shape(const ExtShape& E, i64 e_base, i64 f_base) {
    require(e_base >= 1 && E.e % e_base == 0 && f_base >= 1 && E.f % f_base == 0,
            "subfield_shape: base invariants must divide (e, f)");
    return make_ext_shape(E.p, E.m * (E.f / f_base), e_base, f_base, 0);
}

JumpDatum restrict_to_base(const JumpDatum& jd, const ExtShape& base_shape, i64 e_base,
                           i64 f_base) {
    require_valid(jd);
    const ExtShape& E = jd.shape;
    require(base_shape.e == e_base && base_shape.f == f_base, "restrict: shape mismatch");
    require(base_shape.qf == E.qf, "restrict: residue tower mismatch");
    JumpDatum out;
    out.shape = base_shape;
    for (const auto& L : jd.layers) {
        JumpLayer R;
        R.e_i = gcd_i64(L.e_i, e_base);
        R.f_i = gcd_i64(L.f_i, f_base);
        R.r_i = L.r_i;
        R.zeta_i = L.zeta_i; // same leading root, exponent unchanged in mu_E
        if (R.e_i == e_base && R.f_i == f_base) continue; // collapses into the base
        if (!out.layers.empty() && out.layers.back().e_i == R.e_i &&
            out.layers.back().f_i == R.f_i) {
            out.layers.back() = R; // merged stage keeps the larger jump and its root
        } else {
            out.layers.push_back(R);
        }
    }
    if (out.layers.empty()) {
        // every stage collapsed: the base-level character carries the top jump
        JumpLayer R;
        R.e_i = 1;
        R.f_i = 1;
        R.r_i = jd.layers.back().r_i;
        R.zeta_i = jd.layers.back().zeta_i;
        out.layers.push_back(R);
        require(e_base == 1 && f_base == 1, "restrict: nontrivial base with empty tower");
    }
    require_valid(out);
    derive_indexes(out); // asserts the S/T interplay on the restricted datum
    return out;
}

} // namespace ttl
