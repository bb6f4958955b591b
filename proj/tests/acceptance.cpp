// Acceptance suite: one line per criterion, exit 0 iff everything passes.

#include "ttl/verify.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace ttl;

namespace {

struct Criterion {
    std::string label;
    std::function<SuiteResult()> run;
};

} // namespace

int main() {
    SweepConfig theorem_cfg; // defaults: p in {2,3,5,7}, (e,f) <= (12,12), 500+ data
    std::vector<Criterion> criteria = {
        {"01 double-coset count vs enumeration (e <= 60)", [] { return run_counts(); }},
        {"02 evenness of phi(d)/ord(q,d) for square q", [] { return run_evenness(); }},
        {"03 #sym_unram == e(f-1) mod 2 on the (e,f) grid", [] { return run_parities(); }},
        {"04 sign/Jacobi machinery vs permutation oracles", [] { return run_oracle_signs(); }},
        {"05 Gauss sums vs direct cyclotomic summation", [] { return run_gauss(); }},
        {"06 rectifier = chi product, all tower refinements",
         [&] { return run_theorem(theorem_cfg); }},
        {"07 Delta_II,III2(varpi_E) = 1, totally ramified",
         [&] { return run_trivial_at_varpi(theorem_cfg); }},
        {"08 kappa c_theta Delta^2 = epsilon_L Delta_I,II,III",
         [] { return run_identity(); }},
        {"09 component at sigma^{e/2} never occupied (10^4 data)",
         [] { return run_occupancy(); }},
        {"10 restriction to F^x: independence + transitivity",
         [&] { return run_restriction(theorem_cfg); }},
        {"11 convention flips (conjugate psi, alternative twist)",
         [] { return run_flips(); }},
    };

    bool all_ok = true;
    for (auto& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        SuiteResult r;
        try {
            r = c.run();
        } catch (const std::exception& ex) {
            r.failures.push_back(std::string("exception: ") + ex.what());
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        bool ok = r.ok();
        all_ok = all_ok && ok;
        std::printf("%s  %s  (%lld checks, %lld ms)\n", ok ? "PASS" : "FAIL",
                    c.label.c_str(), (long long)r.checks, (long long)ms);
        if (!ok)
            for (size_t i = 0; i < r.failures.size() && i < 5; ++i)
                std::printf("      %s\n", r.failures[i].c_str());
    }
    return all_ok ? 0 : 1;
}
