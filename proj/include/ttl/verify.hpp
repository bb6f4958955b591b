#pragma once

#include "ttl/normconst.hpp"

#include <string>
#include <vector>

namespace ttl {

struct SuiteResult {
    std::string name;
    i64 checks = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
    void check(bool cond, const std::string& what) {
        ++checks;
        if (!cond) failures.push_back(what);
    }
};

struct SweepConfig {
    std::vector<i64> pset{2, 3, 5, 7};
    i64 e_max = 12;
    i64 f_max = 12;
    i64 seeds = 500; // total instances across the shape grid
    i64 threads = 0; // 0: TTL_THREADS env var, else hardware
    GaussConv conv = GaussConv::standard;
    i64 phi_choice = 0;
    std::uint64_t seed_base = 0x7a6d65 /* deterministic stream tag */;
};

i64 worker_count(i64 requested);

// counting lemma against brute-force orbit enumeration
SuiteResult run_counts(i64 e_max = 60,
                       std::vector<i64> qset = {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25});
// evenness of phi(d)/ord(q,d) for square q
SuiteResult run_evenness(i64 d_max = 200, i64 q_max = 170);
// #sym_unram == e(f-1) mod 2 across the (e,f) grid
SuiteResult run_parities(i64 ef_max = 12, std::vector<i64> qset = {2, 3, 5, 7, 9});
// sign/Jacobi machinery against explicit permutation parity and square sets
SuiteResult run_oracle_signs(i64 samples = 1200, i64 size_cap = 4096);
// normalized Gauss sums against direct cyclotomic summation
SuiteResult run_gauss(std::vector<i64> qset = {3, 5, 7, 9, 11, 13, 25, 27});
// rectifier = chi-data product, with all tower refinements
SuiteResult run_theorem(const SweepConfig& cfg);
// the component at sigma^{e/2} never occupied, across random data with even e
SuiteResult run_occupancy(i64 total = 10000, std::uint64_t seed_base = 0x0cc);
// restriction to F^x: jump-data independence, delta transitivity, unramified values
SuiteResult run_restriction(const SweepConfig& cfg);
// Delta_II,III2(varpi_E) = 1 on totally ramified sweeps
SuiteResult run_trivial_at_varpi(const SweepConfig& cfg);
// the chapter-8 normalization identity across cases I/II/III with row coverage
SuiteResult run_identity(GaussConv conv = GaussConv::standard, i64 phi_choice = 0,
                         std::uint64_t seed_base = 0x1d);
// conjugate Gauss convention and alternative Frobenius-twist choices
SuiteResult run_flips();

} // namespace ttl
