#pragma once

#include <cstdint>
#include <string>

#include "hyperdom/constructions.hpp"
#include "hyperdom/hypergraph.hpp"
#include "hyperdom/report.hpp"

namespace hyperdom {

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;
inline constexpr int kDefaultMaxAdded = 2;
inline constexpr std::uint64_t kDefaultSeed = 42;
inline constexpr int kDefaultTrials = 500;

/// Worker count from HYPERDOM_THREADS (unset or 0 means hardware concurrency).
int worker_count_from_env();

/// Reduction lemmas on one input, plus the linear/intersecting preconditions.
VerificationReport check_lemmas(const Hypergraph& h, const std::string& label, int r);

/// Every admissible peel order of H ends in an H* with one pendant per edge,
/// r-uniform, satisfying the gamma/tau equality chain, and whose H' is
/// isomorphic to F or F-. A non-empty `expected_hprime` ("F" or "F-") pins
/// which one.
VerificationReport check_peel_orders(const Hypergraph& h, const std::string& label, int r,
                                     const std::string& expected_hprime = "");

/// Forward direction of the characterization over {F1, F1-, F2, F3}.
VerificationReport verify_theorem_forward();

struct ExtensionOptions {
    int max_added = kDefaultMaxAdded;
    std::uint64_t budget = kDefaultBudget;
    int threads = 1;
};

/// Adds up to `max_added` new edges of size 2..4 on V(base) keeping the result
/// linear and intersecting, and classifies every candidate by gamma and
/// isomorphism class. `base` must be F1 or F1-. Throws BudgetExceeded.
VerificationReport extension_search(ConstructionName base, const ExtensionOptions& options);

/// Forward check plus extension searches over both bases.
VerificationReport verify_theorem(const ExtensionOptions& options);

/// Random check of gamma <= (r-1) alpha' for rank r in [2, 5], plus the F1
/// sharpness witness and, for r = 2, gamma <= alpha' <= tau.
VerificationReport verify_bound(int r, int trials, std::uint64_t seed);

/// enumerate_f3_candidates is non-empty and all results are isomorphic.
VerificationReport audit_f3();

struct VerifyAllOptions {
    std::uint64_t seed = kDefaultSeed;
    int trials = kDefaultTrials;
    ExtensionOptions extension;
};

VerificationReport verify_all(const VerifyAllOptions& options);

/// Parameters (n, m) used by verify_bound for one trial; n <= 12, m <= 8.
struct RandomShape {
    int n;
    int m;
};
Hypergraph random_instance(int r, std::uint64_t seed, RandomShape* shape = nullptr);

}  // namespace hyperdom
