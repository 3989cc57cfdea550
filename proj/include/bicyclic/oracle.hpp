#pragma once

// Brute-force verification and counting: exhaustive scans over the
// metacyclic presentation universe, equivalence sweeps for the pair
// case analysis, and pair-counting experiments.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bicyclic/analysis.hpp"
#include "bicyclic/group.hpp"

namespace bicyclic::orc {

using u64 = std::uint64_t;

inline constexpr u64 kDefaultExhaustiveCap = 2000;

struct ScannedPresentation {
  u64 m = 1, n = 1, r = 1, s = 0;

  friend bool operator==(const ScannedPresentation&,
                         const ScannedPresentation&) = default;
};

struct Counterexample {
  ScannedPresentation presentation;
  ana::BicyclicWitness witness;
};

struct VerificationReport {
  u64 m = 1, n = 1;
  bool predicate = true;  // nilpotent-pair verdict
  std::vector<u64> orders_scanned;
  u64 presentations_scanned = 0;
  u64 realizations_found = 0;
  u64 groups_realized = 0;
  bool all_nilpotent = true;
  bool all_abelian = true;
  bool all_cyclic = true;
  bool algorithms_agree = true;  // coprime vs Sylow route, every group
  std::vector<Counterexample> counterexamples;
  std::string universe = "holder";

  bool consistent() const { return predicate == all_nilpotent; }
};

// Scans every metacyclic presentation of every admissible order
// m*n/d for d | gcd(m,n), collects (m,n)-bicyclic realizations and tests
// each with both nilpotency algorithms. Requires m*n <= order_cap.
VerificationReport verify_pair_exhaustive(u64 m, u64 n,
                                          u64 order_cap = kDefaultExhaustiveCap);

struct Discrepancy {
  u64 m = 0, n = 0;
  std::string detail;
};

struct LemmaSweepResult {
  bool ok = true;
  u64 pairs_checked = 0;
  u64 pairs_satisfying = 0;
  std::optional<Discrepancy> first_discrepancy;
};

// For every 1 <= m,n <= x checks that the pair fails the nilpotent-pair
// condition exactly when the case analysis yields a failure case with
// verifiable prime/parity witnesses. workers == 0 uses hardware parallelism.
LemmaSweepResult sweep_lemma_equivalence(u64 x, unsigned workers = 0);

struct TheoremSweepReport {
  u64 pairs_total = 0;
  u64 pairs_satisfying = 0;
  u64 pairs_failing = 0;
  u64 presentations_scanned = 0;
  u64 realizations_found = 0;
  u64 witnesses_verified = 0;
  bool ok = true;
  std::vector<Discrepancy> discrepancies;
};

// Both directions over the grid m,n <= x with m*n <= order_cap: satisfying
// pairs get the exhaustive scan, failing pairs get a verified witness.
TheoremSweepReport sweep_theorem(u64 x, u64 order_cap, unsigned workers = 0);

struct CorollarySweepReport {
  u64 singular_pairs_checked = 0;
  u64 cyclic_pairs_checked = 0;
  u64 nonabelian_witnesses = 0;
  u64 noncyclic_checks = 0;
  bool ok = true;
  std::vector<Discrepancy> discrepancies;
};

// Abelian and cyclic characterizations at desk scale: singular pairs yield
// only abelian realizations, cyclic pairs only cyclic ones, non-singular
// nilpotent pairs admit a verified non-abelian witness, and singular pairs
// with gcd(m,n) > 1 admit a non-cyclic realization.
CorollarySweepReport sweep_corollaries(u64 x, u64 order_cap,
                                       unsigned workers = 0);

struct PairCounts {
  u64 x = 1;
  u64 nilpotent_pairs = 0;
  u64 singular_pairs = 0;
  u64 cyclic_pairs = 0;
  u64 cyclic_numbers = 0;
};

PairCounts count_pairs(u64 x);

// e^gamma * x / logloglog(x); asymptotic count of cyclic numbers <= x.
// Requires x >= 16 so the triple logarithm is positive.
double erdos_estimate(u64 x);

}  // namespace bicyclic::orc
