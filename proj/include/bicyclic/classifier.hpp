#pragma once

// Number-theoretic pair predicates, the success/failure case analysis with
// prime witnesses, constructive non-nilpotent and non-abelian witness
// groups, and the psi-based number classes.

#include <cstdint>
#include <optional>
#include <string>

#include "bicyclic/analysis.hpp"
#include "bicyclic/numtheory.hpp"

namespace bicyclic::cls {

using u64 = std::uint64_t;

enum class SuccessCase { Unit, PrimePowers, OddCompatible };
enum class FailureCase { OddCross, BothEven, MixedParity };
enum class CrossDirection { PDividesQMinus1, QDividesPMinus1 };
enum class ParityOrientation { MEvenNOdd, NEvenMOdd };

std::string to_string(SuccessCase c);
std::string to_string(FailureCase c);

struct PairClassification {
  u64 m = 1;
  u64 n = 1;
  bool satisfies_condition = true;  // the nilpotent-pair condition

  std::optional<SuccessCase> success;
  u64 shared_prime = 0;  // PrimePowers only

  std::optional<FailureCase> failure;
  u64 p = 0;  // OddCross: prime dividing m
  u64 q = 0;  // OddCross: prime dividing n
  std::optional<CrossDirection> direction;
  std::optional<ParityOrientation> orientation;
};

// gcd(n, phi(rad(m))) == gcd(m, phi(rad(n))) == 1
bool is_nilpotent_pair(u64 m, u64 n);
// gcd(m, phi(n)) == gcd(n, phi(m)) == 1
bool is_singular_pair(u64 m, u64 n);
// gcd(m, n) == gcd(m, phi(n)) == gcd(n, phi(m)) == 1
bool is_cyclic_pair(u64 m, u64 n);

PairClassification classify_pair(u64 m, u64 n);
// Overload reusing precomputed factorizations (sweep hot path).
PairClassification classify_pair(const nt::PrimeFactorization& fm,
                                 const nt::PrimeFactorization& fn);

// For a pair failing the nilpotent-pair condition, builds a concrete
// metacyclic group with generators of orders m and n that fails both
// nilpotency tests. Throws std::invalid_argument on satisfying pairs.
ana::BicyclicWitness build_nonnilpotent_witness(u64 m, u64 n);

// For a nilpotent but non-singular pair, builds a non-abelian nilpotent
// (m,n)-bicyclic group (p-group block times abelian block).
ana::BicyclicWitness build_nonabelian_witness(u64 m, u64 n);

enum class NumberClass { Cyclic, Abelian, Nilpotent, None };
std::string to_string(NumberClass c);

// Strongest class of n: every group of order n is cyclic / abelian /
// nilpotent, or none of these.
NumberClass number_class(u64 n);

// Certificate extraction for witness reporting: smallest exponent pair
// (i, j) such that gen_a^i and gen_b^j have the required relation.
struct CommutatorCertificate {
  grp::GroupElement a1, b1, commutator;
  u64 order_a1 = 1, order_b1 = 1;
};
// Coprime orders, both > 1, nonidentity commutator.
CommutatorCertificate noncommuting_coprime_pair(const ana::BicyclicWitness& w);
// Nonidentity commutator only (for non-abelian witnesses).
CommutatorCertificate noncommuting_pair(const ana::BicyclicWitness& w);

}  // namespace bicyclic::cls
