#pragma once

// Structural tests on concrete finite groups: abelian / nilpotent (two
// independent algorithms) / cyclic checks, order histograms, and detection
// of (m,n)-bicyclic factorizations.

#include <cstdint>
#include <map>
#include <vector>

#include "bicyclic/group.hpp"

namespace bicyclic::ana {

using grp::FiniteGroup;
using grp::GroupElement;
using grp::GroupPtr;
using u64 = std::uint64_t;

// element order -> number of elements of that order
using OrderHistogram = std::map<u64, u64>;

// A concrete group together with designated generators realizing an
// (m,n)-bicyclic factorization G = <gen_a><gen_b>.
struct BicyclicWitness {
  GroupPtr group;
  GroupElement gen_a;
  GroupElement gen_b;
  u64 m = 1;
  u64 n = 1;
  u64 intersection_size = 1;  // |<gen_a> n <gen_b>| = m*n / |G|
};

// Precomputed per-group tables (element orders, inverses) shared by the
// predicates below; immutable once built.
class GroupScan {
 public:
  explicit GroupScan(GroupPtr group);

  const GroupPtr& group() const { return group_; }
  u64 order() const { return order_; }
  u64 order_at(u64 index) const { return order_of_[index]; }
  u64 inverse_at(u64 index) const { return inverse_of_[index]; }
  u64 commutator_index(u64 x, u64 y) const;

  OrderHistogram histogram() const;
  bool abelian() const;
  bool nilpotent_coprime() const;
  bool nilpotent_sylow() const;
  bool cyclic() const;
  std::vector<BicyclicWitness> bicyclic_factorizations(u64 m, u64 n) const;

 private:
  GroupPtr group_;
  u64 order_ = 1;
  u64 identity_ = 0;
  std::vector<u64> order_of_;
  std::vector<u64> inverse_of_;
  std::map<u64, std::vector<u64>> by_order_;
};

OrderHistogram order_histogram(const GroupPtr& g);
bool is_abelian(const GroupPtr& g);
// True iff every pair of elements with coprime orders commutes.
bool is_nilpotent_coprime(const GroupPtr& g);
// True iff for each prime p | |G| the count of p-power-order elements
// equals the full p-part of |G| (all Sylow subgroups normal).
bool is_nilpotent_sylow(const GroupPtr& g);
bool is_cyclic(const GroupPtr& g);

// One witness per ordered pair of cyclic subgroups (X, Y) with generators
// of orders m and n and |XY| = |G|; deterministic order, deduplicated by
// canonical generators.
std::vector<BicyclicWitness> find_bicyclic_factorizations(const GroupPtr& g,
                                                          u64 m, u64 n);

// Recompute every BicyclicWitness invariant from scratch.
bool verify_witness(const BicyclicWitness& w);

}  // namespace bicyclic::ana
