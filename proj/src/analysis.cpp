#include "bicyclic/analysis.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "bicyclic/numtheory.hpp"

namespace bicyclic::ana {

GroupScan::GroupScan(GroupPtr group) : group_(std::move(group)) {
  order_ = group_->order();
  if (order_ > grp::enumeration_cap())
    throw std::length_error("analysis: group order exceeds enumeration cap");
  identity_ = group_->index_of(group_->identity());

  const auto group_factors = nt::factorize(order_).factors;
  order_of_.resize(order_);
  inverse_of_.resize(order_);
  for (u64 x = 0; x < order_; ++x) {
    u64 k = order_;
    for (const auto& [p, e] : group_factors) {
      for (unsigned i = 0; i < e; ++i) {
        if (group_->power_index(x, k / p) == identity_)
          k /= p;
        else
          break;
      }
    }
    order_of_[x] = k;
    inverse_of_[x] = group_->power_index(x, k - 1);
    by_order_[k].push_back(x);
  }
}

u64 GroupScan::commutator_index(u64 x, u64 y) const {
  return group_->multiply_index(
      group_->multiply_index(inverse_of_[x], inverse_of_[y]),
      group_->multiply_index(x, y));
}

OrderHistogram GroupScan::histogram() const {
  OrderHistogram h;
  for (const auto& [d, members] : by_order_) h[d] = members.size();
  return h;
}

namespace {

bool structural_abelian(const FiniteGroup& g) {
  if (auto* h = dynamic_cast<const grp::HolderGroup*>(&g)) {
    // Generated by u and v, so [u, v] = 1 decides it.
    return h->commutator(h->normal_generator(), h->quotient_generator()) ==
           h->identity();
  }
  if (auto* p = dynamic_cast<const grp::DirectProductGroup*>(&g))
    return structural_abelian(*p->left()) && structural_abelian(*p->right());
  for (u64 x = 0, n = g.order(); x < n; ++x)
    for (u64 y = x + 1; y < n; ++y)
      if (g.multiply_index(x, y) != g.multiply_index(y, x)) return false;
  return true;
}

}  // namespace

bool GroupScan::abelian() const { return structural_abelian(*group_); }

bool GroupScan::nilpotent_coprime() const {
  for (auto it1 = by_order_.begin(); it1 != by_order_.end(); ++it1) {
    if (it1->first == 1) continue;
    for (auto it2 = std::next(it1); it2 != by_order_.end(); ++it2) {
      if (std::gcd(it1->first, it2->first) != 1) continue;
      for (u64 x : it1->second)
        for (u64 y : it2->second)
          if (commutator_index(x, y) != identity_) return false;
    }
  }
  return true;
}

bool GroupScan::nilpotent_sylow() const {
  for (const auto& [p, e] : nt::factorize(order_).factors) {
    u64 p_part = 1;
    for (unsigned i = 0; i < e; ++i) p_part *= p;
    u64 count = 0;
    for (const auto& [d, members] : by_order_) {
      u64 rest = d;
      while (rest % p == 0) rest /= p;
      if (rest == 1) count += members.size();
    }
    if (count != p_part) return false;
  }
  return true;
}

bool GroupScan::cyclic() const { return by_order_.rbegin()->first == order_; }

std::vector<BicyclicWitness> GroupScan::bicyclic_factorizations(u64 m,
                                                                u64 n) const {
  std::vector<BicyclicWitness> result;

  // Distinct cyclic subgroups of order k, each as (canonical generator,
  // sorted member indices). The canonical generator is the least index of
  // order k in the subgroup, which is the lexicographically least element
  // of maximal order.
  auto subgroups_of_order = [&](u64 k) {
    std::vector<std::pair<u64, std::vector<u64>>> subs;
    auto it = by_order_.find(k);
    if (it == by_order_.end() && k != 1) return subs;
    std::vector<u64> gens = (k == 1) ? std::vector<u64>{identity_} : it->second;
    for (u64 g : gens) {
      std::vector<u64> members;
      members.reserve(k);
      u64 cur = identity_;
      do {
        members.push_back(cur);
        cur = group_->multiply_index(cur, g);
      } while (cur != identity_);
      u64 canonical = g;
      for (u64 x : members)
        if (order_of_[x] == k && x < canonical) canonical = x;
      if (canonical != g) continue;  // subgroup already listed
      std::sort(members.begin(), members.end());
      subs.emplace_back(canonical, std::move(members));
    }
    return subs;
  };

  const auto subs_m = subgroups_of_order(m);
  const auto subs_n = (m == n) ? subs_m : subgroups_of_order(n);
  if (subs_m.empty() || subs_n.empty()) return result;

  std::vector<u64> stamp(order_, 0);
  u64 tick = 0;
  for (const auto& [can_a, xs] : subs_m) {
    for (const auto& [can_b, ys] : subs_n) {
      ++tick;
      u64 distinct = 0;
      for (u64 x : xs)
        for (u64 y : ys) {
          u64 z = group_->multiply_index(x, y);
          if (stamp[z] != tick) {
            stamp[z] = tick;
            ++distinct;
          }
        }
      if (distinct != order_) continue;
      std::vector<u64> common;
      std::set_intersection(xs.begin(), xs.end(), ys.begin(), ys.end(),
                            std::back_inserter(common));
      BicyclicWitness w;
      w.group = group_;
      w.gen_a = group_->element_at(can_a);
      w.gen_b = group_->element_at(can_b);
      w.m = m;
      w.n = n;
      w.intersection_size = common.size();
      result.push_back(std::move(w));
    }
  }
  return result;
}

OrderHistogram order_histogram(const GroupPtr& g) {
  return GroupScan(g).histogram();
}
bool is_abelian(const GroupPtr& g) { return structural_abelian(*g); }
bool is_nilpotent_coprime(const GroupPtr& g) {
  return GroupScan(g).nilpotent_coprime();
}
bool is_nilpotent_sylow(const GroupPtr& g) {
  return GroupScan(g).nilpotent_sylow();
}
bool is_cyclic(const GroupPtr& g) { return GroupScan(g).cyclic(); }

std::vector<BicyclicWitness> find_bicyclic_factorizations(const GroupPtr& g,
                                                          u64 m, u64 n) {
  return GroupScan(g).bicyclic_factorizations(m, n);
}

bool verify_witness(const BicyclicWitness& w) {
  const FiniteGroup& g = *w.group;
  if (g.element_order(w.gen_a) != w.m) return false;
  if (g.element_order(w.gen_b) != w.n) return false;

  auto power_indices = [&](const GroupElement& x, u64 k) {
    std::vector<u64> out;
    out.reserve(k);
    GroupElement cur = g.identity();
    for (u64 i = 0; i < k; ++i) {
      out.push_back(g.index_of(cur));
      cur = g.multiply(cur, x);
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  const auto xs = power_indices(w.gen_a, w.m);
  const auto ys = power_indices(w.gen_b, w.n);

  std::set<u64> product;
  for (u64 x : xs)
    for (u64 y : ys) product.insert(g.multiply_index(x, y));
  if (product.size() != g.order()) return false;

  std::vector<u64> common;
  std::set_intersection(xs.begin(), xs.end(), ys.begin(), ys.end(),
                        std::back_inserter(common));
  if (common.size() != w.intersection_size) return false;
  return w.m * w.n == w.intersection_size * g.order();
}

}  // namespace bicyclic::ana
