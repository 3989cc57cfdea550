#pragma once

// Concrete finite group engine: metacyclic groups given by a presentation
//   < u, v | u^m = 1, v^n = u^s, v u v^-1 = u^r >
// with r^n == 1 (mod m) and (r-1)s == 0 (mod m), plus binary direct
// products. Elements are kept in normal form u^i v^j.

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "json.hpp"

namespace bicyclic::grp {

using u64 = std::uint64_t;

// Normal-form coordinates: (i, j) for a metacyclic group, concatenated
// component coordinates for a direct product.
struct GroupElement {
  std::vector<u64> coords;

  auto operator<=>(const GroupElement&) const = default;
};

struct HolderPresentation {
  u64 m = 1;
  u64 n = 1;
  u64 r = 1;
  u64 s = 0;

  // Throws std::invalid_argument naming the failing congruence.
  void validate() const;
};

// Elements enumerable up to this many; override with BICYCLIC_MAX_ORDER.
inline constexpr u64 kDefaultEnumerationCap = 100'000;
u64 enumeration_cap();

class FiniteGroup {
 public:
  virtual ~FiniteGroup() = default;

  virtual u64 order() const = 0;
  virtual std::size_t coord_count() const = 0;
  virtual GroupElement identity() const = 0;
  virtual GroupElement multiply(const GroupElement& x,
                                const GroupElement& y) const = 0;

  // Index <-> element bijection, lexicographic in the coordinates.
  virtual u64 index_of(const GroupElement& x) const = 0;
  virtual GroupElement element_at(u64 index) const = 0;
  virtual u64 multiply_index(u64 x, u64 y) const = 0;

  virtual nlohmann::json describe() const = 0;

  GroupElement inverse(const GroupElement& x) const;
  GroupElement power(const GroupElement& x, std::int64_t k) const;
  u64 element_order(const GroupElement& x) const;
  // x^-1 y^-1 x y
  GroupElement commutator(const GroupElement& x, const GroupElement& y) const;

  u64 power_index(u64 x, u64 k) const;
  u64 element_order_index(u64 x) const;

  // All elements in index order; throws if order() exceeds the cap.
  std::vector<GroupElement> elements() const;

  // <x> as a sorted set of elements.
  std::vector<GroupElement> cyclic_subgroup(const GroupElement& x) const;
  // Lexicographically least element of maximal order in the subgroup.
  GroupElement canonical_generator(std::span<const GroupElement> subgroup) const;

 protected:
  void check_element(const GroupElement& x) const;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

class HolderGroup final : public FiniteGroup {
 public:
  explicit HolderGroup(HolderPresentation pres);

  const HolderPresentation& presentation() const { return pres_; }

  u64 order() const override { return pres_.m * pres_.n; }
  std::size_t coord_count() const override { return 2; }
  GroupElement identity() const override { return {{0, 0}}; }
  GroupElement multiply(const GroupElement& x,
                        const GroupElement& y) const override;
  u64 index_of(const GroupElement& x) const override;
  GroupElement element_at(u64 index) const override;
  u64 multiply_index(u64 x, u64 y) const override;
  nlohmann::json describe() const override;

  GroupElement normal_generator() const;    // u, order m
  GroupElement quotient_generator() const;  // v, order n*m/gcd(m,s)
  // Reduce arbitrary exponents of u^i v^j into normal form.
  GroupElement from_exponents(u64 i, u64 j) const;

 private:
  HolderPresentation pres_;
  std::vector<u64> r_pow_;  // r^j mod m for j in [0, n)
};

class DirectProductGroup final : public FiniteGroup {
 public:
  DirectProductGroup(GroupPtr left, GroupPtr right);

  const GroupPtr& left() const { return left_; }
  const GroupPtr& right() const { return right_; }

  u64 order() const override { return left_->order() * right_->order(); }
  std::size_t coord_count() const override;
  GroupElement identity() const override;
  GroupElement multiply(const GroupElement& x,
                        const GroupElement& y) const override;
  u64 index_of(const GroupElement& x) const override;
  GroupElement element_at(u64 index) const override;
  u64 multiply_index(u64 x, u64 y) const override;
  nlohmann::json describe() const override;

  GroupElement combine(const GroupElement& l, const GroupElement& r) const;

 private:
  GroupPtr left_;
  GroupPtr right_;
};

GroupPtr make_holder_group(u64 m, u64 n, u64 r, u64 s);
GroupPtr direct_product(GroupPtr left, GroupPtr right);

}  // namespace bicyclic::grp
