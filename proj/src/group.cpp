#include "bicyclic/group.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>

#include "bicyclic/numtheory.hpp"

namespace bicyclic::grp {

using nt::mulmod;
using nt::powmod;

u64 enumeration_cap() {
  if (const char* env = std::getenv("BICYCLIC_MAX_ORDER")) {
    char* end = nullptr;
    u64 cap = std::strtoull(env, &end, 10);
    if (end != env && cap > 0) return cap;
  }
  return kDefaultEnumerationCap;
}

void HolderPresentation::validate() const {
  if (m == 0 || n == 0)
    throw std::invalid_argument("presentation: m and n must be positive");
  u64 product;
  if (__builtin_mul_overflow(m, n, &product))
    throw std::invalid_argument("presentation: m*n exceeds 64 bits");
  if (s >= m)
    throw std::invalid_argument("presentation: s out of range [0, m)");
  if (m == 1 || n == 1) return;  // degenerate, r ignored
  if (r >= m)
    throw std::invalid_argument("presentation: r out of range [0, m)");
  if (std::gcd(r, m) != 1)
    throw std::invalid_argument("presentation: gcd(r, m) != 1");
  if (powmod(r, n, m) != 1 % m)
    throw std::invalid_argument("presentation: r^n != 1 (mod m)");
  if (mulmod((r + m - 1) % m, s, m) != 0)
    throw std::invalid_argument("presentation: (r-1)s != 0 (mod m)");
}

// ---------------------------------------------------------------------------
// FiniteGroup

void FiniteGroup::check_element(const GroupElement& x) const {
  if (x.coords.size() != coord_count())
    throw std::out_of_range("element: wrong coordinate count");
}

GroupElement FiniteGroup::power(const GroupElement& x, std::int64_t k) const {
  if (k < 0) return inverse(power(x, -k));
  return element_at(power_index(index_of(x), static_cast<u64>(k)));
}

u64 FiniteGroup::power_index(u64 x, u64 k) const {
  u64 result = index_of(identity());
  u64 base = x;
  while (k > 0) {
    if (k & 1) result = multiply_index(result, base);
    base = multiply_index(base, base);
    k >>= 1;
  }
  return result;
}

GroupElement FiniteGroup::inverse(const GroupElement& x) const {
  return power(x, static_cast<std::int64_t>(element_order(x)) - 1);
}

u64 FiniteGroup::element_order_index(u64 x) const {
  const u64 id = index_of(identity());
  u64 k = order();
  for (const auto& [p, e] : nt::factorize(k).factors) {
    for (unsigned i = 0; i < e; ++i) {
      if (power_index(x, k / p) == id)
        k /= p;
      else
        break;
    }
  }
  return k;
}

u64 FiniteGroup::element_order(const GroupElement& x) const {
  return element_order_index(index_of(x));
}

GroupElement FiniteGroup::commutator(const GroupElement& x,
                                     const GroupElement& y) const {
  return multiply(multiply(inverse(x), inverse(y)), multiply(x, y));
}

std::vector<GroupElement> FiniteGroup::elements() const {
  const u64 n = order();
  if (n > enumeration_cap())
    throw std::length_error("elements: group order exceeds enumeration cap");
  std::vector<GroupElement> result;
  result.reserve(n);
  for (u64 i = 0; i < n; ++i) result.push_back(element_at(i));
  return result;
}

std::vector<GroupElement> FiniteGroup::cyclic_subgroup(
    const GroupElement& x) const {
  std::vector<GroupElement> result;
  GroupElement e = identity();
  GroupElement cur = x;
  result.push_back(e);
  while (cur != e) {
    result.push_back(cur);
    cur = multiply(cur, x);
  }
  std::sort(result.begin(), result.end());
  return result;
}

GroupElement FiniteGroup::canonical_generator(
    std::span<const GroupElement> subgroup) const {
  u64 max_order = 0;
  for (const auto& g : subgroup) max_order = std::max(max_order, element_order(g));
  std::vector<GroupElement> sorted(subgroup.begin(), subgroup.end());
  std::sort(sorted.begin(), sorted.end());
  for (const auto& g : sorted)
    if (element_order(g) == max_order) return g;
  throw std::logic_error("canonical_generator: empty subgroup");
}

// ---------------------------------------------------------------------------
// HolderGroup

HolderGroup::HolderGroup(HolderPresentation pres) : pres_(pres) {
  pres_.validate();
  u64 r = (pres_.m == 1 || pres_.n == 1) ? 1 % pres_.m : pres_.r;
  r_pow_.resize(pres_.n);
  u64 acc = 1 % pres_.m;
  for (u64 j = 0; j < pres_.n; ++j) {
    r_pow_[j] = acc;
    acc = mulmod(acc, r, pres_.m);
  }
}

GroupElement HolderGroup::multiply(const GroupElement& x,
                                   const GroupElement& y) const {
  check_element(x);
  check_element(y);
  if (x.coords[0] >= pres_.m || x.coords[1] >= pres_.n ||
      y.coords[0] >= pres_.m || y.coords[1] >= pres_.n)
    throw std::out_of_range("element: coordinate out of range");
  return element_at(multiply_index(index_of(x), index_of(y)));
}

u64 HolderGroup::multiply_index(u64 x, u64 y) const {
  const u64 m = pres_.m, n = pres_.n;
  const u64 i1 = x / n, j1 = x % n;
  const u64 i2 = y / n, j2 = y % n;
  u64 i = (i1 + mulmod(i2, r_pow_[j1], m)) % m;
  u64 j = j1 + j2;
  if (j >= n) {
    j -= n;
    i = (i + pres_.s) % m;
  }
  return i * n + j;
}

u64 HolderGroup::index_of(const GroupElement& x) const {
  check_element(x);
  if (x.coords[0] >= pres_.m || x.coords[1] >= pres_.n)
    throw std::out_of_range("element: coordinate out of range");
  return x.coords[0] * pres_.n + x.coords[1];
}

GroupElement HolderGroup::element_at(u64 index) const {
  if (index >= order()) throw std::out_of_range("element index out of range");
  return {{index / pres_.n, index % pres_.n}};
}

GroupElement HolderGroup::normal_generator() const {
  return from_exponents(1, 0);
}

GroupElement HolderGroup::quotient_generator() const {
  return from_exponents(0, 1);
}

GroupElement HolderGroup::from_exponents(u64 i, u64 j) const {
  // v^(qn + j') = u^(sq) v^j' since u^s is central.
  const u64 q = j / pres_.n;
  const u64 jr = j % pres_.n;
  const u64 ir = (i % pres_.m + mulmod(pres_.s, q % pres_.m, pres_.m)) % pres_.m;
  return {{ir, jr}};
}

nlohmann::json HolderGroup::describe() const {
  return {{"m", pres_.m}, {"n", pres_.n}, {"r", pres_.r}, {"s", pres_.s}};
}

// ---------------------------------------------------------------------------
// DirectProductGroup

DirectProductGroup::DirectProductGroup(GroupPtr left, GroupPtr right)
    : left_(std::move(left)), right_(std::move(right)) {
  u64 product;
  if (__builtin_mul_overflow(left_->order(), right_->order(), &product) ||
      product > enumeration_cap())
    throw std::length_error("direct_product: order exceeds enumeration cap");
}

std::size_t DirectProductGroup::coord_count() const {
  return left_->coord_count() + right_->coord_count();
}

GroupElement DirectProductGroup::combine(const GroupElement& l,
                                         const GroupElement& r) const {
  GroupElement out;
  out.coords.reserve(l.coords.size() + r.coords.size());
  out.coords.insert(out.coords.end(), l.coords.begin(), l.coords.end());
  out.coords.insert(out.coords.end(), r.coords.begin(), r.coords.end());
  return out;
}

GroupElement DirectProductGroup::identity() const {
  return combine(left_->identity(), right_->identity());
}

namespace {
std::pair<GroupElement, GroupElement> split(const DirectProductGroup& g,
                                            const GroupElement& x) {
  const std::size_t nl = g.left()->coord_count();
  GroupElement l, r;
  l.coords.assign(x.coords.begin(), x.coords.begin() + nl);
  r.coords.assign(x.coords.begin() + nl, x.coords.end());
  return {std::move(l), std::move(r)};
}
}  // namespace

GroupElement DirectProductGroup::multiply(const GroupElement& x,
                                          const GroupElement& y) const {
  check_element(x);
  check_element(y);
  auto [xl, xr] = split(*this, x);
  auto [yl, yr] = split(*this, y);
  return combine(left_->multiply(xl, yl), right_->multiply(xr, yr));
}

u64 DirectProductGroup::multiply_index(u64 x, u64 y) const {
  const u64 ro = right_->order();
  return left_->multiply_index(x / ro, y / ro) * ro +
         right_->multiply_index(x % ro, y % ro);
}

u64 DirectProductGroup::index_of(const GroupElement& x) const {
  check_element(x);
  auto [l, r] = split(*this, x);
  return left_->index_of(l) * right_->order() + right_->index_of(r);
}

GroupElement DirectProductGroup::element_at(u64 index) const {
  if (index >= order()) throw std::out_of_range("element index out of range");
  const u64 ro = right_->order();
  return combine(left_->element_at(index / ro), right_->element_at(index % ro));
}

nlohmann::json DirectProductGroup::describe() const {
  return {{"product",
           nlohmann::json::array({left_->describe(), right_->describe()})}};
}

GroupPtr make_holder_group(u64 m, u64 n, u64 r, u64 s) {
  return std::make_shared<HolderGroup>(HolderPresentation{m, n, r, s});
}

GroupPtr direct_product(GroupPtr left, GroupPtr right) {
  return std::make_shared<DirectProductGroup>(std::move(left),
                                              std::move(right));
}

}  // namespace bicyclic::grp
