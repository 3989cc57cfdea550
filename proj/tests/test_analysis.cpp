#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>
#include <set>

#include "bicyclic/analysis.hpp"
#include "bicyclic/group.hpp"

using namespace bicyclic::ana;
using namespace bicyclic::grp;

namespace {

// Naive reference predicates working purely through the group interface.
bool abelian_by_table(const GroupPtr& g) {
  for (u64 x = 0; x < g->order(); ++x)
    for (u64 y = x + 1; y < g->order(); ++y)
      if (g->multiply_index(x, y) != g->multiply_index(y, x)) return false;
  return true;
}

bool coprime_commute_by_table(const GroupPtr& g) {
  std::vector<u64> ord(g->order());
  for (u64 i = 0; i < g->order(); ++i) ord[i] = g->element_order_index(i);
  for (u64 x = 0; x < g->order(); ++x)
    for (u64 y = 0; y < g->order(); ++y)
      if (std::gcd(ord[x], ord[y]) == 1 &&
          g->multiply_index(x, y) != g->multiply_index(y, x))
        return false;
  return true;
}

bool cyclic_by_table(const GroupPtr& g) {
  for (u64 x = 0; x < g->order(); ++x)
    if (g->element_order_index(x) == g->order()) return true;
  return false;
}

std::vector<GroupPtr> sample_groups() {
  return {
      make_holder_group(3, 2, 2, 0),    // S3
      make_holder_group(4, 2, 3, 2),    // quaternion
      make_holder_group(7, 3, 2, 0),    // order 21, non-nilpotent
      make_holder_group(9, 3, 4, 0),    // order 27 p-group, non-abelian
      make_holder_group(8, 4, 3, 4),    // 2-group
      make_holder_group(6, 4, 5, 0),    // order 24
      make_holder_group(15, 1, 0, 0),   // C15
      make_holder_group(4, 6, 1, 0),    // C4 x C6
      direct_product(make_holder_group(9, 3, 4, 0),
                     make_holder_group(5, 1, 0, 0)),
  };
}

}  // namespace

TEST_CASE("predicate fixtures") {
  auto s3 = make_holder_group(3, 2, 2, 0);
  CHECK_FALSE(is_abelian(s3));
  CHECK_FALSE(is_nilpotent_coprime(s3));
  CHECK_FALSE(is_nilpotent_sylow(s3));
  CHECK_FALSE(is_cyclic(s3));

  auto q8 = make_holder_group(4, 2, 3, 2);
  CHECK_FALSE(is_abelian(q8));
  CHECK(is_nilpotent_coprime(q8));  // p-groups are nilpotent
  CHECK(is_nilpotent_sylow(q8));
  CHECK_FALSE(is_cyclic(q8));

  auto c15 = make_holder_group(15, 1, 0, 0);
  CHECK(is_cyclic(c15));
  CHECK(is_abelian(c15));
  CHECK(is_nilpotent_coprime(c15));

  auto g21 = make_holder_group(7, 3, 2, 0);
  CHECK_FALSE(is_nilpotent_coprime(g21));
  CHECK_FALSE(is_nilpotent_sylow(g21));

  auto c4c6 = make_holder_group(4, 6, 1, 0);
  CHECK(is_abelian(c4c6));
  CHECK_FALSE(is_cyclic(c4c6));
  CHECK(is_nilpotent_sylow(c4c6));
}

TEST_CASE("order histograms") {
  CHECK(order_histogram(make_holder_group(3, 2, 2, 0)) ==
        OrderHistogram{{1, 1}, {2, 3}, {3, 2}});
  CHECK(order_histogram(make_holder_group(4, 2, 3, 2)) ==
        OrderHistogram{{1, 1}, {2, 1}, {4, 6}});
  CHECK(order_histogram(make_holder_group(6, 1, 0, 0)) ==
        OrderHistogram{{1, 1}, {2, 1}, {3, 2}, {6, 2}});
}

TEST_CASE("predicates agree with table-level oracles") {
  for (const auto& g : sample_groups()) {
    CAPTURE(g->describe());
    CHECK(is_abelian(g) == abelian_by_table(g));
    CHECK(is_nilpotent_coprime(g) == coprime_commute_by_table(g));
    CHECK(is_cyclic(g) == cyclic_by_table(g));
  }
}

TEST_CASE("two nilpotency algorithms agree over presentation family") {
  for (u64 m = 1; m <= 12; ++m) {
    for (u64 n = 1; n <= 6; ++n) {
      for (u64 r = (m == 1 ? 0 : 1); r < std::max<u64>(m, 1); ++r) {
        for (u64 s = 0; s < m; ++s) {
          HolderPresentation pres{m, n, m == 1 ? 0 : r, s};
          try {
            pres.validate();
          } catch (const std::invalid_argument&) {
            continue;
          }
          auto g = make_holder_group(pres.m, pres.n, pres.r, pres.s);
          CAPTURE(m);
          CAPTURE(n);
          CAPTURE(r);
          CAPTURE(s);
          const bool coprime = is_nilpotent_coprime(g);
          CHECK(coprime == is_nilpotent_sylow(g));
          // cyclic => abelian => nilpotent
          if (is_cyclic(g)) CHECK(is_abelian(g));
          if (is_abelian(g)) CHECK(coprime);
        }
        if (m == 1) break;
      }
    }
  }
}

TEST_CASE("bicyclic factorizations of the symmetric group on 3 points") {
  auto s3 = make_holder_group(3, 2, 2, 0);
  const auto ws = find_bicyclic_factorizations(s3, 2, 3);
  CHECK(ws.size() == 3);  // three subgroups of order 2, one of order 3
  for (const auto& w : ws) {
    CHECK(w.m == 2);
    CHECK(w.n == 3);
    CHECK(w.intersection_size == 1);
    CHECK(verify_witness(w));
  }
  // no (2,2)- or (3,3)-factorization: the products are too small
  CHECK(find_bicyclic_factorizations(s3, 2, 2).empty());
  CHECK(find_bicyclic_factorizations(s3, 3, 3).empty());
}

TEST_CASE("bicyclic factorizations of a cyclic group") {
  auto c6 = make_holder_group(6, 1, 0, 0);
  const auto ws = find_bicyclic_factorizations(c6, 6, 1);
  CHECK(ws.size() == 1);
  CHECK(ws[0].intersection_size == 1);
  CHECK(verify_witness(ws[0]));
  const auto ws23 = find_bicyclic_factorizations(c6, 2, 3);
  CHECK(ws23.size() == 1);
  CHECK(verify_witness(ws23[0]));
}

TEST_CASE("quaternion group needs intersection of size 2") {
  auto q8 = make_holder_group(4, 2, 3, 2);
  const auto ws = find_bicyclic_factorizations(q8, 4, 4);
  CHECK_FALSE(ws.empty());
  for (const auto& w : ws) {
    CHECK(w.intersection_size == 2);
    CHECK(verify_witness(w));
  }
  // |<a>||<b>| = 8 would need trivial intersection; impossible in Q8
  CHECK(find_bicyclic_factorizations(q8, 4, 2).empty());
  CHECK(find_bicyclic_factorizations(q8, 2, 4).empty());
}

TEST_CASE("witness product size divides as expected") {
  for (const auto& g : sample_groups()) {
    const u64 order = g->order();
    for (u64 m = 1; m <= order; ++m) {
      if (order % m != 0) continue;
      for (u64 n = 1; n <= order; ++n) {
        if ((m * n) % order != 0) continue;
        for (const auto& w : find_bicyclic_factorizations(g, m, n)) {
          CHECK(w.m * w.n == w.intersection_size * order);
          CHECK(g->element_order(w.gen_a) == m);
          CHECK(g->element_order(w.gen_b) == n);
          CHECK(verify_witness(w));
        }
      }
    }
  }
}

TEST_CASE("verify_witness rejects corrupted claims") {
  auto s3 = make_holder_group(3, 2, 2, 0);
  auto ws = find_bicyclic_factorizations(s3, 2, 3);
  REQUIRE(!ws.empty());
  BicyclicWitness bad = ws[0];
  bad.m = 3;  // wrong generator order
  CHECK_FALSE(verify_witness(bad));
  BicyclicWitness bad2 = ws[0];
  bad2.gen_b = bad2.gen_a;  // product set no longer covers the group
  CHECK_FALSE(verify_witness(bad2));
  BicyclicWitness bad3 = ws[0];
  bad3.intersection_size = 2;
  CHECK_FALSE(verify_witness(bad3));
}
