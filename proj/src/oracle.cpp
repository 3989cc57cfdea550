#include "bicyclic/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "bicyclic/classifier.hpp"
#include "bicyclic/numtheory.hpp"

namespace bicyclic::orc {

namespace {

// Euler's constant, 20 decimal digits.
constexpr double kEulerGamma = 0.57721566490153286061;

unsigned resolve_workers(unsigned workers, u64 rows) {
  unsigned w = workers ? workers : std::thread::hardware_concurrency();
  if (w == 0) w = 1;
  return static_cast<unsigned>(std::min<u64>(w, rows));
}

// Runs fn(chunk_index, row_lo, row_hi) over [1, x] split into contiguous
// chunks, one thread each. Chunk results must be merged in index order by
// the caller for determinism.
template <typename Fn>
void run_chunked(u64 x, unsigned workers, Fn&& fn) {
  const unsigned w = resolve_workers(workers, x);
  if (w <= 1) {
    fn(0, 1, x + 1);
    return;
  }
  std::vector<std::thread> threads;
  const u64 chunk = (x + w - 1) / w;
  for (unsigned i = 0; i < w; ++i) {
    const u64 lo = 1 + i * chunk;
    const u64 hi = std::min(x + 1, lo + chunk);
    if (lo >= hi) break;
    threads.emplace_back([&fn, i, lo, hi] { fn(i, lo, hi); });
  }
  for (auto& t : threads) t.join();
}

std::vector<u64> divisors_of(u64 n) {
  std::vector<u64> small, large;
  for (u64 d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

VerificationReport verify_pair_exhaustive(u64 m, u64 n, u64 order_cap) {
  if (m == 0 || n == 0)
    throw std::invalid_argument("verify: pair members must be positive");
  if (m * n > order_cap)
    throw std::invalid_argument("verify: m*n exceeds the exhaustive cap");

  VerificationReport report;
  report.m = m;
  report.n = n;
  report.predicate = cls::is_nilpotent_pair(m, n);

  // |<a> n <b>| divides gcd(m, n), so |G| = m*n/d for some d | gcd(m, n).
  for (u64 d : divisors_of(std::gcd(m, n)))
    report.orders_scanned.push_back(m * n / d);
  std::sort(report.orders_scanned.begin(), report.orders_scanned.end(),
            std::greater<>());

  for (u64 target : report.orders_scanned) {
    for (u64 mm : divisors_of(target)) {
      const u64 nn = target / mm;
      std::vector<u64> r_values;
      if (mm == 1) {
        r_values.push_back(0);
      } else {
        for (u64 r = 1; r < mm; ++r) {
          if (std::gcd(r, mm) != 1) continue;
          if (nt::powmod(r, nn, mm) == 1) r_values.push_back(r);
        }
      }
      for (u64 r : r_values) {
        // Valid s are the multiples of mm / gcd(r-1, mm).
        const u64 g = (mm == 1) ? 1 : std::gcd(r - 1, mm);
        const u64 step = mm / g;
        for (u64 k = 0; k < g; ++k) {
          const u64 s = k * step;
          ++report.presentations_scanned;
          auto group = grp::make_holder_group(mm, nn, r, s);
          ana::GroupScan scan(group);
          auto witnesses = scan.bicyclic_factorizations(m, n);
          if (witnesses.empty()) continue;
          ++report.groups_realized;
          report.realizations_found += witnesses.size();
          const bool nil_coprime = scan.nilpotent_coprime();
          const bool nil_sylow = scan.nilpotent_sylow();
          if (nil_coprime != nil_sylow) report.algorithms_agree = false;
          report.all_nilpotent &= nil_coprime;
          report.all_abelian &= scan.abelian();
          report.all_cyclic &= scan.cyclic();
          if (!nil_coprime) {
            for (auto& w : witnesses)
              report.counterexamples.push_back(
                  {ScannedPresentation{mm, nn, r, s}, std::move(w)});
          }
        }
      }
    }
  }
  return report;
}

LemmaSweepResult sweep_lemma_equivalence(u64 x, unsigned workers) {
  if (x == 0) throw std::invalid_argument("sweep: x must be positive");

  std::vector<nt::PrimeFactorization> factors(x + 1);
  std::vector<u64> phi_rad(x + 1, 1);
  for (u64 k = 1; k <= x; ++k) {
    factors[k] = nt::factorize(k);
    phi_rad[k] = nt::euler_phi(nt::radical(factors[k]));
  }

  auto cross_compatible = [&](const nt::PrimeFactorization& fm,
                              const nt::PrimeFactorization& fn) {
    for (const auto& [p, ep] : fm.factors)
      for (const auto& [q, eq] : fn.factors)
        if (p != q && ((q - 1) % p == 0 || (p - 1) % q == 0)) return false;
    return true;
  };

  // Re-derive the classification's claims by direct arithmetic.
  auto witness_checks_out = [&](u64 m, u64 n, const cls::PairClassification& c) {
    if (c.failure) {
      switch (*c.failure) {
        case cls::FailureCase::OddCross:
          return m % 2 == 1 && n % 2 == 1 && c.p != c.q &&
                 nt::is_prime(c.p) && nt::is_prime(c.q) && m % c.p == 0 &&
                 n % c.q == 0 &&
                 (c.direction == cls::CrossDirection::PDividesQMinus1
                      ? (c.q - 1) % c.p == 0
                      : (c.p - 1) % c.q == 0);
        case cls::FailureCase::BothEven:
          return m % 2 == 0 && n % 2 == 0 &&
                 !(factors[m].factors.size() == 1 &&
                   factors[n].factors.size() == 1);
        case cls::FailureCase::MixedParity:
          return c.orientation == cls::ParityOrientation::MEvenNOdd
                     ? (m % 2 == 0 && n % 2 == 1 && n > 1)
                     : (n % 2 == 0 && m % 2 == 1 && m > 1);
      }
      return false;
    }
    switch (*c.success) {
      case cls::SuccessCase::Unit:
        return m == 1 || n == 1;
      case cls::SuccessCase::PrimePowers:
        return factors[m].factors.size() == 1 &&
               factors[n].factors.size() == 1 &&
               factors[m].factors[0].prime == c.shared_prime &&
               factors[n].factors[0].prime == c.shared_prime;
      case cls::SuccessCase::OddCompatible:
        return m % 2 == 1 && n % 2 == 1 &&
               cross_compatible(factors[m], factors[n]);
    }
    return false;
  };

  const unsigned w = resolve_workers(workers, x);
  std::vector<LemmaSweepResult> partial(w);
  run_chunked(x, w, [&](unsigned chunk, u64 lo, u64 hi) {
    LemmaSweepResult& res = partial[chunk];
    for (u64 m = lo; m < hi; ++m) {
      for (u64 n = 1; n <= x; ++n) {
        ++res.pairs_checked;
        const bool predicate = std::gcd(n, phi_rad[m]) == 1 &&
                               std::gcd(m, phi_rad[n]) == 1;
        const auto c = cls::classify_pair(factors[m], factors[n]);
        if (predicate) ++res.pairs_satisfying;
        const bool good = (predicate == c.satisfies_condition) &&
                          witness_checks_out(m, n, c);
        if (!good && !res.first_discrepancy) {
          res.ok = false;
          res.first_discrepancy =
              Discrepancy{m, n, "case analysis disagrees with the predicate"};
        }
      }
    }
  });

  LemmaSweepResult merged;
  for (const auto& res : partial) {
    merged.pairs_checked += res.pairs_checked;
    merged.pairs_satisfying += res.pairs_satisfying;
    if (!res.ok && merged.ok) {
      merged.ok = false;
      merged.first_discrepancy = res.first_discrepancy;
    }
  }
  return merged;
}

TheoremSweepReport sweep_theorem(u64 x, u64 order_cap, unsigned workers) {
  if (x == 0) throw std::invalid_argument("sweep: x must be positive");

  const unsigned w = resolve_workers(workers, x);
  std::vector<TheoremSweepReport> partial(w);
  run_chunked(x, w, [&](unsigned chunk, u64 lo, u64 hi) {
    TheoremSweepReport& res = partial[chunk];
    for (u64 m = lo; m < hi; ++m) {
      for (u64 n = 1; n <= x && m * n <= order_cap; ++n) {
        ++res.pairs_total;
        try {
          if (cls::is_nilpotent_pair(m, n)) {
            ++res.pairs_satisfying;
            auto report = verify_pair_exhaustive(m, n, order_cap);
            res.presentations_scanned += report.presentations_scanned;
            res.realizations_found += report.realizations_found;
            if (!report.all_nilpotent)
              res.discrepancies.push_back(
                  {m, n, "non-nilpotent realization of a satisfying pair"});
            if (!report.algorithms_agree)
              res.discrepancies.push_back(
                  {m, n, "nilpotency algorithms disagree"});
          } else {
            ++res.pairs_failing;
            auto witness = cls::build_nonnilpotent_witness(m, n);
            if (!ana::verify_witness(witness))
              res.discrepancies.push_back({m, n, "witness re-verification"});
            ++res.witnesses_verified;
          }
        } catch (const std::exception& e) {
          res.discrepancies.push_back({m, n, e.what()});
        }
      }
    }
  });

  TheoremSweepReport merged;
  for (const auto& res : partial) {
    merged.pairs_total += res.pairs_total;
    merged.pairs_satisfying += res.pairs_satisfying;
    merged.pairs_failing += res.pairs_failing;
    merged.presentations_scanned += res.presentations_scanned;
    merged.realizations_found += res.realizations_found;
    merged.witnesses_verified += res.witnesses_verified;
    merged.discrepancies.insert(merged.discrepancies.end(),
                                res.discrepancies.begin(),
                                res.discrepancies.end());
  }
  std::sort(merged.discrepancies.begin(), merged.discrepancies.end(),
            [](const Discrepancy& a, const Discrepancy& b) {
              return std::tie(a.m, a.n, a.detail) <
                     std::tie(b.m, b.n, b.detail);
            });
  merged.ok = merged.discrepancies.empty();
  return merged;
}

CorollarySweepReport sweep_corollaries(u64 x, u64 order_cap,
                                       unsigned workers) {
  if (x == 0) throw std::invalid_argument("sweep: x must be positive");

  const unsigned w = resolve_workers(workers, x);
  std::vector<CorollarySweepReport> partial(w);
  run_chunked(x, w, [&](unsigned chunk, u64 lo, u64 hi) {
    CorollarySweepReport& res = partial[chunk];
    for (u64 m = lo; m < hi; ++m) {
      for (u64 n = 1; n <= x; ++n) {
        try {
          const bool singular = cls::is_singular_pair(m, n);
          if (singular && m * n <= order_cap) {
            ++res.singular_pairs_checked;
            auto report = verify_pair_exhaustive(m, n, order_cap);
            if (!report.all_abelian)
              res.discrepancies.push_back(
                  {m, n, "non-abelian realization of a singular pair"});
            if (cls::is_cyclic_pair(m, n)) {
              ++res.cyclic_pairs_checked;
              if (!report.all_cyclic)
                res.discrepancies.push_back(
                    {m, n, "non-cyclic realization of a cyclic pair"});
            }
            if (std::gcd(m, n) > 1) {
              // The C_m x C_n presentation must realize the pair and be
              // non-cyclic.
              auto cmxcn = grp::make_holder_group(m, n, m > 1 ? 1 : 0, 0);
              ana::GroupScan scan(cmxcn);
              if (scan.cyclic() ||
                  scan.bicyclic_factorizations(m, n).empty())
                res.discrepancies.push_back(
                    {m, n, "C_m x C_n realization check failed"});
              ++res.noncyclic_checks;
            }
          }
          if (!singular && m > 1 && n > 1 && cls::is_nilpotent_pair(m, n)) {
            auto witness = cls::build_nonabelian_witness(m, n);
            const bool sound = ana::verify_witness(witness) &&
                               !ana::is_abelian(witness.group) &&
                               ana::is_nilpotent_coprime(witness.group) &&
                               ana::is_nilpotent_sylow(witness.group);
            if (!sound)
              res.discrepancies.push_back(
                  {m, n, "non-abelian witness verification failed"});
            ++res.nonabelian_witnesses;
          }
        } catch (const std::exception& e) {
          res.discrepancies.push_back({m, n, e.what()});
        }
      }
    }
  });

  CorollarySweepReport merged;
  for (const auto& res : partial) {
    merged.singular_pairs_checked += res.singular_pairs_checked;
    merged.cyclic_pairs_checked += res.cyclic_pairs_checked;
    merged.nonabelian_witnesses += res.nonabelian_witnesses;
    merged.noncyclic_checks += res.noncyclic_checks;
    merged.discrepancies.insert(merged.discrepancies.end(),
                                res.discrepancies.begin(),
                                res.discrepancies.end());
  }
  std::sort(merged.discrepancies.begin(), merged.discrepancies.end(),
            [](const Discrepancy& a, const Discrepancy& b) {
              return std::tie(a.m, a.n, a.detail) <
                     std::tie(b.m, b.n, b.detail);
            });
  merged.ok = merged.discrepancies.empty();
  return merged;
}

PairCounts count_pairs(u64 x) {
  if (x == 0) throw std::invalid_argument("count_pairs: x must be positive");

  std::vector<u64> phi(x + 1), phi_rad(x + 1, 1);
  for (u64 k = 1; k <= x; ++k) {
    const auto f = nt::factorize(k);
    phi[k] = nt::euler_phi(f);
    phi_rad[k] = nt::euler_phi(nt::radical(f));
  }

  PairCounts counts;
  counts.x = x;
  for (u64 k = 1; k <= x; ++k)
    if (std::gcd(k, phi[k]) == 1) ++counts.cyclic_numbers;
  for (u64 m = 1; m <= x; ++m) {
    for (u64 n = 1; n <= x; ++n) {
      if (std::gcd(n, phi_rad[m]) == 1 && std::gcd(m, phi_rad[n]) == 1)
        ++counts.nilpotent_pairs;
      if (std::gcd(m, phi[n]) == 1 && std::gcd(n, phi[m]) == 1) {
        ++counts.singular_pairs;
        if (std::gcd(m, n) == 1) ++counts.cyclic_pairs;
      }
    }
  }
  return counts;
}

double erdos_estimate(u64 x) {
  if (x < 16)
    throw std::invalid_argument(
        "erdos_estimate: requires x >= 16 (triple logarithm positive)");
  const double lll = std::log(std::log(std::log(static_cast<double>(x))));
  return std::exp(kEulerGamma) * static_cast<double>(x) / lll;
}

}  // namespace bicyclic::orc
