#include "bicyclic/classifier.hpp"

#include <numeric>
#include <stdexcept>

namespace bicyclic::cls {

using nt::PrimeFactorization;

std::string to_string(SuccessCase c) {
  switch (c) {
    case SuccessCase::Unit: return "UNIT";
    case SuccessCase::PrimePowers: return "PRIME_POWERS";
    case SuccessCase::OddCompatible: return "ODD_COMPATIBLE";
  }
  return "?";
}

std::string to_string(FailureCase c) {
  switch (c) {
    case FailureCase::OddCross: return "ODD_CROSS";
    case FailureCase::BothEven: return "BOTH_EVEN";
    case FailureCase::MixedParity: return "MIXED_PARITY";
  }
  return "?";
}

std::string to_string(NumberClass c) {
  switch (c) {
    case NumberClass::Cyclic: return "CYCLIC";
    case NumberClass::Abelian: return "ABELIAN";
    case NumberClass::Nilpotent: return "NILPOTENT";
    case NumberClass::None: return "NONE";
  }
  return "?";
}

bool is_nilpotent_pair(u64 m, u64 n) {
  if (m == 0 || n == 0)
    throw std::invalid_argument("pair members must be positive");
  return std::gcd(n, nt::euler_phi(nt::radical(m))) == 1 &&
         std::gcd(m, nt::euler_phi(nt::radical(n))) == 1;
}

bool is_singular_pair(u64 m, u64 n) {
  if (m == 0 || n == 0)
    throw std::invalid_argument("pair members must be positive");
  return std::gcd(m, nt::euler_phi(n)) == 1 &&
         std::gcd(n, nt::euler_phi(m)) == 1;
}

bool is_cyclic_pair(u64 m, u64 n) {
  return std::gcd(m, n) == 1 && is_singular_pair(m, n);
}

PairClassification classify_pair(const PrimeFactorization& fm,
                                 const PrimeFactorization& fn) {
  const u64 m = fm.value, n = fn.value;
  PairClassification c;
  c.m = m;
  c.n = n;

  auto succeed = [&](SuccessCase sc) {
    c.satisfies_condition = true;
    c.success = sc;
  };
  auto fail = [&](FailureCase fc) {
    c.satisfies_condition = false;
    c.failure = fc;
  };

  const bool m_even = m % 2 == 0, n_even = n % 2 == 0;
  if (!m_even && !n_even) {
    // Cross-prime scan: smallest p over m, then smallest q over n, with the
    // p | q-1 direction preferred.
    for (const auto& [p, ep] : fm.factors) {
      for (const auto& [q, eq] : fn.factors) {
        if (p == q) continue;
        if ((q - 1) % p == 0) {
          fail(FailureCase::OddCross);
          c.p = p;
          c.q = q;
          c.direction = CrossDirection::PDividesQMinus1;
          return c;
        }
        if ((p - 1) % q == 0) {
          fail(FailureCase::OddCross);
          c.p = p;
          c.q = q;
          c.direction = CrossDirection::QDividesPMinus1;
          return c;
        }
      }
    }
    if (m == 1 || n == 1) {
      succeed(SuccessCase::Unit);
    } else if (fm.factors.size() == 1 && fn.factors.size() == 1 &&
               fm.factors[0].prime == fn.factors[0].prime) {
      succeed(SuccessCase::PrimePowers);
      c.shared_prime = fm.factors[0].prime;
    } else {
      succeed(SuccessCase::OddCompatible);
    }
    return c;
  }

  if (m_even && n_even) {
    const bool m_2power = fm.factors.size() == 1 && fm.factors[0].prime == 2;
    const bool n_2power = fn.factors.size() == 1 && fn.factors[0].prime == 2;
    if (m_2power && n_2power) {
      succeed(SuccessCase::PrimePowers);
      c.shared_prime = 2;
    } else {
      fail(FailureCase::BothEven);
    }
    return c;
  }

  if (m_even) {  // n odd
    if (n == 1) {
      succeed(SuccessCase::Unit);
    } else {
      fail(FailureCase::MixedParity);
      c.orientation = ParityOrientation::MEvenNOdd;
    }
  } else {  // n even, m odd
    if (m == 1) {
      succeed(SuccessCase::Unit);
    } else {
      fail(FailureCase::MixedParity);
      c.orientation = ParityOrientation::NEvenMOdd;
    }
  }
  return c;
}

PairClassification classify_pair(u64 m, u64 n) {
  return classify_pair(nt::factorize(m), nt::factorize(n));
}

namespace {

u64 prime_part(const PrimeFactorization& f, u64 p) {
  for (const auto& [q, e] : f.factors) {
    if (q != p) continue;
    u64 pk = 1;
    for (unsigned i = 0; i < e; ++i) pk *= p;
    return pk;
  }
  return 1;
}

unsigned valuation(const PrimeFactorization& f, u64 p) {
  for (const auto& [q, e] : f.factors)
    if (q == p) return e;
  return 0;
}

// Smallest unit with r^k == 1 modulo the whole modulus, nontrivial modulo
// the given part, combined to be == 1 on the complementary part.
u64 crt_order_unit(u64 prime_power, u64 copart, u64 exponent) {
  auto base = nt::find_unit(prime_power, exponent, prime_power);
  if (!base)
    throw std::logic_error("witness: expected unit of prescribed order");
  const std::pair<u64, u64> congruences[] = {{*base, prime_power},
                                             {1 % copart, copart}};
  return nt::crt_combine(congruences);
}

ana::BicyclicWitness checked_witness(grp::GroupPtr g, grp::GroupElement gen_a,
                                     grp::GroupElement gen_b, u64 m, u64 n) {
  ana::BicyclicWitness w;
  w.group = std::move(g);
  w.gen_a = std::move(gen_a);
  w.gen_b = std::move(gen_b);
  w.m = m;
  w.n = n;
  w.intersection_size = m * n / w.group->order();
  if (!ana::verify_witness(w))
    throw std::logic_error("witness: construction failed re-verification");
  return w;
}

}  // namespace

ana::BicyclicWitness build_nonnilpotent_witness(u64 m, u64 n) {
  const auto fm = nt::factorize(m);
  const auto fn = nt::factorize(n);
  const auto c = classify_pair(fm, fn);
  if (!c.failure)
    throw std::invalid_argument(
        "pair (" + std::to_string(m) + ", " + std::to_string(n) +
        ") satisfies the nilpotent-pair condition (case " +
        to_string(*c.success) + "); no non-nilpotent witness exists");

  grp::GroupPtr g;
  grp::GroupElement gen_a, gen_b;
  switch (*c.failure) {
    case FailureCase::OddCross: {
      if (*c.direction == CrossDirection::PDividesQMinus1) {
        // Normal cyclic factor of order n, acted on by the m-side with a
        // multiplier of order p concentrated on the q-part of n.
        const u64 qf = prime_part(fn, c.q);
        const u64 r = crt_order_unit(qf, n / qf, c.p);
        auto h = std::make_shared<grp::HolderGroup>(
            grp::HolderPresentation{n, m, r, 0});
        gen_a = h->quotient_generator();
        gen_b = h->normal_generator();
        g = h;
      } else {
        const u64 pe = prime_part(fm, c.p);
        const u64 r = crt_order_unit(pe, m / pe, c.q);
        auto h = std::make_shared<grp::HolderGroup>(
            grp::HolderPresentation{m, n, r, 0});
        gen_a = h->normal_generator();
        gen_b = h->quotient_generator();
        g = h;
      }
      break;
    }
    case FailureCase::BothEven: {
      u64 m1 = m, n1 = n;
      while (m1 % 2 == 0) m1 /= 2;
      while (n1 % 2 == 0) n1 /= 2;
      if (m1 > 1) {
        const u64 r = *nt::find_unit(m, 2, m1);
        auto h = std::make_shared<grp::HolderGroup>(
            grp::HolderPresentation{m, n, r, 0});
        gen_a = h->normal_generator();
        gen_b = h->quotient_generator();
        g = h;
      } else {
        const u64 r = *nt::find_unit(n, 2, n1);
        auto h = std::make_shared<grp::HolderGroup>(
            grp::HolderPresentation{n, m, r, 0});
        gen_a = h->quotient_generator();
        gen_b = h->normal_generator();
        g = h;
      }
      break;
    }
    case FailureCase::MixedParity: {
      if (*c.orientation == ParityOrientation::MEvenNOdd) {
        const u64 r = *nt::find_unit(n, 2, n);
        auto h = std::make_shared<grp::HolderGroup>(
            grp::HolderPresentation{n, m, r, 0});
        gen_a = h->quotient_generator();
        gen_b = h->normal_generator();
        g = h;
      } else {
        const u64 r = *nt::find_unit(m, 2, m);
        auto h = std::make_shared<grp::HolderGroup>(
            grp::HolderPresentation{m, n, r, 0});
        gen_a = h->normal_generator();
        gen_b = h->quotient_generator();
        g = h;
      }
      break;
    }
  }

  auto w = checked_witness(std::move(g), std::move(gen_a), std::move(gen_b), m,
                           n);
  if (ana::is_nilpotent_coprime(w.group) || ana::is_nilpotent_sylow(w.group))
    throw std::logic_error("witness: constructed group is nilpotent");
  return w;
}

ana::BicyclicWitness build_nonabelian_witness(u64 m, u64 n) {
  if (!is_nilpotent_pair(m, n))
    throw std::invalid_argument(
        "pair (" + std::to_string(m) + ", " + std::to_string(n) +
        ") is not a nilpotent pair; use the non-nilpotent witness builder");
  if (is_singular_pair(m, n))
    throw std::invalid_argument(
        "pair (" + std::to_string(m) + ", " + std::to_string(n) +
        ") is singular; every bicyclic group for it is abelian");

  const auto fm = nt::factorize(m);
  const auto fn = nt::factorize(n);
  u64 p = 0;
  for (const auto& [q, e] : fm.factors) {
    const unsigned vn = valuation(fn, q);
    if (vn == 0) continue;
    if (e >= 2 || vn >= 2) {
      p = q;
      break;
    }
  }
  if (p == 0)
    throw std::logic_error("witness: no shared squared prime found");

  const unsigned vm = valuation(fm, p), vn = valuation(fn, p);
  const u64 pm = prime_part(fm, p), pn = prime_part(fn, p);
  const bool normal_is_n = vn >= 2 && (vm < 2 || vn >= vm);

  const u64 big = normal_is_n ? pn : pm;    // p^e, e >= 2
  const u64 small = normal_is_n ? pm : pn;  // p^f
  auto block = std::make_shared<grp::HolderGroup>(
      grp::HolderPresentation{big, small, 1 + big / p, 0});
  grp::GroupElement block_a =
      normal_is_n ? block->quotient_generator() : block->normal_generator();
  grp::GroupElement block_b =
      normal_is_n ? block->normal_generator() : block->quotient_generator();

  const u64 m2 = m / pm, n2 = n / pn;
  if (m2 == 1 && n2 == 1)
    return checked_witness(block, block_a, block_b, m, n);

  auto abelian = std::make_shared<grp::HolderGroup>(
      grp::HolderPresentation{m2, n2, m2 > 1 ? 1u : 0u, 0});
  auto product =
      std::make_shared<grp::DirectProductGroup>(block, abelian);
  grp::GroupElement gen_a =
      product->combine(block_a, abelian->normal_generator());
  grp::GroupElement gen_b =
      product->combine(block_b, abelian->quotient_generator());
  return checked_witness(product, std::move(gen_a), std::move(gen_b), m, n);
}

NumberClass number_class(u64 n) {
  if (n == 0) throw std::invalid_argument("number_class: n must be positive");
  if (std::gcd(n, nt::psi(n)) != 1) return NumberClass::None;
  unsigned max_exp = 0;
  for (const auto& [p, e] : nt::factorize(n).factors)
    max_exp = std::max(max_exp, e);
  if (max_exp <= 1) return NumberClass::Cyclic;
  if (max_exp <= 2) return NumberClass::Abelian;
  return NumberClass::Nilpotent;
}

namespace {

CommutatorCertificate certificate_search(const ana::BicyclicWitness& w,
                                         bool require_coprime) {
  const grp::FiniteGroup& g = *w.group;
  const grp::GroupElement e = g.identity();
  grp::GroupElement x = w.gen_a;
  for (u64 i = 1; i < w.m; ++i) {
    const u64 ox = g.element_order(x);
    if (!require_coprime || ox > 1) {
      grp::GroupElement y = w.gen_b;
      for (u64 j = 1; j < w.n; ++j) {
        const u64 oy = g.element_order(y);
        const bool admissible =
            !require_coprime || (oy > 1 && std::gcd(ox, oy) == 1);
        if (admissible) {
          grp::GroupElement com = g.commutator(x, y);
          if (com != e)
            return {x, y, std::move(com), ox, oy};
        }
        y = g.multiply(y, w.gen_b);
      }
    }
    x = g.multiply(x, w.gen_a);
  }
  throw std::logic_error("witness: no certificate pair found");
}

}  // namespace

CommutatorCertificate noncommuting_coprime_pair(const ana::BicyclicWitness& w) {
  return certificate_search(w, true);
}

CommutatorCertificate noncommuting_pair(const ana::BicyclicWitness& w) {
  return certificate_search(w, false);
}

}  // namespace bicyclic::cls
