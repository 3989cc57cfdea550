#include "bicyclic/numtheory.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace bicyclic::nt {

namespace {

using u128 = unsigned __int128;

[[noreturn]] void fail(const std::string& msg) {
  throw std::invalid_argument("numtheory: " + msg);
}

}  // namespace

u64 mulmod(u64 a, u64 b, u64 mod) {
  if (mod == 0) fail("mulmod: zero modulus");
  return static_cast<u64>((u128)a * b % mod);
}

u64 powmod(u64 base, u64 exp, u64 mod) {
  if (mod == 0) fail("powmod: zero modulus");
  u64 result = 1 % mod;
  base %= mod;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, mod);
    base = mulmod(base, base, mod);
    exp >>= 1;
  }
  return result;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  // Miller-Rabin with a base set known deterministic for 64-bit inputs.
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                29ull, 31ull, 37ull}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeFactorization factorize(u64 n) {
  if (n == 0) fail("factorize: n must be positive");
  PrimeFactorization result;
  result.value = n;
  auto strip = [&](u64 p) {
    if (n % p != 0) return;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    result.factors.push_back({p, e});
  };
  strip(2);
  strip(3);
  for (u64 f = 5; f <= n / f; f += 6) {
    strip(f);
    strip(f + 2);
  }
  if (n > 1) result.factors.push_back({n, 1});
  return result;
}

u64 euler_phi(const PrimeFactorization& f) {
  u64 result = 1;
  for (const auto& [p, e] : f.factors) {
    result *= p - 1;
    for (unsigned i = 1; i < e; ++i) result *= p;
  }
  return result;
}

u64 euler_phi(u64 n) { return euler_phi(factorize(n)); }

u64 radical(const PrimeFactorization& f) {
  u64 result = 1;
  for (const auto& [p, e] : f.factors) result *= p;
  return result;
}

u64 radical(u64 n) { return radical(factorize(n)); }

u64 psi(u64 n) {
  if (n == 0) fail("psi: n must be positive");
  if (n > kPsiInputCap) fail("psi: input exceeds cap of 10^9");
  u64 result = 1;
  for (const auto& [p, e] : factorize(n).factors) {
    u64 pk = 1;
    for (unsigned i = 1; i <= e; ++i) {
      pk *= p;  // pk <= n, no overflow
      if (__builtin_mul_overflow(result, pk - 1, &result))
        throw std::overflow_error("psi: result exceeds 64 bits");
    }
  }
  return result;
}

u64 multiplicative_order(u64 r, u64 n) {
  if (n == 0) fail("multiplicative_order: n must be positive");
  if (std::gcd(r % n, n) != 1 && n > 1)
    fail("multiplicative_order: gcd(r, n) != 1");
  if (n == 1) return 1;
  r %= n;
  if (n < 64) {
    u64 k = 1, x = r;
    while (x != 1) {
      x = mulmod(x, r, n);
      ++k;
    }
    return k;
  }
  // Start from phi(n) and strip primes while the power stays 1.
  u64 k = euler_phi(n);
  for (const auto& [p, e] : factorize(k).factors) {
    for (unsigned i = 0; i < e; ++i) {
      if (k % p == 0 && powmod(r, k / p, n) == 1)
        k /= p;
      else
        break;
    }
  }
  return k;
}

u64 crt_combine(std::span<const std::pair<u64, u64>> congruences) {
  u64 value = 0, modulus = 1;
  for (const auto& [residue, mod] : congruences) {
    if (mod == 0) fail("crt_combine: zero modulus");
    if (std::gcd(modulus, mod) != 1) fail("crt_combine: moduli not coprime");
    u64 combined;
    if (__builtin_mul_overflow(modulus, mod, &combined))
      throw std::overflow_error("crt_combine: modulus product exceeds 64 bits");
    // value + modulus * t == residue (mod mod)
    u64 rhs = (residue % mod + mod - value % mod) % mod;
    u64 inv = (mod == 1) ? 0 : powmod(modulus % mod, euler_phi(mod) - 1, mod);
    u64 t = mulmod(rhs, inv, mod);
    value += modulus * t;
    modulus = combined;
  }
  // Re-reduce against every congruence before trusting the answer.
  for (const auto& [residue, mod] : congruences) {
    if (value % mod != residue % mod)
      throw std::logic_error("crt_combine: re-reduction check failed");
  }
  return value;
}

std::optional<u64> find_unit(u64 modulus, u64 exponent_divisor,
                             u64 nontrivial_mod) {
  if (modulus == 0 || nontrivial_mod == 0)
    fail("find_unit: moduli must be positive");
  if (modulus % nontrivial_mod != 0)
    fail("find_unit: nontrivial_mod must divide modulus");
  for (u64 r = 1; r < modulus; ++r) {
    if (std::gcd(r, modulus) != 1) continue;
    if (powmod(r, exponent_divisor, modulus) != 1 % modulus) continue;
    if (r % nontrivial_mod == 1 % nontrivial_mod) continue;
    return r;
  }
  return std::nullopt;
}

}  // namespace bicyclic::nt
