#pragma once

// Exact 64-bit integer arithmetic: factorization, totient, radical, psi,
// multiplicative orders and CRT-based unit search. All functions are pure;
// overflow raises instead of wrapping.

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace bicyclic::nt {

using u64 = std::uint64_t;

struct PrimePower {
  u64 prime = 0;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Prime-power decomposition with primes strictly increasing.
// value == product of prime^exponent; value == 1 iff factors empty.
struct PrimeFactorization {
  u64 value = 1;
  std::vector<PrimePower> factors;
};

// (a * b) mod m without overflow.
u64 mulmod(u64 a, u64 b, u64 mod);
u64 powmod(u64 base, u64 exp, u64 mod);

// Deterministic Miller-Rabin for the full 64-bit range.
bool is_prime(u64 n);

// Trial division by 2, 3 and 6k+-1 up to sqrt(n). Rejects n == 0.
PrimeFactorization factorize(u64 n);

u64 euler_phi(u64 n);
u64 euler_phi(const PrimeFactorization& f);

// Product of the distinct prime divisors; radical(1) == 1.
u64 radical(u64 n);
u64 radical(const PrimeFactorization& f);

// psi(p^e) = prod_{i=1..e} (p^i - 1), extended multiplicatively.
// Input capped at kPsiInputCap; overflow raises std::overflow_error.
inline constexpr u64 kPsiInputCap = 1'000'000'000;
u64 psi(u64 n);

// Smallest k >= 1 with r^k == 1 (mod n). Requires gcd(r, n) == 1.
u64 multiplicative_order(u64 r, u64 n);

// Unique value in [0, prod moduli) matching every (residue, modulus) pair.
// Moduli must be pairwise coprime and their product must fit 64 bits.
u64 crt_combine(std::span<const std::pair<u64, u64>> congruences);

// Smallest r in Z*_modulus with r^exponent_divisor == 1 (mod modulus) and
// r != 1 (mod nontrivial_mod). nontrivial_mod must divide modulus.
std::optional<u64> find_unit(u64 modulus, u64 exponent_divisor,
                             u64 nontrivial_mod);

}  // namespace bicyclic::nt
