#pragma once

#include "bigint.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace lucascyc {

using PrimePower = std::pair<std::uint64_t, unsigned>;

// Arithmetic functions on machine-sized indices. All reject n = 0.
int mobius(std::uint64_t n);
std::uint64_t euler_phi(std::uint64_t n);
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// Prime factorization of a machine-sized index by trial division.
std::vector<PrimePower> factor_index(std::uint64_t n);

std::uint64_t largest_prime_factor(std::uint64_t n);

/// Squarefree kernel: product of the distinct primes dividing n.
std::uint64_t radical(std::uint64_t n);

/// Kronecker symbol (a/n), totalized: (a/0) = [|a| = 1], (a/-1) = +1 for a >= 0 else -1.
int kronecker(const Int& a, const Int& n);

struct PFreeSplit {
  unsigned valuation = 0;
  Int pfree;
};

/// m = p^valuation * pfree with p not dividing pfree. Rejects m = 0.
PFreeSplit valuation_and_pfree(const Int& m, const Int& p);
unsigned valuation(const Int& m, const Int& p);

inline std::uint64_t pfree_part(std::uint64_t m, std::uint64_t p) {
  while (m % p == 0) m /= p;
  return m;
}

/// Primes up to limit, ascending (empty when limit < 2).
std::vector<std::uint64_t> sieve_primes(std::uint64_t limit);

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Deterministic below 2^64 (fixed witness set); 30 strong-probable-prime
/// rounds above.
bool is_probable_prime(const Int& m);
bool is_prime_u64(std::uint64_t m);

inline constexpr int kProbablePrimeRounds = 30;

}  // namespace lucascyc
