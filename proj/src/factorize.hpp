#pragma once

#include "bigint.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace lucascyc {

inline constexpr std::uint64_t kTrialDivisionBound = 100000;
inline constexpr std::uint64_t kDefaultRhoIterations = 10'000'000;

struct FactorBudget {
  /// Cap on Pollard-rho iterations spent on each composite cofactor.
  std::uint64_t rho_iterations = kDefaultRhoIterations;
};

/// value = sign(value) * prod(prime^exponent) * unfactored_cofactor.
/// Primes ascending, distinct. complete iff unfactored_cofactor == 1.
struct Factorization {
  Int value;
  std::vector<std::pair<Int, unsigned>> factors;
  Int unfactored_cofactor = 1;
  bool complete = true;

  Int recombine() const;
  unsigned exponent_of(const Int& prime) const;
};

/// Trial division below kTrialDivisionBound, then Brent's variant of Pollard
/// rho with a probable-prime check on every emitted factor. A cofactor that
/// resists the budget is left in unfactored_cofactor (never thrown).
Factorization factorize(const Int& m, FactorBudget budget = {});

/// One rho attempt on a composite; returns a nontrivial divisor or 0.
Int rho_split(const Int& n, std::uint64_t max_iterations);

}  // namespace lucascyc
