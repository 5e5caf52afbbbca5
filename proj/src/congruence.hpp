#pragma once

#include "bigint.hpp"
#include "factorize.hpp"
#include "lucas.hpp"
#include "report.hpp"

#include <cstdint>
#include <vector>

namespace lucascyc {

/// Congruences for M^U at p^k n, one report per k = 1..kmax.
std::vector<VerificationReport> verify_thm_mu(const LucasParams& params, std::uint64_t p, std::uint64_t n,
                                              unsigned kmax);

/// p-integrality and congruences for M^V at p^k n.
std::vector<VerificationReport> verify_thm_mv(const LucasParams& params, std::uint64_t p, std::uint64_t n,
                                              unsigned kmax);

/// M^U_n and M^V_n mod n for n with at least two distinct prime factors.
VerificationReport verify_cor_modn(const LucasParams& params, std::uint64_t n);

/// Ratios U_{p^k n}/U_{p^{k-1} n} and V_{p^k n}/V_{p^{k-1} n}. Degenerate
/// parameters are accepted; an instance with a vanishing denominator is
/// not applicable.
std::vector<VerificationReport> verify_cor_lift(const LucasParams& params, std::uint64_t p, std::uint64_t n,
                                                unsigned kmax);

/// Kronecker product over the characteristic factors of U_n against the
/// sign of M^U_n. Incomplete when |M^U_n| resists the factoring budget.
VerificationReport verify_cor_mult(const LucasParams& params, std::uint64_t n, FactorBudget budget = {});

/// Phi_{p^k n}(z) against 1 or p modulo p^k / p^{k+1}, one report per k.
std::vector<VerificationReport> verify_ratcon(const Int& z, std::uint64_t p, std::uint64_t n, unsigned kmax);

/// Batch run over a parameter grid; reports are merged in sorted order, so
/// the result does not depend on the number of jobs.
struct GridOptions {
  std::vector<LucasParams> params;
  std::vector<std::uint64_t> primes{2, 3, 5, 7, 11, 13};
  std::uint64_t xmax = 50;       // n bound for the prime-power statements
  unsigned kmax = 5;
  std::uint64_t modn_max = 120;  // composite n bound for the mod-n checks
  std::uint64_t mult_max = 120;  // n bound for the sign checks (regular params only)
  std::uint64_t doubling_max = 0;
  FactorBudget budget{};
  unsigned jobs = 1;
};

std::vector<VerificationReport> run_grid(const GridOptions& options);

/// The nondegenerate base grid plus pairs exercising p | (P,Q).
std::vector<LucasParams> default_param_grid();

}  // namespace lucascyc
