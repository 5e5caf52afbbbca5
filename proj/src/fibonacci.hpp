#pragma once

#include "factor_table.hpp"
#include "factorize.hpp"
#include "lucas.hpp"
#include "report.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace lucascyc {

enum class FibCase { A, B, C, D, E };

/// 'a'..'e'; throws Error(InvalidArgument) otherwise.
FibCase parse_fib_case(char id);
char fib_case_id(FibCase c);

struct FibCaseOptions {
  std::uint64_t lo = 1;
  std::uint64_t hi = 120;
  FactorBudget budget{};
  const FactorTable* table = nullptr;
};

/// The published characteristic factors of F_361 and F_216.
inline const std::array<const char*, 4> kF361Factors = {"6567762529", "1196762644057", "3150927827816930878141597",
                                                        "12020126510714734783009241"};
inline const std::array<const char*, 2> kF216Factors = {"6263", "177962167367"};

/// Parity of the number of characteristic factors of U_n with (D/q) = -1,
/// counted with multiplicity, read off the Kronecker symbol of D over the
/// part of |M^U_n| prime to n*D. Exact without factoring; regular
/// parameters only.
int negative_parity(const LucasParams& params, std::uint64_t n);

std::vector<VerificationReport> verify_fib_cases(FibCase which, const FibCaseOptions& options = {});

}  // namespace lucascyc
