#pragma once

#include "factor_table.hpp"
#include "factorize.hpp"
#include "lucas.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace lucascyc {

/// Primes q with z_U(q) = n and their multiplicities v_q(U_n).
struct CharacteristicFactors {
  std::vector<std::pair<Int, unsigned>> factors;  // ascending
  bool complete = true;
  Int unfactored = 1;
  bool from_table = false;
};

/// Prefers a complete table entry for U_n; otherwise factors |M^U_n| and
/// drops the intrinsic primes (entry point below n).
CharacteristicFactors characteristic_factors(const LucasParams& params, std::uint64_t n, FactorBudget budget = {},
                                             const FactorTable* table = nullptr);

struct BiasRow {
  std::uint64_t n = 0;
  std::uint64_t count_r = 0;  // primes with (D/q) = +1 and z(q) <= n
  std::uint64_t count_n = 0;  // primes with (D/q) = -1 and z(q) <= n
  bool exact = true;
};

/// Cumulative counts for n = 1..xmax. A row is exact iff every
/// factorization up to n was complete; inexact rows are lower bounds.
std::vector<BiasRow> bias_table(const LucasParams& params, std::uint64_t xmax, FactorBudget budget = {},
                                const FactorTable* table = nullptr);

/// #{n <= x : count_n < count_r}. Rejects missing or inexact rows.
std::uint64_t bias_term(const std::vector<BiasRow>& rows, std::uint64_t x);

/// "n,count_r,count_n,exact" then one line per row; exact as 1/0.
std::string format_bias_csv(const std::vector<BiasRow>& rows);
void export_bias_csv(const std::vector<BiasRow>& rows, const std::string& path);

/// Writes text to path through a temporary file and a rename.
void write_file_atomic(const std::string& path, const std::string& text);

}  // namespace lucascyc
