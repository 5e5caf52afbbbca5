#pragma once

#include "factorize.hpp"
#include "lucas.hpp"

#include <cstdint>
#include <istream>
#include <map>
#include <string>
#include <vector>

namespace lucascyc {

/// Externally sourced factorizations of |U_n|, validated on ingest.
struct FactorTable {
  explicit FactorTable(LucasParams p) : params(std::move(p)) {}

  LucasParams params;
  std::map<std::uint64_t, Factorization> entries;
  std::string source;
  /// One line per rejected entry.
  std::vector<std::string> diagnostics;

  const Factorization* find(std::uint64_t n) const;
  std::size_t complete_count() const;
  /// Largest x with a complete entry for every 1 <= n <= x.
  std::uint64_t complete_prefix() const;
};

inline constexpr std::uint64_t kExactValidationIndex = 500;
inline constexpr int kValidationPrimes = 10;

/// Grammar (comments start with '#'):
///   lucas-factors v1 P=<int> Q=<int>
///   <n>: <prime>[^<exp>] ... [C<digits>]
/// Syntax errors throw Error(Parse) naming the line; entries that fail
/// validation are skipped with a diagnostic.
FactorTable parse_factor_table(std::istream& in, const LucasParams& params, const std::string& source);
FactorTable import_factor_table(const std::string& path, const LucasParams& params);

/// Writes the same grammar; entries in index order.
void write_factor_table(const FactorTable& table, std::ostream& out);

}  // namespace lucascyc
