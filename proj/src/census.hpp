#pragma once

#include "lucas.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lucascyc {

/// Entry points of every prime up to prime_limit.
struct EntryPointCensus {
  explicit EntryPointCensus(LucasParams p) : params(std::move(p)) {}

  LucasParams params;
  std::uint64_t prime_limit = 0;
  std::vector<std::pair<std::uint64_t, EntryPoint>> records;  // ascending by prime

  const EntryPoint* find(std::uint64_t p) const;
};

/// Primes are split across jobs; the merge keeps prime order, so the result
/// does not depend on scheduling.
EntryPointCensus census_build(const LucasParams& params, std::uint64_t prime_limit, unsigned jobs = 1);

/// "p,z" rows with "inf" for an infinite entry point, preceded by a comment
/// line naming the parameters and the limit.
std::string format_census_csv(const EntryPointCensus& census);
EntryPointCensus parse_census_csv(const std::string& text, const LucasParams& params);

/// File name used inside a cache directory for these parameters.
std::string census_cache_name(const LucasParams& params);

/// Loads dir/<name> when it was written for the same parameters and covers
/// the limit; otherwise builds, stores atomically and returns the result.
EntryPointCensus census_cached(const LucasParams& params, std::uint64_t prime_limit, unsigned jobs,
                               const std::string& cache_dir);

/// Directory named by LUCASCYC_CACHE_DIR, if set.
std::optional<std::string> cache_dir_from_env();

}  // namespace lucascyc
