#include "census.hpp"

#include "arith.hpp"
#include "bias.hpp"
#include "error.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>
#include <thread>

namespace lucascyc {

const EntryPoint* EntryPointCensus::find(std::uint64_t p) const {
  const auto it = std::lower_bound(records.begin(), records.end(), p,
                                   [](const auto& rec, std::uint64_t key) { return rec.first < key; });
  return it != records.end() && it->first == p ? &it->second : nullptr;
}

EntryPointCensus census_build(const LucasParams& params, std::uint64_t prime_limit, unsigned jobs) {
  if (prime_limit < 2) fail(ErrorCode::InvalidArgument, "census: prime limit must be at least 2");
  const std::vector<std::uint64_t> primes = sieve_primes(prime_limit);
  std::vector<EntryPoint> points(primes.size());

  constexpr std::size_t kChunk = 256;
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t start = next.fetch_add(kChunk); start < primes.size(); start = next.fetch_add(kChunk)) {
      const std::size_t stop = std::min(primes.size(), start + kChunk);
      for (std::size_t i = start; i < stop; ++i) points[i] = entry_point(params, primes[i]);
    }
  };
  std::vector<std::thread> threads;
  for (unsigned j = 1; j < std::max(1u, jobs); ++j) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();

  EntryPointCensus census(params);
  census.prime_limit = prime_limit;
  census.records.reserve(primes.size());
  for (std::size_t i = 0; i < primes.size(); ++i) census.records.emplace_back(primes[i], std::move(points[i]));
  return census;
}

std::string format_census_csv(const EntryPointCensus& census) {
  std::ostringstream out;
  out << "# lucas-census P=" << census.params.P() << " Q=" << census.params.Q() << " limit=" << census.prime_limit
      << "\n";
  out << "p,z\n";
  for (const auto& [p, z] : census.records) out << p << ',' << z.to_string() << '\n';
  return out.str();
}

EntryPointCensus parse_census_csv(const std::string& text, const LucasParams& params) {
  std::istringstream in(text);
  std::string line;
  static const std::regex header(R"(# lucas-census P=(-?\d+) Q=(-?\d+) limit=(\d+))");
  std::smatch m;
  if (!std::getline(in, line) || !std::regex_match(line, m, header))
    fail(ErrorCode::Parse, "census cache: missing header");
  if (Int(m[1].str()) != params.P() || Int(m[2].str()) != params.Q())
    fail(ErrorCode::Parse, "census cache: parameter mismatch");
  EntryPointCensus census(params);
  census.prime_limit = std::stoull(m[3].str());
  if (!std::getline(in, line) || line != "p,z") fail(ErrorCode::Parse, "census cache: missing column line");
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) fail(ErrorCode::Parse, "census cache: bad row '" + line + "'");
    const std::uint64_t p = std::stoull(line.substr(0, comma));
    const std::string z = line.substr(comma + 1);
    census.records.emplace_back(p, z == "inf" ? EntryPoint::never() : EntryPoint::at(parse_int(z)));
  }
  const auto expected = sieve_primes(census.prime_limit);
  if (expected.size() != census.records.size()) fail(ErrorCode::Parse, "census cache: prime list incomplete");
  for (std::size_t i = 0; i < expected.size(); ++i)
    if (expected[i] != census.records[i].first) fail(ErrorCode::Parse, "census cache: prime list mismatch");
  return census;
}

std::string census_cache_name(const LucasParams& params) {
  return "census_P" + params.P().get_str() + "_Q" + params.Q().get_str() + ".csv";
}

EntryPointCensus census_cached(const LucasParams& params, std::uint64_t prime_limit, unsigned jobs,
                               const std::string& cache_dir) {
  const std::filesystem::path path = std::filesystem::path(cache_dir) / census_cache_name(params);
  if (std::ifstream in(path); in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
      EntryPointCensus cached = parse_census_csv(buf.str(), params);
      if (cached.prime_limit >= prime_limit) {
        std::erase_if(cached.records, [&](const auto& rec) { return rec.first > prime_limit; });
        cached.prime_limit = prime_limit;
        return cached;
      }
    } catch (const Error&) {
      // stale or foreign cache: rebuild below
    }
  }
  EntryPointCensus census = census_build(params, prime_limit, jobs);
  std::error_code ec;
  std::filesystem::create_directories(cache_dir, ec);
  write_file_atomic(path.string(), format_census_csv(census));
  return census;
}

std::optional<std::string> cache_dir_from_env() {
  const char* dir = std::getenv("LUCASCYC_CACHE_DIR");
  if (!dir || !*dir) return std::nullopt;
  return std::string(dir);
}

}  // namespace lucascyc
