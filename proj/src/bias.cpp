#include "bias.hpp"

#include "arith.hpp"
#include "dual.hpp"
#include "error.hpp"

#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

namespace lucascyc {

CharacteristicFactors characteristic_factors(const LucasParams& params, std::uint64_t n, FactorBudget budget,
                                             const FactorTable* table) {
  if (n == 0) fail(ErrorCode::InvalidArgument, "characteristic_factors: n must be positive");
  params.require_nondegenerate("characteristic_factors");
  CharacteristicFactors out;
  const Factorization* entry = nullptr;
  if (table) {
    if (!(table->params == params)) fail(ErrorCode::InvalidArgument, "factor table belongs to other parameters");
    entry = table->find(n);
    if (entry && !entry->complete) entry = nullptr;
  }
  Factorization computed;
  if (entry) {
    out.from_table = true;
  } else {
    computed = factorize(abs(dual_u(params, n)), budget);
    entry = &computed;
    out.complete = computed.complete;
    out.unfactored = computed.unfactored_cofactor;
  }
  for (const auto& [q, e] : entry->factors)
    if (has_entry_point(params, q, n)) out.factors.emplace_back(q, e);
  return out;
}

std::vector<BiasRow> bias_table(const LucasParams& params, std::uint64_t xmax, FactorBudget budget,
                                const FactorTable* table) {
  if (xmax == 0) fail(ErrorCode::InvalidArgument, "bias_table: xmax must be positive");
  std::vector<BiasRow> rows;
  rows.reserve(xmax);
  BiasRow running;
  for (std::uint64_t n = 1; n <= xmax; ++n) {
    const CharacteristicFactors cf = characteristic_factors(params, n, budget, table);
    running.n = n;
    running.exact = running.exact && cf.complete;
    for (const auto& [q, e] : cf.factors) {
      (void)e;
      const int s = kronecker(params.D(), q);
      if (s > 0) ++running.count_r;
      if (s < 0) ++running.count_n;
    }
    rows.push_back(running);
  }
  return rows;
}

std::uint64_t bias_term(const std::vector<BiasRow>& rows, std::uint64_t x) {
  if (x == 0) fail(ErrorCode::InvalidArgument, "bias_term: x must be positive");
  std::vector<const BiasRow*> by_index(x + 1, nullptr);
  for (const auto& r : rows)
    if (r.n >= 1 && r.n <= x) by_index[r.n] = &r;
  std::uint64_t count = 0;
  for (std::uint64_t n = 1; n <= x; ++n) {
    const BiasRow* r = by_index[n];
    if (!r) fail(ErrorCode::InvalidArgument, "bias_term: missing row n=" + std::to_string(n));
    if (!r->exact) fail(ErrorCode::Incomplete, "bias_term: row n=" + std::to_string(n) + " is not exact");
    if (r->count_n < r->count_r) ++count;
  }
  return count;
}

std::string format_bias_csv(const std::vector<BiasRow>& rows) {
  std::ostringstream out;
  out << "n,count_r,count_n,exact\n";
  for (const auto& r : rows) out << r.n << ',' << r.count_r << ',' << r.count_n << ',' << (r.exact ? 1 : 0) << '\n';
  return out.str();
}

void export_bias_csv(const std::vector<BiasRow>& rows, const std::string& path) {
  if (rows.empty()) fail(ErrorCode::InvalidArgument, "export_bias_csv: no rows");
  write_file_atomic(path, format_bias_csv(rows));
}

void write_file_atomic(const std::string& path, const std::string& text) {
  static std::atomic<unsigned> counter{0};
  // unique per writer, so concurrent writers never share a temporary
  const std::string tmp = path + ".tmp." + std::to_string(::getpid()) + "." + std::to_string(counter++);
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) fail(ErrorCode::Io, "cannot write " + tmp);
    out << text;
    out.flush();
    if (!out) fail(ErrorCode::Io, "write failed: " + tmp);
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::remove(tmp.c_str());
    fail(ErrorCode::Io, "cannot rename " + tmp + " to " + path + ": " + ec.message());
  }
}

}  // namespace lucascyc
