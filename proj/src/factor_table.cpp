#include "factor_table.hpp"

#include "arith.hpp"
#include "error.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <random>
#include <regex>
#include <sstream>

namespace lucascyc {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool all_digits(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

[[noreturn]] void parse_error(std::size_t line, const std::string& what) {
  fail(ErrorCode::Parse, "line " + std::to_string(line) + ": " + what);
}

const std::vector<std::uint64_t>& validation_primes() {
  static const std::vector<std::uint64_t> primes = [] {
    std::mt19937_64 rng(0x5eed1e55u);
    std::vector<std::uint64_t> out;
    while (out.size() < static_cast<std::size_t>(kValidationPrimes)) {
      std::uint64_t c = rng() | (1ull << 63) | 1ull;
      while (!is_prime_u64(c)) c += 2;
      out.push_back(c);
    }
    return out;
  }();
  return primes;
}

struct RawEntry {
  std::uint64_t n = 0;
  std::size_t line = 0;
  std::vector<std::pair<Int, unsigned>> factors;
  Int cofactor = 1;
};

// Returns an empty string when accepted, else the reason.
std::string validate(const LucasParams& params, const RawEntry& raw, Factorization& out) {
  if (term_vanishes(params, TermKind::U, raw.n)) return "U_n vanishes";
  std::vector<std::pair<Int, unsigned>> factors = raw.factors;
  std::sort(factors.begin(), factors.end());
  std::vector<std::pair<Int, unsigned>> merged;
  for (auto& f : factors) {
    if (!is_probable_prime(f.first)) return "listed factor " + f.first.get_str() + " is not prime";
    if (!merged.empty() && merged.back().first == f.first)
      merged.back().second += f.second;
    else
      merged.push_back(f);
  }
  Int magnitude = raw.cofactor;
  for (const auto& [q, e] : merged) magnitude *= pow(q, e);

  int sign_of_term = 0;
  if (raw.n <= kExactValidationIndex) {
    const Int u = u_term(params, raw.n);
    if (abs(u) != magnitude) return "product does not match |U_n|";
    sign_of_term = sign(u);
  } else {
    for (std::uint64_t q : validation_primes()) {
      const std::uint64_t u = term_mod_u64(params, raw.n, q, TermKind::U);
      const std::uint64_t m = mod(magnitude, from_u64(q)).get_ui();
      const int s = u == m ? 1 : (m != 0 && u == q - m) ? -1 : 0;
      if (s == 0 || (sign_of_term != 0 && s != sign_of_term)) return "product does not match U_n modulo a spot-check prime";
      sign_of_term = s;
    }
  }
  out.value = sign_of_term * magnitude;
  out.factors = std::move(merged);
  out.unfactored_cofactor = raw.cofactor;
  out.complete = raw.cofactor == 1;
  return {};
}

}  // namespace

const Factorization* FactorTable::find(std::uint64_t n) const {
  const auto it = entries.find(n);
  return it == entries.end() ? nullptr : &it->second;
}

std::size_t FactorTable::complete_count() const {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(), [](const auto& kv) { return kv.second.complete; }));
}

std::uint64_t FactorTable::complete_prefix() const {
  std::uint64_t x = 0;
  for (const auto& [n, f] : entries) {
    if (n != x + 1 || !f.complete) break;
    x = n;
  }
  return x;
}

FactorTable parse_factor_table(std::istream& in, const LucasParams& params, const std::string& source) {
  FactorTable table(params);
  table.source = source;
  static const std::regex header(R"(lucas-factors\s+v1\s+P=(-?\d+)\s+Q=(-?\d+))");
  bool seen_header = false;
  std::string raw_line;
  std::size_t line_no = 0;
  while (std::getline(in, raw_line)) {
    ++line_no;
    std::string line = raw_line;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (!seen_header) {
      std::smatch m;
      if (!std::regex_match(line, m, header)) parse_error(line_no, "expected header 'lucas-factors v1 P=<int> Q=<int>'");
      if (Int(m[1].str()) != params.P() || Int(m[2].str()) != params.Q())
        parse_error(line_no, "table parameters P=" + m[1].str() + " Q=" + m[2].str() + " do not match " + params.label());
      seen_header = true;
      continue;
    }
    const auto colon = line.find(':');
    if (colon == std::string::npos) parse_error(line_no, "expected '<n>: <factors>'");
    const std::string index = trim(line.substr(0, colon));
    if (!all_digits(index) || index.size() > 19) parse_error(line_no, "bad index '" + index + "'");
    RawEntry raw;
    raw.n = std::stoull(index);
    raw.line = line_no;
    if (raw.n == 0) parse_error(line_no, "index must be positive");

    std::istringstream tokens(line.substr(colon + 1));
    std::string token;
    bool composite_seen = false;
    while (tokens >> token) {
      if (composite_seen) parse_error(line_no, "composite marker must be the last token");
      if (token[0] == 'C') {
        const std::string digits = token.substr(1);
        if (!all_digits(digits)) parse_error(line_no, "bad composite marker '" + token + "'");
        raw.cofactor = Int(digits);
        if (raw.cofactor < 2) parse_error(line_no, "composite marker must exceed 1");
        composite_seen = true;
        continue;
      }
      const auto caret = token.find('^');
      const std::string base = token.substr(0, caret);
      const std::string exp = caret == std::string::npos ? "1" : token.substr(caret + 1);
      if (!all_digits(base) || !all_digits(exp) || exp.size() > 9) parse_error(line_no, "bad factor '" + token + "'");
      const unsigned e = static_cast<unsigned>(std::stoul(exp));
      if (e == 0) parse_error(line_no, "exponent must be positive in '" + token + "'");
      const Int q(base);
      if (q == 1 && caret == std::string::npos) continue;  // "1" spells the empty product
      raw.factors.emplace_back(q, e);
    }

    if (table.entries.count(raw.n)) {
      table.diagnostics.push_back("line " + std::to_string(line_no) + ": duplicate entry for n=" + index);
      continue;
    }
    Factorization f;
    const std::string reason = validate(params, raw, f);
    if (!reason.empty()) {
      table.diagnostics.push_back("line " + std::to_string(line_no) + ": n=" + index + " rejected: " + reason);
      continue;
    }
    table.entries.emplace(raw.n, std::move(f));
  }
  if (!seen_header) fail(ErrorCode::Parse, "line " + std::to_string(line_no) + ": missing header");
  return table;
}

FactorTable import_factor_table(const std::string& path, const LucasParams& params) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::Io, "cannot open factor table " + path);
  return parse_factor_table(in, params, path);
}

void write_factor_table(const FactorTable& table, std::ostream& out) {
  out << "lucas-factors v1 P=" << table.params.P() << " Q=" << table.params.Q() << "\n";
  for (const auto& [n, f] : table.entries) {
    out << n << ":";
    for (const auto& [q, e] : f.factors) {
      out << ' ' << q;
      if (e > 1) out << '^' << e;
    }
    if (!f.complete) out << " C" << f.unfactored_cofactor;
    out << "\n";
  }
}

}  // namespace lucascyc
