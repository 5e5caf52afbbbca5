#include "fibonacci.hpp"

#include "arith.hpp"
#include "bias.hpp"
#include "dual.hpp"
#include "error.hpp"

#include <algorithm>
#include <optional>

namespace lucascyc {

namespace {

const LucasParams& fib() {
  static const LucasParams params(1, -1);
  return params;
}

// n = p^k with k >= 1: returns p, else 0.
std::uint64_t prime_power_base(std::uint64_t n) {
  if (n < 2) return 0;
  const auto f = factor_index(n);
  return f.size() == 1 ? f.front().first : 0;
}

// n = 2^i 3^j 5^k: exponents, or nullopt when another prime divides n.
std::optional<std::array<unsigned, 3>> smooth_exponents(std::uint64_t n) {
  std::array<unsigned, 3> e{0, 0, 0};
  const std::uint64_t primes[3] = {2, 3, 5};
  for (int i = 0; i < 3; ++i)
    while (n % primes[i] == 0) {
      n /= primes[i];
      ++e[i];
    }
  if (n != 1) return std::nullopt;
  return e;
}

VerificationReport fib_report(const std::string& branch, std::uint64_t n) {
  VerificationReport r;
  r.statement = Statement::CorFib;
  r.instance = {{"n", from_u64(n)}};
  r.branch = branch;
  return r;
}

Witness parity_witness(std::uint64_t n, int expected) {
  return Witness{"negative_parity", Rational(negative_parity(fib(), n)), Int(2), Relation::Congruent,
                 Rational(expected)};
}

struct NegativeCount {
  bool complete = false;
  unsigned count = 0;
  std::vector<std::pair<Int, unsigned>> factors;
};

NegativeCount negative_count(std::uint64_t n, const FibCaseOptions& options) {
  const CharacteristicFactors cf = characteristic_factors(fib(), n, options.budget, options.table);
  NegativeCount out;
  out.complete = cf.complete;
  out.factors = cf.factors;
  for (const auto& [q, e] : cf.factors)
    if (kronecker(fib().D(), q) < 0) out.count += e;
  return out;
}

// Parity claim at n, with an exact count witness when factoring completes.
VerificationReport parity_report(const std::string& branch, std::uint64_t n, int expected,
                                 const FibCaseOptions& options) {
  VerificationReport r = fib_report(branch, n);
  r.witnesses.push_back(parity_witness(n, expected));
  const NegativeCount c = negative_count(n, options);
  if (c.complete)
    r.witnesses.push_back(Witness{"negative_count", Rational(c.count), Int(2), Relation::Congruent, Rational(expected)});
  r.settle();
  return r;
}

// Every index in `indices` with an even count must have count zero; `first`
// itself must carry a nonzero even count.
VerificationReport first_nonzero_even(const std::string& branch, const std::vector<std::uint64_t>& indices,
                                      std::uint64_t first, const FibCaseOptions& options) {
  VerificationReport r = fib_report(branch, first);
  bool complete = true;
  std::uint64_t found = 0;
  for (std::uint64_t n : indices) {
    if (n > first) break;
    if (negative_parity(fib(), n) != 0) continue;
    if (n == first) {
      found = n;
      break;
    }
    const NegativeCount c = negative_count(n, options);
    if (c.count > 0) {
      found = n;
      break;
    }
    if (!c.complete) complete = false;
  }
  if (!complete && (found == 0 || found == first)) {
    // an earlier index could still hide a nonzero even count
    r.status = Status::Incomplete;
    return r;
  }
  r.witnesses.push_back(Witness{"first_index", Rational(found), Int(0), Relation::Congruent, Rational(first)});
  r.settle();
  return r;
}

std::vector<VerificationReport> case_a(const FibCaseOptions& options) {
  std::vector<VerificationReport> out;
  // the listed factors of F_361
  unsigned negatives = 0;
  for (const char* text : kF361Factors) {
    const Int q(text);
    VerificationReport r = fib_report("a_listed_factor", 361);
    r.instance.emplace_back("q", q);
    r.witnesses.push_back(Witness{"probable_prime", Rational(is_probable_prime(q) ? 1 : 0), Int(0),
                                  Relation::Congruent, Rational(1)});
    r.witnesses.push_back(Witness{"divides_term", Rational(term_mod(fib(), 361, q, TermKind::U)), q,
                                  Relation::Congruent, Rational(0)});
    const EntryPoint z = entry_point(fib(), q);
    r.witnesses.push_back(Witness{"entry_point", Rational(z.infinite ? Int(0) : z.value), Int(0),
                                  Relation::Congruent, Rational(361)});
    r.settle();
    if (kronecker(fib().D(), q) < 0) {
      // multiplicity: q^2 | F_361 would make it count twice
      negatives += term_mod(fib(), 361, Int(q * q), TermKind::U) == 0 ? 2 : 1;
    }
    out.push_back(std::move(r));
  }
  VerificationReport parity = fib_report("a_listed_parity", 361);
  parity.witnesses.push_back(Witness{"negative_count", Rational(negatives), Int(2), Relation::Congruent, Rational(0)});
  parity.witnesses.push_back(Witness{"negative_count_nonzero", Rational(negatives), Int(0), Relation::AtLeast, Rational(1)});
  parity.settle();
  out.push_back(std::move(parity));

  std::vector<std::uint64_t> split_powers;
  for (std::uint64_t n = 2; n <= std::max<std::uint64_t>(options.hi, 1); ++n) {
    const std::uint64_t p = prime_power_base(n);
    if (p == 0 || !(p == 5 || kronecker(Int(p), Int(5)) == 1)) continue;
    split_powers.push_back(n);
    if (n >= options.lo) out.push_back(parity_report("a_split_prime_power", n, 0, options));
  }
  if (options.hi >= 361) {
    if (split_powers.empty() || split_powers.back() < 361) split_powers.push_back(361);
    out.push_back(first_nonzero_even("a_first_nonzero_even", split_powers, 361, options));
  }
  return out;
}

std::vector<VerificationReport> case_b(const FibCaseOptions& options) {
  std::vector<VerificationReport> out;
  for (std::uint64_t n = std::max<std::uint64_t>(options.lo, 2); n <= options.hi; ++n) {
    const std::uint64_t p = prime_power_base(n);
    if (p == 0 || kronecker(Int(p), Int(5)) != -1 || n == 2) continue;
    out.push_back(parity_report("b_inert_prime_power", n, 1, options));
  }
  return out;
}

std::vector<VerificationReport> case_c(const FibCaseOptions& options) {
  std::vector<VerificationReport> out;
  std::vector<std::uint64_t> indices;
  for (std::uint64_t n = 6; n <= std::max<std::uint64_t>(options.hi, 216); ++n) {
    const auto e = smooth_exponents(n);
    if (!e || (*e)[2] != 0 || (*e)[0] == 0 || (*e)[1] == 0) continue;
    indices.push_back(n);
    if (n < options.lo || n > options.hi) continue;
    const unsigned i = (*e)[0], j = (*e)[1];
    const int odd = (i == 2 && j > 1) || (i > 2 && j == 1);
    out.push_back(parity_report("c_two_three", n, odd, options));
  }

  VerificationReport set = fib_report("c_characteristic_set", 216);
  const CharacteristicFactors cf = characteristic_factors(fib(), 216, options.budget, options.table);
  if (!cf.complete) {
    set.status = Status::Incomplete;
  } else {
    set.witnesses.push_back(Witness{"characteristic_count", Rational(cf.factors.size()), Int(0), Relation::Congruent,
                                    Rational(kF216Factors.size())});
    for (std::size_t i = 0; i < kF216Factors.size(); ++i) {
      const Int expected(kF216Factors[i]);
      const Int seen = i < cf.factors.size() ? cf.factors[i].first : Int(0);
      set.witnesses.push_back(Witness{"characteristic_factor", Rational(seen), Int(0), Relation::Congruent, Rational(expected)});
      set.witnesses.push_back(Witness{"symbol", Rational(kronecker(fib().D(), expected)), Int(0), Relation::Congruent,
                                      Rational(-1)});
    }
    set.settle();
  }
  out.push_back(std::move(set));
  out.push_back(first_nonzero_even("c_first_nonzero_even", indices, 216, options));
  return out;
}

std::vector<VerificationReport> case_d(const FibCaseOptions& options) {
  std::vector<VerificationReport> out;
  for (std::uint64_t n = std::max<std::uint64_t>(options.lo, 5); n <= options.hi; ++n) {
    if (n % 5 != 0) continue;
    const auto e = smooth_exponents(n);
    if (e) out.push_back(parity_report("d_two_three_five", n, 0, options));
    VerificationReport r = fib_report("d_no_negative", n);
    const NegativeCount c = negative_count(n, options);
    if (!c.complete && c.count == 0) {
      r.status = Status::Incomplete;
    } else {
      r.witnesses.push_back(Witness{"negative_count", Rational(c.count), Int(0), Relation::Congruent, Rational(0)});
      r.settle();
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<VerificationReport> case_e(const FibCaseOptions& options) {
  std::vector<VerificationReport> out;
  for (std::uint64_t n = std::max<std::uint64_t>(options.lo, 2); n <= options.hi; ++n) {
    const std::uint64_t p = largest_prime_factor(n);
    if (p <= 5) continue;
    const std::uint64_t pfree = pfree_part(n, p);
    const bool odd = kronecker(Int(p), Int(5)) == -1 && (pfree == 1 || entry_point(fib(), p).is(pfree));
    out.push_back(parity_report("e_largest_prime", n, odd ? 1 : 0, options));
  }
  return out;
}

}  // namespace

FibCase parse_fib_case(char id) {
  switch (id) {
    case 'a': return FibCase::A;
    case 'b': return FibCase::B;
    case 'c': return FibCase::C;
    case 'd': return FibCase::D;
    case 'e': return FibCase::E;
    default: fail(ErrorCode::InvalidArgument, std::string("unknown case '") + id + "', expected a..e");
  }
}

char fib_case_id(FibCase c) { return static_cast<char>('a' + static_cast<int>(c)); }

int negative_parity(const LucasParams& params, std::uint64_t n) {
  if (!params.regular()) fail(ErrorCode::InvalidArgument, "negative_parity: parameters must be regular");
  Int part = abs(dual_u(params, n));
  for (const auto& [r, e] : factor_index(n)) {
    (void)e;
    const Int rz = from_u64(r);
    mpz_remove(part.get_mpz_t(), part.get_mpz_t(), rz.get_mpz_t());
  }
  Int g;
  while (true) {
    mpz_gcd(g.get_mpz_t(), part.get_mpz_t(), params.D().get_mpz_t());
    if (g == 1) break;
    mpz_divexact(part.get_mpz_t(), part.get_mpz_t(), g.get_mpz_t());
  }
  return kronecker(params.D(), part) < 0 ? 1 : 0;
}

std::vector<VerificationReport> verify_fib_cases(FibCase which, const FibCaseOptions& options) {
  if (options.lo == 0 || options.hi < options.lo) fail(ErrorCode::InvalidArgument, "fib cases: need 1 <= lo <= hi");
  if (options.table && !(options.table->params == fib()))
    fail(ErrorCode::InvalidArgument, "fib cases: factor table must be for P=1,Q=-1");
  std::vector<VerificationReport> out;
  switch (which) {
    case FibCase::A: out = case_a(options); break;
    case FibCase::B: out = case_b(options); break;
    case FibCase::C: out = case_c(options); break;
    case FibCase::D: out = case_d(options); break;
    case FibCase::E: out = case_e(options); break;
  }
  sort_reports(out);
  return out;
}

}  // namespace lucascyc
