#include "factorize.hpp"

#include "arith.hpp"
#include "error.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace lucascyc {

namespace {

const std::vector<std::uint64_t>& trial_primes() {
  static const std::vector<std::uint64_t> primes = sieve_primes(kTrialDivisionBound);
  return primes;
}

std::uint64_t rho_u64(std::uint64_t n, std::uint64_t max_iterations) {
  if (n % 2 == 0) return 2;
  std::uint64_t spent = 0;
  for (std::uint64_t c = 1; spent < max_iterations; ++c) {
    auto f = [&](std::uint64_t v) {
      std::uint64_t s = mulmod(v, v, n) + c;
      return s >= n ? s - n : s;
    };
    std::uint64_t y = 2, x = 2, ys = 2, q = 1, g = 1;
    constexpr std::uint64_t batch = 128;
    for (std::uint64_t r = 1; g == 1 && spent < max_iterations; r <<= 1) {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = f(y);
      spent += r;
      for (std::uint64_t k = 0; k < r && g == 1; k += batch) {
        ys = y;
        const std::uint64_t steps = std::min(batch, r - k);
        for (std::uint64_t i = 0; i < steps; ++i) {
          y = f(y);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        spent += steps;
        g = std::gcd(q, n);
      }
    }
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != 1 && g != n) return g;
  }
  return 0;
}

}  // namespace

Int rho_split(const Int& n, std::uint64_t max_iterations) {
  if (fits_u64(n)) return from_u64(rho_u64(to_u64(n), max_iterations));
  if (mpz_even_p(n.get_mpz_t())) return 2;
  std::uint64_t spent = 0;
  Int x, y, ys, q, g, diff;
  for (unsigned long c = 1; spent < max_iterations; ++c) {
    auto step = [&](Int& v) {
      v = v * v + c;
      mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
    };
    y = 2;
    q = 1;
    g = 1;
    constexpr std::uint64_t batch = 128;
    for (std::uint64_t r = 1; g == 1 && spent < max_iterations; r <<= 1) {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) step(y);
      spent += r;
      for (std::uint64_t k = 0; k < r && g == 1; k += batch) {
        ys = y;
        const std::uint64_t steps = std::min(batch, r - k);
        for (std::uint64_t i = 0; i < steps; ++i) {
          step(y);
          diff = x - y;
          q = q * diff;
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        spent += steps;
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      }
    }
    if (g == n) {
      do {
        step(ys);
        diff = x - ys;
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != 1 && g != n) return g;
  }
  return 0;
}

Int Factorization::recombine() const {
  Int out = unfactored_cofactor;
  for (const auto& [p, e] : factors) out *= pow(p, e);
  return sgn(value) < 0 ? Int(-out) : out;
}

unsigned Factorization::exponent_of(const Int& prime) const {
  for (const auto& [p, e] : factors)
    if (p == prime) return e;
  return 0;
}

Factorization factorize(const Int& m, FactorBudget budget) {
  if (m == 0) fail(ErrorCode::InvalidArgument, "cannot factor zero");
  Factorization out;
  out.value = m;
  std::map<Int, unsigned> found;
  Int rest = abs(m);

  for (std::uint64_t p : trial_primes()) {
    if (Int(p) * p > rest) break;
    if (!mpz_divisible_ui_p(rest.get_mpz_t(), p)) continue;
    unsigned e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++e;
    }
    found[Int(p)] += e;
  }

  Int unfactored = 1;
  // (cofactor, multiplicity) work list.
  std::vector<std::pair<Int, unsigned>> work;
  if (rest > 1) work.emplace_back(rest, 1u);
  const Int bound_sq = Int(kTrialDivisionBound) * kTrialDivisionBound;
  while (!work.empty()) {
    auto [c, mult] = work.back();
    work.pop_back();
    if (c == 1) continue;
    if (c < bound_sq || is_probable_prime(c)) {
      found[c] += mult;
      continue;
    }
    if (mpz_perfect_power_p(c.get_mpz_t())) {
      bool split = false;
      for (unsigned long k = mpz_sizeinbase(c.get_mpz_t(), 2); k >= 2; --k) {
        Int root;
        if (mpz_root(root.get_mpz_t(), c.get_mpz_t(), k)) {
          work.emplace_back(root, mult * static_cast<unsigned>(k));
          split = true;
          break;
        }
      }
      if (split) continue;
    }
    const Int d = rho_split(c, budget.rho_iterations);
    if (d == 0) {
      unfactored *= pow(c, mult);
      continue;
    }
    work.emplace_back(d, mult);
    work.emplace_back(Int(c / d), mult);
  }

  for (auto& [p, e] : found) out.factors.emplace_back(p, e);
  out.unfactored_cofactor = unfactored;
  out.complete = unfactored == 1;
  ensure(out.recombine() == m, "factorization does not recombine");
  return out;
}

}  // namespace lucascyc
