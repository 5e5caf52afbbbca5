#include "congruence.hpp"

#include "arith.hpp"
#include "cyclotomic.hpp"
#include "dual.hpp"
#include "error.hpp"
#include "padic.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <mutex>
#include <optional>
#include <thread>

namespace lucascyc {

namespace {

// Above this index the lift ratios are evaluated p-adically only.
constexpr std::uint64_t kExactLiftIndex = 20000;
constexpr std::uint64_t kMaxClaimExponent = 1u << 20;

bool divides(const Int& p, const Int& x) { return mpz_divisible_p(x.get_mpz_t(), p.get_mpz_t()) != 0; }

struct PrimeFacts {
  Int p;
  std::uint64_t value = 0;
  bool divides_P = false, divides_Q = false, divides_D = false, common = false;
  unsigned vP = 0, vQ = 0;
  int symbol = 0;
  EntryPoint z;

  bool entry_is(std::uint64_t n) const { return z.is(n); }
  bool entry_finite_even() const { return !z.infinite && z.value % 2 == 0; }
  bool entry_divides(std::uint64_t n) const {
    return !z.infinite && fits_u64(z.value) && n % z.get() == 0;
  }
};

PrimeFacts prime_facts(const LucasParams& params, std::uint64_t p) {
  if (!is_prime_u64(p)) fail(ErrorCode::InvalidArgument, "p must be prime, got " + std::to_string(p));
  PrimeFacts f;
  f.value = p;
  f.p = from_u64(p);
  f.divides_P = divides(f.p, params.P());
  f.divides_Q = divides(f.p, params.Q());
  f.divides_D = divides(f.p, params.D());
  f.common = f.divides_P && f.divides_Q;
  f.vP = valuation(params.P(), f.p);
  f.vQ = valuation(params.Q(), f.p);
  f.symbol = kronecker(params.D(), f.p);
  f.z = entry_point(params, f.p);
  return f;
}

std::uint64_t checked_index(std::uint64_t p, unsigned k, std::uint64_t n) {
  std::uint64_t out = n;
  for (unsigned i = 0; i < k; ++i)
    if (__builtin_mul_overflow(out, p, &out)) fail(ErrorCode::InvalidArgument, "index p^k n overflows 64 bits");
  return out;
}

unsigned claim_exponent(std::uint64_t e) {
  if (e > kMaxClaimExponent) fail(ErrorCode::InvalidArgument, "congruence modulus exponent too large");
  return static_cast<unsigned>(e);
}

std::uint64_t upow(std::uint64_t base, unsigned e) {
  std::uint64_t out = 1;
  for (unsigned i = 0; i < e; ++i)
    if (__builtin_mul_overflow(out, base, &out)) fail(ErrorCode::InvalidArgument, "exponent overflow");
  return out;
}

/// x = target mod p^exponent.
struct Claim {
  std::string label;
  Int target;
  unsigned exponent = 0;
};

Witness claim_witness(const PadicNumber& x, const Claim& c) {
  if (!x.integral())
    return Witness{c.label + "_valuation", Rational(x.valuation), x.p, Relation::AtLeast, Rational(0)};
  const Int modulus = pow(x.p, c.exponent);
  return Witness{c.label, Rational(x.residue(c.exponent)), modulus, Relation::Congruent, Rational(mod(c.target, modulus))};
}

Witness integrality_witness(const PadicNumber& x, bool expect_integral) {
  const Rational v(x.zero ? 0L : x.valuation);
  return Witness{expect_integral ? "valuation" : "valuation_negative", v, x.p,
                 expect_integral ? Relation::AtLeast : Relation::Below, Rational(0)};
}

unsigned max_exponent(const std::vector<Claim>& claims) {
  unsigned e = 1;
  for (const auto& c : claims) e = std::max(e, c.exponent);
  return e;
}

Instance prime_instance(const LucasParams& params, std::uint64_t p, std::uint64_t n, unsigned k) {
  return {{"P", params.P()}, {"Q", params.Q()}, {"p", from_u64(p)}, {"n", from_u64(n)}, {"k", Int(k)}};
}

void check_arguments(std::uint64_t n, unsigned kmax) {
  if (n == 0) fail(ErrorCode::InvalidArgument, "n must be positive");
  if (kmax == 0) fail(ErrorCode::InvalidArgument, "kmax must be positive");
}

// Rows shared by the M^U congruences and the U-ratio lift: when p | (P,Q).
std::vector<Claim> common_divisor_claims(const PrimeFacts& f, std::uint64_t n, unsigned k, std::string& branch) {
  if (2 * f.vP > f.vQ && f.value == 2 && n == 1 && k >= 2) {
    branch = "common_divisor_two_power";
    return {{"zero_mod_2_pow", Int(0), claim_exponent(upow(2, k - 2) + 1)}};
  }
  branch = "common_divisor";
  return {{"zero_mod_p_pow", Int(0), claim_exponent(upow(f.value, k - 1))}};
}

std::vector<Claim> thm_mu_claims(const PrimeFacts& f, std::uint64_t n, unsigned k, std::string& branch) {
  if (f.common) return common_divisor_claims(f, n, k, branch);
  const std::uint64_t p = f.value;
  const Int pz(f.p);
  if (f.divides_D) {
    if (n == 1) {
      branch = "ramified_index_p_power";
      std::vector<Claim> c{{"p_mod_pk", pz, k}};
      if ((p == 2 && k >= 3) || (p == 3 && k >= 2) || p > 3) c.push_back({"p_mod_pk1", pz, k + 1});
      return c;
    }
    branch = "ramified_index_coprime";
    std::vector<Claim> c{{"one_mod_pk", Int(1), k}};
    if (p == 2 && k >= 2) c.push_back({"one_mod_pk1", Int(1), k + 1});
    return c;
  }
  if (f.entry_is(n)) {
    branch = "entry_index";
    const Int target = f.symbol * pz;
    std::vector<Claim> c{{"symbol_p_mod_pk", target, k}};
    if ((p == 2 && k >= 2) || p > 2) c.push_back({"symbol_p_mod_pk1", target, k + 1});
    return c;
  }
  if (n == 1) {
    branch = "unramified_n1";
    return {{"symbol_mod_pk", Int(f.symbol), k}};
  }
  branch = "unramified_generic";
  return {{"one_mod_pk", Int(1), k}};
}

VerificationReport judge(VerificationReport r, const PadicNumber& x, const std::vector<Claim>& claims) {
  for (const auto& c : claims) r.witnesses.push_back(claim_witness(x, c));
  r.settle();
  return r;
}

int two_power_times_three(std::uint64_t n) {
  // k >= 1 with n = 2^k * 3, else 0
  if (n % 3 != 0) return 0;
  std::uint64_t m = n / 3;
  int k = 0;
  while (m % 2 == 0) {
    m /= 2;
    ++k;
  }
  return m == 1 ? k : 0;
}

Witness exact_mod_witness(const std::string& label, const Int& value, std::uint64_t modulus, const Int& expected) {
  const Int m = from_u64(modulus);
  return Witness{label, Rational(mod(value, m)), m, Relation::Congruent, Rational(mod(expected, m))};
}

}  // namespace

std::vector<VerificationReport> verify_thm_mu(const LucasParams& params, std::uint64_t p, std::uint64_t n,
                                              unsigned kmax) {
  check_arguments(n, kmax);
  const PrimeFacts f = prime_facts(params, p);
  std::vector<VerificationReport> out;
  for (unsigned k = 1; k <= kmax; ++k) {
    VerificationReport r;
    r.statement = Statement::ThmMu;
    r.instance = prime_instance(params, p, n, k);
    if (!params.nondegenerate()) {
      r.branch = "degenerate";
    } else if (n % p == 0) {
      r.branch = "index_not_coprime";
    } else {
      const auto claims = thm_mu_claims(f, n, k, r.branch);
      const PadicNumber x = padic_dual(params, TermKind::U, checked_index(p, k, n), f.p, max_exponent(claims));
      r = judge(std::move(r), x, claims);
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<VerificationReport> verify_thm_mv(const LucasParams& params, std::uint64_t p, std::uint64_t n,
                                              unsigned kmax) {
  check_arguments(n, kmax);
  const PrimeFacts f = prime_facts(params, p);
  std::vector<VerificationReport> out;
  for (unsigned k = 1; k <= kmax; ++k) {
    VerificationReport r;
    r.statement = Statement::ThmMv;
    r.instance = prime_instance(params, p, n, k);
    if (!params.nondegenerate()) {
      r.branch = "degenerate";
      out.push_back(std::move(r));
      continue;
    }
    if (n % p == 0 || f.common) {
      r.branch = f.common ? "common_divisor" : "index_not_coprime";
      out.push_back(std::move(r));
      continue;
    }
    if (p == 2 && f.divides_D && n == 1 && k == 1) {
      r.branch = "two_ramified_n1_k1";
      r.status = Status::Unconstrained;
      out.push_back(std::move(r));
      continue;
    }
    if (p == 2 && !f.divides_D && n == 3 && k == 1) {
      r.branch = "two_unramified_n3_k1";
      r.status = Status::Unconstrained;
      out.push_back(std::move(r));
      continue;
    }
    const Int pz(f.p);
    std::vector<Claim> claims;
    bool expect_integral = true;
    bool plus_minus_one = false;
    if (p > 2 && !f.divides_D && f.entry_is(n) && f.entry_finite_even()) {
      r.branch = "odd_entry_even";
      expect_integral = false;
    } else if (p == 2 && f.divides_D && n == 1 && k == 2) {
      r.branch = "two_ramified_n1_k2";
      plus_minus_one = true;
    } else if (p > 2 && f.entry_finite_even() && fits_u64(f.z.value) && n == f.z.get() / 2) {
      r.branch = "odd_half_entry";
      const Int target = f.symbol * pz;
      claims.push_back({"symbol_p_mod_pk", target, k});
      if (n % 2 == 1) claims.push_back({"symbol_p_mod_pk1", target, k + 1});
    } else {
      r.branch = "generic";
      claims.push_back({"one_mod_pk", Int(1), k});
    }
    const PadicNumber x =
        padic_dual(params, TermKind::V, checked_index(p, k, n), f.p, std::max(max_exponent(claims), 2u));
    r.witnesses.push_back(integrality_witness(x, expect_integral));
    if (plus_minus_one && x.integral()) {
      // +-1 mod 4 is membership in {1, 3}: an odd residue
      r.witnesses.push_back(
          Witness{"plus_minus_one_mod_4", Rational(x.residue(2)), Int(2), Relation::Congruent, Rational(1)});
    }
    if (x.integral() || !expect_integral)
      for (const auto& c : claims) r.witnesses.push_back(claim_witness(x, c));
    r.settle();
    out.push_back(std::move(r));
  }
  return out;
}

VerificationReport verify_cor_modn(const LucasParams& params, std::uint64_t n) {
  if (n == 0) fail(ErrorCode::InvalidArgument, "n must be positive");
  VerificationReport r;
  r.statement = Statement::CorModN;
  r.instance = {{"P", params.P()}, {"Q", params.Q()}, {"n", from_u64(n)}};
  const auto primes = factor_index(n);
  Int g;
  mpz_gcd(g.get_mpz_t(), params.P().get_mpz_t(), params.Q().get_mpz_t());
  Int gn;
  mpz_gcd(gn.get_mpz_t(), g.get_mpz_t(), from_u64(n).get_mpz_t());
  if (!params.nondegenerate()) {
    r.branch = "degenerate";
    return r;
  }
  if (primes.size() < 2) {
    r.branch = "prime_power_index";
    return r;
  }
  if (gn != 1) {
    r.branch = "index_meets_common_divisor";
    return r;
  }

  const std::uint64_t p = primes.back().first;
  const PrimeFacts f = prime_facts(params, p);
  const std::uint64_t pfree = pfree_part(n, p);
  const bool pfree_is_entry = f.entry_is(pfree);

  // part (a)
  const Int mu = dual_u(params, n);
  std::string branch_a;
  std::optional<Int> expected_a;
  const int k = two_power_times_three(n);
  const bool odd_pq = !divides(Int(2), params.P() * params.Q());
  if (odd_pq && k >= 1) {
    const PrimeFacts three = prime_facts(params, 3);
    const bool three_q = divides(Int(3), params.Q());
    if (k == 1) {
      if (three.entry_is(2)) {
        branch_a = "two_three_6_entry2";
        expected_a = Int(0);
      } else if (three_q || three.entry_is(3) || three.entry_is(4)) {
        branch_a = "two_three_6";
        expected_a = Int(4);
      }
    } else if (k == 2) {
      if (three_q || three.entry_is(2) || three.entry_is(3)) {
        branch_a = "two_three_12";
        expected_a = Int(10);
      } else if (three.entry_is(4)) {
        branch_a = "two_three_12_entry4";
        expected_a = Int(6);
      }
    } else {
      branch_a = "two_three_large";
      expected_a = Int(2 * kronecker(params.D(), Int(2)));
    }
    if (!expected_a) branch_a = "two_three_no_branch";
  } else if (pfree_is_entry) {
    branch_a = "entry";
    expected_a = Int(f.symbol) * f.p;
  } else {
    branch_a = "generic";
    expected_a = Int(1);
  }
  if (expected_a) {
    r.witnesses.push_back(exact_mod_witness("dual_u_mod_n", mu, n, *expected_a));
  } else {
    // observed value only
    const Rational seen(mod(mu, from_u64(n)));
    r.witnesses.push_back(Witness{"dual_u_mod_n_observed", seen, from_u64(n), Relation::Congruent, seen});
  }

  // part (b)
  std::string branch_b;
  if (n == 6 || (pfree_is_entry && f.entry_finite_even())) {
    branch_b = n == 6 ? "v_six" : "v_entry_even";
  } else {
    Int target = 1;
    branch_b = "v_generic";
    if (f.entry_finite_even() && fits_u64(f.z.value) && pfree == f.z.get() / 2) {
      branch_b = "v_half_entry";
      target = Int(f.symbol) * f.p;
    }
    const ExactRatio mv = dual_v(params, n);
    for (const auto& [q, e] : primes) {
      const Int qz = from_u64(q);
      const PadicNumber x = PadicNumber::from_rational(mv.value(), qz, e);
      r.witnesses.push_back(claim_witness(x, Claim{"dual_v_mod_" + std::to_string(q) + "_pow", target, e}));
    }
  }
  r.branch = branch_a + "+" + branch_b;
  if (!expected_a) {
    // no textual branch applies: surfaced, not judged
    r.status = Status::NotApplicable;
    return r;
  }
  r.settle();
  return r;
}

std::vector<VerificationReport> verify_cor_lift(const LucasParams& params, std::uint64_t p, std::uint64_t n,
                                                unsigned kmax) {
  check_arguments(n, kmax);
  const PrimeFacts f = prime_facts(params, p);
  std::vector<VerificationReport> out;
  for (unsigned k = 1; k <= kmax; ++k) {
    VerificationReport r;
    r.statement = Statement::CorLift;
    r.instance = prime_instance(params, p, n, k);
    if (n % p == 0) {
      r.branch = "index_not_coprime";
      out.push_back(std::move(r));
      continue;
    }
    const std::uint64_t top = checked_index(p, k, n);
    const std::uint64_t bottom = top / p;
    if (term_vanishes(params, TermKind::U, bottom)) {
      r.branch = "vanishing_denominator";
      out.push_back(std::move(r));
      continue;
    }

    std::string branch_u;
    std::vector<Claim> claims;
    const Int pz(f.p);
    if (f.common) {
      claims = common_divisor_claims(f, n, k, branch_u);
    } else if (f.divides_D) {
      branch_u = "ramified";
      claims.push_back({"p_mod_pk", pz, k});
      if ((p == 2 && k >= 3) || (p == 3 && k >= 2) || p >= 5) claims.push_back({"p_mod_pk1", pz, k + 1});
    } else if (f.entry_divides(n)) {
      branch_u = "entry_divides";
      claims.push_back({"p_mod_pk", pz, k});
      if ((p == 2 && k >= 2) || p > 2) claims.push_back({"p_mod_pk1", pz, k + 1});
    } else {
      branch_u = "unramified";
      claims.push_back({"symbol_mod_pk", Int(f.symbol), k});
    }
    const unsigned precision = max_exponent(claims);

    PadicNumber ratio;
    if (top <= kExactLiftIndex) {
      const Int a = u_term(params, top);
      const Int b = u_term(params, bottom);
      ensure(mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()) != 0, "lift ratio of U terms is not an integer");
      Int q;
      mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      ratio = PadicNumber::from_rational(Rational(q), pz, precision);
    } else {
      ratio = padic_term(params, TermKind::U, top, pz, precision) /
              padic_term(params, TermKind::U, bottom, pz, precision);
    }
    for (const auto& c : claims) r.witnesses.push_back(claim_witness(ratio, c));

    std::string branch_v = "v_not_claimed";
    if (!f.common) {
      const Int modulus = pow(pz, k);
      r.witnesses.push_back(Witness{"v_lift", Rational(term_mod(params, top, modulus, TermKind::V)), modulus,
                                    Relation::Congruent, Rational(term_mod(params, bottom, modulus, TermKind::V))});
      std::optional<Claim> v_claim;
      if (p == 2 && f.divides_D) {
        branch_v = "v_two_ramified";
      } else if (p == 2 && n % 3 == 0 && k == 1) {
        branch_v = "v_two_three";
      } else if (p > 2 && !f.divides_D && f.entry_divides(n)) {
        branch_v = "v_entry_divides";
      } else if (p > 2 && !f.divides_D && f.entry_finite_even() && fits_u64(f.z.value) &&
                 n % (f.z.get() / 2) == 0) {
        branch_v = "v_ratio_half_entry";
        v_claim = Claim{"v_ratio_symbol_p_mod_pk", Int(f.symbol) * pz, k};
      } else {
        branch_v = "v_ratio_generic";
        v_claim = Claim{"v_ratio_one_mod_pk", Int(1), k};
      }
      if (v_claim) {
        if (term_vanishes(params, TermKind::V, bottom)) {
          branch_v += "_undefined";
        } else {
          const PadicNumber vr = padic_term(params, TermKind::V, top, pz, k) /
                                 padic_term(params, TermKind::V, bottom, pz, k);
          r.witnesses.push_back(integrality_witness(vr, true));
          if (vr.integral()) r.witnesses.push_back(claim_witness(vr, *v_claim));
        }
      }
    }
    r.branch = branch_u + "+" + branch_v;
    r.settle();
    out.push_back(std::move(r));
  }
  return out;
}

VerificationReport verify_cor_mult(const LucasParams& params, std::uint64_t n, FactorBudget budget) {
  if (n == 0) fail(ErrorCode::InvalidArgument, "n must be positive");
  VerificationReport r;
  r.statement = Statement::CorMult;
  r.instance = {{"P", params.P()}, {"Q", params.Q()}, {"n", from_u64(n)}};
  if (!params.nondegenerate() || !params.regular() || n == 1) {
    r.branch = !params.nondegenerate() ? "degenerate" : !params.regular() ? "not_regular" : "index_one";
    return r;
  }
  const std::uint64_t p = largest_prime_factor(n);
  const PrimeFacts f = prime_facts(params, p);
  const std::uint64_t pfree = pfree_part(n, p);
  const int k = two_power_times_three(n);
  const bool odd_pq = !divides(Int(2), params.P() * params.Q());

  std::optional<int> symbol_factor;  // expected product = symbol_factor * sign
  if (odd_pq && k >= 1) {
    if (k <= 2) {
      r.branch = "two_three_small";
    } else {
      r.branch = "two_three";
      symbol_factor = kronecker(params.D(), Int(2));
    }
  } else if (!f.divides_D && (pfree == 1 || f.entry_is(pfree))) {
    if (n == 2 && p == 2) {
      r.branch = "a_index_two";
    } else if (f.divides_P && n == 2 * p) {
      r.branch = "a_p_divides_P_twice_p";
    } else {
      r.branch = pfree == 1 ? "a_prime_power" : "a_entry";
      symbol_factor = f.symbol;
    }
  } else if ((p == 2 && f.divides_D && (n == 2 || n == 4)) || (p > 2 && f.divides_D && n == p)) {
    r.branch = "b_ramified_small";
  } else {
    r.branch = "b_generic";
    symbol_factor = 1;
  }
  if (!symbol_factor) {
    r.status = Status::Unconstrained;
    return r;
  }

  const Int m = dual_u(params, n);
  const Int abs_m = abs(m);
  const Factorization fac = factorize(abs_m, budget);
  if (!fac.complete) {
    r.status = Status::Incomplete;
    r.witnesses.push_back(
        Witness{"unfactored_cofactor", Rational(fac.unfactored_cofactor), Int(0), Relation::Congruent, Rational(1)});
    return r;
  }
  int product = 1;
  for (const auto& [q, e] : fac.factors) {
    if (!has_entry_point(params, q, n)) continue;
    const int s = kronecker(params.D(), q);
    for (unsigned i = 0; i < e; ++i) product *= s;
  }
  r.witnesses.push_back(Witness{"characteristic_product", Rational(product), Int(0), Relation::Congruent,
                                Rational(*symbol_factor * sign(m))});
  r.settle();
  return r;
}

std::vector<VerificationReport> verify_ratcon(const Int& z, std::uint64_t p, std::uint64_t n, unsigned kmax) {
  check_arguments(n, kmax);
  if (!is_prime_u64(p)) fail(ErrorCode::InvalidArgument, "p must be prime");
  if (n % p == 0) fail(ErrorCode::InvalidArgument, "n must be coprime to p");
  const Int pz = from_u64(p);
  if (divides(pz, z)) fail(ErrorCode::InvalidArgument, "z must be coprime to p");
  const std::uint64_t order = order_mod(z, p);
  const Poly& base = cyclotomic_coeffs(n).coefficients;
  std::vector<VerificationReport> out;
  Int lower = poly_evaluate(base, z);  // Phi_n(z^{p^{k-1}}), starting at k = 1
  Int power = z;
  for (unsigned k = 1; k <= kmax; ++k) {
    VerificationReport r;
    r.statement = Statement::Ratcon;
    r.instance = {{"z", z}, {"p", pz}, {"n", from_u64(n)}, {"k", Int(k)}};
    mpz_pow_ui(power.get_mpz_t(), power.get_mpz_t(), p);
    const Int upper = poly_evaluate(base, power);
    ensure(mpz_divisible_p(upper.get_mpz_t(), lower.get_mpz_t()) != 0, "cyclotomic quotient is not exact");
    Int value;
    mpz_divexact(value.get_mpz_t(), upper.get_mpz_t(), lower.get_mpz_t());
    unsigned e;
    Int target;
    if (n != order) {
      r.branch = "order_differs";
      target = 1;
      e = (p == 2 && k > 1) ? k + 1 : k;
    } else {
      r.branch = "order_matches";
      target = pz;
      e = (p == 2 && k == 1) ? k : k + 1;
    }
    const Int modulus = pow(pz, e);
    r.witnesses.push_back(
        Witness{"cyclotomic_value", Rational(mod(value, modulus)), modulus, Relation::Congruent, Rational(mod(target, modulus))});
    r.settle();
    out.push_back(std::move(r));
    lower = upper;
  }
  return out;
}

std::vector<LucasParams> default_param_grid() {
  const std::vector<std::pair<long, long>> pairs = {{1, -1}, {1, 2},  {3, 2},  {2, -1}, {1, -2},
                                                    {5, 6},  {4, 2},  {6, 3},  {2, -4}, {6, -9},
                                                    {2, -8}, {2, -2}, {3, -3}};
  std::vector<LucasParams> out;
  for (const auto& [P, Q] : pairs) {
    LucasParams params(P, Q);
    if (params.nondegenerate()) out.push_back(params);
  }
  return out;
}

std::vector<VerificationReport> run_grid(const GridOptions& options) {
  std::vector<std::function<std::vector<VerificationReport>()>> tasks;
  for (const auto& params : options.params) {
    for (std::uint64_t p : options.primes) {
      for (std::uint64_t n = 1; n <= options.xmax; ++n) {
        if (n % p == 0) continue;
        tasks.emplace_back([&params, p, n, &options] {
          auto out = verify_thm_mu(params, p, n, options.kmax);
          auto mv = verify_thm_mv(params, p, n, options.kmax);
          auto lift = verify_cor_lift(params, p, n, options.kmax);
          out.insert(out.end(), mv.begin(), mv.end());
          out.insert(out.end(), lift.begin(), lift.end());
          return out;
        });
      }
    }
    for (std::uint64_t n = 2; n <= options.modn_max; ++n) {
      if (factor_index(n).size() < 2) continue;
      tasks.emplace_back([&params, n] { return std::vector<VerificationReport>{verify_cor_modn(params, n)}; });
    }
    if (params.regular()) {
      for (std::uint64_t n = 2; n <= options.mult_max; ++n)
        tasks.emplace_back([&params, n, &options] {
          return std::vector<VerificationReport>{verify_cor_mult(params, n, options.budget)};
        });
    }
    for (std::uint64_t n = 1; n <= options.doubling_max; ++n)
      tasks.emplace_back([&params, n] { return std::vector<VerificationReport>{check_doubling(params, n)}; });
  }

  std::vector<std::vector<VerificationReport>> results(tasks.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        results[i] = tasks[i]();
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const unsigned jobs = std::max(1u, options.jobs);
  std::vector<std::thread> threads;
  for (unsigned j = 1; j < jobs; ++j) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();
  if (failure) std::rethrow_exception(failure);

  std::vector<VerificationReport> merged;
  for (auto& chunk : results)
    for (auto& r : chunk) merged.push_back(std::move(r));
  sort_reports(merged);
  return merged;
}

}  // namespace lucascyc
