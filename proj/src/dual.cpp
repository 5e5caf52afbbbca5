#include "dual.hpp"

#include "arith.hpp"
#include "error.hpp"
#include "padic.hpp"

namespace lucascyc {

namespace {

bool divides(const Int& p, const Int& x) { return mpz_divisible_p(x.get_mpz_t(), p.get_mpz_t()) != 0; }

unsigned term_valuation(const LucasParams& params, std::uint64_t n, const Int& p) {
  return static_cast<unsigned>(padic_term(params, TermKind::U, n, p, 1).valuation);
}

// n = p^k * base with k >= 1; returns k, or 0 when n has another shape.
unsigned power_times(std::uint64_t n, std::uint64_t base, std::uint64_t p) {
  if (base == 0 || n % base != 0) return 0;
  std::uint64_t rest = n / base;
  unsigned k = 0;
  while (rest % p == 0) {
    rest /= p;
    ++k;
  }
  return rest == 1 ? k : 0;
}

unsigned valuation_coprime_case(const LucasParams& params, const Int& p, std::uint64_t n) {
  if (divides(p, params.Q())) return 0;
  if (!fits_u64(p)) {
    // p exceeds every index, so only n = z_U(p) can carry p.
    if (divides(p, params.D())) return 0;
    return entry_point(params, p).is(n) ? term_valuation(params, n, p) : 0;
  }
  const std::uint64_t pp = to_u64(p);
  if (divides(p, params.D())) {
    if (n == pp) return term_valuation(params, pp, p);
    return power_times(n, 1, pp) > 1 ? 1 : 0;
  }
  const EntryPoint z = entry_point(params, p);
  if (z.infinite || !fits_u64(z.value)) return 0;
  const std::uint64_t zz = z.get();
  if (n == zz) return term_valuation(params, zz, p);
  const unsigned k = power_times(n, zz, pp);
  if (k == 1) return term_valuation(params, pp * zz, p) - term_valuation(params, zz, p);
  return k > 1 ? 1 : 0;
}

}  // namespace

ExactRatio::ExactRatio(const Int& numerator, const Int& denominator) {
  if (denominator == 0) fail(ErrorCode::InvalidArgument, "zero denominator");
  value_ = Rational(numerator, denominator);
  value_.canonicalize();
}

bool ExactRatio::p_integral(const Int& p) const {
  return value_ == 0 || valuation(p) >= 0;
}

long ExactRatio::valuation(const Int& p) const {
  if (value_ == 0) fail(ErrorCode::InvalidArgument, "valuation of zero");
  return static_cast<long>(lucascyc::valuation(value_.get_num(), p)) -
         static_cast<long>(lucascyc::valuation(value_.get_den(), p));
}

std::string ExactRatio::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Int dual_u(const LucasParams& params, std::uint64_t n) {
  params.require_nondegenerate("dual_u");
  if (n == 0) fail(ErrorCode::InvalidArgument, "dual_u: n must be positive");
  Int num = 1, den = 1;
  for (std::uint64_t d : divisors(n)) {
    const int mu = mobius(n / d);
    if (mu > 0)
      num *= u_term(params, d);
    else if (mu < 0)
      den *= u_term(params, d);
  }
  ensure(mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()) != 0, "dual_u: Moebius product is not an integer");
  Int out;
  mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return out;
}

ExactRatio dual_v(const LucasParams& params, std::uint64_t n) {
  params.require_nondegenerate("dual_v");
  if (n == 0) fail(ErrorCode::InvalidArgument, "dual_v: n must be positive");
  Int num = 1, den = 1;
  for (std::uint64_t d : divisors(n)) {
    const int mu = mobius(n / d);
    if (mu > 0)
      num *= v_term(params, d);
    else if (mu < 0)
      den *= v_term(params, d);
  }
  return ExactRatio(num, den);
}

unsigned predicted_valuation_u(const LucasParams& params, const Int& p, std::uint64_t n) {
  params.require_nondegenerate("predicted_valuation_u");
  if (n == 0) fail(ErrorCode::InvalidArgument, "predicted_valuation_u: n must be positive");
  if (!is_probable_prime(p)) fail(ErrorCode::InvalidArgument, "predicted_valuation_u: p must be prime");
  if (!(divides(p, params.P()) && divides(p, params.Q()))) return valuation_coprime_case(params, p, n);

  const unsigned a = valuation(params.P(), p);
  const unsigned b = valuation(params.Q(), p);
  const std::uint64_t phi = euler_phi(n);
  if (b >= 2 * a) {
    if (n == 1) return 0;
    // Strip p^a from both roots: same alpha/beta, so still nondegenerate.
    // When b > 2a this is not the p-free pair (P/p^a, Q/p^b).
    const Int scale = pow(p, a);
    const LucasParams reduced(Int(params.P() / scale), Int(params.Q() / (scale * scale)));
    ensure(!(divides(p, reduced.P()) && divides(p, reduced.Q())), "reduced parameters still share p");
    return static_cast<unsigned>(phi * a) + valuation_coprime_case(reduced, p, n);
  }
  if (2 * a == b + 1 && (p == 2 || p == 3)) {
    const std::uint64_t pp = to_u64(p);
    if (n == 2 * pp) {
      const Int P0 = valuation_and_pfree(params.P(), p).pfree;
      const Int Q0 = valuation_and_pfree(params.Q(), p).pfree;
      return b + 1 + valuation(Int(P0 * P0 - Q0), p);
    }
  }
  if (n == 2) return a;
  if (fits_u64(p) && n % 2 == 0 && power_times(n / 2, 1, to_u64(p)) >= 1)
    return static_cast<unsigned>((phi / 2) * b + 1);
  return static_cast<unsigned>((phi / 2) * b);
}

VerificationReport check_doubling(const LucasParams& params, std::uint64_t n) {
  params.require_nondegenerate("check_doubling");
  if (n == 0) fail(ErrorCode::InvalidArgument, "check_doubling: n must be positive");
  VerificationReport r;
  r.statement = Statement::Doubling;
  r.instance = {{"P", params.P()}, {"Q", params.Q()}, {"n", from_u64(n)}};
  const Int lhs = dual_u(params, 2 * n);
  ExactRatio rhs = dual_v(params, n);
  if (n % 2 == 0) {
    r.branch = "even";
    rhs = rhs * ExactRatio(dual_u(params, n), Int(1));
  } else {
    r.branch = "odd";
  }
  r.witnesses.push_back(Witness{"dual_u_2n", Rational(lhs), Int(0), Relation::Congruent, rhs.value()});
  r.settle();
  return r;
}

}  // namespace lucascyc
