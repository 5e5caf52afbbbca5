#include "padic.hpp"

#include "arith.hpp"
#include "error.hpp"

#include <algorithm>

namespace lucascyc {

namespace {

constexpr unsigned kMaxExponent = 1u << 22;

Int power_of(const Int& p, unsigned e) { return pow(p, e); }

}  // namespace

PadicNumber PadicNumber::exact_zero(const Int& p) {
  PadicNumber z;
  z.p = p;
  z.zero = true;
  z.precision = kMaxExponent;
  return z;
}

PadicNumber PadicNumber::from_rational(const Rational& q, const Int& p, unsigned precision) {
  if (q == 0) return exact_zero(p);
  const PFreeSplit num = valuation_and_pfree(q.get_num(), p);
  const PFreeSplit den = valuation_and_pfree(q.get_den(), p);
  PadicNumber out;
  out.p = p;
  out.valuation = static_cast<long>(num.valuation) - static_cast<long>(den.valuation);
  out.precision = precision;
  const Int modulus = power_of(p, precision);
  Int inv;
  const Int den_unit = mod(den.pfree, modulus);
  mpz_invert(inv.get_mpz_t(), den_unit.get_mpz_t(), modulus.get_mpz_t());
  out.unit = mod(num.pfree * inv, modulus);
  return out;
}

Int PadicNumber::residue(unsigned e) const {
  const Int modulus = power_of(p, e);
  if (zero) return Int(0);
  if (valuation < 0) fail(ErrorCode::Internal, "residue of a non-integral p-adic number");
  if (static_cast<unsigned long>(valuation) >= e) return Int(0);
  if (e > valuation + precision) fail(ErrorCode::Internal, "p-adic precision exhausted");
  return mod(power_of(p, static_cast<unsigned>(valuation)) * unit, modulus);
}

bool PadicNumber::congruent(const Int& a, unsigned e) const {
  if (!integral()) return false;
  const Int modulus = power_of(p, e);
  return residue(e) == mod(a, modulus);
}

PadicNumber PadicNumber::operator*(const PadicNumber& other) const {
  if (zero) return *this;
  if (other.zero) return other;
  PadicNumber out;
  out.p = p;
  out.valuation = valuation + other.valuation;
  out.precision = std::min(precision, other.precision);
  out.unit = mod(unit * other.unit, power_of(p, out.precision));
  return out;
}

PadicNumber PadicNumber::operator/(const PadicNumber& other) const {
  if (other.zero) fail(ErrorCode::Internal, "p-adic division by zero");
  if (zero) return *this;
  PadicNumber out;
  out.p = p;
  out.valuation = valuation - other.valuation;
  out.precision = std::min(precision, other.precision);
  const Int modulus = power_of(p, out.precision);
  Int inv;
  const Int d = mod(other.unit, modulus);
  mpz_invert(inv.get_mpz_t(), d.get_mpz_t(), modulus.get_mpz_t());
  out.unit = mod(unit * inv, modulus);
  return out;
}

PadicNumber padic_from_residues(const Int& p, unsigned precision,
                                const std::function<Int(const Int& modulus)>& residue_mod) {
  if (precision == 0) precision = 1;
  unsigned exponent = precision + 8;
  while (true) {
    const Int r = residue_mod(power_of(p, exponent));
    if (r == 0) {
      if (exponent >= kMaxExponent) fail(ErrorCode::Internal, "p-adic evaluation of a vanishing value");
      exponent = std::min(exponent * 2, kMaxExponent);
      continue;
    }
    const PFreeSplit split = valuation_and_pfree(r, p);
    if (exponent - split.valuation < precision) {
      exponent = split.valuation + precision;
      continue;
    }
    PadicNumber out;
    out.p = p;
    out.valuation = split.valuation;
    out.precision = precision;
    out.unit = mod(split.pfree, power_of(p, precision));
    return out;
  }
}

PadicNumber padic_term(const LucasParams& params, TermKind kind, std::uint64_t n, const Int& p,
                       unsigned precision) {
  if (term_vanishes(params, kind, n)) return PadicNumber::exact_zero(p);
  return padic_from_residues(p, precision,
                             [&](const Int& modulus) { return term_mod(params, n, modulus, kind); });
}

PadicNumber padic_dual(const LucasParams& params, TermKind kind, std::uint64_t n, const Int& p,
                       unsigned precision) {
  params.require_nondegenerate("padic_dual");
  PadicNumber num = PadicNumber::from_rational(Rational(1), p, precision);
  PadicNumber den = num;
  for (std::uint64_t d : divisors(n)) {
    const int mu = mobius(n / d);
    if (mu == 0) continue;
    const PadicNumber t = padic_term(params, kind, d, p, precision);
    if (mu > 0)
      num = num * t;
    else
      den = den * t;
  }
  return num / den;
}

}  // namespace lucascyc
