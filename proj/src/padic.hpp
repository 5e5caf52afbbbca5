#pragma once

#include "bigint.hpp"
#include "lucas.hpp"

#include <cstdint>
#include <functional>

namespace lucascyc {

/// A nonzero rational known as p^valuation * unit, the unit a p-adic unit
/// known mod p^precision; or exactly zero.
struct PadicNumber {
  Int p;
  bool zero = false;
  long valuation = 0;
  Int unit;  // in [1, p^precision), coprime to p
  unsigned precision = 0;

  static PadicNumber exact_zero(const Int& p);
  static PadicNumber from_rational(const Rational& q, const Int& p, unsigned precision);

  bool integral() const { return zero || valuation >= 0; }

  /// x mod p^e; requires integral() and e <= valuation + precision.
  Int residue(unsigned e) const;

  /// v_p(x - a) >= e for an integer a. Non-integral x never matches.
  bool congruent(const Int& a, unsigned e) const;

  PadicNumber operator*(const PadicNumber& other) const;
  /// Throws on division by zero.
  PadicNumber operator/(const PadicNumber& other) const;
};

/// Nonzero integer x given only through x mod p^E for any requested E.
/// Doubles E while the residue is 0, then refines so the unit carries
/// the requested precision.
PadicNumber padic_from_residues(const Int& p, unsigned precision,
                                const std::function<Int(const Int& modulus)>& residue_mod);

/// U_n or V_n as a p-adic number.
PadicNumber padic_term(const LucasParams& params, TermKind kind, std::uint64_t n, const Int& p,
                       unsigned precision);

/// prod_{d | n} term_d^mu(n/d), nondegenerate parameters only.
PadicNumber padic_dual(const LucasParams& params, TermKind kind, std::uint64_t n, const Int& p,
                       unsigned precision);

}  // namespace lucascyc
