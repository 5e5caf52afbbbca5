#pragma once

#include "bigint.hpp"
#include "lucas.hpp"

#include <cstdint>
#include <vector>

namespace lucascyc {

/// Dense integer polynomial, constant term first.
using Poly = std::vector<Int>;

Poly poly_multiply(const Poly& a, const Poly& b);
/// Exact quotient a / b for monic b; throws Error(Internal) on a remainder.
Poly poly_divide_exact(const Poly& a, const Poly& b);
/// f(X^e).
Poly poly_substitute_power(const Poly& f, std::uint64_t e);
Int poly_evaluate(const Poly& f, const Int& x);

struct CyclotomicPoly {
  std::uint64_t n = 0;
  Poly coefficients;  // length euler_phi(n) + 1, leading coefficient 1

  std::uint64_t degree() const { return coefficients.size() - 1; }
};

/// Phi_n as the product of (X^d - 1)^mu(n/d) over d | n: numerator factors are
/// multiplied first, then the denominator factors are divided out exactly.
/// Memoized; the cache returns value-identical results under concurrent use.
const CyclotomicPoly& cyclotomic_coeffs(std::uint64_t n);

/// beta^phi(n) Phi_n(alpha/beta) in integers, for n > 1: the palindromic
/// coefficients pair up as sum_{i < phi/2} c_i Q^i V_{phi-2i}, plus the middle
/// term c_{phi/2} Q^{phi/2} when phi(n) is even.
Int homogeneous_eval(const LucasParams& params, std::uint64_t n);

/// The same form reduced mod m, using modular V terms.
Int homogeneous_eval_mod(const LucasParams& params, std::uint64_t n, const Int& m);

/// Multiplicative order of z mod p. Rejects p | z.
std::uint64_t order_mod(const Int& z, std::uint64_t p);

}  // namespace lucascyc
