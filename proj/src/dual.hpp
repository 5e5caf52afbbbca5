#pragma once

#include "bigint.hpp"
#include "lucas.hpp"
#include "report.hpp"

#include <cstdint>
#include <string>

namespace lucascyc {

/// Rational in lowest terms with a positive denominator.
class ExactRatio {
 public:
  ExactRatio() = default;
  explicit ExactRatio(Rational value) : value_(std::move(value)) { value_.canonicalize(); }
  ExactRatio(const Int& numerator, const Int& denominator);

  const Int& numerator() const { return value_.get_num(); }
  const Int& denominator() const { return value_.get_den(); }
  const Rational& value() const { return value_; }

  bool reduced() const { return true; }
  bool is_integer() const { return value_.get_den() == 1; }
  bool p_integral(const Int& p) const;
  /// v_p(numerator) - v_p(denominator); rejects zero.
  long valuation(const Int& p) const;

  std::string to_string() const;

  friend bool operator==(const ExactRatio& a, const ExactRatio& b) { return a.value_ == b.value_; }
  friend ExactRatio operator*(const ExactRatio& a, const ExactRatio& b) {
    return ExactRatio(Rational(a.value_ * b.value_));
  }

 private:
  Rational value_{0};
};

/// prod_{d | n} U_d^mu(n/d). Integrality is asserted (a failure is a bug).
Int dual_u(const LucasParams& params, std::uint64_t n);

/// prod_{d | n} V_d^mu(n/d); not integral in general.
ExactRatio dual_v(const LucasParams& params, std::uint64_t n);

/// Closed-form v_p(M^U_n), case split on how p meets P, Q and D.
unsigned predicted_valuation_u(const LucasParams& params, const Int& p, std::uint64_t n);

/// M^U_{2n} against M^V_n (n odd) or M^V_n * M^U_n (n even), exactly.
VerificationReport check_doubling(const LucasParams& params, std::uint64_t n);

}  // namespace lucascyc
