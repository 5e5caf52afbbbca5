#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace lucascyc {

using Int = mpz_class;
using Rational = mpq_class;

/// Parses a decimal integer with optional sign. Throws Error(Parse) on junk.
Int parse_int(std::string_view text);

std::string to_string(const Int& value);

/// Throws Error(InvalidArgument) when value does not fit.
std::uint64_t to_u64(const Int& value);

inline bool fits_u64(const Int& value) {
  return value >= 0 && mpz_sizeinbase(value.get_mpz_t(), 2) <= 64;
}

inline Int from_u64(std::uint64_t value) {
  Int out;
  mpz_import(out.get_mpz_t(), 1, 1, sizeof(value), 0, 0, &value);
  return out;
}

inline Int pow(const Int& base, unsigned long exp) {
  Int out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

/// Canonical residue in [0, modulus).
inline Int mod(const Int& value, const Int& modulus) {
  Int out;
  mpz_mod(out.get_mpz_t(), value.get_mpz_t(), modulus.get_mpz_t());
  return out;
}

inline int sign(const Int& value) { return sgn(value); }

}  // namespace lucascyc
