#include "bigint.hpp"

#include "error.hpp"

#include <cctype>

namespace lucascyc {

Int parse_int(std::string_view text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
  if (i == text.size()) fail(ErrorCode::Parse, "expected an integer, got '" + std::string(text) + "'");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j])))
      fail(ErrorCode::Parse, "expected an integer, got '" + std::string(text) + "'");
  }
  std::string digits(text.substr(text[0] == '+' ? 1 : 0));
  return Int(digits, 10);
}

std::string to_string(const Int& value) { return value.get_str(10); }

std::uint64_t to_u64(const Int& value) {
  if (!fits_u64(value)) fail(ErrorCode::InvalidArgument, "value out of 64-bit range: " + to_string(value));
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, 1, sizeof(out), 0, 0, value.get_mpz_t());
  return out;
}

}  // namespace lucascyc
