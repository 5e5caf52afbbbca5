#pragma once

#include <stdexcept>
#include <string>

namespace lucascyc {

enum class ErrorCode {
  InvalidArgument,
  Degenerate,
  Parse,
  Io,
  Incomplete,
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

/// Arithmetic invariant that must hold for correct code; a failure is a bug.
inline void ensure(bool condition, const char* what) {
  if (!condition) throw Error(ErrorCode::Internal, what);
}

}  // namespace lucascyc
