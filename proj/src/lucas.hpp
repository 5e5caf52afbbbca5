#pragma once

#include "bigint.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

namespace lucascyc {

enum class TermKind { U, V };

/// Parameters (P, Q) of the pair of Lucas sequences U(P,Q), V(P,Q).
/// P, Q and D = P^2 - 4Q are nonzero; regularity and degeneracy are
/// computed, never assumed.
class LucasParams {
 public:
  LucasParams(Int P, Int Q);
  LucasParams(long P, long Q) : LucasParams(Int(P), Int(Q)) {}

  const Int& P() const { return P_; }
  const Int& Q() const { return Q_; }
  const Int& D() const { return D_; }

  /// gcd(P, Q) = 1.
  bool regular() const { return regular_; }
  /// alpha/beta is not a root of unity: not (Q | P^2 and P^2/Q in {0,1,2,3}).
  bool nondegenerate() const { return nondegenerate_; }

  /// Order of alpha/beta as a root of unity (3, 4 or 6); 0 when nondegenerate.
  unsigned torsion_order() const { return torsion_order_; }

  /// Throws Error(Degenerate) naming the caller.
  void require_nondegenerate(const char* context) const;

  /// "P=1,Q=-1"
  std::string label() const;

  friend bool operator==(const LucasParams& a, const LucasParams& b) {
    return a.P_ == b.P_ && a.Q_ == b.Q_;
  }

 private:
  Int P_, Q_, D_;
  bool regular_ = false;
  bool nondegenerate_ = false;
  unsigned torsion_order_ = 0;
};

/// U_n = 0 iff the torsion order divides n; V_n = 0 iff that order r is even
/// and n = r/2 mod r. Never true for nondegenerate parameters and n >= 1.
bool term_vanishes(const LucasParams& params, TermKind kind, std::uint64_t n);

/// Exact U_n via the doubling ladder on (U_k, V_k, U_{k+1}, V_{k+1}, Q^k).
Int u_term(const LucasParams& params, std::uint64_t n);
Int v_term(const LucasParams& params, std::uint64_t n);
std::pair<Int, Int> uv_terms(const LucasParams& params, std::uint64_t n);

/// U_n or V_n reduced into [0, m), O(log n) modular steps. Requires m >= 2.
Int term_mod(const LucasParams& params, std::uint64_t n, const Int& m, TermKind kind);
std::pair<Int, Int> uv_terms_mod(const LucasParams& params, std::uint64_t n, const Int& m);
std::uint64_t term_mod_u64(const LucasParams& params, std::uint64_t n, std::uint64_t m, TermKind kind);

/// Rank of apparition z_U(p); infinite exactly when p | Q and p does not divide P.
struct EntryPoint {
  bool infinite = false;
  Int value;

  static EntryPoint at(Int v) { return EntryPoint{false, std::move(v)}; }
  static EntryPoint never() { return EntryPoint{true, Int(0)}; }

  bool is(std::uint64_t n) const { return !infinite && value == n; }
  /// Finite value as u64; throws when infinite or too large.
  std::uint64_t get() const;
  std::string to_string() const;

  friend bool operator==(const EntryPoint& a, const EntryPoint& b) {
    return a.infinite == b.infinite && (a.infinite || a.value == b.value);
  }
};

/// Case split on p | P, p | Q, p | D; in the generic case the least divisor d
/// of p - (D/p) with p | U_d, tested in ascending order.
EntryPoint entry_point(const LucasParams& params, const Int& p);
EntryPoint entry_point(const LucasParams& params, std::uint64_t p);

/// z_U(q) = n, tested without factoring: q | U_n and q does not divide
/// U_{n/r} for any prime r | n.
bool has_entry_point(const LucasParams& params, const Int& q, std::uint64_t n);

/// Linear scan of U_n mod p for n = 1..limit; nullopt means NOT_FOUND, which
/// is distinct from an infinite entry point.
std::optional<std::uint64_t> entry_point_oracle(const LucasParams& params, std::uint64_t p,
                                                std::uint64_t limit);

}  // namespace lucascyc
