#include "lucas.hpp"

#include "arith.hpp"
#include "error.hpp"
#include "factorize.hpp"

#include <algorithm>
#include <bit>

namespace lucascyc {

namespace {

struct ExactRing {
  using value_type = Int;
  Int lift(const Int& v) const { return v; }
  Int add(const Int& a, const Int& b) const { return a + b; }
  Int sub(const Int& a, const Int& b) const { return a - b; }
  Int mul(const Int& a, const Int& b) const { return a * b; }
};

struct ModRing {
  using value_type = Int;
  Int m;
  Int lift(const Int& v) const { return mod(v, m); }
  Int add(const Int& a, const Int& b) const {
    Int r = a + b;
    if (r >= m) r -= m;
    return r;
  }
  Int sub(const Int& a, const Int& b) const {
    Int r = a - b;
    if (r < 0) r += m;
    return r;
  }
  Int mul(const Int& a, const Int& b) const {
    Int r = a * b;
    mpz_mod(r.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t());
    return r;
  }
};

struct Mod64Ring {
  using value_type = std::uint64_t;
  std::uint64_t m;
  std::uint64_t lift(const Int& v) const { return to_u64(mod(v, Int(from_u64(m)))); }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    const std::uint64_t r = a + b;
    return (r >= m || r < a) ? r - m : r;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + (m - b); }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return mulmod(a, b, m); }
};

// Invariant after each step: (u0, v0, u1, v1, qk) = (U_k, V_k, U_{k+1}, V_{k+1}, Q^k).
template <class Ring>
std::pair<typename Ring::value_type, typename Ring::value_type> lucas_ladder(
    const Ring& ring, const LucasParams& params, std::uint64_t n) {
  using T = typename Ring::value_type;
  const T P = ring.lift(params.P());
  const T Q = ring.lift(params.Q());
  T u0 = ring.lift(Int(0)), v0 = ring.lift(Int(2));
  T u1 = ring.lift(Int(1)), v1 = P;
  T qk = ring.lift(Int(1));
  if (n == 0) return {u0, v0};
  for (int bit = std::bit_width(n) - 1; bit >= 0; --bit) {
    const T u_odd = ring.sub(ring.mul(u1, v0), qk);
    const T v_odd = ring.sub(ring.mul(v1, v0), ring.mul(P, qk));
    const T q2k = ring.mul(qk, qk);
    if ((n >> bit) & 1) {
      const T qk1 = ring.mul(qk, Q);
      const T u_even = ring.mul(u1, v1);
      const T v_even = ring.sub(ring.mul(v1, v1), ring.add(qk1, qk1));
      u0 = u_odd;
      v0 = v_odd;
      u1 = u_even;
      v1 = v_even;
      qk = ring.mul(q2k, Q);
    } else {
      const T u_even = ring.mul(u0, v0);
      const T v_even = ring.sub(ring.mul(v0, v0), ring.add(qk, qk));
      u0 = u_even;
      v0 = v_even;
      u1 = u_odd;
      v1 = v_odd;
      qk = q2k;
    }
  }
  return {u0, v0};
}

void require_modulus(const Int& m) {
  if (m < 2) fail(ErrorCode::InvalidArgument, "modulus must be >= 2");
}

}  // namespace

LucasParams::LucasParams(Int P, Int Q) : P_(std::move(P)), Q_(std::move(Q)) {
  if (P_ == 0 || Q_ == 0) fail(ErrorCode::InvalidArgument, "P and Q must be nonzero");
  D_ = P_ * P_ - 4 * Q_;
  if (D_ == 0) fail(ErrorCode::InvalidArgument, "discriminant P^2 - 4Q must be nonzero (" + label() + ")");
  Int g;
  mpz_gcd(g.get_mpz_t(), P_.get_mpz_t(), Q_.get_mpz_t());
  regular_ = g == 1;
  const Int p2 = P_ * P_;
  bool degenerate = false;
  if (mpz_divisible_p(p2.get_mpz_t(), Q_.get_mpz_t())) {
    const Int ratio = p2 / Q_;
    degenerate = ratio >= 0 && ratio <= 3;
    // P^2/Q = 2 + 2cos(theta); P != 0 rules out theta = pi
    if (degenerate) torsion_order_ = ratio == 1 ? 3 : ratio == 2 ? 4 : 6;
  }
  nondegenerate_ = !degenerate;
}

void LucasParams::require_nondegenerate(const char* context) const {
  if (!nondegenerate_)
    fail(ErrorCode::Degenerate, std::string(context) + ": parameters " + label() + " are degenerate");
}

bool term_vanishes(const LucasParams& params, TermKind kind, std::uint64_t n) {
  const unsigned r = params.torsion_order();
  if (r == 0) return false;
  if (kind == TermKind::U) return n % r == 0;
  return r % 2 == 0 && n % r == r / 2;
}

std::string LucasParams::label() const {
  return "P=" + lucascyc::to_string(P_) + ",Q=" + lucascyc::to_string(Q_);
}

std::pair<Int, Int> uv_terms(const LucasParams& params, std::uint64_t n) {
  return lucas_ladder(ExactRing{}, params, n);
}

Int u_term(const LucasParams& params, std::uint64_t n) { return uv_terms(params, n).first; }
Int v_term(const LucasParams& params, std::uint64_t n) { return uv_terms(params, n).second; }

std::uint64_t term_mod_u64(const LucasParams& params, std::uint64_t n, std::uint64_t m, TermKind kind) {
  if (m < 2) fail(ErrorCode::InvalidArgument, "modulus must be >= 2");
  auto [u, v] = lucas_ladder(Mod64Ring{m}, params, n);
  return kind == TermKind::U ? u : v;
}

std::pair<Int, Int> uv_terms_mod(const LucasParams& params, std::uint64_t n, const Int& m) {
  require_modulus(m);
  if (fits_u64(m)) {
    auto [u, v] = lucas_ladder(Mod64Ring{to_u64(m)}, params, n);
    return {from_u64(u), from_u64(v)};
  }
  return lucas_ladder(ModRing{m}, params, n);
}

Int term_mod(const LucasParams& params, std::uint64_t n, const Int& m, TermKind kind) {
  auto [u, v] = uv_terms_mod(params, n, m);
  return kind == TermKind::U ? u : v;
}

std::uint64_t EntryPoint::get() const {
  if (infinite) fail(ErrorCode::InvalidArgument, "entry point is infinite");
  return to_u64(value);
}

std::string EntryPoint::to_string() const { return infinite ? "inf" : lucascyc::to_string(value); }

EntryPoint entry_point(const LucasParams& params, const Int& p) {
  if (!is_probable_prime(p)) fail(ErrorCode::InvalidArgument, "entry_point: " + to_string(p) + " is not prime");
  const bool p_div_P = mpz_divisible_p(params.P().get_mpz_t(), p.get_mpz_t());
  const bool p_div_Q = mpz_divisible_p(params.Q().get_mpz_t(), p.get_mpz_t());
  const bool p_div_D = mpz_divisible_p(params.D().get_mpz_t(), p.get_mpz_t());
  if (p_div_P && p_div_Q) return EntryPoint::at(Int(2));
  if (p_div_Q) return EntryPoint::never();
  if (p_div_D) return EntryPoint::at(p == 2 ? Int(2) : p);
  if (p == 2) {
    // P, Q odd: U_1 = 1, U_2 = P odd, U_3 = P^2 - Q even.
    for (std::uint64_t n = 1; n <= 3; ++n)
      if (term_mod(params, n, p, TermKind::U) == 0) return EntryPoint::at(Int(n));
    ensure(false, "entry_point: no hit for p = 2 within n <= 3");
  }
  const Int bound = p - kronecker(params.D(), p);
  std::vector<Int> candidates{Int(1)};
  if (fits_u64(bound)) {
    for (auto [q, e] : factor_index(to_u64(bound))) {
      const std::size_t count = candidates.size();
      Int qk = 1;
      for (unsigned i = 0; i < e; ++i) {
        qk *= from_u64(q);
        for (std::size_t j = 0; j < count; ++j) candidates.push_back(candidates[j] * qk);
      }
    }
  } else {
    const Factorization f = factorize(bound);
    if (!f.complete) fail(ErrorCode::Incomplete, "entry_point: cannot factor p - (D/p) for p = " + to_string(p));
    for (const auto& [q, e] : f.factors) {
      const std::size_t count = candidates.size();
      Int qk = 1;
      for (unsigned i = 0; i < e; ++i) {
        qk *= q;
        for (std::size_t j = 0; j < count; ++j) candidates.push_back(candidates[j] * qk);
      }
    }
  }
  std::sort(candidates.begin(), candidates.end());
  for (const Int& d : candidates) {
    if (!fits_u64(d)) fail(ErrorCode::InvalidArgument, "entry_point: candidate index exceeds 64 bits");
    if (term_mod(params, to_u64(d), p, TermKind::U) == 0) return EntryPoint::at(d);
  }
  ensure(false, "entry_point: p - (D/p) is not a multiple of the entry point");
  return EntryPoint::never();
}

EntryPoint entry_point(const LucasParams& params, std::uint64_t p) { return entry_point(params, from_u64(p)); }

bool has_entry_point(const LucasParams& params, const Int& q, std::uint64_t n) {
  if (n == 0 || q < 2) return false;
  if (term_mod(params, n, q, TermKind::U) != 0) return false;
  for (const auto& [r, e] : factor_index(n)) {
    (void)e;
    if (term_mod(params, n / r, q, TermKind::U) == 0) return false;
  }
  return true;
}

std::optional<std::uint64_t> entry_point_oracle(const LucasParams& params, std::uint64_t p, std::uint64_t limit) {
  if (p < 2) fail(ErrorCode::InvalidArgument, "entry_point_oracle: p must be prime");
  Mod64Ring ring{p};
  const std::uint64_t P = ring.lift(params.P());
  const std::uint64_t Q = ring.lift(params.Q());
  std::uint64_t prev = 0, cur = 1 % p;  // U_0, U_1
  for (std::uint64_t n = 1; n <= limit; ++n) {
    if (cur == 0) return n;
    const std::uint64_t next = ring.sub(ring.mul(P, cur), ring.mul(Q, prev));
    prev = cur;
    cur = next;
  }
  return std::nullopt;
}

}  // namespace lucascyc
