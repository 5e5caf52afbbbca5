#include "cyclotomic.hpp"

#include "arith.hpp"
#include "error.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>

namespace lucascyc {

Poly poly_multiply(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

Poly poly_divide_exact(const Poly& a, const Poly& b) {
  ensure(!b.empty() && b.back() == 1, "poly_divide_exact: divisor must be monic");
  if (a.size() < b.size()) {
    for (const Int& c : a) ensure(c == 0, "poly_divide_exact: nonzero remainder");
    return {};
  }
  Poly rem = a;
  const std::size_t db = b.size() - 1;
  Poly quot(a.size() - db);
  for (std::size_t i = quot.size(); i-- > 0;) {
    const Int c = rem[i + db];
    quot[i] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[i + j] -= c * b[j];
  }
  for (std::size_t i = 0; i < db; ++i) ensure(rem[i] == 0, "poly_divide_exact: nonzero remainder");
  return quot;
}

Poly poly_substitute_power(const Poly& f, std::uint64_t e) {
  if (f.empty()) return {};
  Poly out((f.size() - 1) * e + 1);
  for (std::size_t i = 0; i < f.size(); ++i) out[i * e] = f[i];
  return out;
}

Int poly_evaluate(const Poly& f, const Int& x) {
  Int acc = 0;
  for (std::size_t i = f.size(); i-- > 0;) acc = acc * x + f[i];
  return acc;
}

namespace {

CyclotomicPoly compute_cyclotomic(std::uint64_t n) {
  Poly numerator{Int(1)};
  std::vector<std::uint64_t> denominators;
  for (std::uint64_t d : divisors(n)) {
    const int mu = mobius(n / d);
    if (mu == 0) continue;
    if (mu > 0) {
      Poly xd(d + 1);
      xd[0] = -1;
      xd[d] = 1;
      numerator = poly_multiply(numerator, xd);
    } else {
      denominators.push_back(d);
    }
  }
  for (std::uint64_t d : denominators) {
    Poly xd(d + 1);
    xd[0] = -1;
    xd[d] = 1;
    numerator = poly_divide_exact(numerator, xd);
  }
  ensure(numerator.size() == euler_phi(n) + 1, "cyclotomic degree mismatch");
  return CyclotomicPoly{n, std::move(numerator)};
}

class CyclotomicCache {
 public:
  const CyclotomicPoly& get(std::uint64_t n) {
    {
      std::shared_lock lock(mutex_);
      auto it = cache_.find(n);
      if (it != cache_.end()) return *it->second;
    }
    auto fresh = std::make_unique<CyclotomicPoly>(compute_cyclotomic(n));
    std::unique_lock lock(mutex_);
    auto [it, inserted] = cache_.try_emplace(n, std::move(fresh));
    return *it->second;
  }

 private:
  std::shared_mutex mutex_;
  std::map<std::uint64_t, std::unique_ptr<CyclotomicPoly>> cache_;
};

template <class VTerm, class Reduce>
Int pair_palindrome(const LucasParams& params, std::uint64_t n, VTerm v_term_at, Reduce reduce) {
  if (n <= 1) fail(ErrorCode::InvalidArgument, "homogeneous_eval requires n > 1");
  params.require_nondegenerate("homogeneous_eval");
  const Poly& c = cyclotomic_coeffs(n).coefficients;
  const std::uint64_t phi = c.size() - 1;
  Int acc = 0;
  Int q_pow = 1;
  for (std::uint64_t i = 0; 2 * i < phi; ++i) {
    if (c[i] != 0) acc = reduce(acc + c[i] * q_pow * v_term_at(phi - 2 * i));
    q_pow = reduce(q_pow * params.Q());
  }
  if (phi % 2 == 0) acc = reduce(acc + c[phi / 2] * q_pow);
  return acc;
}

}  // namespace

const CyclotomicPoly& cyclotomic_coeffs(std::uint64_t n) {
  if (n == 0) fail(ErrorCode::InvalidArgument, "cyclotomic_coeffs: n must be >= 1");
  static CyclotomicCache cache;
  return cache.get(n);
}

Int homogeneous_eval(const LucasParams& params, std::uint64_t n) {
  return pair_palindrome(
      params, n, [&](std::uint64_t j) { return v_term(params, j); }, [](const Int& x) { return x; });
}

Int homogeneous_eval_mod(const LucasParams& params, std::uint64_t n, const Int& m) {
  return pair_palindrome(
      params, n, [&](std::uint64_t j) { return term_mod(params, j, m, TermKind::V); },
      [&](const Int& x) { return mod(x, m); });
}

std::uint64_t order_mod(const Int& z, std::uint64_t p) {
  if (p < 2) fail(ErrorCode::InvalidArgument, "order_mod: p must be prime");
  const std::uint64_t base = to_u64(mod(z, from_u64(p)));
  if (base == 0) fail(ErrorCode::InvalidArgument, "order_mod: p divides z");
  std::uint64_t order = p - 1;
  for (auto [q, e] : factor_index(p - 1)) {
    for (unsigned i = 0; i < e && powmod(base, order / q, p) == 1; ++i) order /= q;
  }
  return order;
}

}  // namespace lucascyc
