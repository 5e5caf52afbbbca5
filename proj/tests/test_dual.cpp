#include <doctest.h>

#include "arith.hpp"
#include "cyclotomic.hpp"
#include "dual.hpp"
#include "error.hpp"
#include "padic.hpp"

using namespace lucascyc;

namespace {

const LucasParams fib(1, -1);

const std::vector<std::pair<long, long>> kValuationGrid = {
    {1, -1}, {3, 2}, {2, -1}, {1, -2}, {5, 3}, {3, -5}, {4, 1}, {6, 3}, {2, -4}, {6, -9}, {2, -8}, {2, -2}, {3, -3},
    {6, -12}, {10, -50}, {4, 2}, {8, -8}, {4, -8}, {12, 18}};

Int product_over_divisors(const LucasParams& lp, std::uint64_t n) {
  Int out = 1;
  for (auto d : divisors(n)) out *= dual_u(lp, d);
  return out;
}

}  // namespace

TEST_SUITE("dual") {
  TEST_CASE("dual_u values") {
    CHECK(dual_u(fib, 1) == 1);
    CHECK(dual_u(fib, 6) == 4);
    CHECK(dual_u(fib, 12) == 6);
    CHECK(dual_u(fib, 25) == 15005);
    CHECK(dual_u(fib, 24) == 46);
  }

  TEST_CASE("dual_v values") {
    CHECK(dual_v(fib, 1).to_string() == "1");
    CHECK(dual_v(fib, 3).to_string() == "4");
    CHECK(dual_v(fib, 6).to_string() == "3/2");
    CHECK(dual_v(fib, 4) == ExactRatio(Int(7), Int(3)));
    CHECK(ExactRatio(Int(4), Int(-6)).to_string() == "-2/3");
    CHECK(dual_v(fib, 6).valuation(Int(2)) == -1);
    CHECK_FALSE(dual_v(fib, 6).p_integral(Int(2)));
    CHECK(dual_v(fib, 6).p_integral(Int(3)));
  }

  TEST_CASE("dual_u equals the homogenized cyclotomic value") {
    for (auto [P, Q] : kValuationGrid) {
      const LucasParams lp(P, Q);
      for (std::uint64_t n = 2; n <= 80; ++n) CHECK(dual_u(lp, n) == homogeneous_eval(lp, n));
    }
  }

  TEST_CASE("product of duals over divisors recovers U_n") {
    for (auto [P, Q] : kValuationGrid) {
      const LucasParams lp(P, Q);
      for (std::uint64_t n = 1; n <= 80; ++n) CHECK(product_over_divisors(lp, n) == u_term(lp, n));
    }
  }

  TEST_CASE("duals reject degenerate parameters") {
    CHECK_THROWS_AS(dual_u(LucasParams(1, 1), 3), Error);
    CHECK_THROWS_AS(dual_u(fib, 0), Error);
  }

  TEST_CASE("predicted valuation, listed instances") {
    CHECK(predicted_valuation_u(fib, Int(5), 25) == 1);
    CHECK(predicted_valuation_u(fib, Int(2), 6) == 2);
    CHECK(predicted_valuation_u(LucasParams(3, 6), Int(2), 10) == 0);
    // exceptional branch 2a = b + 1: (2,-2) at p = 2, n = 4
    CHECK(predicted_valuation_u(LucasParams(2, -2), Int(2), 4) == valuation(dual_u(LucasParams(2, -2), 4), Int(2)));
  }

  TEST_CASE("predicted valuation agrees with the exact value") {
    for (auto [P, Q] : kValuationGrid) {
      const LucasParams lp(P, Q);
      if (!lp.nondegenerate()) continue;
      for (std::uint64_t p : {2, 3, 5, 7, 11, 13}) {
        for (std::uint64_t n = 1; n <= 90; ++n) {
          INFO(lp.label(), " p=", p, " n=", n);
          CHECK(predicted_valuation_u(lp, from_u64(p), n) == valuation(dual_u(lp, n), from_u64(p)));
        }
      }
    }
  }

  TEST_CASE("doubling formula") {
    for (std::uint64_t n : {1, 3, 4}) {
      const VerificationReport r = check_doubling(fib, n);
      CHECK(r.status == Status::Verified);
    }
    for (auto [P, Q] : kValuationGrid) {
      const LucasParams lp(P, Q);
      for (std::uint64_t n = 1; n <= 60; ++n) CHECK(check_doubling(lp, n).status == Status::Verified);
    }
  }
}

TEST_SUITE("padic") {
  TEST_CASE("from_rational") {
    const PadicNumber x = PadicNumber::from_rational(Rational(9, 2), Int(3), 4);
    CHECK(x.valuation == 2);
    CHECK(x.integral());
    CHECK(x.congruent(Int(0), 2));
    CHECK_FALSE(x.congruent(Int(0), 3));
    const PadicNumber y = PadicNumber::from_rational(Rational(3, 2), Int(2), 4);
    CHECK(y.valuation == -1);
    CHECK_FALSE(y.integral());
    CHECK_FALSE(y.congruent(Int(1), 1));
  }

  TEST_CASE("residues match exact terms") {
    for (auto [P, Q] : kValuationGrid) {
      const LucasParams lp(P, Q);
      for (std::uint64_t p : {2, 3, 5}) {
        for (std::uint64_t n = 1; n <= 60; ++n) {
          const Int u = u_term(lp, n);
          const PadicNumber x = padic_term(lp, TermKind::U, n, from_u64(p), 6);
          if (u == 0) {
            CHECK(x.zero);
            continue;
          }
          CHECK(x.valuation == static_cast<long>(valuation(u, from_u64(p))));
          const Int m = pow(from_u64(p), 6);
          CHECK(x.residue(6) == mod(u, m));
        }
      }
    }
  }

  TEST_CASE("p-adic duals match exact duals") {
    for (auto [P, Q] : kValuationGrid) {
      const LucasParams lp(P, Q);
      if (!lp.nondegenerate()) continue;
      for (std::uint64_t p : {2, 3, 7}) {
        for (std::uint64_t n = 1; n <= 40; ++n) {
          const PadicNumber x = padic_dual(lp, TermKind::V, n, from_u64(p), 5);
          const PadicNumber exact = PadicNumber::from_rational(dual_v(lp, n).value(), from_u64(p), 5);
          CHECK(x.valuation == exact.valuation);
          CHECK(x.unit == exact.unit);
        }
      }
    }
  }
}
