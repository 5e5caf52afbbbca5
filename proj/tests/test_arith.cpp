#include <doctest.h>

#include "arith.hpp"
#include "bigint.hpp"
#include "error.hpp"
#include "factorize.hpp"

#include <numeric>

using namespace lucascyc;

TEST_SUITE("arith") {
  TEST_CASE("mobius") {
    CHECK(mobius(1) == 1);
    CHECK(mobius(12) == 0);
    CHECK(mobius(30) == -1);
    CHECK(mobius(7) == -1);
    CHECK(mobius(6) == 1);
  }

  TEST_CASE("mobius sums to zero over divisors of n > 1") {
    for (std::uint64_t n = 2; n <= 500; ++n) {
      int s = 0;
      for (auto d : divisors(n)) s += mobius(d);
      CHECK(s == 0);
    }
  }

  TEST_CASE("euler_phi") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(12) == 4);
    CHECK(euler_phi(361) == 342);
    for (std::uint64_t n = 1; n <= 300; ++n) {
      std::uint64_t count = 0;
      for (std::uint64_t k = 1; k <= n; ++k) count += std::gcd(k, n) == 1;
      CHECK(euler_phi(n) == count);
    }
  }

  TEST_CASE("divisors") {
    CHECK(divisors(1) == std::vector<std::uint64_t>{1});
    CHECK(divisors(7) == std::vector<std::uint64_t>{1, 7});
    CHECK(divisors(12) == std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12});
  }

  TEST_CASE("factor_index and largest prime factor") {
    CHECK(factor_index(360) == std::vector<PrimePower>{{2, 3}, {3, 2}, {5, 1}});
    CHECK(factor_index(1).empty());
    CHECK(largest_prime_factor(361) == 19);
  }

  TEST_CASE("kronecker") {
    CHECK(kronecker(Int(5), Int(11)) == 1);
    CHECK(kronecker(Int(5), Int(2)) == -1);
    CHECK(kronecker(Int(5), Int(5)) == 0);
    CHECK(kronecker(Int(5), Int(7)) == -1);
    CHECK(kronecker(Int(-3), Int(2)) == -1);  // -3 = 5 mod 8
    CHECK(kronecker(Int(8), Int(2)) == 0);
    CHECK(kronecker(Int(5), Int(-1)) == 1);
    CHECK(kronecker(Int(-5), Int(-1)) == -1);
  }

  TEST_CASE("kronecker agrees with Euler's criterion on odd primes") {
    for (std::uint64_t p : sieve_primes(200)) {
      if (p == 2) continue;
      for (long a = -30; a <= 30; ++a) {
        const std::uint64_t r = static_cast<std::uint64_t>(((a % (long)p) + (long)p) % (long)p);
        int expected = r == 0 ? 0 : powmod(r, (p - 1) / 2, p) == 1 ? 1 : -1;
        CHECK(kronecker(Int(a), from_u64(p)) == expected);
      }
    }
  }

  TEST_CASE("valuation and p-free part") {
    auto s = valuation_and_pfree(Int(48), Int(2));
    CHECK(s.valuation == 4);
    CHECK(s.pfree == 3);
    s = valuation_and_pfree(Int(7), Int(5));
    CHECK(s.valuation == 0);
    CHECK(s.pfree == 7);
    s = valuation_and_pfree(Int(75025), Int(5));
    CHECK(s.valuation == 2);
    CHECK(s.pfree == 3001);
    s = valuation_and_pfree(Int(-48), Int(2));
    CHECK(s.pfree == -3);
    CHECK_THROWS_AS(valuation(Int(0), Int(3)), Error);
  }

  TEST_CASE("sieve") {
    CHECK(sieve_primes(10) == std::vector<std::uint64_t>{2, 3, 5, 7});
    CHECK(sieve_primes(100).size() == 25);
    CHECK(sieve_primes(2) == std::vector<std::uint64_t>{2});
    CHECK(sieve_primes(1).empty());
    CHECK(sieve_primes(100000).size() == 9592);
  }

  TEST_CASE("primality") {
    CHECK(is_probable_prime(Int(6263)));
    CHECK(is_probable_prime(Int("177962167367")));
    CHECK_FALSE(is_probable_prime(Int(75025)));
    CHECK_FALSE(is_probable_prime(Int(1)));
    CHECK_FALSE(is_probable_prime(Int(0)));
    CHECK(is_probable_prime(Int(2)));
    // strong pseudoprime to bases 2..37 except the full deterministic set
    CHECK_FALSE(is_prime_u64(3825123056546413051ull));
    CHECK(is_prime_u64(18446744073709551557ull));
    CHECK(is_probable_prime(Int("3150927827816930878141597")));
    CHECK_FALSE(is_probable_prime(Int("3150927827816930878141597") * Int(6263)));
    // agrees with the sieve
    const auto primes = sieve_primes(20000);
    std::size_t i = 0;
    for (std::uint64_t m = 0; m <= 20000; ++m) {
      const bool listed = i < primes.size() && primes[i] == m;
      if (listed) ++i;
      CHECK(is_prime_u64(m) == listed);
    }
  }

  TEST_CASE("factorize") {
    auto f = factorize(Int(75025));
    CHECK(f.complete);
    CHECK(f.factors == std::vector<std::pair<Int, unsigned>>{{Int(5), 2}, {Int(3001), 1}});
    f = factorize(Int(1));
    CHECK(f.complete);
    CHECK(f.factors.empty());
    f = factorize(Int(6263) * Int("177962167367"));
    CHECK(f.complete);
    CHECK(f.factors == std::vector<std::pair<Int, unsigned>>{{Int(6263), 1}, {Int("177962167367"), 1}});
    f = factorize(Int(-360));
    CHECK(f.recombine() == -360);
    CHECK(f.exponent_of(Int(3)) == 2);
  }

  TEST_CASE("factorize reports an unfactored cofactor when the budget runs out") {
    // product of two 25-digit primes
    const Int a("3150927827816930878141597"), b("12020126510714734783009241");
    const auto f = factorize(a * b, FactorBudget{1000});
    CHECK_FALSE(f.complete);
    CHECK(f.unfactored_cofactor == a * b);
    CHECK(f.recombine() == a * b);
  }

  TEST_CASE("parse_int rejects garbage") {
    CHECK(parse_int("-12") == -12);
    CHECK(parse_int("+7") == 7);
    CHECK_THROWS_AS(parse_int("12x"), Error);
    CHECK_THROWS_AS(parse_int(""), Error);
  }
}
