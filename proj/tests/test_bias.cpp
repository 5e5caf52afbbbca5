#include <doctest.h>

#include "arith.hpp"
#include "bias.hpp"
#include "census.hpp"
#include "error.hpp"
#include "factor_table.hpp"
#include "fibonacci.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

using namespace lucascyc;

namespace fs = std::filesystem;

namespace {

const LucasParams fib(1, -1);

std::string data(const std::string& name) { return std::string(LUCASCYC_TEST_DATA) + "/" + name; }

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("lucascyc_test_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir / name;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

using Factors = std::vector<std::pair<Int, unsigned>>;

}  // namespace

TEST_SUITE("bias") {
  TEST_CASE("characteristic factors") {
    CHECK(characteristic_factors(fib, 1).factors.empty());
    CHECK(characteristic_factors(fib, 12).factors.empty());
    const auto cf = characteristic_factors(fib, 216);
    CHECK(cf.complete);
    CHECK(cf.factors == Factors{{Int(6263), 1}, {Int("177962167367"), 1}});
    // the squared characteristic factor of F_... : 2 at n = 3 has U_3 = 2, U_6 = 8
    CHECK(characteristic_factors(fib, 3).factors == Factors{{Int(2), 1}});
    CHECK(characteristic_factors(fib, 6).factors.empty());
  }

  TEST_CASE("table rows 1..36") {
    const auto rows = bias_table(fib, 36);
    REQUIRE(rows.size() == 36);
    CHECK(rows[0].count_r == 0);
    CHECK(rows[0].count_n == 0);
    CHECK(rows[1].count_n == 0);
    CHECK(rows[2].count_n == 1);
    CHECK(rows[29].n == 30);
    CHECK(rows[29].count_r == 14);
    CHECK(rows[29].count_n == 13);
    for (const auto& r : rows) CHECK(r.exact);
    CHECK(bias_term(rows, 3) == 0);
    CHECK(bias_term(rows, 36) == 2);
    CHECK_THROWS_AS(bias_term(rows, 37), Error);
    CHECK_THROWS_AS(bias_term(rows, 0), Error);
  }

  TEST_CASE("inexact rows are refused by bias_term") {
    // a tiny budget leaves large cofactors unsplit
    const auto rows = bias_table(fib, 80, FactorBudget{10});
    bool any_inexact = false;
    for (const auto& r : rows) any_inexact |= !r.exact;
    REQUIRE(any_inexact);
    CHECK_THROWS_AS(bias_term(rows, 80), Error);
  }

  TEST_CASE("csv export") {
    const auto rows = bias_table(fib, 3);
    CHECK(format_bias_csv(rows) == "n,count_r,count_n,exact\n1,0,0,1\n2,0,0,1\n3,0,1,1\n");
    const fs::path out = scratch("bias.csv");
    export_bias_csv(rows, out.string());
    CHECK(slurp(out) == format_bias_csv(rows));
    CHECK_THROWS_AS(export_bias_csv({}, scratch("empty.csv").string()), Error);
    CHECK_THROWS_AS(export_bias_csv(rows, "/nonexistent-dir/bias.csv"), Error);
  }

  TEST_CASE("table-backed rows agree with internal factoring") {
    const FactorTable table = import_factor_table(data("fibonacci_small.txt"), fib);
    const auto with_table = bias_table(fib, 120, {}, &table);
    const auto internal = bias_table(fib, 120);
    REQUIRE(with_table.size() == internal.size());
    for (std::size_t i = 0; i < internal.size(); ++i) {
      CHECK(with_table[i].count_r == internal[i].count_r);
      CHECK(with_table[i].count_n == internal[i].count_n);
    }
  }
}

TEST_SUITE("factor_table") {
  TEST_CASE("ingest a generated table") {
    const FactorTable t = import_factor_table(data("fibonacci_small.txt"), fib);
    CHECK(t.diagnostics.empty());
    CHECK(t.complete_prefix() == 150);
    REQUIRE(t.find(216));
    CHECK(t.find(216)->complete);
    REQUIRE(t.find(999));
    CHECK_FALSE(t.find(999)->complete);
    CHECK(t.find(1)->factors.empty());
    std::ostringstream out;
    write_factor_table(t, out);
    std::istringstream back(out.str());
    const FactorTable again = parse_factor_table(back, fib, "round trip");
    CHECK(again.entries.size() == t.entries.size());
  }

  TEST_CASE("single lines") {
    auto parse = [](const std::string& body) {
      std::istringstream in("lucas-factors v1 P=1 Q=-1\n" + body);
      return parse_factor_table(in, fib, "inline");
    };
    // a short product that does not recombine to F_216 is rejected
    auto t = parse("216: 2^4 3^3 7 23 107 6263 103681 177962167367\n");
    CHECK(t.entries.empty());
    CHECK(t.diagnostics.size() == 1);
    t = parse("216: 2^5 3^4 7 17 19 23 53 107 109 5779 6263 103681 11128427 177962167367\n");
    CHECK(t.find(216)->complete);
    // listed composite
    t = parse("10: 5 11\n25: 25 3001\n");
    CHECK(t.find(10));
    CHECK_FALSE(t.find(25));
  }

  TEST_CASE("parse errors name the line") {
    try {
      import_factor_table(data("malformed_table.txt"), fib);
      FAIL("expected a parse error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::Parse);
      CHECK(std::string(e.what()).rfind("line 4:", 0) == 0);
    }
    std::istringstream wrong("lucas-factors v1 P=3 Q=2\n");
    CHECK_THROWS_AS(parse_factor_table(wrong, fib, "x"), Error);
    std::istringstream no_header("10: 5 11\n");
    CHECK_THROWS_AS(parse_factor_table(no_header, fib, "x"), Error);
    CHECK_THROWS_AS(import_factor_table(data("missing.txt"), fib), Error);
  }

  TEST_CASE("duplicates and mismatches become diagnostics") {
    const FactorTable t = import_factor_table(data("diagnostics_table.txt"), fib);
    CHECK(t.entries.size() == 3);  // 10, 11, 13
    CHECK(t.diagnostics.size() == 2);
    CHECK_FALSE(t.find(12));
  }
}

TEST_SUITE("census") {
  TEST_CASE("small censuses") {
    const auto c = census_build(fib, 20);
    const std::vector<std::pair<std::uint64_t, std::uint64_t>> expected = {{2, 3},  {3, 4},   {5, 5},  {7, 8},
                                                                           {11, 10}, {13, 7}, {17, 9}, {19, 18}};
    REQUIRE(c.records.size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) {
      CHECK(c.records[i].first == expected[i].first);
      CHECK(c.records[i].second.is(expected[i].second));
    }
    const auto d = census_build(LucasParams(1, 2), 3);
    CHECK(d.find(2)->infinite);
    CHECK_FALSE(d.find(3)->infinite);
    CHECK(census_build(fib, 2).records.size() == 1);
  }

  TEST_CASE("parallel census matches serial") {
    const auto a = census_build(LucasParams(3, -5), 20000, 1);
    const auto b = census_build(LucasParams(3, -5), 20000, 6);
    CHECK(format_census_csv(a) == format_census_csv(b));
  }

  TEST_CASE("csv round trip and cache") {
    const auto c = census_build(LucasParams(1, 2), 50);
    const std::string text = format_census_csv(c);
    CHECK(text.rfind("# lucas-census P=1 Q=2 limit=50\np,z\n2,inf\n", 0) == 0);
    CHECK(format_census_csv(parse_census_csv(text, LucasParams(1, 2))) == text);
    CHECK_THROWS_AS(parse_census_csv(text, fib), Error);

    const fs::path dir = scratch("cache");
    fs::create_directories(dir);
    const auto first = census_cached(fib, 500, 2, dir.string());
    CHECK(fs::exists(dir / census_cache_name(fib)));
    const auto smaller = census_cached(fib, 100, 2, dir.string());
    CHECK(format_census_csv(smaller) == format_census_csv(census_build(fib, 100)));
    // a stale file for other parameters is replaced
    std::ofstream(dir / census_cache_name(fib)) << "# lucas-census P=3 Q=2 limit=500\np,z\n";
    const auto rebuilt = census_cached(fib, 500, 2, dir.string());
    CHECK(format_census_csv(rebuilt) == format_census_csv(first));
  }
}

TEST_SUITE("fibonacci") {
  TEST_CASE("negative parity matches counted factors") {
    for (std::uint64_t n = 1; n <= 150; ++n) {
      const auto cf = characteristic_factors(fib, n);
      REQUIRE(cf.complete);
      unsigned count = 0;
      for (const auto& [q, e] : cf.factors)
        if (kronecker(fib.D(), q) < 0) count += e;
      CHECK(negative_parity(fib, n) == static_cast<int>(count % 2));
    }
  }

  TEST_CASE("cases a..e hold on small ranges") {
    FibCaseOptions o;
    o.lo = 1;
    o.hi = 150;
    for (char c : {'a', 'b', 'c', 'd', 'e'}) {
      INFO("case ", c);
      const auto rs = verify_fib_cases(parse_fib_case(c), o);
      CHECK_FALSE(rs.empty());
      CHECK(count_status(rs, Status::Violated) == 0);
      CHECK(count_status(rs, Status::Incomplete) == 0);
    }
  }

  TEST_CASE("case b at 7: F_7 = 13") {
    FibCaseOptions o;
    o.lo = 7;
    o.hi = 7;
    const auto rs = verify_fib_cases(FibCase::B, o);
    REQUIRE(rs.size() == 1);
    CHECK(rs[0].status == Status::Verified);
  }

  TEST_CASE("case c characteristic set at 216") {
    FibCaseOptions o;
    o.lo = 216;
    o.hi = 216;
    const auto rs = verify_fib_cases(FibCase::C, o);
    bool seen = false;
    for (const auto& r : rs)
      if (r.branch == "c_characteristic_set") {
        seen = true;
        CHECK(r.status == Status::Verified);
      }
    CHECK(seen);
  }

  TEST_CASE("case a listed factors") {
    FibCaseOptions o;
    o.lo = 1;
    o.hi = 30;
    const auto rs = verify_fib_cases(FibCase::A, o);
    int listed = 0;
    for (const auto& r : rs) {
      if (r.branch == "a_listed_factor" || r.branch == "a_listed_parity") {
        ++listed;
        CHECK(r.status == Status::Verified);
      }
    }
    CHECK(listed == 5);
  }

  TEST_CASE("argument checks") {
    CHECK_THROWS_AS(parse_fib_case('f'), Error);
    FibCaseOptions o;
    o.lo = 5;
    o.hi = 4;
    CHECK_THROWS_AS(verify_fib_cases(FibCase::A, o), Error);
    CHECK_THROWS_AS(negative_parity(LucasParams(6, 3), 5), Error);
  }
}
