#include <doctest.h>

#include "congruence.hpp"
#include "dual.hpp"
#include "error.hpp"

using namespace lucascyc;

namespace {

const LucasParams fib(1, -1);

const Witness* find_witness(const VerificationReport& r, const std::string& label) {
  for (const auto& w : r.witnesses)
    if (w.label == label) return &w;
  return nullptr;
}

std::size_t violated(const std::vector<VerificationReport>& rs) { return count_status(rs, Status::Violated); }

}  // namespace

TEST_SUITE("report") {
  TEST_CASE("serialization") {
    VerificationReport r;
    r.statement = Statement::ThmMu;
    r.instance = {{"P", Int(1)}, {"Q", Int(-1)}, {"p", Int(5)}, {"n", Int(1)}, {"k", Int(2)}};
    r.branch = "ramified_index_p_power";
    r.witnesses.push_back(Witness{"p_mod_pk", Rational(15005), Int(25), Relation::Congruent, Rational(5)});
    r.witnesses.push_back(Witness{"valuation", Rational(3, 2), Int(5), Relation::AtLeast, Rational(0)});
    r.settle();
    CHECK(r.status == Status::Verified);
    CHECK(format_report(r) ==
          "THM_MU\tP=1,Q=-1,p=5,n=1,k=2\tVERIFIED\tramified_index_p_power\t"
          "p_mod_pk=15005|25|==|5;valuation=3/2|5|>=|0");
    r.witnesses.push_back(Witness{"bad", Rational(1), Int(0), Relation::Below, Rational(1)});
    r.settle();
    CHECK(r.status == Status::Violated);
    VerificationReport empty;
    empty.statement = Statement::CorMult;
    empty.status = Status::Unconstrained;
    empty.branch = "x";
    CHECK(format_report(empty) == "COR_MULT\t\tUNCONSTRAINED\tx\t-");
  }

  TEST_CASE("names round trip") {
    for (auto s : {Statement::ThmMu, Statement::ThmMv, Statement::CorModN, Statement::CorLift, Statement::CorMult,
                   Statement::CorFib, Statement::Ratcon, Statement::Doubling})
      CHECK(parse_statement(to_string(s)) == s);
    for (auto s : {Status::Verified, Status::Violated, Status::NotApplicable, Status::Unconstrained, Status::Incomplete})
      CHECK(parse_status(to_string(s)) == s);
    CHECK_THROWS_AS(parse_statement("THM"), Error);
  }

  TEST_CASE("witness relations") {
    CHECK(Witness{"w", Rational(14), Int(8), Relation::Congruent, Rational(-2)}.holds());
    CHECK_FALSE(Witness{"w", Rational(13), Int(16), Relation::Congruent, Rational(-2)}.holds());
    // producers reduce rationals to residues first; a raw fraction never matches
    CHECK_FALSE(Witness{"w", Rational(-1, 2), Int(3), Relation::Congruent, Rational(1)}.holds());
    CHECK(Witness{"w", Rational(3), Int(0), Relation::AtLeast, Rational(3)}.holds());
    CHECK_FALSE(Witness{"w", Rational(3), Int(0), Relation::Below, Rational(3)}.holds());
  }
}

TEST_SUITE("congruence") {
  TEST_CASE("M^U at p^k n") {
    auto rs = verify_thm_mu(fib, 5, 1, 2);
    REQUIRE(rs.size() == 2);
    CHECK(rs[1].status == Status::Verified);
    CHECK(find_witness(rs[1], "p_mod_pk1")->modulus == 125);

    rs = verify_thm_mu(fib, 2, 3, 3);
    REQUIRE(rs.size() == 3);
    for (const auto& r : rs) CHECK(r.status == Status::Verified);
    CHECK(rs[1].branch == "entry_index");
    // M^U_24 = 46 = -2 mod 16
    const Witness* w = find_witness(rs[2], "symbol_p_mod_pk1");
    REQUIRE(w);
    CHECK(w->modulus == 16);
    CHECK(w->value == 14);

    rs = verify_thm_mu(fib, 7, 1, 1);
    CHECK(rs[0].status == Status::Verified);
    CHECK(find_witness(rs[0], "symbol_mod_pk")->value == 6);
  }

  TEST_CASE("M^V at p^k n") {
    auto rs = verify_thm_mv(fib, 3, 2, 1);
    CHECK(rs[0].status == Status::Verified);
    CHECK(rs[0].branch == "odd_half_entry");
    rs = verify_thm_mv(fib, 5, 1, 2);
    CHECK(rs[1].status == Status::Verified);
    CHECK(rs[1].branch == "generic");
    rs = verify_thm_mv(fib, 2, 3, 1);
    CHECK(rs[0].status == Status::Unconstrained);
    CHECK(rs[0].witnesses.empty());
  }

  TEST_CASE("mod n") {
    auto r = verify_cor_modn(fib, 12);
    CHECK(r.status == Status::Verified);
    CHECK(r.branch.rfind("two_three_12_entry4", 0) == 0);
    r = verify_cor_modn(fib, 6);
    CHECK(r.status == Status::Verified);
    CHECK(r.branch.rfind("two_three_6", 0) == 0);
    r = verify_cor_modn(fib, 10);
    CHECK(r.status == Status::Verified);
    CHECK(find_witness(r, "dual_u_mod_n")->value == 1);
    r = verify_cor_modn(fib, 8);
    CHECK(r.status == Status::NotApplicable);
    CHECK(r.branch == "prime_power_index");
  }

  TEST_CASE("lifted ratios") {
    auto rs = verify_cor_lift(fib, 5, 1, 2);
    CHECK(rs[1].status == Status::Verified);
    CHECK(find_witness(rs[1], "p_mod_pk1")->modulus == 125);
    rs = verify_cor_lift(fib, 3, 1, 2);
    CHECK(rs[1].status == Status::Verified);
    // V_9 = 76 and V_3 = 4 agree mod 9
    const Witness* w = find_witness(rs[1], "v_lift");
    CHECK(w->value == 4);
    CHECK(w->expected == 4);
    // degenerate parameters: U_8/U_4 = -16 for (2,4)
    rs = verify_cor_lift(LucasParams(2, 4), 2, 1, 3);
    CHECK(rs[2].status == Status::Verified);
    // (1,1): U_3 = 0, nothing to divide by
    rs = verify_cor_lift(LucasParams(1, 1), 3, 1, 2);
    CHECK(rs[1].status == Status::NotApplicable);
    CHECK(rs[1].branch == "vanishing_denominator");
  }

  TEST_CASE("V ratio when only half the entry point divides n") {
    // L_6 / L_2 = 18 / 3 = 6, which is 0 mod 3, not 1
    auto rs = verify_cor_lift(fib, 3, 2, 1);
    CHECK(rs[0].status == Status::Verified);
    CHECK(rs[0].branch == "unramified+v_ratio_half_entry");
    CHECK(v_term(fib, 6) / v_term(fib, 2) == 6);
  }

  TEST_CASE("Kronecker product over characteristic factors") {
    auto r = verify_cor_mult(fib, 8);
    CHECK(r.status == Status::Verified);
    r = verify_cor_mult(fib, 7);
    CHECK(r.status == Status::Verified);
    r = verify_cor_mult(fib, 12);
    CHECK(r.status == Status::Unconstrained);
    CHECK(verify_cor_mult(LucasParams(6, 3), 10).status == Status::NotApplicable);
    for (std::uint64_t n = 2; n <= 120; ++n) {
      INFO("n=", n);
      CHECK(verify_cor_mult(fib, n).status != Status::Violated);
      CHECK(verify_cor_mult(LucasParams(3, 2), n).status != Status::Violated);
    }
  }

  TEST_CASE("cyclotomic ratio congruences") {
    auto rs = verify_ratcon(Int(2), 3, 2, 1);
    CHECK(rs[0].status == Status::Verified);
    CHECK(rs[0].branch == "order_matches");
    rs = verify_ratcon(Int(2), 3, 1, 1);
    CHECK(rs[0].status == Status::Verified);
    CHECK(rs[0].branch == "order_differs");
    rs = verify_ratcon(Int(3), 2, 1, 2);
    CHECK(rs[1].status == Status::Verified);
    CHECK(rs[1].witnesses[0].modulus == 8);
    CHECK_THROWS_AS(verify_ratcon(Int(3), 3, 1, 1), Error);  // p | z
    CHECK_THROWS_AS(verify_ratcon(Int(2), 3, 3, 1), Error);  // p | n
  }

  TEST_CASE("grid is deterministic across job counts") {
    GridOptions o;
    o.params = {fib, LucasParams(3, 2), LucasParams(6, 3)};
    o.primes = {2, 3, 5};
    o.xmax = 12;
    o.kmax = 3;
    o.modn_max = 40;
    o.mult_max = 40;
    o.jobs = 1;
    const auto serial = run_grid(o);
    o.jobs = 4;
    const auto parallel = run_grid(o);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) CHECK(format_report(serial[i]) == format_report(parallel[i]));
    CHECK(violated(serial) == 0);
  }

  TEST_CASE("default grid drops degenerate pairs") {
    for (const auto& lp : default_param_grid()) CHECK(lp.nondegenerate());
  }
}
