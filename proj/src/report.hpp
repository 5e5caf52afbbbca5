#pragma once

#include "bigint.hpp"

#include <string>
#include <utility>
#include <vector>

namespace lucascyc {

enum class Statement { ThmMu, ThmMv, CorModN, CorLift, CorMult, CorFib, Ratcon, Doubling };

enum class Status { Verified, Violated, NotApplicable, Unconstrained, Incomplete };

/// How a witness value is compared against its expectation.
/// Congruent with modulus 0 means exact equality.
enum class Relation { Congruent, AtLeast, Below };

struct Witness {
  std::string label;
  Rational value;
  Int modulus;
  Relation relation = Relation::Congruent;
  Rational expected;

  bool holds() const;
};

using Instance = std::vector<std::pair<std::string, Int>>;

struct VerificationReport {
  Statement statement = Statement::ThmMu;
  Instance instance;
  Status status = Status::NotApplicable;
  std::string branch;
  std::vector<Witness> witnesses;

  /// Sets status from the witnesses: Verified iff all hold.
  void settle();
};

const char* to_string(Statement s);
const char* to_string(Status s);
Statement parse_statement(const std::string& text);
Status parse_status(const std::string& text);

/// "P=1,Q=-1,p=5,n=1,k=2"
std::string format_instance(const Instance& instance);
/// label=value|modulus|rel|expected, rel one of == >= <
std::string format_witness(const Witness& w);
/// statement \t instance \t status \t branch \t witnesses (';'-joined, '-' if none)
std::string format_report(const VerificationReport& r);

/// Deterministic order: statement, then instance values lexicographically,
/// then branch.
void sort_reports(std::vector<VerificationReport>& reports);

std::size_t count_status(const std::vector<VerificationReport>& reports, Status s);

}  // namespace lucascyc
