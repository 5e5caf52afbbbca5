#include "report.hpp"

#include "error.hpp"

#include <algorithm>
#include <array>

namespace lucascyc {

namespace {

constexpr std::array<const char*, 8> kStatementNames = {
    "THM_MU", "THM_MV", "COR_MODN", "COR_LIFT", "COR_MULT", "COR_FIB", "RATCON", "DOUBLING"};
constexpr std::array<const char*, 5> kStatusNames = {
    "VERIFIED", "VIOLATED", "NOT_APPLICABLE", "UNCONSTRAINED", "INCOMPLETE"};

std::string rational_text(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace

bool Witness::holds() const {
  switch (relation) {
    case Relation::AtLeast:
      return value >= expected;
    case Relation::Below:
      return value < expected;
    case Relation::Congruent:
      break;
  }
  if (modulus == 0) return value == expected;
  // both sides are integers reduced by the producer; compare residues
  if (value.get_den() != 1 || expected.get_den() != 1) return false;
  return mod(value.get_num(), modulus) == mod(expected.get_num(), modulus);
}

void VerificationReport::settle() {
  status = std::all_of(witnesses.begin(), witnesses.end(), [](const Witness& w) { return w.holds(); })
               ? Status::Verified
               : Status::Violated;
}

const char* to_string(Statement s) { return kStatementNames[static_cast<std::size_t>(s)]; }
const char* to_string(Status s) { return kStatusNames[static_cast<std::size_t>(s)]; }

Statement parse_statement(const std::string& text) {
  for (std::size_t i = 0; i < kStatementNames.size(); ++i)
    if (text == kStatementNames[i]) return static_cast<Statement>(i);
  fail(ErrorCode::Parse, "unknown statement id: " + text);
}

Status parse_status(const std::string& text) {
  for (std::size_t i = 0; i < kStatusNames.size(); ++i)
    if (text == kStatusNames[i]) return static_cast<Status>(i);
  fail(ErrorCode::Parse, "unknown status: " + text);
}

std::string format_instance(const Instance& instance) {
  std::string out;
  for (const auto& [name, value] : instance) {
    if (!out.empty()) out += ',';
    out += name;
    out += '=';
    out += value.get_str();
  }
  return out;
}

std::string format_witness(const Witness& w) {
  const char* rel = w.relation == Relation::Congruent ? "==" : w.relation == Relation::AtLeast ? ">=" : "<";
  return w.label + "=" + rational_text(w.value) + "|" + w.modulus.get_str() + "|" + rel + "|" +
         rational_text(w.expected);
}

std::string format_report(const VerificationReport& r) {
  std::string out = to_string(r.statement);
  out += '\t';
  out += format_instance(r.instance);
  out += '\t';
  out += to_string(r.status);
  out += '\t';
  out += r.branch.empty() ? "-" : r.branch;
  out += '\t';
  if (r.witnesses.empty()) {
    out += '-';
  } else {
    for (std::size_t i = 0; i < r.witnesses.size(); ++i) {
      if (i) out += ';';
      out += format_witness(r.witnesses[i]);
    }
  }
  return out;
}

void sort_reports(std::vector<VerificationReport>& reports) {
  std::stable_sort(reports.begin(), reports.end(), [](const VerificationReport& a, const VerificationReport& b) {
    if (a.statement != b.statement) return a.statement < b.statement;
    const std::size_t len = std::min(a.instance.size(), b.instance.size());
    for (std::size_t i = 0; i < len; ++i) {
      if (a.instance[i].first != b.instance[i].first) return a.instance[i].first < b.instance[i].first;
      if (a.instance[i].second != b.instance[i].second) return a.instance[i].second < b.instance[i].second;
    }
    if (a.instance.size() != b.instance.size()) return a.instance.size() < b.instance.size();
    return a.branch < b.branch;
  });
}

std::size_t count_status(const std::vector<VerificationReport>& reports, Status s) {
  return static_cast<std::size_t>(
      std::count_if(reports.begin(), reports.end(), [s](const VerificationReport& r) { return r.status == s; }));
}

}  // namespace lucascyc
