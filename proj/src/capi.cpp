#include "lucascyc/lucascyc.h"

#include "bias.hpp"
#include "census.hpp"
#include "congruence.hpp"
#include "cyclotomic.hpp"
#include "dual.hpp"
#include "error.hpp"
#include "factor_table.hpp"
#include "fibonacci.hpp"
#include "lucas.hpp"

#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <string>

using namespace lucascyc;

struct lc_params {
  LucasParams value;
};

struct lc_reports {
  std::vector<VerificationReport> items;
};

struct lc_factor_table {
  FactorTable value;
};

struct lc_bias_rows {
  std::vector<BiasRow> rows;
};

struct lc_census {
  EntryPointCensus value;
};

namespace {

thread_local std::string last_error;

lc_status code_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return LC_ERR_INVALID_ARGUMENT;
    case ErrorCode::Degenerate: return LC_ERR_DEGENERATE;
    case ErrorCode::Parse: return LC_ERR_PARSE;
    case ErrorCode::Io: return LC_ERR_IO;
    case ErrorCode::Incomplete: return LC_ERR_INCOMPLETE;
    case ErrorCode::Internal: return LC_ERR_INTERNAL;
  }
  return LC_ERR_INTERNAL;
}

template <typename F>
lc_status guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return LC_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return code_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return LC_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return LC_ERR_INTERNAL;
  }
}

void require(const void* ptr, const char* what) {
  if (!ptr) fail(ErrorCode::InvalidArgument, std::string("null argument: ") + what);
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

TermKind kind_of(lc_kind kind) {
  if (kind == LC_KIND_U) return TermKind::U;
  if (kind == LC_KIND_V) return TermKind::V;
  fail(ErrorCode::InvalidArgument, "kind must be U or V");
}

// integers from the caller are arguments, not file content
Int parse_arg(const char* text) {
  try {
    return parse_int(text);
  } catch (const Error& e) {
    fail(ErrorCode::InvalidArgument, e.what());
  }
}

FactorBudget budget_of(uint64_t rho) {
  FactorBudget b;
  if (rho) b.rho_iterations = rho;
  return b;
}

}  // namespace

extern "C" {

const char* lc_version(void) { return "0.1.0"; }

const char* lc_last_error(void) { return last_error.c_str(); }

void lc_string_free(char* s) { std::free(s); }

lc_status lc_params_create(const char* P, const char* Q, lc_params** out) {
  return guarded([&] {
    require(P, "P");
    require(Q, "Q");
    require(out, "out");
    *out = new lc_params{LucasParams(parse_arg(P), parse_arg(Q))};
  });
}

void lc_params_destroy(lc_params* params) { delete params; }

lc_status lc_params_flags(const lc_params* params, int* regular, int* nondegenerate) {
  return guarded([&] {
    require(params, "params");
    if (regular) *regular = params->value.regular() ? 1 : 0;
    if (nondegenerate) *nondegenerate = params->value.nondegenerate() ? 1 : 0;
  });
}

lc_status lc_params_discriminant(const lc_params* params, char** out) {
  return guarded([&] {
    require(params, "params");
    require(out, "out");
    *out = dup(params->value.D().get_str());
  });
}

lc_status lc_term(const lc_params* params, lc_kind kind, uint64_t n, char** out) {
  return guarded([&] {
    require(params, "params");
    require(out, "out");
    const Int v = kind_of(kind) == TermKind::U ? u_term(params->value, n) : v_term(params->value, n);
    *out = dup(v.get_str());
  });
}

lc_status lc_term_mod(const lc_params* params, lc_kind kind, uint64_t n, const char* modulus, char** out) {
  return guarded([&] {
    require(params, "params");
    require(modulus, "modulus");
    require(out, "out");
    const Int m = parse_arg(modulus);
    if (m < 2) fail(ErrorCode::InvalidArgument, "modulus must be at least 2");
    *out = dup(term_mod(params->value, n, m, kind_of(kind)).get_str());
  });
}

lc_status lc_dual(const lc_params* params, lc_kind kind, uint64_t n, char** out) {
  return guarded([&] {
    require(params, "params");
    require(out, "out");
    if (kind_of(kind) == TermKind::U)
      *out = dup(dual_u(params->value, n).get_str());
    else
      *out = dup(dual_v(params->value, n).to_string());
  });
}

lc_status lc_homogeneous_eval(const lc_params* params, uint64_t n, char** out) {
  return guarded([&] {
    require(params, "params");
    require(out, "out");
    *out = dup(homogeneous_eval(params->value, n).get_str());
  });
}

lc_status lc_entry_point(const lc_params* params, const char* p, char** out) {
  return guarded([&] {
    require(params, "params");
    require(p, "p");
    require(out, "out");
    *out = dup(entry_point(params->value, parse_arg(p)).to_string());
  });
}

lc_status lc_predicted_valuation(const lc_params* params, const char* p, uint64_t n, unsigned* out) {
  return guarded([&] {
    require(params, "params");
    require(p, "p");
    require(out, "out");
    *out = predicted_valuation_u(params->value, parse_arg(p), n);
  });
}

lc_status lc_cyclotomic(uint64_t n, char** out) {
  return guarded([&] {
    require(out, "out");
    std::string text;
    for (const Int& c : cyclotomic_coeffs(n).coefficients) {
      if (!text.empty()) text += ',';
      text += c.get_str();
    }
    *out = dup(text);
  });
}

lc_status lc_characteristic_factors(const lc_params* params, uint64_t n, uint64_t rho_budget,
                                    const lc_factor_table* table, char** out) {
  return guarded([&] {
    require(params, "params");
    require(out, "out");
    const CharacteristicFactors cf =
        characteristic_factors(params->value, n, budget_of(rho_budget), table ? &table->value : nullptr);
    if (!cf.complete)
      fail(ErrorCode::Incomplete, "factoring budget exhausted; unfactored cofactor " + cf.unfactored.get_str());
    std::string text;
    for (const auto& [q, e] : cf.factors) {
      if (!text.empty()) text += ' ';
      text += q.get_str() + "^" + std::to_string(e);
    }
    *out = dup(text);
  });
}

lc_status lc_verify(const lc_params* params, lc_statement statement, uint64_t p, uint64_t n, unsigned kmax,
                    uint64_t rho_budget, lc_reports** out) {
  return guarded([&] {
    require(params, "params");
    require(out, "out");
    const LucasParams& lp = params->value;
    std::vector<VerificationReport> items;
    switch (statement) {
      case LC_THM_MU: items = verify_thm_mu(lp, p, n, kmax); break;
      case LC_THM_MV: items = verify_thm_mv(lp, p, n, kmax); break;
      case LC_COR_LIFT: items = verify_cor_lift(lp, p, n, kmax); break;
      case LC_COR_MODN: items.push_back(verify_cor_modn(lp, n)); break;
      case LC_COR_MULT: items.push_back(verify_cor_mult(lp, n, budget_of(rho_budget))); break;
      case LC_DOUBLING: items.push_back(check_doubling(lp, n)); break;
      default: fail(ErrorCode::InvalidArgument, "statement needs its own entry point");
    }
    *out = new lc_reports{std::move(items)};
  });
}

lc_status lc_verify_ratcon(const char* z, uint64_t p, uint64_t n, unsigned kmax, lc_reports** out) {
  return guarded([&] {
    require(z, "z");
    require(out, "out");
    *out = new lc_reports{verify_ratcon(parse_arg(z), p, n, kmax)};
  });
}

lc_status lc_verify_fib_cases(char case_id, uint64_t lo, uint64_t hi, uint64_t rho_budget,
                              const lc_factor_table* table, lc_reports** out) {
  return guarded([&] {
    require(out, "out");
    FibCaseOptions options;
    options.lo = lo;
    options.hi = hi;
    options.budget = budget_of(rho_budget);
    options.table = table ? &table->value : nullptr;
    *out = new lc_reports{verify_fib_cases(parse_fib_case(case_id), options)};
  });
}

lc_status lc_verify_grid(const lc_params* const* params, size_t count, uint64_t xmax, unsigned kmax,
                         uint64_t modn_max, uint64_t mult_max, unsigned jobs, lc_reports** out) {
  return guarded([&] {
    require(out, "out");
    GridOptions options;
    if (params) {
      for (size_t i = 0; i < count; ++i) {
        require(params[i], "params[i]");
        options.params.push_back(params[i]->value);
      }
    } else {
      options.params = default_param_grid();
    }
    options.xmax = xmax;
    options.kmax = kmax;
    options.modn_max = modn_max;
    options.mult_max = mult_max;
    options.jobs = jobs;
    *out = new lc_reports{run_grid(options)};
  });
}

size_t lc_reports_count(const lc_reports* reports) { return reports ? reports->items.size() : 0; }

lc_report_status lc_reports_status(const lc_reports* reports, size_t index) {
  if (!reports || index >= reports->items.size()) return LC_NOT_APPLICABLE;
  return static_cast<lc_report_status>(reports->items[index].status);
}

size_t lc_reports_count_status(const lc_reports* reports, lc_report_status status) {
  return reports ? count_status(reports->items, static_cast<Status>(status)) : 0;
}

lc_status lc_reports_line(const lc_reports* reports, size_t index, char** out) {
  return guarded([&] {
    require(reports, "reports");
    require(out, "out");
    if (index >= reports->items.size()) fail(ErrorCode::InvalidArgument, "report index out of range");
    *out = dup(format_report(reports->items[index]));
  });
}

void lc_reports_destroy(lc_reports* reports) { delete reports; }

lc_status lc_factor_table_load(const char* path, const lc_params* params, lc_factor_table** out) {
  return guarded([&] {
    require(path, "path");
    require(params, "params");
    require(out, "out");
    *out = new lc_factor_table{import_factor_table(path, params->value)};
  });
}

size_t lc_factor_table_entries(const lc_factor_table* table) { return table ? table->value.entries.size() : 0; }

size_t lc_factor_table_complete(const lc_factor_table* table) { return table ? table->value.complete_count() : 0; }

uint64_t lc_factor_table_complete_prefix(const lc_factor_table* table) {
  return table ? table->value.complete_prefix() : 0;
}

size_t lc_factor_table_diagnostic_count(const lc_factor_table* table) {
  return table ? table->value.diagnostics.size() : 0;
}

const char* lc_factor_table_diagnostic(const lc_factor_table* table, size_t index) {
  if (!table || index >= table->value.diagnostics.size()) return nullptr;
  return table->value.diagnostics[index].c_str();
}

void lc_factor_table_destroy(lc_factor_table* table) { delete table; }

lc_status lc_bias_table(const lc_params* params, uint64_t xmax, uint64_t rho_budget, const lc_factor_table* table,
                        lc_bias_rows** out) {
  return guarded([&] {
    require(params, "params");
    require(out, "out");
    *out = new lc_bias_rows{
        bias_table(params->value, xmax, budget_of(rho_budget), table ? &table->value : nullptr)};
  });
}

size_t lc_bias_rows_count(const lc_bias_rows* rows) { return rows ? rows->rows.size() : 0; }

lc_status lc_bias_row(const lc_bias_rows* rows, size_t index, uint64_t* n, uint64_t* count_r, uint64_t* count_n,
                      int* exact) {
  return guarded([&] {
    require(rows, "rows");
    if (index >= rows->rows.size()) fail(ErrorCode::InvalidArgument, "row index out of range");
    const BiasRow& r = rows->rows[index];
    if (n) *n = r.n;
    if (count_r) *count_r = r.count_r;
    if (count_n) *count_n = r.count_n;
    if (exact) *exact = r.exact ? 1 : 0;
  });
}

lc_status lc_bias_term(const lc_bias_rows* rows, uint64_t x, uint64_t* out) {
  return guarded([&] {
    require(rows, "rows");
    require(out, "out");
    *out = bias_term(rows->rows, x);
  });
}

lc_status lc_bias_csv(const lc_bias_rows* rows, char** out) {
  return guarded([&] {
    require(rows, "rows");
    require(out, "out");
    *out = dup(format_bias_csv(rows->rows));
  });
}

lc_status lc_bias_export_csv(const lc_bias_rows* rows, const char* path) {
  return guarded([&] {
    require(rows, "rows");
    require(path, "path");
    export_bias_csv(rows->rows, path);
  });
}

void lc_bias_rows_destroy(lc_bias_rows* rows) { delete rows; }

lc_status lc_census_build(const lc_params* params, uint64_t prime_limit, unsigned jobs, const char* cache_dir,
                          lc_census** out) {
  return guarded([&] {
    require(params, "params");
    require(out, "out");
    if (cache_dir && *cache_dir)
      *out = new lc_census{census_cached(params->value, prime_limit, jobs, cache_dir)};
    else
      *out = new lc_census{census_build(params->value, prime_limit, jobs)};
  });
}

size_t lc_census_count(const lc_census* census) { return census ? census->value.records.size() : 0; }

lc_status lc_census_record(const lc_census* census, size_t index, uint64_t* p, uint64_t* z, int* infinite) {
  return guarded([&] {
    require(census, "census");
    if (index >= census->value.records.size()) fail(ErrorCode::InvalidArgument, "record index out of range");
    const auto& [prime, point] = census->value.records[index];
    if (p) *p = prime;
    if (infinite) *infinite = point.infinite ? 1 : 0;
    if (z) *z = point.infinite ? 0 : point.get();
  });
}

lc_status lc_census_csv(const lc_census* census, char** out) {
  return guarded([&] {
    require(census, "census");
    require(out, "out");
    *out = dup(format_census_csv(census->value));
  });
}

void lc_census_destroy(lc_census* census) { delete census; }

}  // extern "C"
