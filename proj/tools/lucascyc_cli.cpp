// Command-line front end. Talks to the library only through the C API.

#include <lucascyc/lucascyc.h>

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

namespace {

enum Exit { kOk = 0, kViolated = 1, kUsage = 2, kIo = 3 };

struct Failure {
  int exit_code;
  std::string message;
};

int exit_for(lc_status s) {
  switch (s) {
    case LC_ERR_INVALID_ARGUMENT:
    case LC_ERR_DEGENERATE: return kUsage;
    case LC_ERR_IO:
    case LC_ERR_PARSE: return kIo;
    default: return kViolated;
  }
}

void check(lc_status s) {
  if (s != LC_OK) throw Failure{exit_for(s), lc_last_error()};
}

std::string take(char* s) {
  std::string out(s ? s : "");
  lc_string_free(s);
  return out;
}

template <typename T, void (*Destroy)(T*)>
struct Deleter {
  void operator()(T* p) const { Destroy(p); }
};
using Params = std::unique_ptr<lc_params, Deleter<lc_params, lc_params_destroy>>;
using Reports = std::unique_ptr<lc_reports, Deleter<lc_reports, lc_reports_destroy>>;
using Table = std::unique_ptr<lc_factor_table, Deleter<lc_factor_table, lc_factor_table_destroy>>;
using BiasRows = std::unique_ptr<lc_bias_rows, Deleter<lc_bias_rows, lc_bias_rows_destroy>>;
using Census = std::unique_ptr<lc_census, Deleter<lc_census, lc_census_destroy>>;

Params make_params(const std::string& P, const std::string& Q) {
  lc_params* p = nullptr;
  check(lc_params_create(P.c_str(), Q.c_str(), &p));
  return Params(p);
}

Table load_table(const std::string& path, const lc_params* params) {
  if (path.empty()) return nullptr;
  lc_factor_table* t = nullptr;
  check(lc_factor_table_load(path.c_str(), params, &t));
  for (size_t i = 0; i < lc_factor_table_diagnostic_count(t); ++i)
    std::cerr << "warning: " << lc_factor_table_diagnostic(t, i) << "\n";
  return Table(t);
}

const char* status_name(lc_report_status s) {
  switch (s) {
    case LC_VERIFIED: return "VERIFIED";
    case LC_VIOLATED: return "VIOLATED";
    case LC_NOT_APPLICABLE: return "NOT_APPLICABLE";
    case LC_UNCONSTRAINED: return "UNCONSTRAINED";
    case LC_INCOMPLETE: return "INCOMPLETE";
  }
  return "?";
}

// csv: every line. text: violated lines in full, then a tally.
int emit_reports(const lc_reports* reports, const std::string& format, bool show_all) {
  const size_t count = lc_reports_count(reports);
  for (size_t i = 0; i < count; ++i) {
    const bool violated = lc_reports_status(reports, i) == LC_VIOLATED;
    if (format == "csv" || show_all || violated) {
      char* line = nullptr;
      check(lc_reports_line(reports, i, &line));
      std::cout << take(line) << "\n";
    }
  }
  if (format == "text") {
    std::cout << "reports: " << count;
    for (lc_report_status s : {LC_VERIFIED, LC_VIOLATED, LC_NOT_APPLICABLE, LC_UNCONSTRAINED, LC_INCOMPLETE})
      std::cout << "  " << status_name(s) << "=" << lc_reports_count_status(reports, s);
    std::cout << "\n";
  }
  return lc_reports_count_status(reports, LC_VIOLATED) ? kViolated : kOk;
}

lc_kind parse_kind(const std::string& k) { return k == "U" ? LC_KIND_U : LC_KIND_V; }

lc_statement parse_statement(const std::string& s) {
  static const std::vector<std::pair<std::string, lc_statement>> names = {
      {"THM_MU", LC_THM_MU},   {"THM_MV", LC_THM_MV},     {"COR_MODN", LC_COR_MODN}, {"COR_LIFT", LC_COR_LIFT},
      {"COR_MULT", LC_COR_MULT}, {"DOUBLING", LC_DOUBLING}, {"RATCON", LC_RATCON}};
  for (const auto& [name, id] : names)
    if (name == s) return id;
  throw Failure{kUsage, "unknown statement '" + s + "'"};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lucas sequences, their Moebius duals, and the congruences they satisfy"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  std::string P = "1", Q = "-1", format = "text";
  app.add_option("-P", P, "first Lucas parameter")->capture_default_str();
  app.add_option("-Q", Q, "second Lucas parameter")->capture_default_str();
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "csv"}))
      ->capture_default_str();

  std::string kind = "U";
  std::uint64_t n = 1;
  auto kind_opt = [&](CLI::App* sub) {
    sub->add_option("--kind", kind, "U or V")->check(CLI::IsMember({"U", "V"}))->capture_default_str();
  };

  CLI::App* term = app.add_subcommand("term", "print U_n or V_n");
  kind_opt(term);
  term->add_option("-n", n, "index")->required();
  std::string modulus;
  term->add_option("--mod", modulus, "reduce modulo this integer");

  CLI::App* dual = app.add_subcommand("dual", "print the Moebius dual of U or V at n");
  kind_opt(dual);
  dual->add_option("-n", n, "index")->required()->check(CLI::PositiveNumber);

  CLI::App* entry = app.add_subcommand("entry", "entry point of a prime");
  std::string prime;
  entry->add_option("-p", prime, "prime")->required();

  CLI::App* verify = app.add_subcommand("verify", "check a congruence statement");
  std::string statement;
  std::uint64_t p = 0, budget = 0, xmax = 50, modn_max = 120, mult_max = 120;
  unsigned kmax = 5, jobs = 1;
  bool all = false;
  std::string zeta;
  verify->add_option("--statement", statement,
                     "THM_MU THM_MV COR_MODN COR_LIFT COR_MULT DOUBLING RATCON");
  verify->add_option("-p", p, "prime");
  verify->add_option("-n", n, "index");
  verify->add_option("-z", zeta, "integer argument (RATCON)");
  verify->add_option("--kmax", kmax, "largest exponent k")->capture_default_str();
  verify->add_option("--budget", budget, "rho iterations per factoring attempt (0 = default)");
  verify->add_flag("--all", all, "run the parameter grid");
  verify->add_option("--xmax", xmax, "largest index in the grid")->capture_default_str();
  verify->add_option("--modn-max", modn_max, "largest composite index for COR_MODN")->capture_default_str();
  verify->add_option("--mult-max", mult_max, "largest index for COR_MULT")->capture_default_str();
  verify->add_option("--jobs", jobs, "worker threads")->capture_default_str();
  bool show_all = false;
  verify->add_flag("--show", show_all, "print every report in text mode");

  CLI::App* fib = app.add_subcommand("fib-cases", "Fibonacci parity cases a..e");
  std::string fib_case = "a";
  std::uint64_t lo = 1, hi = 120;
  std::string table_path;
  fib->add_option("--case", fib_case, "a..e")->check(CLI::IsMember({"a", "b", "c", "d", "e"}))->capture_default_str();
  fib->add_option("--lo", lo, "first index")->capture_default_str();
  fib->add_option("--hi", hi, "last index")->capture_default_str();
  fib->add_option("--budget", budget, "rho iterations per factoring attempt (0 = default)");
  fib->add_option("--table", table_path, "factor table file");
  fib->add_flag("--show", show_all, "print every report in text mode");

  CLI::App* census = app.add_subcommand("census", "entry points of all primes up to a bound");
  std::uint64_t limit = 1000;
  census->add_option("--limit", limit, "prime bound")->capture_default_str();
  census->add_option("--jobs", jobs, "worker threads")->capture_default_str();

  CLI::App* bias = app.add_subcommand("bias", "count positive and negative symbol characteristic factors");
  std::string out_path;
  std::uint64_t term_x = 0;
  bias->add_option("--xmax", xmax, "last index")->required();
  bias->add_option("--budget", budget, "rho iterations per factoring attempt (0 = default)");
  bias->add_option("--table", table_path, "factor table file");
  bias->add_option("--out", out_path, "write the CSV here");
  bias->add_option("--term", term_x, "print the number of n <= x where count_r > count_n");

  CLI::App* import = app.add_subcommand("import-factors", "validate a factor table");
  import->add_option("path", table_path, "factor table file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    Params params = make_params(P, Q);

    if (term->parsed()) {
      char* s = nullptr;
      if (modulus.empty())
        check(lc_term(params.get(), parse_kind(kind), n, &s));
      else
        check(lc_term_mod(params.get(), parse_kind(kind), n, modulus.c_str(), &s));
      std::cout << take(s) << "\n";
      return kOk;
    }
    if (dual->parsed()) {
      char* s = nullptr;
      check(lc_dual(params.get(), parse_kind(kind), n, &s));
      std::cout << take(s) << "\n";
      return kOk;
    }
    if (entry->parsed()) {
      char* s = nullptr;
      check(lc_entry_point(params.get(), prime.c_str(), &s));
      std::cout << take(s) << "\n";
      return kOk;
    }
    if (verify->parsed()) {
      lc_reports* r = nullptr;
      if (all) {
        check(lc_verify_grid(nullptr, 0, xmax, kmax, modn_max, mult_max, jobs, &r));
      } else {
        if (statement.empty()) throw Failure{kUsage, "verify needs --statement or --all"};
        const lc_statement st = parse_statement(statement);
        if (st == LC_RATCON) {
          if (zeta.empty()) throw Failure{kUsage, "RATCON needs -z"};
          check(lc_verify_ratcon(zeta.c_str(), p, n, kmax, &r));
        } else {
          check(lc_verify(params.get(), st, p, n, kmax, budget, &r));
        }
      }
      Reports reports(r);
      return emit_reports(reports.get(), format, show_all || !all);
    }
    if (fib->parsed()) {
      Table table = load_table(table_path, params.get());
      lc_reports* r = nullptr;
      check(lc_verify_fib_cases(fib_case[0], lo, hi, budget, table.get(), &r));
      Reports reports(r);
      return emit_reports(reports.get(), format, show_all);
    }
    if (census->parsed()) {
      const char* dir = std::getenv("LUCASCYC_CACHE_DIR");
      lc_census* c = nullptr;
      check(lc_census_build(params.get(), limit, jobs, dir, &c));
      Census handle(c);
      if (format == "csv") {
        char* s = nullptr;
        check(lc_census_csv(handle.get(), &s));
        std::cout << take(s);
      } else {
        for (size_t i = 0; i < lc_census_count(handle.get()); ++i) {
          std::uint64_t prime_i = 0, z = 0;
          int infinite = 0;
          check(lc_census_record(handle.get(), i, &prime_i, &z, &infinite));
          std::cout << "p=" << prime_i << " z=";
          if (infinite)
            std::cout << "inf";
          else
            std::cout << z;
          std::cout << "\n";
        }
      }
      return kOk;
    }
    if (bias->parsed()) {
      Table table = load_table(table_path, params.get());
      lc_bias_rows* b = nullptr;
      check(lc_bias_table(params.get(), xmax, budget, table.get(), &b));
      BiasRows rows(b);
      if (!out_path.empty()) check(lc_bias_export_csv(rows.get(), out_path.c_str()));
      if (format == "csv") {
        char* s = nullptr;
        check(lc_bias_csv(rows.get(), &s));
        std::cout << take(s);
      } else {
        for (size_t i = 0; i < lc_bias_rows_count(rows.get()); ++i) {
          std::uint64_t row_n = 0, cr = 0, cn = 0;
          int exact = 0;
          check(lc_bias_row(rows.get(), i, &row_n, &cr, &cn, &exact));
          std::cout << "n=" << row_n << " R=" << cr << " N=" << cn << (exact ? "" : " (inexact)") << "\n";
        }
      }
      if (term_x) {
        std::uint64_t t = 0;
        check(lc_bias_term(rows.get(), term_x, &t));
        std::cout << "B(" << term_x << ")=" << t << "\n";
      }
      return kOk;
    }
    if (import->parsed()) {
      Table table = load_table(table_path, params.get());
      std::cout << "entries=" << lc_factor_table_entries(table.get())
                << " complete=" << lc_factor_table_complete(table.get())
                << " complete_prefix=" << lc_factor_table_complete_prefix(table.get())
                << " rejected=" << lc_factor_table_diagnostic_count(table.get()) << "\n";
      return kOk;
    }
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    if (f.exit_code == kUsage) std::cerr << app.help();
    return f.exit_code;
  }
  return kUsage;
}
