/* Exercises the shared library from plain C. */
#include <lucascyc/lucascyc.h>

#include <stdio.h>
#include <stdlib.h>
#include <string.h>

static int failures = 0;

#define EXPECT(cond)                                              \
  do {                                                            \
    if (!(cond)) {                                                \
      fprintf(stderr, "%s:%d: failed: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                 \
    }                                                             \
  } while (0)

static int string_is(lc_status s, char* text, const char* expected) {
  int ok = s == LC_OK && text && strcmp(text, expected) == 0;
  if (!ok) fprintf(stderr, "  got '%s' (status %d: %s)\n", text ? text : "(null)", (int)s, lc_last_error());
  lc_string_free(text);
  return ok;
}

int main(void) {
  lc_params* fib = NULL;
  char* text = NULL;
  lc_status s;

  EXPECT(lc_params_create("1", "-1", &fib) == LC_OK);
  EXPECT(lc_params_create("2", "1", &(lc_params*){NULL}) == LC_ERR_INVALID_ARGUMENT);
  EXPECT(strlen(lc_last_error()) > 0);
  EXPECT(lc_params_create("x", "1", &(lc_params*){NULL}) == LC_ERR_INVALID_ARGUMENT);

  s = lc_term(fib, LC_KIND_U, 10, &text);
  EXPECT(string_is(s, text, "55"));
  s = lc_term(fib, LC_KIND_V, 10, &text);
  EXPECT(string_is(s, text, "123"));
  s = lc_term_mod(fib, LC_KIND_U, 216, "6263", &text);
  EXPECT(string_is(s, text, "0"));
  s = lc_dual(fib, LC_KIND_V, 6, &text);
  EXPECT(string_is(s, text, "3/2"));
  s = lc_dual(fib, LC_KIND_U, 12, &text);
  EXPECT(string_is(s, text, "6"));
  s = lc_homogeneous_eval(fib, 6, &text);
  EXPECT(string_is(s, text, "4"));
  s = lc_entry_point(fib, "19", &text);
  EXPECT(string_is(s, text, "18"));
  s = lc_cyclotomic(12, &text);
  EXPECT(string_is(s, text, "1,0,-1,0,1"));
  s = lc_characteristic_factors(fib, 216, 0, NULL, &text);
  EXPECT(string_is(s, text, "6263^1 177962167367^1"));
  s = lc_params_discriminant(fib, &text);
  EXPECT(string_is(s, text, "5"));

  unsigned v = 99;
  EXPECT(lc_predicted_valuation(fib, "5", 25, &v) == LC_OK && v == 1);

  int regular = 0, nondegenerate = 0;
  EXPECT(lc_params_flags(fib, &regular, &nondegenerate) == LC_OK && regular == 1 && nondegenerate == 1);

  lc_params* degenerate = NULL;
  EXPECT(lc_params_create("1", "1", &degenerate) == LC_OK);
  EXPECT(lc_dual(degenerate, LC_KIND_U, 3, &text) == LC_ERR_DEGENERATE);
  lc_params_destroy(degenerate);

  lc_reports* reports = NULL;
  EXPECT(lc_verify(fib, LC_THM_MU, 5, 1, 2, 0, &reports) == LC_OK);
  EXPECT(lc_reports_count(reports) == 2);
  EXPECT(lc_reports_count_status(reports, LC_VERIFIED) == 2);
  s = lc_reports_line(reports, 1, &text);
  EXPECT(string_is(s, text,
                   "THM_MU\tP=1,Q=-1,p=5,n=1,k=2\tVERIFIED\tramified_index_p_power\t"
                   "p_mod_pk=5|25|==|5;p_mod_pk1=5|125|==|5"));
  EXPECT(lc_reports_line(reports, 7, &text) == LC_ERR_INVALID_ARGUMENT);
  lc_reports_destroy(reports);

  EXPECT(lc_verify(fib, LC_COR_MULT, 0, 12, 0, 0, &reports) == LC_OK);
  EXPECT(lc_reports_status(reports, 0) == LC_UNCONSTRAINED);
  lc_reports_destroy(reports);

  EXPECT(lc_verify_ratcon("2", 3, 2, 1, &reports) == LC_OK);
  EXPECT(lc_reports_status(reports, 0) == LC_VERIFIED);
  lc_reports_destroy(reports);

  EXPECT(lc_verify_fib_cases('b', 7, 7, 0, NULL, &reports) == LC_OK);
  EXPECT(lc_reports_count(reports) == 1 && lc_reports_status(reports, 0) == LC_VERIFIED);
  lc_reports_destroy(reports);
  EXPECT(lc_verify_fib_cases('z', 1, 2, 0, NULL, &reports) == LC_ERR_INVALID_ARGUMENT);

  const lc_params* grid[1] = {fib};
  EXPECT(lc_verify_grid(grid, 1, 10, 2, 30, 30, 2, &reports) == LC_OK);
  EXPECT(lc_reports_count(reports) > 0);
  EXPECT(lc_reports_count_status(reports, LC_VIOLATED) == 0);
  lc_reports_destroy(reports);

  lc_factor_table* table = NULL;
  EXPECT(lc_factor_table_load(LUCASCYC_TEST_DATA "/fibonacci_small.txt", fib, &table) == LC_OK);
  EXPECT(lc_factor_table_complete_prefix(table) == 150);
  EXPECT(lc_factor_table_entries(table) == 152);
  EXPECT(lc_factor_table_diagnostic_count(table) == 0);
  EXPECT(lc_factor_table_load(LUCASCYC_TEST_DATA "/malformed_table.txt", fib, &(lc_factor_table*){NULL}) ==
         LC_ERR_PARSE);
  EXPECT(lc_factor_table_load("/nonexistent/table.txt", fib, &(lc_factor_table*){NULL}) == LC_ERR_IO);

  lc_bias_rows* rows = NULL;
  EXPECT(lc_bias_table(fib, 36, 0, table, &rows) == LC_OK);
  EXPECT(lc_bias_rows_count(rows) == 36);
  uint64_t n = 0, r = 0, nn = 0, term = 0;
  int exact = 0;
  EXPECT(lc_bias_row(rows, 29, &n, &r, &nn, &exact) == LC_OK && n == 30 && r == 14 && nn == 13 && exact == 1);
  EXPECT(lc_bias_term(rows, 36, &term) == LC_OK && term == 2);
  EXPECT(lc_bias_term(rows, 37, &term) == LC_ERR_INVALID_ARGUMENT);
  lc_bias_rows_destroy(rows);
  lc_factor_table_destroy(table);

  lc_census* census = NULL;
  EXPECT(lc_census_build(fib, 20, 2, NULL, &census) == LC_OK);
  EXPECT(lc_census_count(census) == 8);
  uint64_t p = 0, z = 0;
  int infinite = 1;
  EXPECT(lc_census_record(census, 7, &p, &z, &infinite) == LC_OK && p == 19 && z == 18 && infinite == 0);
  lc_census_destroy(census);

  EXPECT(lc_term(NULL, LC_KIND_U, 1, &text) == LC_ERR_INVALID_ARGUMENT);
  EXPECT(strcmp(lc_version(), "") != 0);

  lc_params_destroy(fib);
  if (failures) fprintf(stderr, "%d failure(s)\n", failures);
  else printf("C API checks passed\n");
  return failures ? 1 : 0;
}
