#ifndef LUCASCYC_LUCASCYC_H
#define LUCASCYC_LUCASCYC_H

#include <stddef.h>
#include <stdint.h>

#if defined(LUCASCYC_BUILDING)
#define LC_API __attribute__((visibility("default")))
#else
#define LC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Every call returns LC_OK or an error code; lc_last_error() then holds a
   message for the calling thread. Integers cross the boundary as decimal
   strings. Strings returned through char** are owned by the caller and
   released with lc_string_free. */

typedef enum lc_status {
  LC_OK = 0,
  LC_ERR_INVALID_ARGUMENT = 1,
  LC_ERR_DEGENERATE = 2,
  LC_ERR_PARSE = 3,
  LC_ERR_IO = 4,
  LC_ERR_INCOMPLETE = 5,
  LC_ERR_INTERNAL = 6
} lc_status;

typedef enum lc_kind { LC_KIND_U = 0, LC_KIND_V = 1 } lc_kind;

typedef enum lc_statement {
  LC_THM_MU = 0,
  LC_THM_MV = 1,
  LC_COR_MODN = 2,
  LC_COR_LIFT = 3,
  LC_COR_MULT = 4,
  LC_COR_FIB = 5,
  LC_RATCON = 6,
  LC_DOUBLING = 7
} lc_statement;

typedef enum lc_report_status {
  LC_VERIFIED = 0,
  LC_VIOLATED = 1,
  LC_NOT_APPLICABLE = 2,
  LC_UNCONSTRAINED = 3,
  LC_INCOMPLETE = 4
} lc_report_status;

typedef struct lc_params lc_params;
typedef struct lc_reports lc_reports;
typedef struct lc_factor_table lc_factor_table;
typedef struct lc_bias_rows lc_bias_rows;
typedef struct lc_census lc_census;

LC_API const char* lc_version(void);
LC_API const char* lc_last_error(void);
LC_API void lc_string_free(char* s);

/* parameters */
LC_API lc_status lc_params_create(const char* P, const char* Q, lc_params** out);
LC_API void lc_params_destroy(lc_params* params);
LC_API lc_status lc_params_flags(const lc_params* params, int* regular, int* nondegenerate);
LC_API lc_status lc_params_discriminant(const lc_params* params, char** out);

/* terms, duals, entry points */
LC_API lc_status lc_term(const lc_params* params, lc_kind kind, uint64_t n, char** out);
LC_API lc_status lc_term_mod(const lc_params* params, lc_kind kind, uint64_t n, const char* modulus, char** out);
/* "3/2" or "4" */
LC_API lc_status lc_dual(const lc_params* params, lc_kind kind, uint64_t n, char** out);
LC_API lc_status lc_homogeneous_eval(const lc_params* params, uint64_t n, char** out);
/* decimal or "inf" */
LC_API lc_status lc_entry_point(const lc_params* params, const char* p, char** out);
LC_API lc_status lc_predicted_valuation(const lc_params* params, const char* p, uint64_t n, unsigned* out);
/* coefficients, constant term first, comma separated */
LC_API lc_status lc_cyclotomic(uint64_t n, char** out);
/* "q^e q^e ..." (empty when none); LC_ERR_INCOMPLETE if factoring ran out */
LC_API lc_status lc_characteristic_factors(const lc_params* params, uint64_t n, uint64_t rho_budget,
                                           const lc_factor_table* table, char** out);

/* verification; p is ignored by statements that take none; budget 0 means default */
LC_API lc_status lc_verify(const lc_params* params, lc_statement statement, uint64_t p, uint64_t n, unsigned kmax,
                           uint64_t rho_budget, lc_reports** out);
LC_API lc_status lc_verify_ratcon(const char* z, uint64_t p, uint64_t n, unsigned kmax, lc_reports** out);
/* case_id 'a'..'e'; table may be NULL */
LC_API lc_status lc_verify_fib_cases(char case_id, uint64_t lo, uint64_t hi, uint64_t rho_budget,
                                     const lc_factor_table* table, lc_reports** out);
/* built-in parameter grid when params is NULL; primes 2..13 */
LC_API lc_status lc_verify_grid(const lc_params* const* params, size_t count, uint64_t xmax, unsigned kmax,
                                uint64_t modn_max, uint64_t mult_max, unsigned jobs, lc_reports** out);

LC_API size_t lc_reports_count(const lc_reports* reports);
LC_API lc_report_status lc_reports_status(const lc_reports* reports, size_t index);
LC_API size_t lc_reports_count_status(const lc_reports* reports, lc_report_status status);
/* tab-separated line: statement, instance, status, branch, witnesses */
LC_API lc_status lc_reports_line(const lc_reports* reports, size_t index, char** out);
LC_API void lc_reports_destroy(lc_reports* reports);

/* factor tables */
LC_API lc_status lc_factor_table_load(const char* path, const lc_params* params, lc_factor_table** out);
LC_API size_t lc_factor_table_entries(const lc_factor_table* table);
LC_API size_t lc_factor_table_complete(const lc_factor_table* table);
LC_API uint64_t lc_factor_table_complete_prefix(const lc_factor_table* table);
LC_API size_t lc_factor_table_diagnostic_count(const lc_factor_table* table);
LC_API const char* lc_factor_table_diagnostic(const lc_factor_table* table, size_t index);
LC_API void lc_factor_table_destroy(lc_factor_table* table);

/* bias rows */
LC_API lc_status lc_bias_table(const lc_params* params, uint64_t xmax, uint64_t rho_budget,
                               const lc_factor_table* table, lc_bias_rows** out);
LC_API size_t lc_bias_rows_count(const lc_bias_rows* rows);
LC_API lc_status lc_bias_row(const lc_bias_rows* rows, size_t index, uint64_t* n, uint64_t* count_r,
                             uint64_t* count_n, int* exact);
LC_API lc_status lc_bias_term(const lc_bias_rows* rows, uint64_t x, uint64_t* out);
LC_API lc_status lc_bias_csv(const lc_bias_rows* rows, char** out);
LC_API lc_status lc_bias_export_csv(const lc_bias_rows* rows, const char* path);
LC_API void lc_bias_rows_destroy(lc_bias_rows* rows);

/* entry-point census; cache_dir may be NULL (no caching) */
LC_API lc_status lc_census_build(const lc_params* params, uint64_t prime_limit, unsigned jobs, const char* cache_dir,
                                 lc_census** out);
LC_API size_t lc_census_count(const lc_census* census);
LC_API lc_status lc_census_record(const lc_census* census, size_t index, uint64_t* p, uint64_t* z, int* infinite);
LC_API lc_status lc_census_csv(const lc_census* census, char** out);
LC_API void lc_census_destroy(lc_census* census);

#ifdef __cplusplus
}
#endif

#endif
