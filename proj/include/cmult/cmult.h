#ifndef CMULT_H
#define CMULT_H

/*
 * C interface of libcmult.
 *
 * Every function returns a cm_status. On failure a message is available
 * from cm_last_error() until the next call on the same thread. Strings
 * returned through char** out-parameters are owned by the caller and must
 * be released with cm_string_free().
 *
 * Polynomial coefficient lists are ascending: "c0,c1,...,cn" means
 * c0 + c1 x + ... + cn x^n. Entries are integers or fractions p/q.
 */

#ifdef __cplusplus
extern "C" {
#endif

#if defined(CMULT_BUILDING_LIBRARY)
#define CM_API __attribute__((visibility("default")))
#else
#define CM_API
#endif

typedef enum cm_status {
  CM_OK = 0,
  CM_INVALID_ARGUMENT = 1,
  CM_PARSE_ERROR = 2,
  CM_TIMEOUT = 3,
  CM_INCONSISTENT = 4,
  CM_IO_ERROR = 5,
  CM_INTERNAL = 6
} cm_status;

typedef struct cm_conditions cm_conditions;

typedef struct cm_gen_options {
  int scaled_derivatives; /* nonzero: P^(k)/k! in the derivative tower */
  int monic;              /* nonzero: a_n = 1 */
  const int* drop_coeffs; /* indices fixed to zero, may be NULL */
  int drop_count;
  int threads;            /* registry fill workers, >= 1 */
  long timeout_ms;        /* <= 0: no budget */
} cm_gen_options;

CM_API const char* cm_version(void);
CM_API const char* cm_last_error(void);
CM_API const char* cm_status_name(cm_status status);
CM_API void cm_string_free(char* s);

CM_API void cm_gen_options_init(cm_gen_options* opt);

/* method: "qxy" (incremental gcd) or "yhz" (repeated gcd). opt may be NULL. */
CM_API cm_status cm_generate(int degree, const char* method, const cm_gen_options* opt, cm_conditions** out);
CM_API cm_status cm_conditions_load(const char* path, cm_conditions** out);
CM_API cm_status cm_conditions_from_json(const char* json, cm_conditions** out);
/* indent < 0 writes compact JSON. */
CM_API cm_status cm_conditions_save(const cm_conditions* cs, const char* path, int indent);
CM_API cm_status cm_conditions_to_json(const cm_conditions* cs, int indent, char** out);
CM_API cm_status cm_conditions_count(const cm_conditions* cs, int* out);
CM_API cm_status cm_conditions_degree(const cm_conditions* cs, int* out);
/* {"poly_count":..,"atom_key_count":..,"registry_size":..,"max_param_degree":..,...} */
CM_API cm_status cm_conditions_measure(const cm_conditions* cs, char** out_json);
CM_API void cm_conditions_free(cm_conditions* cs);

/*
 * Classifies a numeric polynomial given as a coefficient list, or as an
 * expression in x when is_expression is nonzero. With cs == NULL the
 * numeric pipeline decides; otherwise every condition of cs is evaluated
 * and exactly one must hold (CM_INCONSISTENT otherwise). Output:
 * {"real":[...],"imag":[...]} plus "trace" when cs is given.
 */
CM_API cm_status cm_classify(const char* poly, int is_expression, const cm_conditions* cs, char** out_json);

/*
 * CSV tables. metric: "counts" (closed forms), "maxdeg" (measured by
 * symbolic generation, budget_ms per generation, <= 0 for none) or
 * "timing" (summarizes bench_csv, which must then be non-NULL).
 */
CM_API cm_status cm_table(const char* metric, int first, int last, long budget_ms, const char* bench_csv,
                          char** out_csv);

/* Runs a verification suite; *passed receives the number of passing trials. */
CM_API cm_status cm_verify(const char* suite, int trials, unsigned long long seed, int* passed, char** out_json);

/* One CSV row "n,method,seconds,threads" (no header). */
CM_API cm_status cm_bench(int degree, const char* method, int repetitions, int threads, long timeout_ms,
                          char** out_csv_row);
CM_API const char* cm_bench_csv_header(void);

#ifdef __cplusplus
}
#endif

#endif
