/*
 * C interface to the hilbcup library.
 *
 * Objects are opaque handles created by hc_*_parse / hc_* constructors and
 * released with the matching *_free function. Every fallible call returns an
 * hc_status; on failure hc_last_error() describes the problem for the calling
 * thread. Strings returned through char** out-parameters are heap allocated
 * and must be released with hc_string_free.
 */
#ifndef HILBCUP_H
#define HILBCUP_H

#include <stddef.h>

#if defined(_WIN32)
#if defined(HILBCUP_BUILDING)
#define HILBCUP_API __declspec(dllexport)
#else
#define HILBCUP_API __declspec(dllimport)
#endif
#else
#define HILBCUP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hc_status {
  HC_OK = 0,
  HC_ERR_WEIGHT_MISMATCH = 1,
  HC_ERR_INFEASIBLE = 2,
  HC_ERR_BOUND_EXCEEDED = 3,
  HC_ERR_NON_INTEGER_RESULT = 4,
  HC_ERR_MIXED_WEIGHT = 5,
  HC_ERR_OUT_OF_RANGE = 6,
  HC_ERR_SINGULAR_BASIS = 7,
  HC_ERR_NON_INTEGER_COEFFICIENT = 8,
  HC_ERR_UNKNOWN_SUITE = 9,
  HC_ERR_PARSE = 10,
  HC_ERR_INVALID_ARGUMENT = 11,
  HC_ERR_INTERNAL = 12
} hc_status;

typedef enum hc_engine {
  HC_ENGINE_AUTO = 0,
  HC_ENGINE_BRUTEFORCE = 1,
  HC_ENGINE_CHARACTER = 2
} hc_engine;

typedef struct hc_class_function hc_class_function;
typedef struct hc_ppoly hc_ppoly;

HILBCUP_API const char* hc_version(void);
HILBCUP_API const char* hc_status_name(hc_status status);
HILBCUP_API const char* hc_last_error(void);
HILBCUP_API void hc_string_free(char* s);

/* Upper bound on n for character tables (HILBCUP_MAX_N, default 14). */
HILBCUP_API int hc_character_table_limit(void);
HILBCUP_API void hc_set_character_table_limit(int limit);

/* Class functions: {"n": 4, "coeffs": [{"partition": [3,1], "value": "3"}]} */
HILBCUP_API hc_status hc_class_function_parse(const char* json, hc_class_function** out);
HILBCUP_API hc_status hc_class_function_basis(const int* parts, size_t count, hc_class_function** out);
HILBCUP_API hc_status hc_class_function_to_json(const hc_class_function* f, char** out);
HILBCUP_API hc_status hc_class_function_weight(const hc_class_function* f, int* n);
HILBCUP_API hc_status hc_class_function_equal(const hc_class_function* a, const hc_class_function* b, int* equal);
HILBCUP_API void hc_class_function_free(hc_class_function* f);

HILBCUP_API hc_status hc_convolve(const hc_class_function* f, const hc_class_function* g, hc_engine engine,
                                  hc_class_function** out);
HILBCUP_API hc_status hc_cup(const hc_class_function* f, const hc_class_function* g, hc_engine engine,
                             hc_class_function** out);
HILBCUP_API hc_status hc_restrict(const hc_class_function* f, hc_class_function** out);
HILBCUP_API hc_status hc_induce(int m, const hc_class_function* f, hc_class_function** out);
HILBCUP_API hc_status hc_tau(int n, hc_class_function** out);
HILBCUP_API hc_status hc_epsilon(int n, hc_class_function** out);
HILBCUP_API hc_status hc_epsilon_component(int n, int i, hc_class_function** out);

/* Power-sum polynomials: [{"powers": [[1,2]], "coeff": "1/2"}] */
HILBCUP_API hc_status hc_ppoly_parse(const char* json, hc_ppoly** out);
HILBCUP_API hc_status hc_ppoly_to_json(const hc_ppoly* q, char** out);
HILBCUP_API hc_status hc_ppoly_equal(const hc_ppoly* a, const hc_ppoly* b, int* equal);
HILBCUP_API void hc_ppoly_free(hc_ppoly* q);

HILBCUP_API hc_status hc_phi(const hc_class_function* f, hc_ppoly** out);
/* Fails with HC_ERR_NON_INTEGER_RESULT when the preimage is not integral. */
HILBCUP_API hc_status hc_phi_inverse(const hc_ppoly* q, hc_class_function** out);
HILBCUP_API hc_status hc_goulden_delta(const hc_ppoly* q, hc_ppoly** out);
HILBCUP_API hc_status hc_delta_prime(const hc_ppoly* q, hc_ppoly** out);
HILBCUP_API hc_status hc_d_component(int i, const hc_ppoly* q, hc_ppoly** out);
HILBCUP_API hc_status hc_d_operator(const hc_ppoly* q, hc_ppoly** out);
HILBCUP_API hc_status hc_chern_operator(int k, const hc_ppoly* q, hc_ppoly** out);

/* JSON reports. `passed` may be NULL. A non-positive degree bound selects
 * the default. */
HILBCUP_API hc_status hc_chartable_json(int n, char** out);
HILBCUP_API hc_status hc_betti_json(int n, char** out);
HILBCUP_API hc_status hc_presentation_json(int n, int max_degree, hc_engine engine, char** out, int* passed);
HILBCUP_API hc_status hc_det_check_json(int max_d, hc_engine engine, char** out, int* passed);
HILBCUP_API hc_status hc_graded_rank_json(int n, int max_degree, hc_engine engine, char** out, int* passed);
/* suite is a suite name or "all". */
HILBCUP_API hc_status hc_verify_json(const char* suite, int max_n, int max_d, hc_engine engine, char** out,
                                     int* passed);

#ifdef __cplusplus
}
#endif

#endif /* HILBCUP_H */
