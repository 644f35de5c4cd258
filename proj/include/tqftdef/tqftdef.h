/*
 * C interface of the tqftdef library: state-sum invariants of oriented
 * surfaces carrying an oriented defect curve.
 *
 * Objects are opaque handles owned by the caller and released with the
 * matching *_free function. Every call returns a tqd_status; on failure the
 * message of the last error on the calling thread is available from
 * tqd_last_error(). Strings returned through char** out-parameters are
 * UTF-8 JSON documents allocated by the library; release them with
 * tqd_string_free().
 */
#ifndef TQFTDEF_H
#define TQFTDEF_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(TQD_BUILDING_LIBRARY)
#    define TQD_API __declspec(dllexport)
#  else
#    define TQD_API __declspec(dllimport)
#  endif
#else
#  define TQD_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tqd_status {
  TQD_OK = 0,
  TQD_ERR_PARSE = 1,             /* malformed JSON or table text */
  TQD_ERR_INVALID_ARGUMENT = 2,  /* bad parameter, unknown name, null pointer */
  TQD_ERR_DIMENSION = 3,         /* structure constants of inconsistent sizes */
  TQD_ERR_INVALID_SYSTEM = 4,    /* system fails its checks */
  TQD_ERR_INVALID_COMPLEX = 5,   /* not a valid flag-like curve-surface complex */
  TQD_ERR_TOO_LARGE = 6,         /* brute force above its coloring cap */
  TQD_ERR_MEMORY_BUDGET = 7,     /* contraction above its intermediate-size budget */
  TQD_ERR_MOVE = 8,              /* move not applicable */
  TQD_ERR_IO = 9,
  TQD_ERR_INTERNAL = 10
} tqd_status;

typedef enum tqd_method {
  TQD_METHOD_AUTO = 0,
  TQD_METHOD_BRUTE = 1,
  TQD_METHOD_CONTRACT = 2
} tqd_method;

/* Test-only switch: TQD_BARRED_REVERSED feeds barred coefficients their two
 * superscript arguments in swapped order. */
typedef enum tqd_barred_order {
  TQD_BARRED_PATH = 0,
  TQD_BARRED_REVERSED = 1
} tqd_barred_order;

typedef struct tqd_eval_options {
  uint64_t brute_force_cap; /* colorings; 0 = default (1e8) */
  uint64_t memory_budget;   /* entries per intermediate tensor; 0 = default (2^26) */
  int sequential_order;     /* nonzero: naive left-to-right contraction */
  tqd_barred_order barred_order;
} tqd_eval_options;

typedef struct tqd_fuzz_options {
  uint64_t seed;
  uint64_t steps;
  uint64_t checkpoint_every; /* 0 = only after the last step */
  uint64_t max_edges;        /* 0 = initial edge count + 60 */
  tqd_method method;
  tqd_eval_options eval;
} tqd_fuzz_options;

typedef struct tqd_system tqd_system;
typedef struct tqd_complex tqd_complex;

TQD_API const char* tqd_version(void);
TQD_API const char* tqd_last_error(void);
TQD_API void tqd_string_free(char* text);

TQD_API void tqd_default_eval_options(tqd_eval_options* options);
TQD_API void tqd_default_fuzz_options(tqd_fuzz_options* options);

/* ---- systems ---------------------------------------------------------- */

TQD_API tqd_status tqd_system_from_json(const char* json, tqd_system** out);
TQD_API tqd_status tqd_system_load(const char* path, tqd_system** out);
TQD_API tqd_status tqd_system_to_json(const tqd_system* system, char** out_json);
TQD_API void tqd_system_free(tqd_system* system);

/* Runs all 35 equations and the auxiliary laws. *all_passed is set to 1 iff
 * every check passed. The report lists every check with its witness. */
TQD_API tqd_status tqd_system_check(const tqd_system* system, char** out_report,
                                    int* all_passed);

/* Builds example data. name/params:
 *   "matrix"          {"n": 2, "m": 2}
 *   "group-algebra"   {"table": "<group table text>"}   (trivial defect, B = A)
 *   "example1"        {"g": "z2"|"s3"|<table text>, "h": ..., optional}
 *   "example4"        {"g": "z2"|"s3"|<table text>}
 *   "shipped"         {"name": "example1_z2"} */
TQD_API tqd_status tqd_system_generate(const char* name, const char* params_json,
                                       tqd_system** out);

/* ---- complexes -------------------------------------------------------- */

TQD_API tqd_status tqd_complex_from_json(const char* json, tqd_complex** out);
TQD_API tqd_status tqd_complex_load(const char* path, tqd_complex** out);
TQD_API tqd_status tqd_complex_seed(const char* name, tqd_complex** out);
TQD_API tqd_status tqd_complex_to_json(const tqd_complex* complex, char** out_json);
TQD_API tqd_status tqd_complex_subdivide(const tqd_complex* complex, tqd_complex** out);
/* Report: {"valid": bool, "violations": [...], "euler_characteristic": n, ...} */
TQD_API tqd_status tqd_complex_validate(const tqd_complex* complex, char** out_report,
                                        int* valid);
TQD_API void tqd_complex_free(tqd_complex* complex);

/* ---- invariants ------------------------------------------------------- */

/* Raw state sum without system validation: {"unnormalized": "p/q", "method": ...}. */
TQD_API tqd_status tqd_state_sum(const tqd_system* system, const tqd_complex* complex,
                                 tqd_method method, const tqd_eval_options* options,
                                 char** out_value);

/* Normalized invariant. The system must pass its checks
 * (TQD_ERR_INVALID_SYSTEM otherwise). */
TQD_API tqd_status tqd_invariant(const tqd_system* system, const tqd_complex* complex,
                                 tqd_method method, const tqd_eval_options* options,
                                 char** out_result);

/* Random walk with exact comparison of the invariant at checkpoints.
 * *passed is 1 iff every checkpoint matched the initial value. */
TQD_API tqd_status tqd_fuzz(const tqd_system* system, const tqd_complex* complex,
                            const tqd_fuzz_options* options, char** out_report, int* passed);

#ifdef __cplusplus
}
#endif

#endif /* TQFTDEF_H */
