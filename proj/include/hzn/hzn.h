#ifndef HZN_HZN_H
#define HZN_HZN_H

/* C interface to the HZN function library: F(z;u,v), F_k, F(z;u,v,w) and J.
 *
 * Every call that can fail returns an hzn_status; the message for the last
 * failure on a context is available from hzn_last_error. Contexts and
 * reports are opaque and owned by the caller. A context must not be used
 * from two threads at once; separate contexts are independent. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define HZN_EXPORT __declspec(dllexport)
#else
#define HZN_EXPORT __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hzn_status {
  HZN_OK = 0,
  HZN_ERR_DOMAIN = 1,
  HZN_ERR_POLE = 2,
  HZN_ERR_BRANCH = 3,
  HZN_ERR_DEGENERATE = 4,
  HZN_ERR_CONVERGENCE = 5,
  HZN_ERR_NEAR_POLE = 6,
  HZN_ERR_RESOURCE = 7,
  HZN_ERR_LOOKUP = 8,
  HZN_ERR_INVALID_ARGUMENT = 9,
  HZN_ERR_NOT_APPLICABLE = 10, /* no evaluator of the requested method for these parameters */
  HZN_ERR_INTERNAL = 11
} hzn_status;

typedef enum hzn_function { HZN_FN_F = 0, HZN_FN_FK = 1, HZN_FN_F3 = 2, HZN_FN_J = 3 } hzn_function;

typedef enum hzn_method { HZN_METHOD_QUAD = 0, HZN_METHOD_SERIES = 1, HZN_METHOD_CLOSED = 2 } hzn_method;

typedef struct hzn_complex {
  double re;
  double im;
} hzn_complex;

/* z is used as given. p, q > 0 declare z = p/q for the closed forms; with
 * p = q = 0 a real z is matched against p/q, q <= 64. */
typedef struct hzn_params {
  hzn_complex z;
  hzn_complex u;
  hzn_complex v;
  hzn_complex w;
  int has_w;
  int k;
  int p;
  int q;
} hzn_params;

typedef struct hzn_result {
  hzn_complex value;
  double abs_err;
  hzn_method method;
  int64_t evaluations;
  int converged;
} hzn_result;

typedef struct hzn_context hzn_context;
typedef struct hzn_report hzn_report;

HZN_EXPORT const char* hzn_version(void);
HZN_EXPORT const char* hzn_status_name(hzn_status s);

HZN_EXPORT hzn_status hzn_context_create(hzn_context** out);
HZN_EXPORT void hzn_context_destroy(hzn_context* ctx);
/* Target absolute error for quadrature and series (default 1e-12). */
HZN_EXPORT hzn_status hzn_context_set_tolerance(hzn_context* ctx, double tol);
/* Valid until the next failing call on ctx. */
HZN_EXPORT const char* hzn_last_error(const hzn_context* ctx);

/* F(z;u,v), F_k(z;u,v), F(z;u,v,w) or J(z) by one method. */
HZN_EXPORT hzn_status hzn_eval(hzn_context* ctx, hzn_function fn, hzn_method method, const hzn_params* params,
                               hzn_result* out);

/* Identity registry. */
HZN_EXPORT size_t hzn_identity_count(void);
HZN_EXPORT const char* hzn_identity_name(size_t index);
HZN_EXPORT const char* hzn_identity_description(size_t index);
HZN_EXPORT int hzn_identity_informational(size_t index);

/* samples <= 0 and tol <= 0 select the identity's defaults. */
HZN_EXPORT hzn_status hzn_verify(hzn_context* ctx, const char* name, int samples, uint64_t seed, double tol,
                                 int threads, hzn_report** out);
HZN_EXPORT void hzn_report_destroy(hzn_report* rep);

typedef struct hzn_report_summary {
  const char* name;
  int informational;
  int samples;
  uint64_t seed;
  double tol;
  double max_residual;
  double mean_residual;
  double max_threshold;
  size_t failure_count;
  int64_t wall_time_ns;
} hzn_report_summary;

typedef struct hzn_failure {
  int index;
  hzn_params params;
  double residual;
  double threshold;
} hzn_failure;

HZN_EXPORT hzn_status hzn_report_get_summary(const hzn_report* rep, hzn_report_summary* out);
HZN_EXPORT hzn_status hzn_report_get_failure(const hzn_report* rep, size_t i, hzn_failure* out);

/* Tabulated special values of F_k(1/n;u,v). Strings stay valid for the
 * lifetime of the library. */
typedef struct hzn_table_row {
  int k;
  int n;
  hzn_complex u;
  hzn_complex v;
  const char* label;
  const char* expression;
  hzn_complex printed;
  hzn_complex general;
  hzn_result oracle;
  double residual;
  double tolerance;
} hzn_table_row;

HZN_EXPORT size_t hzn_table_row_count(void);
HZN_EXPORT hzn_status hzn_table_get_row(hzn_context* ctx, size_t i, hzn_table_row* out);

#ifdef __cplusplus
}
#endif

#endif
