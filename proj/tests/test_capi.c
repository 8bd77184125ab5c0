/* Exercises the public header from plain C. */

#include <math.h>
#include <stdio.h>
#include <string.h>

#include "hzn/hzn.h"

static int failures = 0;

#define CHECK(cond)                                              \
  do {                                                           \
    if (!(cond)) {                                               \
      fprintf(stderr, "%s:%d: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                \
    }                                                            \
  } while (0)

static hzn_params real_params(double z, double u, double v) {
  hzn_params p;
  memset(&p, 0, sizeof p);
  p.z.re = z;
  p.u.re = u;
  p.v.re = v;
  p.k = 1;
  return p;
}

int main(void) {
  hzn_context* ctx = NULL;
  CHECK(hzn_context_create(&ctx) == HZN_OK);
  CHECK(hzn_version()[0] != '\0');
  CHECK(strcmp(hzn_status_name(HZN_OK), "ok") == 0);

  /* J(1) = log^2(2)/2 by every method that applies. */
  hzn_params p = real_params(1.0, -1.0, -1.0);
  hzn_result r;
  CHECK(hzn_eval(ctx, HZN_FN_J, HZN_METHOD_QUAD, &p, &r) == HZN_OK);
  CHECK(fabs(r.value.re - 0.2402265069591007) < 1e-13);
  CHECK(r.method == HZN_METHOD_QUAD && r.converged);
  CHECK(hzn_eval(ctx, HZN_FN_J, HZN_METHOD_CLOSED, &p, &r) == HZN_OK);
  CHECK(fabs(r.value.re - 0.2402265069591007) < 1e-13);

  /* F_2(1;1,-1) = -2 Li_3(1/2). */
  p = real_params(1.0, 1.0, -1.0);
  p.k = 2;
  CHECK(hzn_eval(ctx, HZN_FN_FK, HZN_METHOD_CLOSED, &p, &r) == HZN_OK);
  CHECK(fabs(r.value.re + 1.0744263872160806) < 1e-13);

  /* F3 across methods. */
  p = real_params(1.0, 0.4, 0.2);
  p.w.re = -0.5;
  p.has_w = 1;
  hzn_result q, s, c;
  CHECK(hzn_eval(ctx, HZN_FN_F3, HZN_METHOD_QUAD, &p, &q) == HZN_OK);
  CHECK(hzn_eval(ctx, HZN_FN_F3, HZN_METHOD_SERIES, &p, &s) == HZN_OK);
  CHECK(hzn_eval(ctx, HZN_FN_F3, HZN_METHOD_CLOSED, &p, &c) == HZN_OK);
  CHECK(fabs(q.value.re - s.value.re) < 1e-11 && fabs(q.value.re - c.value.re) < 1e-11);

  /* Errors carry a status and a message. */
  p = real_params(1.0, 0.5, 2.0);
  CHECK(hzn_eval(ctx, HZN_FN_F, HZN_METHOD_QUAD, &p, &r) == HZN_ERR_DOMAIN);
  CHECK(strlen(hzn_last_error(ctx)) > 0);
  p = real_params(0.7, 0.3, 0.4);
  p.z.im = 0.2;
  CHECK(hzn_eval(ctx, HZN_FN_F, HZN_METHOD_CLOSED, &p, &r) == HZN_ERR_NOT_APPLICABLE);
  CHECK(hzn_eval(ctx, HZN_FN_F, HZN_METHOD_QUAD, NULL, &r) == HZN_ERR_INVALID_ARGUMENT);
  CHECK(hzn_context_set_tolerance(ctx, -1.0) == HZN_ERR_INVALID_ARGUMENT);

  /* Registry and reports. */
  CHECK(hzn_identity_count() > 20);
  int found = 0;
  for (size_t i = 0; i < hzn_identity_count(); ++i)
    if (strcmp(hzn_identity_name(i), "j-two-term-log2z") == 0) found = hzn_identity_informational(i);
  CHECK(found == 1);

  hzn_report* rep = NULL;
  CHECK(hzn_verify(ctx, "rogers", 100, 7, 1e-11, 1, &rep) == HZN_OK);
  hzn_report_summary sum;
  CHECK(hzn_report_get_summary(rep, &sum) == HZN_OK);
  CHECK(sum.samples == 100 && sum.failure_count == 0 && sum.seed == 7);
  hzn_failure f;
  CHECK(hzn_report_get_failure(rep, 0, &f) == HZN_ERR_INVALID_ARGUMENT);
  hzn_report_destroy(rep);

  CHECK(hzn_verify(ctx, "j-two-term-log2z", 20, 1, 1e-8, 1, &rep) == HZN_OK);
  CHECK(hzn_report_get_summary(rep, &sum) == HZN_OK);
  CHECK(sum.informational && sum.failure_count > 0);
  CHECK(hzn_report_get_failure(rep, 0, &f) == HZN_OK && f.residual > f.threshold);
  hzn_report_destroy(rep);

  CHECK(hzn_verify(ctx, "no-such-identity", 1, 1, 0, 1, &rep) == HZN_ERR_LOOKUP);

  /* Table rows. */
  CHECK(hzn_table_row_count() == 8);
  for (size_t i = 0; i < hzn_table_row_count(); ++i) {
    hzn_table_row row;
    CHECK(hzn_table_get_row(ctx, i, &row) == HZN_OK);
    CHECK(row.residual <= row.tolerance);
  }
  hzn_table_row row;
  CHECK(hzn_table_get_row(ctx, 8, &row) == HZN_ERR_INVALID_ARGUMENT);

  hzn_context_destroy(ctx);
  if (failures == 0) printf("test_capi: all checks passed\n");
  return failures == 0 ? 0 : 1;
}
