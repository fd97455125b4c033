/*
 * Copyright 2026 The bkl Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the bkl library: diagonal Bergman kernels of five
 * parametrized planar domain families, the Levi form of log K in the
 * parameter, boundary-limit probes and the theorem tables.
 *
 * All functions return a bkl_status. On failure the message is available
 * from bkl_last_error() on the context that was passed in; functions that
 * take no context report only the status. A context must not be used from
 * two threads at once; distinct contexts are independent.
 */

#ifndef BKL_BKL_H_
#define BKL_BKL_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define BKL_API __declspec(dllexport)
#elif defined(__GNUC__)
#define BKL_API __attribute__((visibility("default")))
#else
#define BKL_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  BKL_OK = 0,
  BKL_ERR_DOMAIN = 1,
  BKL_ERR_POLE = 2,
  BKL_ERR_BRANCH_CUT = 3,
  BKL_ERR_BOUNDARY_GUARD = 4,
  BKL_ERR_PARAMETER = 5,
  BKL_ERR_STENCIL = 6,
  BKL_ERR_CONVERGENCE = 7,
  BKL_ERR_INSUFFICIENT_POINTS = 8,
  BKL_ERR_ILL_CONDITIONED = 9,
  BKL_ERR_ORACLE_REFUSED = 10,
  BKL_ERR_INVALID_ARGUMENT = 11,
  BKL_ERR_INTERNAL = 99
} bkl_status;

typedef enum {
  BKL_ANNULUS = 0,
  BKL_DISC = 1,
  BKL_SLIT = 2,
  BKL_RECTANGLE = 3,
  BKL_HALFSTRIP = 4
} bkl_family;

typedef enum { BKL_METHOD_FD = 0, BKL_METHOD_ANALYTIC = 1 } bkl_method;

/* How a probe evaluates the Levi form along its path. */
typedef enum {
  BKL_EVAL_FD = 0,               /* finite differences at zeta0 + eta */
  BKL_EVAL_ANNULUS_ANALYTIC = 1, /* closed form in P and c    */
  BKL_EVAL_ANNULUS_EXACT = 2,    /* second omega1-derivative of the series */
  BKL_EVAL_SLIT_INNER = 3        /* zeta -> 1 inner limit, zeta0 ignored */
} bkl_evaluator;

typedef enum {
  BKL_TARGET_VALUE = 0,
  BKL_TARGET_INFINITY = 1,
  BKL_TARGET_ORDER = 2,
  BKL_TARGET_GREATER = 3,
  BKL_TARGET_NONNEGATIVE = 4
} bkl_target_kind;

typedef struct {
  double re;
  double im;
} bkl_complex;

typedef struct {
  double value;
  double h;
  double richardson_error;
  bkl_method method;
} bkl_levi;

typedef struct {
  double fitted_limit; /* +inf when diverged */
  int diverged;
  double fitted_order;
  double slope_stderr;
} bkl_limit;

/* One row of a report. For probes each row is a path point; for theorem
 * tables one claim; for selftest one check (estimate = measured deviation). */
typedef struct {
  int theorem;
  bkl_family family;
  bkl_complex zeta;
  bkl_complex z;
  double kernel; /* NaN when not evaluated */
  double levi;
  double h;
  double richardson_error;
  bkl_evaluator evaluator;
  bkl_target_kind target_kind;
  double target;
  double tolerance;
  double estimate;
  double order;
  double order_stderr;
  double distance;
  int diverged;
  int pass;
} bkl_row;

typedef struct bkl_context bkl_context;
typedef struct bkl_report bkl_report;

BKL_API const char* bkl_version(void);
BKL_API const char* bkl_status_string(bkl_status status);

BKL_API bkl_status bkl_context_create(bkl_context** out);
BKL_API void bkl_context_destroy(bkl_context* ctx);
BKL_API const char* bkl_last_error(const bkl_context* ctx);

/* theta(zeta) = Re(sum_{n>=1} a_n zeta^n); default a_1 = 1. */
BKL_API bkl_status bkl_set_theta(bkl_context* ctx, const bkl_complex* coefficients, size_t n);
BKL_API bkl_status bkl_set_step(bkl_context* ctx, double h);
BKL_API bkl_status bkl_set_eta(bkl_context* ctx, double eta);
/* tol > 0 overrides the tolerance of value rows in bkl_reproduce; 0 keeps
 * the per-row defaults. */
BKL_API bkl_status bkl_set_tolerance(bkl_context* ctx, double tol);
BKL_API bkl_status bkl_set_seed(bkl_context* ctx, uint64_t seed);

BKL_API bkl_status bkl_family_from_name(const char* name, bkl_family* out);
BKL_API const char* bkl_family_name(bkl_family family);

/* Domain families. */
BKL_API bkl_status bkl_contains(bkl_context* ctx, bkl_family family, bkl_complex zeta,
                                bkl_complex z, int* out);
BKL_API bkl_status bkl_kernel(bkl_context* ctx, bkl_family family, bkl_complex zeta,
                              bkl_complex z, double* out);
BKL_API bkl_status bkl_solve_modulus(bkl_context* ctx, bkl_complex zeta, double* k);

/* Levi form in zeta. bkl_levi_analytic is available for the annulus only. */
BKL_API bkl_status bkl_levi_fd(bkl_context* ctx, bkl_family family, bkl_complex zeta,
                               bkl_complex z, bkl_levi* out);
BKL_API bkl_status bkl_levi_analytic(bkl_context* ctx, bkl_family family, bkl_complex zeta,
                                     bkl_complex z, bkl_levi* out);
BKL_API bkl_status bkl_levi_annulus_exact(bkl_context* ctx, bkl_complex zeta, bkl_complex z,
                                          bkl_levi* out);
BKL_API bkl_status bkl_levi_slit_inner(bkl_context* ctx, bkl_complex z, bkl_levi* out);

/* Closed-form targets: the slit-disc boundary profile
 * (1/4)((1 - cos t) + 1/(1 - cos t) - 2) and the half-strip tail limit
 * 2x^2 + 2(x cot 2x - 1/2)^2. */
BKL_API bkl_status bkl_slit_boundary_profile(bkl_context* ctx, double theta, double* out);
BKL_API bkl_status bkl_halfstrip_tail_limit(bkl_context* ctx, double x, double* out);

/* Special functions. */
BKL_API bkl_status bkl_complete_K(bkl_context* ctx, double k, double* out);
BKL_API bkl_status bkl_complete_E(bkl_context* ctx, double k, double* out);
BKL_API bkl_status bkl_incomplete_F(bkl_context* ctx, bkl_complex w, double k, bkl_complex* out);
BKL_API bkl_status bkl_jacobi(bkl_context* ctx, bkl_complex u, double k, bkl_complex* sn,
                              bkl_complex* cn, bkl_complex* dn);
BKL_API bkl_status bkl_weierstrass_p(bkl_context* ctx, bkl_complex u, double omega1,
                                     bkl_complex* out);
BKL_API bkl_status bkl_weierstrass_zeta(bkl_context* ctx, bkl_complex u, double omega1,
                                        bkl_complex* out);
BKL_API bkl_status bkl_robin_c(bkl_context* ctx, double omega1, double* out);

/* Reports. A probe marches z_j = target + d0 ratio^j direction/|direction|
 * (12 steps, ratio 1/2) with zeta = zeta0 + eta. */
BKL_API bkl_status bkl_probe(bkl_context* ctx, bkl_family family, bkl_complex zeta0,
                             bkl_complex target, bkl_complex direction, double d0,
                             bkl_evaluator evaluator, bkl_report** out);
/* Probe along an explicit path: zeta[j], z[j], and the small variable
 * distance[j] used for the order fit. zeta is ignored for
 * BKL_EVAL_SLIT_INNER and may then be NULL. */
BKL_API bkl_status bkl_probe_path(bkl_context* ctx, bkl_family family, const bkl_complex* zeta,
                                  const bkl_complex* z, const double* distance, size_t n,
                                  bkl_evaluator evaluator, bkl_report** out);
BKL_API bkl_status bkl_reproduce(bkl_context* ctx, int theorem, bkl_report** out);
BKL_API bkl_status bkl_selftest(bkl_context* ctx, bkl_report** out);

BKL_API size_t bkl_report_size(const bkl_report* rep);
BKL_API const bkl_row* bkl_report_row(const bkl_report* rep, size_t i);
BKL_API const char* bkl_report_claim(const bkl_report* rep, size_t i);
BKL_API const char* bkl_report_description(const bkl_report* rep, size_t i);
BKL_API const char* bkl_report_error(const bkl_report* rep, size_t i);
/* Summary of a probe report; BKL_ERR_INVALID_ARGUMENT for other reports. */
BKL_API bkl_status bkl_report_limit(const bkl_report* rep, bkl_limit* out);
BKL_API int bkl_report_all_pass(const bkl_report* rep);
BKL_API void bkl_report_destroy(bkl_report* rep);

#ifdef __cplusplus
}
#endif

#endif /* BKL_BKL_H_ */
