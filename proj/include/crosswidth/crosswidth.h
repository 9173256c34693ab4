/*
 * Copyright 2026 crosswidth developers
 * SPDX-License-Identifier: Apache-2.0
 *
 * C interface to libcrosswidth: mean width and mean square width of regular
 * cross-polytopes, moments of the half-normal sample maximum, and their
 * large-n asymptotics.
 *
 * Conventions:
 *   - Every fallible call returns cw_status. On failure the output arguments
 *     are left untouched and cw_last_error() describes the problem. The
 *     message is thread-local and valid until the next failing call on the
 *     same thread.
 *   - Handles are opaque. Objects created by *_create are released by the
 *     matching *_destroy; passing NULL to *_destroy is a no-op.
 *   - A cw_context may be shared by threads for reading but must not be
 *     modified concurrently.
 */
#ifndef CROSSWIDTH_CROSSWIDTH_H
#define CROSSWIDTH_CROSSWIDTH_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(CROSSWIDTH_BUILDING_LIBRARY)
#    define CW_API __declspec(dllexport)
#  else
#    define CW_API __declspec(dllimport)
#  endif
#else
#  define CW_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cw_status {
  CW_OK = 0,
  CW_ERROR_INVALID_ARGUMENT = 1, /* NULL pointer, bad enum value */
  CW_ERROR_DOMAIN = 2,           /* argument outside the supported range */
  CW_ERROR_NO_CONVERGENCE = 3,   /* quadrature budget exhausted */
  CW_ERROR_INTERNAL = 4
} cw_status;

typedef enum cw_method {
  CW_METHOD_CLOSED_FORM = 0,
  CW_METHOD_QUADRATURE = 1,
  CW_METHOD_MONTE_CARLO = 2
} cw_method;

typedef enum cw_constant_form {
  CW_FORM_DEFINING_INTEGRAL = 0, /* single integral for S_k, double for T_2, T_1' */
  CW_FORM_REDUCED_INTEGRAL = 1,  /* single-integral reduction of T_2, T_1' */
  CW_FORM_CLOSED = 2             /* arcsec form of S_k */
} cw_constant_form;

typedef enum cw_width_route {
  CW_WIDTH_EXACT = 0,           /* closed forms, n = 2..6 */
  CW_WIDTH_GAMMA_RELATION = 1,  /* Gamma ratio times mu_n */
  CW_WIDTH_DIRECT_INTEGRAL = 2  /* erf-power integral */
} cw_width_route;

typedef struct cw_value {
  double value;
  double error_estimate;
} cw_value;

typedef struct cw_moment {
  unsigned n;
  int order; /* 1: mu_n, 2: nu_n */
  double value;
  double error_estimate;
  cw_method method;
} cw_moment;

typedef struct cw_mc_estimate {
  double mean;
  double std_error;
  uint64_t samples;
  uint64_t seed;
} cw_mc_estimate;

typedef struct cw_asymptotic {
  uint64_t n;
  double a_n;
  double a_n_prime;
  double mu_approx;
  double mean_width_approx;
  double adjusted_width_approx;
} cw_asymptotic;

typedef struct cw_check {
  const char* name; /* owned by the report */
  double expected;
  double actual;
  double tolerance;
  int passed;
  const char* note; /* owned by the report, may be empty */
} cw_check;

typedef struct cw_context cw_context;
typedef struct cw_polytope cw_polytope;
typedef struct cw_report cw_report;

/* Library ---------------------------------------------------------------- */

CW_API const char* cw_version(void);
CW_API const char* cw_status_string(cw_status status);
CW_API const char* cw_last_error(void);

/* Context: tolerance and Monte Carlo execution settings. Defaults are
 * absolute = relative = 1e-12, threads = 0 (CROSSWIDTH_THREADS or hardware
 * concurrency), chunk size 65536. */

CW_API cw_status cw_context_create(cw_context** out);
CW_API void cw_context_destroy(cw_context* ctx);
CW_API cw_status cw_context_set_tolerance(cw_context* ctx, double absolute, double relative);
CW_API cw_status cw_context_set_threads(cw_context* ctx, unsigned threads);
CW_API cw_status cw_context_set_chunk_size(cw_context* ctx, uint64_t chunk_size);
/* Test hook: offset added to S_2 in the closed-form reconstructions checked by
 * cw_verify. Has no effect on any other call. */
CW_API cw_status cw_context_set_s2_perturbation(cw_context* ctx, double delta);

/* Half-normal maximum ---------------------------------------------------- */

/* order 1 gives mu_n, order 2 gives nu_n. method is CLOSED_FORM or QUADRATURE. */
CW_API cw_status cw_moment_compute(const cw_context* ctx, unsigned n, int order, cw_method method,
                                   cw_moment* out);
CW_API cw_status cw_moment_monte_carlo(const cw_context* ctx, unsigned n, uint64_t samples,
                                       uint64_t seed, cw_mc_estimate* mu, cw_mc_estimate* nu);

/* Constants S_k, T_2, T_1' ------------------------------------------------ */

CW_API cw_status cw_constant_s(const cw_context* ctx, unsigned k, cw_constant_form form,
                               cw_value* out);
CW_API cw_status cw_constant_t2(const cw_context* ctx, cw_constant_form form, cw_value* out);
CW_API cw_status cw_constant_t1_prime(const cw_context* ctx, cw_constant_form form,
                                      cw_value* out);

/* Widths ----------------------------------------------------------------- */

CW_API cw_status cw_mean_width(const cw_context* ctx, unsigned n, cw_width_route route,
                               cw_value* out);
/* Closed forms, n = 2..5. */
CW_API cw_status cw_mean_square_width_exact(const cw_context* ctx, unsigned n, cw_value* out);
/* (2/n) nu_n with nu_n by quadrature; conjectural for every n. */
CW_API cw_status cw_mean_square_width_conjectured(const cw_context* ctx, unsigned n,
                                                  cw_value* out);
CW_API cw_status cw_width_monte_carlo(const cw_context* ctx, unsigned n, uint64_t samples,
                                      uint64_t seed, cw_mc_estimate* mean_width,
                                      cw_mc_estimate* mean_square_width);
/* z-score of the Monte Carlo mean square width against (2/n) nu_n.
 * *beyond_range is set to 1 for n > 6. */
CW_API cw_status cw_conjecture_check(const cw_context* ctx, unsigned n, uint64_t samples,
                                     uint64_t seed, double* reference, cw_mc_estimate* estimate,
                                     double* z_score, int* beyond_range);

/* Polytopes -------------------------------------------------------------- */

CW_API cw_status cw_polytope_create(unsigned dim, size_t vertex_count, const double* coordinates,
                                    cw_polytope** out);
CW_API cw_status cw_polytope_crosspolytope(unsigned n, cw_polytope** out);
CW_API void cw_polytope_destroy(cw_polytope* p);
CW_API unsigned cw_polytope_dim(const cw_polytope* p);
CW_API size_t cw_polytope_vertex_count(const cw_polytope* p);
/* direction has cw_polytope_dim(p) entries and must be nonzero. */
CW_API cw_status cw_polytope_support(const cw_polytope* p, const double* direction, double* out);
CW_API cw_status cw_polytope_width(const cw_polytope* p, const double* direction, double* out);
CW_API cw_status cw_crosspolytope_inradius(unsigned n, double* out);

/* Asymptotics ------------------------------------------------------------ */

CW_API cw_status cw_asymptotics(uint64_t n, cw_asymptotic* out);
CW_API cw_status cw_gumbel_moments(const cw_context* ctx, double* mass, double* first,
                                   double* second);
CW_API cw_status cw_gumbel_sup_distance(const cw_context* ctx, uint64_t n, uint64_t samples,
                                        uint64_t seed, double* out);

/* Verification ----------------------------------------------------------- */

/* full != 0 adds the Monte Carlo checks at `samples` samples. */
CW_API cw_status cw_verify(const cw_context* ctx, int full, uint64_t samples, uint64_t seed,
                           cw_report** out);
CW_API void cw_report_destroy(cw_report* report);
CW_API size_t cw_report_size(const cw_report* report);
CW_API cw_status cw_report_get(const cw_report* report, size_t index, cw_check* out);
CW_API int cw_report_passed(const cw_report* report);

#ifdef __cplusplus
}
#endif

#endif /* CROSSWIDTH_CROSSWIDTH_H */
