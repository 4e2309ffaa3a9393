/* Copyright (c) 2026 the hankelkit authors
 * SPDX-License-Identifier: Apache-2.0
 *
 * C interface to the hankelkit core: weighted Bergman-space weights, analytic
 * series, complex measures, Hankel form/operator norm estimates, boundary
 * detectors, and the verification suites.
 *
 * Conventions:
 *   - Every function returns an hk_status (HK_OK on success) unless noted.
 *   - On failure, hk_last_error() returns a thread-local description.
 *   - Objects are opaque handles created and released by the matching
 *     hk_*_free; handles are not thread-safe for concurrent mutation but may
 *     be read from several threads.
 *   - Complex numbers cross the boundary as (re, im) double pairs.
 *   - Strings returned through char** are heap-allocated; release them with
 *     hk_string_free.
 */
#ifndef HANKEL_HANKEL_C_H_
#define HANKEL_HANKEL_C_H_

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hk_status {
  HK_OK = 0,
  HK_ERR_INVALID = 1,        /* null handle / bad argument at the boundary */
  HK_ERR_PARSE = 2,          /* descriptor, CSV, or config text rejected */
  HK_ERR_UNSUPPORTED = 3,    /* structurally valid but outside the algorithms */
  HK_ERR_CLASSIFICATION = 4, /* weight failed a doubling/growth classification */
  HK_ERR_TOLERANCE = 5,      /* requested tolerance unattainable (e.g. caps) */
  HK_ERR_NONCONVERGENCE = 6, /* iteration budget exhausted */
  HK_ERR_DOMAIN = 7,         /* parameter outside its mathematical domain */
  HK_ERR_IO = 8,             /* file could not be read or written */
  HK_ERR_INTERNAL = 99
} hk_status;

typedef struct hk_weight hk_weight;
typedef struct hk_series hk_series;
typedef struct hk_measure hk_measure;

/* ------------------------------------------------------------------------- */
/* Library metadata and error reporting                                      */
/* ------------------------------------------------------------------------- */

/* Version string of the library ("0.1.0"). Never fails. */
const char* hk_version(void);

/* Thread-local message for the most recent failure in this thread; empty
 * string when the last call succeeded. The pointer stays valid until the next
 * hk_* call in the same thread. */
const char* hk_last_error(void);

/* Releases a string returned through a char** out-parameter. NULL is ok. */
void hk_string_free(char* s);

/* ------------------------------------------------------------------------- */
/* Radial weights                                                            */
/* ------------------------------------------------------------------------- */

/* Parses a weight descriptor. Long form: "kind=standard alpha=1",
 * "kind=wderived x=2 base=(kind=const)". Shorthand: "const", "standard:1",
 * "wderived:2:const", "omegaplus:const", "samples:<csv-path>". */
hk_status hk_weight_parse(const char* descriptor, hk_weight** out);
void hk_weight_free(hk_weight* w);

/* One-line descriptor that hk_weight_parse accepts back. */
hk_status hk_weight_describe(const hk_weight* w, char** out);

hk_status hk_weight_profile(const hk_weight* w, double rho, double* out);
/* Tail integral over [rho, 1); closed form where the weight has one. */
hk_status hk_weight_tail(const hk_weight* w, double rho, double* out);
/* Tail by adaptive quadrature, bypassing closed forms (cross-check route). */
hk_status hk_weight_tail_quadrature(const hk_weight* w, double rho,
                                    double* out);
/* Moment \int_0^1 w(s) s^x ds, x >= 0. */
hk_status hk_weight_moment(const hk_weight* w, double x, double* out);
/* sigma_n = 2 * moment(2n+1): squared norm of z^n in the weighted A^2. */
hk_status hk_weight_sigma(const hk_weight* w, size_t n, double* out);

/* Upper doubling classification: *is_upper in {0,1}, *constant = grid max of
 * tail(rho)/tail((1+rho)/2). */
hk_status hk_weight_upper_doubling(const hk_weight* w, int* is_upper,
                                   double* constant);
/* Lower doubling: best (K, C) with C = grid min of tail(rho)/tail(1-(1-rho)/K). */
hk_status hk_weight_lower_doubling(const hk_weight* w, int* is_lower,
                                   double* k, double* c);
/* Smallest ladder exponent gamma with tail(rho)/(1-rho)^gamma almost
 * increasing; fails with HK_ERR_CLASSIFICATION when none fits. */
hk_status hk_weight_growth_exponent(const hk_weight* w, double* gamma);

/* ------------------------------------------------------------------------- */
/* Analytic series (finite Taylor coefficient vectors)                       */
/* ------------------------------------------------------------------------- */

/* Builds a series from n coefficients; im may be NULL for real input. */
hk_status hk_series_create(const double* re, const double* im, size_t n,
                           hk_series** out);
/* c * z^n. */
hk_status hk_series_monomial(size_t n, double re, double im, hk_series** out);
void hk_series_free(hk_series* s);

hk_status hk_series_size(const hk_series* s, size_t* out);
hk_status hk_series_coeff(const hk_series* s, size_t n, double* re,
                          double* im);
hk_status hk_series_evaluate(const hk_series* s, double zre, double zim,
                             double* re, double* im);

/* Series CSV files: header "n,re,im", %.17g, bit-exact round trip. */
hk_status hk_series_read_csv(const char* path, hk_series** out);
hk_status hk_series_write_csv(const char* path, const hk_series* s);

/* ------------------------------------------------------------------------- */
/* Complex measures: finite atoms plus an optional anti-analytic density     */
/* conj(h) d(base dA) with polynomial h                                      */
/* ------------------------------------------------------------------------- */

hk_status hk_measure_create(hk_measure** out);
void hk_measure_free(hk_measure* m);

/* Adds a point mass c at z, |z| < 1. */
hk_status hk_measure_add_atom(hk_measure* m, double zre, double zim,
                              double cre, double cim);
/* Sets the density part to conj(h) d(base dA); replaces any previous one. */
hk_status hk_measure_set_density(hk_measure* m, const hk_series* h,
                                 const hk_weight* base);
/* Multiplies all atoms' masses and the density by the given factor. */
hk_status hk_measure_scale(hk_measure* m, double re, double im);
/* Moment \int xi^k dmu. */
hk_status hk_measure_moment(const hk_measure* m, size_t k, double* re,
                            double* im);

/* Parses a measure block: statements separated by ';' or newlines, each
 *   atom <re z> <im z> <re c> <im c>
 *   density weight=<descriptor> coeffs=<csv-path>
 * Relative csv paths resolve against base_dir ("" or NULL = cwd). */
hk_status hk_measure_parse(const char* text, const char* base_dir,
                           hk_measure** out);
/* Builds the measure of [measure <section>] in a config file. */
hk_status hk_measure_from_config(const char* config_path, const char* section,
                                 hk_measure** out);

/* ------------------------------------------------------------------------- */
/* Kernels, projections, fractional derivatives                              */
/* ------------------------------------------------------------------------- */

/* Reproducing kernel B_a of the weighted A^2, truncated to degree n_max. */
hk_status hk_kernel(const hk_weight* w, double are, double aim, size_t n_max,
                    hk_series** out);
/* Bergman projection of mu (conjugated != 0: of its conjugate measure). */
hk_status hk_project(const hk_weight* w, const hk_measure* mu, int conjugated,
                     size_t n_max, hk_series** out);
/* Fractional derivative R^{omega,nu}: coefficient n scaled by the moment
 * ratio omega_{2n+1}/nu_{2n+1}. */
hk_status hk_frac_r(const hk_weight* omega, const hk_weight* nu,
                    const hk_series* f, hk_series** out);
/* D^omega (divide coefficients by omega_{2n+1}) and its inverse D_omega. */
hk_status hk_d_upper(const hk_weight* w, const hk_series* f, hk_series** out);
hk_status hk_d_lower(const hk_weight* w, const hk_series* f, hk_series** out);
/* Analytic representative of the small Hankel operator image, degree n_max. */
hk_status hk_hankel_apply(const hk_measure* mu, const hk_weight* w,
                          const hk_series* f, size_t n_max, hk_series** out);
/* Bilinear Hankel form H_mu(f, g) = sum_k (fg)_k m_k. */
hk_status hk_form_eval(const hk_measure* mu, const hk_series* f,
                       const hk_series* g, double* re, double* im);
/* | int F dmu - int F conj(dilated projection) d(w dA) | at dilation rho. */
hk_status hk_residual(const hk_series* f, const hk_measure* mu,
                      const hk_weight* w, double rho, double* out);

/* ------------------------------------------------------------------------- */
/* Norms and pairings                                                        */
/* ------------------------------------------------------------------------- */

hk_status hk_bergman_norm(const hk_series* f, const hk_weight* w, double p,
                          double* out);
hk_status hk_inner_product(const hk_series* f, const hk_series* g,
                           const hk_weight* w, double* re, double* im);
/* Bloch norm sup (1-|z|^2)|f'| + |f(0)|; also reports the maximizing point. */
hk_status hk_bloch_norm(const hk_series* f, double* value, double* at_re,
                        double* at_im);
hk_status hk_garsia_bmo(const hk_series* f, double* out);
hk_status hk_bmoa_infty_norm(const hk_series* f, const hk_weight* w,
                             double* out);
hk_status hk_d_omega_bmoa_norm(const hk_series* g, const hk_weight* w,
                               double* out);
/* Dilated coefficient pairing at rho: the coefficient sum form and its
 * quadrature companion (they agree for polynomials). */
hk_status hk_pairing(const hk_series* f, const hk_series* g,
                     const hk_weight* w, double rho, double* sum_re,
                     double* sum_im, double* quad_re, double* quad_im);
/* sup of (nu-tail/omega-tail)|R^{omega,nu} f| over the grid. */
hk_status hk_frac_bloch_sup(const hk_series* f, const hk_weight* omega,
                            const hk_weight* nu, double* out);
/* Integral comparison condition between omega and nu tails. */
hk_status hk_bfrac_condition(const hk_weight* omega, const hk_weight* nu,
                             int* holds, double* sup_ratio,
                             double* last_decade_ratio);
/* Kernel-norm comparison along a |z| ladder. Writes 7 doubles per ladder
 * point into rows (row-major): z, truncation, lhs^p, rhs, ratio, rhs2,
 * ratio2. rows must hold 7*ladder_len doubles. */
hk_status hk_kernel_norm_comparison(const hk_weight* omega,
                                    const hk_weight* nu, double p,
                                    const double* ladder, size_t ladder_len,
                                    double* rows);

/* ------------------------------------------------------------------------- */
/* Hankel form/operator norm estimates, detectors, factorization             */
/* ------------------------------------------------------------------------- */

/* Exact (spectral) form norm over degree-<n polynomial pairs at p = q = 2. */
hk_status hk_form_norm_22(const hk_measure* mu, const hk_weight* w, size_t n,
                          double* value);
/* Multi-restart ascent lower bound of the A^p x A^q form norm. */
hk_status hk_form_norm_pq(const hk_measure* mu, const hk_weight* w, double p,
                          double q, size_t n, unsigned long long seed,
                          double* value);
/* Dual-space norm of the symbol per the case split of r = pq/(p+q). */
hk_status hk_dual_norm(const hk_measure* mu, const hk_weight* w, double p,
                       double q, size_t n, double* value);
/* Ascent lower bound of the operator norm A^p -> conj(A^q); needs q > 1. */
hk_status hk_operator_norm_pq(const hk_measure* mu, const hk_weight* w,
                              double p, double q, size_t n,
                              unsigned long long seed, double* value);
/* Boundary-growth detector for the Hankel-measure criterion (p <= 2).
 * at_re/at_im/divergent may be NULL when not wanted. */
hk_status hk_hankel_measure_detector(const hk_measure* mu, const hk_weight* w,
                                     double p, double beta, double* value,
                                     double* at_re, double* at_im,
                                     int* divergent);
/* Standard-weight criterion sup (t > 0, alpha > -1). */
hk_status hk_standard_criterion(const hk_measure* mu, double alpha, double t,
                                double* value, double* at_re, double* at_im,
                                int* divergent);
/* Factorization F = f g with f = F^{r/p}, g = F^{r/q} for zero-free F. */
hk_status hk_factor_zero_free(const hk_series* big_f, double r, double p,
                              double q, size_t n, hk_series** f,
                              hk_series** g);

/* ------------------------------------------------------------------------- */
/* Verification suites                                                       */
/* ------------------------------------------------------------------------- */

typedef struct hk_suite_options {
  const char* config_path;  /* NULL: built-in defaults */
  const char* out_dir;      /* NULL: no artifacts written */
  const char* trunc;        /* "16,32,64"; NULL: config or suite default */
  double p, q;              /* values <= 0 mean "unset" */
  unsigned long long seed;  /* consulted only when has_seed != 0 */
  int has_seed;
} hk_suite_options;

/* Runs one of: identities, duality, kernel-norms, theorem1, theorem2,
 * hankel-measure, standard-criterion. Writes <suite>.csv and
 * <suite>_verdict.json under out_dir when given. *pass is 1 when every check
 * in the suite passed. *verdict_json (optional) receives the JSON verdict
 * document. Reruns with identical inputs produce byte-identical artifacts. */
hk_status hk_run_suite(const char* suite, const hk_suite_options* options,
                       int* pass, char** verdict_json);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* HANKEL_HANKEL_C_H_ */
