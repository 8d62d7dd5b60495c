/* SPDX-FileCopyrightText: 2026 svgstein developers
 *
 * SPDX-License-Identifier: Apache-2.0
 *
 * C interface to the svgstein library: symmetric variance-gamma distribution
 * machinery, the SVG Stein-equation solver and its bound catalogue,
 * zero-bias / centered-equilibrium distributional transformations,
 * probability-metric estimators, closed-form error-bound calculators, and
 * seeded Monte Carlo experiments.
 *
 * Every function returns a status code (SVGSTEIN_OK on success) and writes
 * results through out-parameters.  A thread-local message for the last error
 * is available via svgstein_last_error().  Handles are opaque; destroy them
 * with the matching _free function.
 */

#ifndef SVGSTEIN_H
#define SVGSTEIN_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

enum {
    SVGSTEIN_OK = 0,
    SVGSTEIN_ERR_DOMAIN = 1,     /* argument outside mathematical domain */
    SVGSTEIN_ERR_SINGULAR = 2,   /* evaluation at a genuine singularity */
    SVGSTEIN_ERR_OVERFLOW = 3,   /* unscaled result not representable */
    SVGSTEIN_ERR_QUADRATURE = 4, /* quadrature failed to meet tolerance */
    SVGSTEIN_ERR_INVALID = 5,    /* bad handle / argument combination */
    SVGSTEIN_ERR_INTERNAL = 6
};

const char* svgstein_last_error(void);
void svgstein_string_free(char* s);

/* ------------------------------------------------------------------ *
 * special functions (scaled values: value = mantissa * exp(log_scale);
 * scaled != 0 requests e^{-x} I_nu resp. e^{+x} K_nu and the damped /
 * amplified integrals)
 * ------------------------------------------------------------------ */
int svgstein_log_gamma(double x, double* out);
int svgstein_bessel_i(double nu, double x, int scaled, double* mantissa, double* log_scale);
int svgstein_bessel_k(double nu, double x, int scaled, double* mantissa, double* log_scale);
int svgstein_int_i_lower(double nu, double x, int weight_power, int scaled, double* mantissa,
                         double* log_scale);
int svgstein_int_k_tail(double nu, double x, int weight_power, int scaled, double* mantissa,
                        double* log_scale);
/* JSON report of the modified-Bessel inequality catalogue on a (nu, x) grid */
int svgstein_inequality_suite_json(const double* nu_grid, size_t n_nu, const double* x_grid,
                                   size_t n_x, char** json_out);

/* ------------------------------------------------------------------ *
 * SVG / VG distributions
 * ------------------------------------------------------------------ */
int svgstein_svg_pdf(double r, double sigma, double mu, double x, double* out);
int svgstein_svg_cdf(double r, double sigma, double mu, double x, double* out);
int svgstein_svg_quantile(double r, double sigma, double mu, double q, double* out);
int svgstein_svg_sample(double r, double sigma, double mu, size_t n, uint64_t seed, double* out);
int svgstein_svg_absolute_moment(double r, double sigma, double k, double* out);
int svgstein_svg_cumulants(double r, double sigma, double* k2, double* k4, double* k6);
int svgstein_vg_pdf(double r, double theta, double sigma, double mu, double x, double* out);
int svgstein_vg_sample(double r, double theta, double sigma, double mu, size_t n, uint64_t seed,
                       double* out);

/* ------------------------------------------------------------------ *
 * Stein-equation solver.  Test function kinds:
 *   0 indicator(z)            a = z
 *   1 smoothed indicator      a = corner, b = width eps
 *   2 sign
 *   3 sine                    a = frequency
 *   4 constant                a = value
 * ------------------------------------------------------------------ */
typedef struct svgstein_stein svgstein_stein;
svgstein_stein* svgstein_stein_create(double r, double sigma, double mu, int h_kind, double a,
                                      double b);
/* Lipschitz callable variant: h(x) = fn(x, ctx), with Lipschitz constant lip
 * and (optionally, may be NaN) a known sup norm of h - Eh(Z). */
svgstein_stein* svgstein_stein_create_callable(double r, double sigma, double mu,
                                               double (*fn)(double, void*), void* ctx, double lip,
                                               double htilde_sup);
void svgstein_stein_free(svgstein_stein* s);
int svgstein_stein_h_mean(const svgstein_stein* s, double* out);
int svgstein_stein_solve(const svgstein_stein* s, double x, double* out);
int svgstein_stein_d1(const svgstein_stein* s, double x, double* out);
/* one-sided limit of f' at x = mu; side > 0 from above */
int svgstein_stein_d1_limit(const svgstein_stein* s, int side, double* out);
int svgstein_stein_d2(const svgstein_stein* s, double x, double* out);
int svgstein_stein_t_r(const svgstein_stein* s, double x, double* out);
int svgstein_stein_residual(const svgstein_stein* s, double x, double* out);
/* JSON report of the Theorem/Corollary bound catalogue over the default test
 * family and grid at parameters (r, sigma, mu) */
int svgstein_stein_verify_json(double r, double sigma, double mu, double tol, char** json_out);

/* ------------------------------------------------------------------ *
 * distributional transformations
 * ------------------------------------------------------------------ */
typedef struct svgstein_spec svgstein_spec;
svgstein_spec* svgstein_spec_discrete(const double* values, const double* probs, size_t n);
svgstein_spec* svgstein_spec_svg(double r, double sigma);
void svgstein_spec_free(svgstein_spec* s);
int svgstein_zero_bias_pdf(const svgstein_spec* w, double x, double* out);
int svgstein_zero_bias_sample(const svgstein_spec* w, size_t n, uint64_t seed, double* out);
int svgstein_equilibrium_pdf(const svgstein_spec* w, double r, double x, double* out);
int svgstein_equilibrium_sample(const svgstein_spec* w, double r, size_t n, uint64_t seed,
                                double* out);
/* E[(W^{V_r})^p] from E[W^{p+2}] and Var(W) */
int svgstein_transform_moment(double e_w_p_plus_2, double variance, double r, double p,
                              double* out);
int svgstein_g_r_apply(double (*fn)(double, void*), void* ctx, double r, double x, double* out);

/* ------------------------------------------------------------------ *
 * probability metrics (targets are SVG laws)
 * ------------------------------------------------------------------ */
int svgstein_kolmogorov_svg(const double* sample, size_t n, double r, double sigma, double mu,
                            double* out);
int svgstein_wasserstein_svg(const double* sample, size_t n, double r, double sigma, double mu,
                             double* out);
int svgstein_bounded_wasserstein_svg(const double* sample, size_t n, double r, double sigma,
                                     double mu, double* out);
int svgstein_kolmogorov_from_wasserstein(double r, double sigma, double d_w, double* out);
int svgstein_concentration_bound(double r, double sigma, double alpha, double* out);

/* ------------------------------------------------------------------ *
 * error-bound calculators.  `id` selects the formula; `inputs` is a flat
 * "key=value" list (whitespace or newline separated).  Returns a JSON
 * BoundReport {bound_id, value, valid, notes, inputs, value_exact_constants?}.
 * Known ids: k_w k_v w_w w_v k_v_e vg_svg_w vg_svg_k six_moment product_w
 * product_k randsum_k randsum_w randsum_k_gen randsum_w_gen prop41 lemma47
 * ------------------------------------------------------------------ */
int svgstein_bound_json(const char* id, const char* inputs, char** json_out);

/* ------------------------------------------------------------------ *
 * experiments: flat key=value config (same grammar as --config files);
 * renders CSV or JSON.  bound_violation reports an empirical distance
 * exceeding an informative bound beyond 3 bootstrap standard errors.
 * ------------------------------------------------------------------ */
int svgstein_experiment_run(const char* key_value_config, char** output, int* bound_violation);

#ifdef __cplusplus
}
#endif

#endif /* SVGSTEIN_H */
