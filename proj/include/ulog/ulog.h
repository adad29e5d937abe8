/* C interface to the U(alpha,lambda) logarithmic-coefficient toolkit.
 *
 * All functions return a ulog_status; outputs go through pointers. On any
 * failure ulog_last_error() holds a message for the calling thread. Series
 * objects are opaque handles owned by the caller (free with ulog_series_free).
 */
#ifndef ULOG_H
#define ULOG_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#define ULOG_VERSION "0.1.0"

typedef enum ulog_status {
    ULOG_OK = 0,
    ULOG_ERR_INVALID_ARGUMENT = 1,
    ULOG_ERR_BRANCH = 2,           /* series branch precondition violated */
    ULOG_ERR_NOT_COVERED = 3,      /* lambda > lambda_star(alpha) */
    ULOG_ERR_UNCOVERED_REGIME = 4, /* no theorem branch for this (alpha,lambda) */
    ULOG_ERR_INTERNAL = 5
} ulog_status;

typedef enum ulog_regime {
    ULOG_REGIME_NONE = 0,
    ULOG_REGIME_G1 = 1,
    ULOG_REGIME_G2_SMALL = 2,
    ULOG_REGIME_G2_LARGE = 3,
    ULOG_REGIME_G3_SMALL = 4,
    ULOG_REGIME_G3_LARGE = 5
} ulog_regime;

const char *ulog_version(void);
const char *ulog_last_error(void);
const char *ulog_regime_name(ulog_regime regime);

/* ---- truncated power series -------------------------------------------- */

typedef struct ulog_series ulog_series;

/* Creates a series of order n-1 from n complex coefficients (im may be NULL). */
ulog_status ulog_series_create(const double *re, const double *im, size_t n,
                               ulog_series **out);
void ulog_series_free(ulog_series *s);

int ulog_series_order(const ulog_series *s);
ulog_status ulog_series_coeff(const ulog_series *s, int k, double *re, double *im);
ulog_status ulog_series_eval(const ulog_series *s, double zre, double zim,
                             double *re, double *im);

ulog_status ulog_series_mul(const ulog_series *a, const ulog_series *b, ulog_series **out);
ulog_status ulog_series_log1(const ulog_series *s, ulog_series **out);
ulog_status ulog_series_exp1(const ulog_series *s, ulog_series **out);
ulog_status ulog_series_pow(const ulog_series *s, double beta, ulog_series **out);
ulog_status ulog_series_diff(const ulog_series *s, ulog_series **out);

/* ---- class machinery --------------------------------------------------- */

ulog_status ulog_lambda_star(double alpha, double *out);
ulog_status ulog_lambda1(double alpha, double *out);
ulog_status ulog_lambda_half(double alpha, double *out);
ulog_status ulog_lambda_nu(double alpha, double *out);
ulog_status ulog_mu_nu(double alpha, double lambda, double *mu, double *nu);

/* Phi(mu,nu): 1 on D1, D2 and at (2,1); nu on D3. Errors outside. */
ulog_status ulog_ps_phi(double mu, double nu, double *out);

/* Schur chart: up to 3 parameters -> Schwarz coefficients c1..c3. */
ulog_status ulog_schur_to_coeffs(const double *t_re, const double *t_im, size_t m,
                                 double *c_re, double *c_im);
ulog_status ulog_max_modulus(const double *c_re, const double *c_im, double radius,
                             int samples, double *out);

/* Series of f(z)/z for the member generated by Schwarz coefficients c1..c3. */
ulog_status ulog_build_function(double alpha, double lambda, const double *c_re,
                                const double *c_im, int order, ulog_series **out);
ulog_status ulog_membership_residual(const ulog_series *f_over_z, double alpha,
                                     double lambda, double radius, int samples,
                                     double *out);

/* ---- thresholds and bounds --------------------------------------------- */

typedef struct ulog_threshold_report {
    double alpha1, alpha_half, alpha_nu, alpha2;
    double residuals[4];
} ulog_threshold_report;

ulog_status ulog_solve_thresholds(ulog_threshold_report *out);

typedef struct ulog_bound {
    int covered;
    double value;
    ulog_regime regime;
    char extremal[8]; /* "c1=1", "c2=1", "c3=1", or "" when uncovered */
} ulog_bound;

/* Evaluates the three gamma bounds at (alpha, lambda). Returns
 * ULOG_ERR_NOT_COVERED when lambda > lambda_star(alpha); the gamma_3 entry may
 * come back with covered == 0 inside the theorem's gap. */
ulog_status ulog_eval_bounds(double alpha, double lambda, ulog_bound *g1,
                             ulog_bound *g2, ulog_bound *g3);

/* ---- verification ------------------------------------------------------ */

typedef struct ulog_verify_report {
    int k;
    double empirical_max;
    int bound_covered;
    ulog_bound bound;
    double gap;
    double attained_c_re[3];
    double attained_c_im[3];
} ulog_verify_report;

ulog_status ulog_verify(double alpha, double lambda, int k, int density,
                        int refine_rounds, int full_phase, ulog_verify_report *out);
ulog_status ulog_verify_sharpness(double alpha, double lambda, int k,
                                  ulog_verify_report *out);

typedef struct ulog_expand_report {
    double a_closed_re[3], a_closed_im[3];   /* a2, a3, a4 */
    double a_series_re[3], a_series_im[3];
    double g_closed_re[3], g_closed_im[3];   /* gamma_1..gamma_3 */
    double g_series_re[3], g_series_im[3];
    double max_discrepancy;
} ulog_expand_report;

/* Both computation paths for a2..a4 and gamma_1..gamma_3; rejects coefficient
 * tuples that fail the admissibility screen. */
ulog_status ulog_expand(double alpha, double lambda, const double *c_re,
                        const double *c_im, int order, ulog_expand_report *out);

/* ---- regime map -------------------------------------------------------- */

/* Renders the regime-map CSV (header `alpha,lambda,lambda_star,g1_bound,
 * g2_bound,g2_regime,g3_bound,g3_regime,g3_covered`) into a heap string.
 * Free with ulog_string_free. */
ulog_status ulog_regimes_csv(int alpha_steps, int lambda_steps, int linear,
                             char **out);
void ulog_string_free(char *s);

#ifdef __cplusplus
}
#endif

#endif /* ULOG_H */
