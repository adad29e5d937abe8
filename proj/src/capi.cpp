#include "ulog/ulog.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <new>
#include <string>

#include "bounds.hpp"
#include "schwarz.hpp"
#include "series.hpp"
#include "uclass.hpp"
#include "verify.hpp"

struct ulog_series {
    ulog::TruncatedSeries s;
};

namespace {

thread_local std::string g_error;

ulog_status fail(ulog_status code, const char *msg) {
    g_error = msg;
    return code;
}

// Maps C++ exceptions from the core onto status codes.
template <typename Fn> ulog_status guarded(Fn &&fn) {
    try {
        return fn();
    } catch (const ulog::NotCoveredError &e) {
        return fail(ULOG_ERR_NOT_COVERED, e.what());
    } catch (const std::domain_error &e) {
        return fail(ULOG_ERR_BRANCH, e.what());
    } catch (const std::invalid_argument &e) {
        return fail(ULOG_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::exception &e) {
        return fail(ULOG_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(ULOG_ERR_INTERNAL, "unknown error");
    }
}

ulog_status wrap_series(ulog::TruncatedSeries s, ulog_series **out) {
    *out = new ulog_series{std::move(s)};
    return ULOG_OK;
}

ulog::SchwarzCoeffs to_coeffs(const double *c_re, const double *c_im) {
    ulog::SchwarzCoeffs w;
    for (int i = 0; i < 3; ++i)
        w.c[static_cast<size_t>(i)] = {c_re ? c_re[i] : 0.0, c_im ? c_im[i] : 0.0};
    return w;
}

ulog_regime to_c_regime(ulog::Regime r) {
    switch (r) {
    case ulog::Regime::G1: return ULOG_REGIME_G1;
    case ulog::Regime::G2Small: return ULOG_REGIME_G2_SMALL;
    case ulog::Regime::G2Large: return ULOG_REGIME_G2_LARGE;
    case ulog::Regime::G3Small: return ULOG_REGIME_G3_SMALL;
    case ulog::Regime::G3Large: return ULOG_REGIME_G3_LARGE;
    }
    return ULOG_REGIME_NONE;
}

void to_c_bound(const ulog::BoundResult &b, ulog_bound *out) {
    out->covered = b.covered ? 1 : 0;
    out->value = b.covered ? b.value : 0.0;
    out->regime = b.covered ? to_c_regime(b.regime) : ULOG_REGIME_NONE;
    std::memset(out->extremal, 0, sizeof(out->extremal));
    if (b.covered)
        std::snprintf(out->extremal, sizeof(out->extremal), "%s", b.extremal.c_str());
}

// Shortest round-trip decimal for CSV cells.
std::string fmt_double(double v) {
    char buf[32];
    auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, p);
}

} // namespace

extern "C" {

const char *ulog_version(void) { return ULOG_VERSION; }

const char *ulog_last_error(void) { return g_error.c_str(); }

const char *ulog_regime_name(ulog_regime regime) {
    switch (regime) {
    case ULOG_REGIME_G1: return "G1";
    case ULOG_REGIME_G2_SMALL: return "G2-small";
    case ULOG_REGIME_G2_LARGE: return "G2-large";
    case ULOG_REGIME_G3_SMALL: return "G3-small";
    case ULOG_REGIME_G3_LARGE: return "G3-large";
    case ULOG_REGIME_NONE: break;
    }
    return "none";
}

ulog_status ulog_series_create(const double *re, const double *im, size_t n,
                               ulog_series **out) {
    if (!re || !out || n == 0)
        return fail(ULOG_ERR_INVALID_ARGUMENT, "need coefficients and an output pointer");
    return guarded([&] {
        std::vector<ulog::cplx> c(n);
        for (size_t i = 0; i < n; ++i)
            c[i] = {re[i], im ? im[i] : 0.0};
        return wrap_series(ulog::TruncatedSeries(std::move(c)), out);
    });
}

void ulog_series_free(ulog_series *s) { delete s; }

int ulog_series_order(const ulog_series *s) { return s ? s->s.order() : -1; }

ulog_status ulog_series_coeff(const ulog_series *s, int k, double *re, double *im) {
    if (!s || k < 0 || k > s->s.order())
        return fail(ULOG_ERR_INVALID_ARGUMENT, "coefficient index out of range");
    ulog::cplx c = s->s[k];
    if (re) *re = c.real();
    if (im) *im = c.imag();
    return ULOG_OK;
}

ulog_status ulog_series_eval(const ulog_series *s, double zre, double zim,
                             double *re, double *im) {
    if (!s)
        return fail(ULOG_ERR_INVALID_ARGUMENT, "null series");
    ulog::cplx v = s->s.evaluate({zre, zim});
    if (re) *re = v.real();
    if (im) *im = v.imag();
    return ULOG_OK;
}

ulog_status ulog_series_mul(const ulog_series *a, const ulog_series *b, ulog_series **out) {
    if (!a || !b || !out)
        return fail(ULOG_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] { return wrap_series(ulog::mul(a->s, b->s), out); });
}

ulog_status ulog_series_log1(const ulog_series *s, ulog_series **out) {
    if (!s || !out)
        return fail(ULOG_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] { return wrap_series(ulog::log1(s->s), out); });
}

ulog_status ulog_series_exp1(const ulog_series *s, ulog_series **out) {
    if (!s || !out)
        return fail(ULOG_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] { return wrap_series(ulog::exp1(s->s), out); });
}

ulog_status ulog_series_pow(const ulog_series *s, double beta, ulog_series **out) {
    if (!s || !out)
        return fail(ULOG_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] { return wrap_series(ulog::pow_frac(s->s, beta), out); });
}

ulog_status ulog_series_diff(const ulog_series *s, ulog_series **out) {
    if (!s || !out)
        return fail(ULOG_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] { return wrap_series(ulog::differentiate(s->s), out); });
}

ulog_status ulog_lambda_star(double alpha, double *out) {
    if (!out) return fail(ULOG_ERR_INVALID_ARGUMENT, "null output");
    return guarded([&] { *out = ulog::lambda_star(alpha); return ULOG_OK; });
}

ulog_status ulog_lambda1(double alpha, double *out) {
    if (!out) return fail(ULOG_ERR_INVALID_ARGUMENT, "null output");
    return guarded([&] { *out = ulog::lambda1(alpha); return ULOG_OK; });
}

ulog_status ulog_lambda_half(double alpha, double *out) {
    if (!out) return fail(ULOG_ERR_INVALID_ARGUMENT, "null output");
    return guarded([&] { *out = ulog::lambda_half(alpha); return ULOG_OK; });
}

ulog_status ulog_lambda_nu(double alpha, double *out) {
    if (!out) return fail(ULOG_ERR_INVALID_ARGUMENT, "null output");
    return guarded([&] { *out = ulog::lambda_nu(alpha); return ULOG_OK; });
}

ulog_status ulog_mu_nu(double alpha, double lambda, double *mu, double *nu) {
    if (!mu || !nu) return fail(ULOG_ERR_INVALID_ARGUMENT, "null output");
    return guarded([&] {
        auto [m, n] = ulog::mu_nu(ulog::ClassParams(alpha, lambda));
        *mu = m;
        *nu = n;
        return ULOG_OK;
    });
}

ulog_status ulog_ps_phi(double mu, double nu, double *out) {
    if (!out) return fail(ULOG_ERR_INVALID_ARGUMENT, "null output");
    return guarded([&] {
        *out = ulog::ps_phi(ulog::classify_ps(mu, nu));
        return ULOG_OK;
    });
}

ulog_status ulog_schur_to_coeffs(const double *t_re, const double *t_im, size_t m,
                                 double *c_re, double *c_im) {
    if (!t_re || !c_re || !c_im || m == 0 || m > 3)
        return fail(ULOG_ERR_INVALID_ARGUMENT, "need 1..3 parameters and outputs");
    return guarded([&] {
        ulog::SchurParams t;
        for (size_t i = 0; i < m; ++i)
            t.t.push_back({t_re[i], t_im ? t_im[i] : 0.0});
        ulog::SchwarzCoeffs c = ulog::schur_to_coeffs(t);
        for (int i = 0; i < 3; ++i) {
            c_re[i] = c.c[static_cast<size_t>(i)].real();
            c_im[i] = c.c[static_cast<size_t>(i)].imag();
        }
        return ULOG_OK;
    });
}

ulog_status ulog_max_modulus(const double *c_re, const double *c_im, double radius,
                             int samples, double *out) {
    if (!c_re || !out)
        return fail(ULOG_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        *out = ulog::max_modulus(to_coeffs(c_re, c_im), radius, samples);
        return ULOG_OK;
    });
}

ulog_status ulog_build_function(double alpha, double lambda, const double *c_re,
                                const double *c_im, int order, ulog_series **out) {
    if (!c_re || !out)
        return fail(ULOG_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        ulog::ClassParams p(alpha, lambda);
        return wrap_series(ulog::build_function(p, to_coeffs(c_re, c_im), order), out);
    });
}

ulog_status ulog_membership_residual(const ulog_series *f_over_z, double alpha,
                                     double lambda, double radius, int samples,
                                     double *out) {
    if (!f_over_z || !out)
        return fail(ULOG_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        ulog::ClassParams p(alpha, lambda);
        *out = ulog::membership_residual(f_over_z->s, p, radius, samples);
        return ULOG_OK;
    });
}

ulog_status ulog_solve_thresholds(ulog_threshold_report *out) {
    if (!out) return fail(ULOG_ERR_INVALID_ARGUMENT, "null output");
    return guarded([&] {
        ulog::ThresholdReport r = ulog::solve_thresholds();
        out->alpha1 = r.alpha1;
        out->alpha_half = r.alpha_half;
        out->alpha_nu = r.alpha_nu;
        out->alpha2 = r.alpha2;
        for (int i = 0; i < 4; ++i)
            out->residuals[i] = r.residuals[i];
        return ULOG_OK;
    });
}

ulog_status ulog_eval_bounds(double alpha, double lambda, ulog_bound *g1,
                             ulog_bound *g2, ulog_bound *g3) {
    if (!g1 || !g2 || !g3)
        return fail(ULOG_ERR_INVALID_ARGUMENT, "null output");
    return guarded([&] {
        ulog::ClassParams p(alpha, lambda);
        to_c_bound(ulog::bound_gamma1(p), g1);
        to_c_bound(ulog::bound_gamma2(p), g2);
        to_c_bound(ulog::bound_gamma3(p), g3);
        return ULOG_OK;
    });
}

ulog_status ulog_verify(double alpha, double lambda, int k, int density,
                        int refine_rounds, int full_phase, ulog_verify_report *out) {
    if (!out) return fail(ULOG_ERR_INVALID_ARGUMENT, "null output");
    return guarded([&] {
        ulog::ClassParams p(alpha, lambda);
        ulog::SearchConfig cfg;
        cfg.density = density;
        cfg.refine_rounds = refine_rounds;
        cfg.full_phase = full_phase != 0;
        ulog::VerifyReport r = ulog::brute_force_gamma_max(p, k, cfg);
        out->k = r.k;
        out->empirical_max = r.empirical_max;
        out->bound_covered = r.bound.has_value() ? 1 : 0;
        if (r.bound)
            to_c_bound(*r.bound, &out->bound);
        else
            std::memset(&out->bound, 0, sizeof(out->bound));
        out->gap = r.bound ? r.gap : 0.0;
        for (int i = 0; i < 3; ++i) {
            out->attained_c_re[i] = r.attained_at.c[static_cast<size_t>(i)].real();
            out->attained_c_im[i] = r.attained_at.c[static_cast<size_t>(i)].imag();
        }
        return r.bound ? ULOG_OK
                       : fail(ULOG_ERR_UNCOVERED_REGIME,
                              "no theorem branch covers this (alpha, lambda) for gamma_3");
    });
}

ulog_status ulog_verify_sharpness(double alpha, double lambda, int k,
                                  ulog_verify_report *out) {
    if (!out) return fail(ULOG_ERR_INVALID_ARGUMENT, "null output");
    return guarded([&] {
        ulog::ClassParams p(alpha, lambda);
        ulog::VerifyReport r = ulog::verify_sharpness(p, k);
        out->k = r.k;
        out->empirical_max = r.empirical_max;
        out->bound_covered = 1;
        to_c_bound(*r.bound, &out->bound);
        out->gap = r.gap;
        for (int i = 0; i < 3; ++i) {
            out->attained_c_re[i] = r.attained_at.c[static_cast<size_t>(i)].real();
            out->attained_c_im[i] = r.attained_at.c[static_cast<size_t>(i)].imag();
        }
        return ULOG_OK;
    });
}

ulog_status ulog_expand(double alpha, double lambda, const double *c_re,
                        const double *c_im, int order, ulog_expand_report *out) {
    if (!c_re || !out)
        return fail(ULOG_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        ulog::ClassParams p(alpha, lambda);
        ulog::SchwarzCoeffs w = to_coeffs(c_re, c_im);
        if (!ulog::passes_screen(w))
            return fail(ULOG_ERR_INVALID_ARGUMENT,
                        "coefficients fail the Schwarz admissibility screen");
        ulog::ACoeffs ac = ulog::coeffs_a(p, w);
        ulog::LogCoeffs gc = ulog::log_coeffs_closed(p, w);
        ulog::TruncatedSeries s = ulog::build_function(p, w, order);
        ulog::TruncatedSeries lg = ulog::log1(s);
        ulog::cplx a_closed[3] = {ac.a2, ac.a3, ac.a4};
        ulog::cplx g_closed[3] = {gc.g1, gc.g2, gc.g3};
        double disc = 0.0;
        for (int i = 0; i < 3; ++i) {
            ulog::cplx as = s[i + 1];
            ulog::cplx gs = 0.5 * lg[i + 1];
            out->a_closed_re[i] = a_closed[i].real();
            out->a_closed_im[i] = a_closed[i].imag();
            out->a_series_re[i] = as.real();
            out->a_series_im[i] = as.imag();
            out->g_closed_re[i] = g_closed[i].real();
            out->g_closed_im[i] = g_closed[i].imag();
            out->g_series_re[i] = gs.real();
            out->g_series_im[i] = gs.imag();
            disc = std::max(disc, std::abs(a_closed[i] - as));
            disc = std::max(disc, std::abs(g_closed[i] - gs));
        }
        out->max_discrepancy = disc;
        return ULOG_OK;
    });
}

ulog_status ulog_regimes_csv(int alpha_steps, int lambda_steps, int linear, char **out) {
    if (!out) return fail(ULOG_ERR_INVALID_ARGUMENT, "null output");
    return guarded([&] {
        auto rows = ulog::regime_map(alpha_steps, lambda_steps, linear != 0);
        std::string csv =
            "alpha,lambda,lambda_star,g1_bound,g2_bound,g2_regime,g3_bound,g3_regime,g3_covered\n";
        for (const auto &row : rows) {
            csv += fmt_double(row.alpha);
            csv += ',';
            csv += fmt_double(row.lambda);
            csv += ',';
            csv += fmt_double(row.lstar);
            csv += ',';
            csv += fmt_double(row.g1.value);
            csv += ',';
            csv += fmt_double(row.g2.value);
            csv += ',';
            csv += ulog::regime_name(row.g2.regime);
            csv += ',';
            if (row.g3.covered) {
                csv += fmt_double(row.g3.value);
                csv += ',';
                csv += ulog::regime_name(row.g3.regime);
                csv += ",1\n";
            } else {
                csv += ",,0\n";
            }
        }
        char *buf = new (std::nothrow) char[csv.size() + 1];
        if (!buf)
            return fail(ULOG_ERR_INTERNAL, "allocation failed");
        std::memcpy(buf, csv.c_str(), csv.size() + 1);
        *out = buf;
        return ULOG_OK;
    });
}

void ulog_string_free(char *s) { delete[] s; }

} /* extern "C" */
