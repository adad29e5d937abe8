#include "uclass.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ulog {

double lambda_star(double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::invalid_argument("alpha must lie in (0,1)");
    double u = 1.0 - alpha;
    return u / std::sqrt(u * u + alpha * alpha);
}

ClassParams::ClassParams(double alpha_, double lambda_) : alpha(alpha_), lambda(lambda_) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::invalid_argument("alpha must lie in (0,1)");
    if (!(lambda > 0.0 && lambda < 1.0))
        throw std::invalid_argument("lambda must lie in (0,1)");
}

TruncatedSeries build_function(const ClassParams &p, const SchwarzCoeffs &w, int order) {
    if (order < 4)
        throw std::invalid_argument("order must be at least 4");
    TruncatedSeries inner = TruncatedSeries::one(order);
    for (int n = 1; n <= 3 && n <= order; ++n)
        inner.at(n) = -p.alpha * p.lambda * w.c[static_cast<size_t>(n - 1)] / (n - p.alpha);
    return pow_frac(inner, -1.0 / p.alpha);
}

ACoeffs coeffs_a(const ClassParams &p, const SchwarzCoeffs &w) {
    double a = p.alpha, L = p.lambda;
    cplx c1 = w.c[0], c2 = w.c[1], c3 = w.c[2];
    ACoeffs r;
    r.a2 = L / (1.0 - a) * c1;
    r.a3 = L / (2.0 - a) * c2 + (1.0 + a) * L * L / (2.0 * (1.0 - a) * (1.0 - a)) * c1 * c1;
    r.a4 = L / (3.0 - a) * c3 + (1.0 + a) * L * L / ((1.0 - a) * (2.0 - a)) * c1 * c2 +
           (1.0 + a) * (1.0 + 2.0 * a) * L * L * L / (6.0 * std::pow(1.0 - a, 3)) * c1 * c1 * c1;
    return r;
}

std::pair<double, double> mu_nu(const ClassParams &p) {
    double a = p.alpha, L = p.lambda;
    double mu = a * (3.0 - a) * L / ((1.0 - a) * (2.0 - a));
    double nu = a * a * (3.0 - a) * L * L / (3.0 * std::pow(1.0 - a, 3));
    return {mu, nu};
}

LogCoeffs log_coeffs_closed(const ClassParams &p, const SchwarzCoeffs &w) {
    double a = p.alpha, L = p.lambda;
    cplx c1 = w.c[0], c2 = w.c[1], c3 = w.c[2];
    auto [mu, nu] = mu_nu(p);
    LogCoeffs g;
    g.g1 = L / (2.0 * (1.0 - a)) * c1;
    g.g2 = 0.25 * (2.0 * L / (2.0 - a) * c2 + a * L * L / ((1.0 - a) * (1.0 - a)) * c1 * c1);
    g.g3 = L / (2.0 * (3.0 - a)) * (c3 + mu * c1 * c2 + nu * c1 * c1 * c1);
    return g;
}

LogCoeffs log_coeffs_from_a(const ACoeffs &a) {
    LogCoeffs g;
    g.g1 = 0.5 * a.a2;
    g.g2 = 0.25 * (2.0 * a.a3 - a.a2 * a.a2);
    g.g3 = 0.5 * (a.a4 - a.a2 * a.a3 + a.a2 * a.a2 * a.a2 / 3.0);
    return g;
}

double membership_residual(const TruncatedSeries &f_over_z, const ClassParams &p, double radius,
                           int samples) {
    if (!(radius > 0.0 && radius < 1.0))
        throw std::invalid_argument("radius must lie in (0,1)");
    if (samples < 1)
        throw std::invalid_argument("samples must be positive");
    const TruncatedSeries &s = f_over_z;
    // f = z s, so f' has coefficient (k+1) s_k at z^k.
    TruncatedSeries fprime(s.order());
    for (int k = 0; k <= s.order(); ++k)
        fprime.at(k) = static_cast<double>(k + 1) * s[k];
    TruncatedSeries residual = mul(pow_frac(s, -(1.0 + p.alpha)), fprime);
    residual.at(0) -= 1.0;
    double best = 0.0;
    for (int j = 0; j < samples; ++j) {
        cplx z = std::polar(radius, 2.0 * std::numbers::pi * j / samples);
        best = std::max(best, std::abs(residual.evaluate(z)));
    }
    return best;
}

} // namespace ulog
