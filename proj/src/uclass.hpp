#ifndef ULOG_UCLASS_HPP
#define ULOG_UCLASS_HPP

#include <utility>

#include "schwarz.hpp"
#include "series.hpp"

namespace ulog {

// Largest lambda for which membership in U(alpha, lambda) guarantees
// starlikeness: (1-a)/sqrt((1-a)^2 + a^2).
double lambda_star(double alpha);

// Parameters (alpha, lambda) of the class U(alpha, lambda), both in (0,1).
struct ClassParams {
    double alpha;
    double lambda;

    ClassParams(double alpha_, double lambda_);

    // True iff lambda <= lambda_star(alpha); bound evaluation requires it.
    bool within_star() const { return lambda <= lambda_star(alpha); }
};

struct ACoeffs {
    cplx a2, a3, a4;
};

// Logarithmic coefficients gamma_1..gamma_3 of log(f(z)/z) = 2 sum gamma_n z^n.
struct LogCoeffs {
    cplx g1, g2, g3;
};

// Truncated series of f(z)/z for the class member generated by the Schwarz
// coefficients w:  f(z)/z = (1 - alpha*lambda * sum c_n/(n-alpha) z^n)^(-1/alpha).
TruncatedSeries build_function(const ClassParams &p, const SchwarzCoeffs &w, int order);

// Closed forms for a2..a4 in terms of (alpha, lambda, c1..c3).
ACoeffs coeffs_a(const ClassParams &p, const SchwarzCoeffs &w);

// Closed forms for gamma_1..gamma_3; gamma_3 uses the (mu, nu) combination.
LogCoeffs log_coeffs_closed(const ClassParams &p, const SchwarzCoeffs &w);

// gamma_1..gamma_3 from a2..a4 alone:
//   g1 = a2/2, g2 = (2 a3 - a2^2)/4, g3 = (a4 - a2 a3 + a2^3/3)/2.
LogCoeffs log_coeffs_from_a(const ACoeffs &a);

// The pair (mu, nu) entering the gamma_3 functional:
//   mu = a(3-a)L / ((1-a)(2-a)),  nu = a^2(3-a)L^2 / (3(1-a)^3).
std::pair<double, double> mu_nu(const ClassParams &p);

// max over sample points on |z| = radius of |(z/f)^{1+alpha} f'(z) - 1|,
// computed from the truncated series of f/z. For members built from a Schwarz
// function w this equals lambda * max|w| on the circle up to truncation error.
double membership_residual(const TruncatedSeries &f_over_z, const ClassParams &p, double radius,
                           int samples);

} // namespace ulog

#endif
