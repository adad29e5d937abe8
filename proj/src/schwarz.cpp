#include "schwarz.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ulog {

namespace {

constexpr int kPhases = 12;
constexpr double kBodyTol = 1e-12;

// z * s, truncated to the same order.
TruncatedSeries shift_up(const TruncatedSeries &s) {
    TruncatedSeries r(s.order());
    for (int k = 1; k <= s.order(); ++k)
        r.at(k) = s[k - 1];
    return r;
}

TruncatedSeries reciprocal(const TruncatedSeries &s) { return pow_frac(s, -1.0); }

void check_params(const SchurParams &t) {
    if (t.t.empty() || t.t.size() > 3)
        throw std::invalid_argument("expected 1..3 Schur parameters");
    for (const cplx &tk : t.t)
        if (std::abs(tk) > 1.0 + kBodyTol)
            throw std::invalid_argument("Schur parameter outside the closed unit disk");
}

} // namespace

SchwarzCoeffs schur_to_coeffs(const SchurParams &t) {
    check_params(t);
    cplx t1 = t.t.size() > 0 ? t.t[0] : cplx{0, 0};
    cplx t2 = t.t.size() > 1 ? t.t[1] : cplx{0, 0};
    cplx t3 = t.t.size() > 2 ? t.t[2] : cplx{0, 0};
    double s1 = 1.0 - std::norm(t1);
    double s2 = 1.0 - std::norm(t2);
    SchwarzCoeffs c;
    c.c[0] = t1;
    c.c[1] = s1 * t2;
    c.c[2] = s1 * (s2 * t3 - std::conj(t1) * t2 * t2);
    return c;
}

SchwarzCoeffs schur_transfer_coeffs(const SchurParams &t) {
    check_params(t);
    const int order = 8;
    cplx params[3] = {cplx{0, 0}, cplx{0, 0}, cplx{0, 0}};
    for (size_t i = 0; i < t.t.size(); ++i)
        params[i] = t.t[i];
    // Downward Schur recursion with zero tail:
    //   g_k = (t_{k+1} + z g_{k+1}) / (1 + conj(t_{k+1}) z g_{k+1}),  g_3 = 0.
    TruncatedSeries g(order);
    for (int k = 2; k >= 0; --k) {
        TruncatedSeries zg = shift_up(g);
        TruncatedSeries num = TruncatedSeries(order);
        num.at(0) = params[k];
        num += zg;
        TruncatedSeries den = TruncatedSeries::one(order);
        den += std::conj(params[k]) * zg;
        g = mul(num, reciprocal(den));
    }
    // w(z) = z g_0(z), so c_n = g_0 coefficient n-1.
    SchwarzCoeffs c;
    c.c[0] = g[0];
    c.c[1] = g[1];
    c.c[2] = g[2];
    return c;
}

double max_modulus(const SchwarzCoeffs &c, double radius, int samples) {
    if (!(radius > 0.0 && radius < 1.0))
        throw std::invalid_argument("radius must lie in (0,1)");
    if (samples < 64)
        throw std::invalid_argument("need at least 64 boundary samples");
    double best = 0.0;
    for (int j = 0; j < samples; ++j) {
        double th = 2.0 * std::numbers::pi * j / samples;
        cplx z = std::polar(radius, th);
        cplx w = ((c.c[2] * z + c.c[1]) * z + c.c[0]) * z;
        best = std::max(best, std::abs(w));
    }
    return best;
}

bool passes_screen(const SchwarzCoeffs &c) {
    double m1 = std::abs(c.c[0]);
    if (m1 > 1.0 + kBodyTol)
        return false;
    if (std::abs(c.c[1]) > 1.0 - m1 * m1 + kBodyTol)
        return false;
    // Parseval: sum |c_k|^2 <= 1 for coefficients of a function bounded by 1.
    // The truncated polynomial itself may exceed 1 on a circle even for
    // admissible tuples (the tail is missing), so a direct modulus check on
    // the polynomial is not a valid screen.
    double energy = std::norm(c.c[0]) + std::norm(c.c[1]) + std::norm(c.c[2]);
    return energy <= 1.0 + kBodyTol;
}

void enumerate_body(int m, int density, int phases,
                    const std::function<void(const SchurParams &, const SchwarzCoeffs &)> &fn) {
    if (m < 1 || m > 3)
        throw std::invalid_argument("m must be 1, 2 or 3");
    if (density < 2)
        throw std::invalid_argument("density must be at least 2");
    std::vector<cplx> points;
    points.reserve(static_cast<size_t>(density) * phases);
    for (int i = 0; i < density; ++i) {
        double r = static_cast<double>(i) / (density - 1);
        if (r == 0.0) {
            points.emplace_back(0.0, 0.0);
            continue;
        }
        for (int j = 0; j < phases; ++j)
            points.push_back(std::polar(r, 2.0 * std::numbers::pi * j / phases));
    }
    SchurParams t;
    t.t.assign(static_cast<size_t>(m), cplx{0, 0});
    std::function<void(int)> rec = [&](int depth) {
        if (depth == m) {
            fn(t, schur_to_coeffs(t));
            return;
        }
        for (const cplx &p : points) {
            t.t[static_cast<size_t>(depth)] = p;
            rec(depth + 1);
        }
    };
    rec(0);
}

std::vector<SchwarzCoeffs> sample_body(int m, int density, bool include_extremals) {
    std::vector<SchwarzCoeffs> out;
    if (include_extremals) {
        for (int k = 0; k < 3; ++k) {
            SchwarzCoeffs e;
            e.c[static_cast<size_t>(k)] = 1.0;
            out.push_back(e);
        }
    }
    enumerate_body(m, density, kPhases,
                   [&](const SchurParams &, const SchwarzCoeffs &c) { out.push_back(c); });
    return out;
}

} // namespace ulog
