#include "verify.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ulog {

namespace {

constexpr int kPhasePoints = 12;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct ParamBox {
    double mlo = 0.0, mhi = 1.0;      // modulus interval within [0,1]
    double pcenter = 0.0;             // phase center
    double pwidth = kTwoPi;           // phase width; 0 pins the phase
    bool full_circle = true;
};

std::vector<cplx> box_points(const ParamBox &b, int density) {
    std::vector<cplx> pts;
    std::vector<double> phases;
    if (b.pwidth == 0.0) {
        phases.push_back(b.pcenter);
    } else if (b.full_circle) {
        for (int j = 0; j < kPhasePoints; ++j)
            phases.push_back(kTwoPi * j / kPhasePoints);
    } else {
        for (int j = 0; j < kPhasePoints; ++j)
            phases.push_back(b.pcenter - 0.5 * b.pwidth +
                             b.pwidth * j / (kPhasePoints - 1));
    }
    for (int i = 0; i < density; ++i) {
        double r = b.mlo + (b.mhi - b.mlo) * i / (density - 1);
        if (r == 0.0) {
            pts.emplace_back(0.0, 0.0);
            continue;
        }
        for (double ph : phases)
            pts.push_back(std::polar(r, ph));
    }
    return pts;
}

// c1..c3 from up to three Schur parameters; same map as schur_to_coeffs but
// allocation-free for the inner search loop.
inline void chart(const cplx *t, int m, cplx *c) {
    cplx t1 = m > 0 ? t[0] : cplx{0, 0};
    cplx t2 = m > 1 ? t[1] : cplx{0, 0};
    cplx t3 = m > 2 ? t[2] : cplx{0, 0};
    double s1 = 1.0 - std::norm(t1);
    c[0] = t1;
    c[1] = s1 * t2;
    c[2] = s1 * ((1.0 - std::norm(t2)) * t3 - std::conj(t1) * t2 * t2);
}

struct Objective {
    int k;
    double alpha, lambda, mu, nu;

    double operator()(const cplx *c) const {
        double a = alpha, L = lambda;
        switch (k) {
        case 1:
            return std::abs(c[0]) * L / (2.0 * (1.0 - a));
        case 2:
            return 0.25 * std::abs(2.0 * L / (2.0 - a) * c[1] +
                                   a * L * L / ((1.0 - a) * (1.0 - a)) * c[0] * c[0]);
        default:
            return L / (2.0 * (3.0 - a)) *
                   std::abs(c[2] + mu * c[0] * c[1] + nu * c[0] * c[0] * c[0]);
        }
    }
};

} // namespace

VerifyReport brute_force_gamma_max(const ClassParams &p, int k, const SearchConfig &cfg) {
    if (k < 1 || k > 3)
        throw std::invalid_argument("k must be 1, 2 or 3");
    if (cfg.density < 5 || cfg.refine_rounds < 0 ||
        !(cfg.refine_shrink > 0.0 && cfg.refine_shrink < 1.0))
        throw std::invalid_argument("bad search configuration");

    std::optional<BoundResult> bound;
    switch (k) {
    case 1: bound = bound_gamma1(p); break;
    case 2: bound = bound_gamma2(p); break;
    default: {
        BoundResult b = bound_gamma3(p);
        if (b.covered)
            bound = b;
        break;
    }
    }

    auto [mu, nu] = mu_nu(p);
    Objective f{k, p.alpha, p.lambda, mu, nu};

    const int m = k;
    std::vector<ParamBox> boxes(static_cast<size_t>(m));
    if (!cfg.full_phase)
        boxes[0].pwidth = 0.0;  // t1 real non-negative

    double best_val = -1.0;
    cplx best_t[3] = {};
    for (int round = 0; round <= cfg.refine_rounds; ++round) {
        if (round > 0) {
            for (int i = 0; i < m; ++i) {
                ParamBox &b = boxes[i];
                cplx ti = best_t[i];
                double mwidth = (b.mhi - b.mlo) * cfg.refine_shrink;
                double mc = std::abs(ti);
                b.mlo = std::max(0.0, mc - 0.5 * mwidth);
                b.mhi = std::min(1.0, mc + 0.5 * mwidth);
                if (b.pwidth > 0.0) {
                    if (std::abs(ti) > 0.0)
                        b.pcenter = std::arg(ti);
                    b.pwidth *= cfg.refine_shrink;
                    b.full_circle = false;
                }
            }
        }
        std::vector<cplx> pts[3];
        for (int i = 0; i < m; ++i)
            pts[i] = box_points(boxes[static_cast<size_t>(i)], cfg.density);

        cplx t[3] = {}, c[3] = {};
        for (const cplx &t0 : pts[0]) {
            t[0] = t0;
            if (m == 1) {
                chart(t, m, c);
                double v = f(c);
                if (v > best_val) { best_val = v; best_t[0] = t[0]; }
                continue;
            }
            for (const cplx &t1 : pts[1]) {
                t[1] = t1;
                if (m == 2) {
                    chart(t, m, c);
                    double v = f(c);
                    if (v > best_val) { best_val = v; best_t[0] = t[0]; best_t[1] = t[1]; }
                    continue;
                }
                for (const cplx &t2 : pts[2]) {
                    t[2] = t2;
                    chart(t, m, c);
                    double v = f(c);
                    if (v > best_val) {
                        best_val = v;
                        best_t[0] = t[0]; best_t[1] = t[1]; best_t[2] = t[2];
                    }
                }
            }
        }
    }

    VerifyReport rep;
    rep.k = k;
    rep.empirical_max = best_val;
    rep.bound = bound;
    rep.attained_params.t.assign(best_t, best_t + m);
    rep.attained_at = schur_to_coeffs(rep.attained_params);
    if (bound)
        rep.gap = bound->value - best_val;
    return rep;
}

VerifyReport verify_sharpness(const ClassParams &p, int k) {
    if (k < 1 || k > 3)
        throw std::invalid_argument("k must be 1, 2 or 3");
    BoundResult bound;
    switch (k) {
    case 1: bound = bound_gamma1(p); break;
    case 2: bound = bound_gamma2(p); break;
    default: bound = bound_gamma3(p); break;
    }
    if (!bound.covered)
        throw std::runtime_error("no theorem branch covers this (alpha, lambda) for gamma_3");

    SchwarzCoeffs w;
    int idx = 0;
    switch (bound.regime) {
    case Regime::G2Small: idx = 1; break;
    case Regime::G3Small: idx = 2; break;
    default: idx = 0; break;  // c1 = 1 for G1 and the large regimes
    }
    w.c[static_cast<size_t>(idx)] = 1.0;

    LogCoeffs closed = log_coeffs_closed(p, w);
    cplx gc = k == 1 ? closed.g1 : (k == 2 ? closed.g2 : closed.g3);

    TruncatedSeries s = build_function(p, w, TruncatedSeries::kDefaultOrder);
    TruncatedSeries lg = log1(s);
    cplx gs = 0.5 * lg[k];

    if (std::abs(std::abs(gc) - bound.value) > 1e-10)
        throw std::runtime_error("extremal misses the bound (closed form)");
    if (std::abs(std::abs(gs) - bound.value) > 1e-8)
        throw std::runtime_error("extremal misses the bound (series pipeline)");

    VerifyReport rep;
    rep.k = k;
    rep.empirical_max = std::abs(gc);
    rep.bound = bound;
    rep.gap = bound.value - rep.empirical_max;
    rep.attained_at = w;
    return rep;
}

double cross_check_pipeline(const ClassParams &p, const SchwarzCoeffs &w) {
    TruncatedSeries s = build_function(p, w, TruncatedSeries::kDefaultOrder);
    TruncatedSeries lg = log1(s);
    ACoeffs a = coeffs_a(p, w);
    LogCoeffs g = log_coeffs_closed(p, w);
    double d = 0.0;
    d = std::max(d, std::abs(a.a2 - s[1]));
    d = std::max(d, std::abs(a.a3 - s[2]));
    d = std::max(d, std::abs(a.a4 - s[3]));
    d = std::max(d, std::abs(g.g1 - 0.5 * lg[1]));
    d = std::max(d, std::abs(g.g2 - 0.5 * lg[2]));
    d = std::max(d, std::abs(g.g3 - 0.5 * lg[3]));
    return d;
}

} // namespace ulog
