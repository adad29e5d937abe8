#include "bounds.hpp"

#include <cmath>

namespace ulog {

namespace {

void check_alpha(double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::invalid_argument("alpha must lie in (0,1)");
}

double poly_alpha1(double a) { return ((7.0 * a - 20.0) * a + 24.0) * a * a - 16.0 * a + 4.0; }
double poly_alpha_half(double a) { return 4.0 - 12.0 * a - 19.0 * a * a + 14.0 * a * a * a - 2.0 * a * a * a * a; }
double poly_alpha_nu(double a) { return 3.0 - 9.0 * a + 9.0 * a * a - 5.0 * a * a * a; }
double poly_alpha2(double a) { return 11.0 * a * a - 44.0 * a + 32.0; }

// Bisection on (0,1) after a 100-cell sign scan. Exactly one bracketing cell
// is required; anything else signals a transcribed-polynomial bug.
double certified_root(double (*poly)(double), double *residual) {
    const int cells = 100;
    int bracket = -1;
    for (int i = 0; i < cells; ++i) {
        double a = static_cast<double>(i) / cells;
        double b = static_cast<double>(i + 1) / cells;
        double fa = poly(a), fb = poly(b);
        if (fa == 0.0 || fb == 0.0 || fa * fb < 0.0) {
            if (bracket >= 0)
                throw std::runtime_error("threshold polynomial: multiple sign changes in (0,1)");
            bracket = i;
        }
    }
    if (bracket < 0)
        throw std::runtime_error("threshold polynomial: no sign change in (0,1)");
    double lo = static_cast<double>(bracket) / cells;
    double hi = static_cast<double>(bracket + 1) / cells;
    double flo = poly(lo);
    while (hi - lo > 1e-14) {
        double mid = 0.5 * (lo + hi);
        double fm = poly(mid);
        if (fm == 0.0) {
            lo = hi = mid;
            break;
        }
        if (flo * fm < 0.0) {
            hi = mid;
        } else {
            lo = mid;
            flo = fm;
        }
    }
    double root = 0.5 * (lo + hi);
    if (residual)
        *residual = poly(root);
    return root;
}

// Roots are cheap to compute and the bound evaluators need them on every call.
const ThresholdReport &thresholds() {
    static const ThresholdReport r = solve_thresholds();
    return r;
}

} // namespace

double lambda1(double alpha) {
    check_alpha(alpha);
    double u = 1.0 - alpha;
    return 2.0 * u * u / (alpha * (2.0 - alpha));
}

double lambda_half(double alpha) {
    check_alpha(alpha);
    return (1.0 - alpha) * (2.0 - alpha) / (2.0 * alpha * (3.0 - alpha));
}

double lambda_nu(double alpha) {
    check_alpha(alpha);
    double u = 1.0 - alpha;
    return std::sqrt(3.0 * u * u * u / (alpha * alpha * (3.0 - alpha)));
}

PSPoint classify_ps(double mu, double nu) {
    if (mu < 0.0 || nu < 0.0)
        throw std::invalid_argument("mu and nu must be non-negative");
    PSPoint p;
    p.mu = mu;
    p.nu = nu;
    if (mu == 2.0 && nu == 1.0) {
        p.region = Region::Boundary21;
    } else if (mu <= 0.5 && nu <= 1.0) {
        p.region = Region::D1;
    } else if (mu >= 0.5 && mu <= 2.0 && nu <= 1.0 &&
               nu >= 4.0 / 27.0 * std::pow(mu + 1.0, 3) - (mu + 1.0)) {
        p.region = Region::D2;
    } else if (mu <= 2.0 && nu >= 1.0) {
        p.region = Region::D3;
    } else {
        p.region = Region::Uncovered;
    }
    return p;
}

double ps_phi(const PSPoint &point) {
    switch (point.region) {
    case Region::D1:
    case Region::D2:
    case Region::Boundary21:
        return 1.0;
    case Region::D3:
        return point.nu;
    case Region::Uncovered:
        break;
    }
    throw std::invalid_argument("(mu,nu) outside the covered regions");
}

ThresholdReport solve_thresholds() {
    ThresholdReport r;
    r.alpha1 = certified_root(poly_alpha1, &r.residuals[0]);
    r.alpha_half = certified_root(poly_alpha_half, &r.residuals[1]);
    r.alpha_nu = certified_root(poly_alpha_nu, &r.residuals[2]);
    r.alpha2 = certified_root(poly_alpha2, &r.residuals[3]);
    if (!(r.alpha_half < r.alpha1 && r.alpha1 < r.alpha_nu && r.alpha_nu < r.alpha2))
        throw std::runtime_error("threshold roots out of expected order");
    return r;
}

const char *regime_name(Regime r) {
    switch (r) {
    case Regime::G1: return "G1";
    case Regime::G2Small: return "G2-small";
    case Regime::G2Large: return "G2-large";
    case Regime::G3Small: return "G3-small";
    case Regime::G3Large: return "G3-large";
    }
    return "?";
}

namespace {

void require_within_star(const ClassParams &p) {
    double ls = lambda_star(p.alpha);
    if (p.lambda > ls)
        throw NotCoveredError("lambda exceeds lambda_star = " + std::to_string(ls));
}

} // namespace

BoundResult bound_gamma1(const ClassParams &p) {
    require_within_star(p);
    BoundResult r;
    r.covered = true;
    r.value = p.lambda / (2.0 * (1.0 - p.alpha));
    r.regime = Regime::G1;
    r.extremal = "c1=1";
    return r;
}

BoundResult bound_gamma2(const ClassParams &p) {
    require_within_star(p);
    BoundResult r;
    r.covered = true;
    // For alpha <= alpha1 the whole range lambda <= lambda_star falls under the
    // small branch (lambda1 >= lambda_star there). Boundary lambda = lambda1
    // goes to the branch listed first in the theorem; values coincide.
    if (p.alpha <= thresholds().alpha1 || p.lambda <= lambda1(p.alpha)) {
        r.value = p.lambda / (2.0 * (2.0 - p.alpha));
        r.regime = Regime::G2Small;
        r.extremal = "c2=1";
    } else {
        double u = 1.0 - p.alpha;
        r.value = p.alpha * p.lambda * p.lambda / (4.0 * u * u);
        r.regime = Regime::G2Large;
        r.extremal = "c1=1";
    }
    return r;
}

BoundResult bound_gamma3(const ClassParams &p) {
    require_within_star(p);
    const ThresholdReport &th = thresholds();
    double a = p.alpha, L = p.lambda;
    bool small = false;
    if (a <= th.alpha_half) {
        small = true;  // lambda <= lambda_star suffices
    } else if (a <= th.alpha2) {
        small = L <= lambda_half(a);
        // Between alpha_nu and alpha2 the D2 part of the lemma extends the
        // small branch up to lambda_nu.
        if (!small && a >= th.alpha_nu && L <= lambda_nu(a))
            small = true;
    } else {
        small = L <= lambda_nu(a);
    }
    BoundResult r;
    if (small) {
        r.covered = true;
        r.value = L / (2.0 * (3.0 - a));
        r.regime = Regime::G3Small;
        r.extremal = "c3=1";
        return r;
    }
    if (a >= th.alpha_nu && L >= lambda_nu(a)) {
        double u = 1.0 - a;
        r.covered = true;
        r.value = a * a * L * L * L / (6.0 * u * u * u);
        r.regime = Regime::G3Large;
        r.extremal = "c1=1";
        return r;
    }
    // alpha in (alpha_half, alpha_nu), lambda in (lambda_half, lambda_star]:
    // no branch of the theorem applies.
    r.covered = false;
    return r;
}

std::vector<RegimeRow> regime_map(int alpha_steps, int lambda_steps, bool linear) {
    if (alpha_steps < 2 || lambda_steps < 2)
        throw std::invalid_argument("grids must have at least 2 steps");
    std::vector<RegimeRow> rows;
    rows.reserve(static_cast<size_t>(alpha_steps) * lambda_steps);
    for (int i = 0; i < alpha_steps; ++i) {
        double alpha = static_cast<double>(i + 1) / (alpha_steps + 1);
        double ls = lambda_star(alpha);
        for (int j = 0; j < lambda_steps; ++j) {
            double lambda;
            if (linear) {
                lambda = ls * (j + 1) / lambda_steps;
            } else {
                // geometric from lambda_star/100 up to lambda_star
                double frac = static_cast<double>(lambda_steps - 1 - j) / (lambda_steps - 1);
                lambda = ls * std::pow(0.01, frac);
            }
            ClassParams p(alpha, lambda);
            RegimeRow row;
            row.alpha = alpha;
            row.lambda = lambda;
            row.lstar = ls;
            row.g1 = bound_gamma1(p);
            row.g2 = bound_gamma2(p);
            row.g3 = bound_gamma3(p);
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

} // namespace ulog
