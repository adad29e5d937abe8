#ifndef ULOG_BOUNDS_HPP
#define ULOG_BOUNDS_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "uclass.hpp"

namespace ulog {

// lambda > lambda_star(alpha): the sharp-bound results do not apply.
class NotCoveredError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Threshold curves of the piecewise gamma_2 / gamma_3 bounds.
double lambda1(double alpha);      // 2(1-a)^2 / (a(2-a))
double lambda_half(double alpha);  // (1-a)(2-a) / (2a(3-a))
double lambda_nu(double alpha);    // sqrt(3(1-a)^3 / (a^2(3-a))); nu = 1 there

enum class Region { D1, D2, D3, Boundary21, Uncovered };

struct PSPoint {
    double mu = 0.0;
    double nu = 0.0;
    Region region = Region::Uncovered;
};

PSPoint classify_ps(double mu, double nu);

// Sharp supremum of |c3 + mu c1 c2 + nu c1^3| over Schwarz functions:
// 1 on D1, D2 and at (2,1); nu on D3. Throws on uncovered points.
double ps_phi(const PSPoint &point);

struct ThresholdReport {
    double alpha1 = 0.0;      // 7a^4 - 20a^3 + 24a^2 - 16a + 4 = 0
    double alpha_half = 0.0;  // 4 - 12a - 19a^2 + 14a^3 - 2a^4 = 0
    double alpha_nu = 0.0;    // 3 - 9a + 9a^2 - 5a^3 = 0
    double alpha2 = 0.0;      // 11a^2 - 44a + 32 = 0
    double residuals[4] = {0, 0, 0, 0};
};

// Unique root of each threshold polynomial in (0,1), by bisection to 1e-14
// after a 100-cell sign scan that must find exactly one bracketing cell.
ThresholdReport solve_thresholds();

enum class Regime { G1, G2Small, G2Large, G3Small, G3Large };

const char *regime_name(Regime r);

struct BoundResult {
    bool covered = false;
    double value = 0.0;  // meaningful only when covered
    Regime regime = Regime::G1;
    std::string extremal;  // attaining configuration, e.g. "c1=1"
};

// Theorem branches for |gamma_1|, |gamma_2|, |gamma_3|. All three throw
// NotCoveredError when lambda > lambda_star(alpha). bound_gamma3 returns
// covered=false on the genuine gap alpha in (alpha_half, alpha_nu),
// lambda in (lambda_half, lambda_star].
BoundResult bound_gamma1(const ClassParams &p);
BoundResult bound_gamma2(const ClassParams &p);
BoundResult bound_gamma3(const ClassParams &p);

struct RegimeRow {
    double alpha;
    double lambda;
    double lstar;
    BoundResult g1, g2, g3;
};

// Tabulates the bounds over an (alpha, lambda) grid with lambda restricted to
// (0, lambda_star(alpha)]. Lambda spacing is geometric by default so the
// small-lambda regimes stay visible; pass linear=true for uniform spacing.
std::vector<RegimeRow> regime_map(int alpha_steps, int lambda_steps, bool linear = false);

} // namespace ulog

#endif
