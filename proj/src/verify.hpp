#ifndef ULOG_VERIFY_HPP
#define ULOG_VERIFY_HPP

#include <optional>

#include "bounds.hpp"

namespace ulog {

struct SearchConfig {
    int density = 9;
    int refine_rounds = 3;
    double refine_shrink = 0.2;
    double radius_screen = 0.99;
    // Default search keeps t1 real non-negative (a global rotation of the
    // Schwarz function absorbs its phase); set full_phase to search all phases.
    bool full_phase = false;
};

struct VerifyReport {
    int k = 0;
    double empirical_max = 0.0;
    std::optional<BoundResult> bound;  // absent in an uncovered gamma_3 regime
    double gap = 0.0;                  // bound - empirical_max, when bound present
    SchwarzCoeffs attained_at;
    SchurParams attained_params;
};

// Grid search of |gamma_k| over the Schur-parameter chart of the coefficient
// body, followed by local refinement rounds that shrink the box around the
// incumbent. Throws NotCoveredError when lambda > lambda_star.
VerifyReport brute_force_gamma_max(const ClassParams &p, int k, const SearchConfig &cfg);

// Evaluates |gamma_k| at the regime's designated extremal through both the
// closed forms and the order-12 series pipeline, and checks it reproduces the
// theorem bound (1e-10 closed, 1e-8 series). Throws on miss.
VerifyReport verify_sharpness(const ClassParams &p, int k);

// Max discrepancy between the closed forms and the series pipeline over
// a2..a4 and gamma_1..gamma_3.
double cross_check_pipeline(const ClassParams &p, const SchwarzCoeffs &w);

} // namespace ulog

#endif
