#ifndef ULOG_SCHWARZ_HPP
#define ULOG_SCHWARZ_HPP

#include <array>
#include <functional>
#include <vector>

#include "series.hpp"

namespace ulog {

// Initial coefficients c1..c3 of a Schwarz function w(z) = c1 z + c2 z^2 + c3 z^3 + ...
struct SchwarzCoeffs {
    std::array<cplx, 3> c{cplx{0, 0}, cplx{0, 0}, cplx{0, 0}};
};

// Schur parameters t1..tm, each in the closed unit disk, charting the
// coefficient body of Schwarz functions.
struct SchurParams {
    std::vector<cplx> t;
};

// Maps Schur parameters (up to three) to the leading Schwarz coefficients:
//   c1 = t1
//   c2 = (1-|t1|^2) t2
//   c3 = (1-|t1|^2) [ (1-|t2|^2) t3 - conj(t1) t2^2 ]
// Throws std::invalid_argument when some |tk| > 1 + 1e-12.
SchwarzCoeffs schur_to_coeffs(const SchurParams &t);

// Taylor coefficients c1..c3 of the transfer function built by running the
// Schur recursion with parameters t1..t3 and zero tail. Independent route used
// to validate schur_to_coeffs; series division instead of closed forms.
SchwarzCoeffs schur_transfer_coeffs(const SchurParams &t);

// max |c1 z + c2 z^2 + c3 z^3| over equispaced points on |z| = radius.
// Necessary-condition screen for admissibility of raw tuples.
double max_modulus(const SchwarzCoeffs &c, double radius, int samples);

// True when the tuple passes the body inequalities |c1| <= 1,
// |c2| <= 1 - |c1|^2 and the Parseval condition sum |c_k|^2 <= 1.
bool passes_screen(const SchwarzCoeffs &c);

// Polar Schur-parameter grid images covering the coefficient body, m in {1,2,3}.
// `density` moduli in [0,1] per parameter, 12 phases. The three pure extremals
// (1,0,0), (0,1,0), (0,0,1) lead the output when include_extremals is set.
std::vector<SchwarzCoeffs> sample_body(int m, int density, bool include_extremals);

// Callback-driven enumeration of the same grid; used by the search code.
void enumerate_body(int m, int density, int phases,
                    const std::function<void(const SchurParams &, const SchwarzCoeffs &)> &fn);

} // namespace ulog

#endif
