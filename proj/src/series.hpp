#ifndef ULOG_SERIES_HPP
#define ULOG_SERIES_HPP

#include <complex>
#include <vector>

namespace ulog {

using cplx = std::complex<double>;

// Truncated Taylor series a0 + a1 z + ... + aN z^N with a fixed order N.
// Binary operations truncate to the minimum order of the operands.
class TruncatedSeries {
public:
    static constexpr int kDefaultOrder = 12;

    explicit TruncatedSeries(int order);
    explicit TruncatedSeries(std::vector<cplx> coeffs);

    static TruncatedSeries one(int order);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<cplx> &coeffs() const { return coeffs_; }
    cplx operator[](int k) const { return coeffs_[static_cast<size_t>(k)]; }
    cplx &at(int k) { return coeffs_[static_cast<size_t>(k)]; }

    cplx evaluate(cplx z) const;

    TruncatedSeries &operator+=(const TruncatedSeries &rhs);
    TruncatedSeries &operator-=(const TruncatedSeries &rhs);
    TruncatedSeries &operator*=(cplx scalar);

private:
    std::vector<cplx> coeffs_;
};

TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries &b);
TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries &b);
TruncatedSeries operator*(cplx scalar, TruncatedSeries s);

// Cauchy product, truncated to min(order_a, order_b).
TruncatedSeries mul(const TruncatedSeries &a, const TruncatedSeries &b);

// Principal-branch log of a series with constant term 1; result has a0 = 0.
// Throws std::domain_error when a0 != 1.
TruncatedSeries log1(const TruncatedSeries &s);

// Exponential of a series with constant term 0; result has a0 = 1.
// Throws std::domain_error when a0 != 0.
TruncatedSeries exp1(const TruncatedSeries &s);

// s^beta for a series with constant term 1, via exp1(beta * log1(s)).
TruncatedSeries pow_frac(const TruncatedSeries &s, double beta);

// Formal derivative; the order drops by one (a constant stays order 0).
TruncatedSeries differentiate(const TruncatedSeries &s);

} // namespace ulog

#endif
