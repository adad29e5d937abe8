#include "series.hpp"

#include <algorithm>
#include <stdexcept>

namespace ulog {

namespace {
constexpr double kBranchTol = 1e-12;
}

TruncatedSeries::TruncatedSeries(int order) {
    if (order < 0)
        throw std::invalid_argument("series order must be non-negative");
    coeffs_.assign(static_cast<size_t>(order) + 1, cplx{0.0, 0.0});
}

TruncatedSeries::TruncatedSeries(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty())
        throw std::invalid_argument("series needs at least the constant term");
}

TruncatedSeries TruncatedSeries::one(int order) {
    TruncatedSeries s(order);
    s.at(0) = 1.0;
    return s;
}

cplx TruncatedSeries::evaluate(cplx z) const {
    cplx acc{0.0, 0.0};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * z + *it;
    return acc;
}

TruncatedSeries &TruncatedSeries::operator+=(const TruncatedSeries &rhs) {
    size_t n = std::min(coeffs_.size(), rhs.coeffs_.size());
    coeffs_.resize(n);
    for (size_t k = 0; k < n; ++k)
        coeffs_[k] += rhs.coeffs_[k];
    return *this;
}

TruncatedSeries &TruncatedSeries::operator-=(const TruncatedSeries &rhs) {
    size_t n = std::min(coeffs_.size(), rhs.coeffs_.size());
    coeffs_.resize(n);
    for (size_t k = 0; k < n; ++k)
        coeffs_[k] -= rhs.coeffs_[k];
    return *this;
}

TruncatedSeries &TruncatedSeries::operator*=(cplx scalar) {
    for (auto &c : coeffs_)
        c *= scalar;
    return *this;
}

TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries &b) { return a += b; }
TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries &b) { return a -= b; }
TruncatedSeries operator*(cplx scalar, TruncatedSeries s) { return s *= scalar; }

TruncatedSeries mul(const TruncatedSeries &a, const TruncatedSeries &b) {
    int n = std::min(a.order(), b.order());
    TruncatedSeries r(n);
    for (int k = 0; k <= n; ++k) {
        cplx acc{0.0, 0.0};
        for (int i = 0; i <= k; ++i)
            acc += a[i] * b[k - i];
        r.at(k) = acc;
    }
    return r;
}

TruncatedSeries log1(const TruncatedSeries &s) {
    if (std::abs(s[0] - cplx{1.0, 0.0}) > kBranchTol)
        throw std::domain_error("log1 requires constant term 1");
    int n = s.order();
    TruncatedSeries g(n);
    // n*g_n = n*f_n - sum_{k=1}^{n-1} k g_k f_{n-k}, from f' = g' f with f0 = 1.
    for (int m = 1; m <= n; ++m) {
        cplx acc = static_cast<double>(m) * s[m];
        for (int k = 1; k < m; ++k)
            acc -= static_cast<double>(k) * g[k] * s[m - k];
        g.at(m) = acc / static_cast<double>(m);
    }
    return g;
}

TruncatedSeries exp1(const TruncatedSeries &s) {
    if (std::abs(s[0]) > kBranchTol)
        throw std::domain_error("exp1 requires constant term 0");
    int n = s.order();
    TruncatedSeries f(n);
    f.at(0) = 1.0;
    for (int m = 1; m <= n; ++m) {
        cplx acc{0.0, 0.0};
        for (int k = 1; k <= m; ++k)
            acc += static_cast<double>(k) * s[k] * f[m - k];
        f.at(m) = acc / static_cast<double>(m);
    }
    return f;
}

TruncatedSeries pow_frac(const TruncatedSeries &s, double beta) {
    TruncatedSeries g = log1(s);
    g *= cplx{beta, 0.0};
    return exp1(g);
}

TruncatedSeries differentiate(const TruncatedSeries &s) {
    int n = std::max(s.order() - 1, 0);
    TruncatedSeries r(n);
    for (int k = 0; k < s.order(); ++k)
        r.at(k) = static_cast<double>(k + 1) * s[k + 1];
    if (s.order() == 0)
        r.at(0) = 0.0;
    return r;
}

} // namespace ulog
