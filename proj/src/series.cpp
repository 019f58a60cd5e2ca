#include "logcoef/series.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace logcoef {

namespace {

using ComplexL = std::complex<long double>;

constexpr double kUnitTol = 1e-12;

inline ComplexL widen(const Complex& z) {
    return ComplexL(static_cast<long double>(z.real()), static_cast<long double>(z.imag()));
}

inline Complex narrow(const ComplexL& z) {
    return Complex(static_cast<double>(z.real()), static_cast<double>(z.imag()));
}

}  // namespace

TruncatedSeries::TruncatedSeries(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty())
        throw std::invalid_argument("TruncatedSeries: empty coefficient list");
}

TruncatedSeries TruncatedSeries::zero(int order) {
    if (order < 0) throw std::invalid_argument("TruncatedSeries: negative order");
    return TruncatedSeries(std::vector<Complex>(static_cast<size_t>(order) + 1, Complex{}));
}

TruncatedSeries TruncatedSeries::constant(Complex value, int order) {
    TruncatedSeries s = zero(order);
    s.at(0) = value;
    return s;
}

TruncatedSeries TruncatedSeries::resized(int order) const {
    if (order < 0) throw std::invalid_argument("TruncatedSeries: negative order");
    std::vector<Complex> c(static_cast<size_t>(order) + 1, Complex{});
    const size_t n = std::min(c.size(), coeffs_.size());
    std::copy(coeffs_.begin(), coeffs_.begin() + static_cast<long>(n), c.begin());
    return TruncatedSeries(std::move(c));
}

TruncatedSeries TruncatedSeries::shifted_down() const {
    if (std::abs(coeffs_[0]) > kUnitTol)
        throw std::domain_error("shifted_down: nonzero constant term");
    if (order() == 0) return zero(0);
    return TruncatedSeries(std::vector<Complex>(coeffs_.begin() + 1, coeffs_.end()));
}

TruncatedSeries TruncatedSeries::operator-() const {
    std::vector<Complex> c(coeffs_);
    for (auto& z : c) z = -z;
    return TruncatedSeries(std::move(c));
}

TruncatedSeries operator+(const TruncatedSeries& u, const TruncatedSeries& v) {
    const int n = std::min(u.order(), v.order());
    std::vector<Complex> c(static_cast<size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) c[static_cast<size_t>(k)] = u[k] + v[k];
    return TruncatedSeries(std::move(c));
}

TruncatedSeries operator-(const TruncatedSeries& u, const TruncatedSeries& v) {
    const int n = std::min(u.order(), v.order());
    std::vector<Complex> c(static_cast<size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) c[static_cast<size_t>(k)] = u[k] - v[k];
    return TruncatedSeries(std::move(c));
}

TruncatedSeries operator*(Complex s, const TruncatedSeries& u) {
    std::vector<Complex> c(u.coeffs());
    for (auto& z : c) z *= s;
    return TruncatedSeries(std::move(c));
}

TruncatedSeries operator*(const TruncatedSeries& u, const TruncatedSeries& v) {
    const int n = std::min(u.order(), v.order());
    std::vector<Complex> c(static_cast<size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        ComplexL acc{};
        for (int j = 0; j <= k; ++j) acc += widen(u[j]) * widen(v[k - j]);
        c[static_cast<size_t>(k)] = narrow(acc);
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries operator/(const TruncatedSeries& u, const TruncatedSeries& v) {
    if (std::abs(v[0]) == 0.0)
        throw std::domain_error("series division: divisor has zero constant term");
    const int n = std::min(u.order(), v.order());
    std::vector<Complex> w(static_cast<size_t>(n) + 1);
    const ComplexL v0 = widen(v[0]);
    // forward substitution: w_k = (u_k - sum_{j<k} w_j v_{k-j}) / v_0
    for (int k = 0; k <= n; ++k) {
        ComplexL acc = widen(u[k]);
        for (int j = 0; j < k; ++j) acc -= widen(w[static_cast<size_t>(j)]) * widen(v[k - j]);
        w[static_cast<size_t>(k)] = narrow(acc / v0);
    }
    return TruncatedSeries(std::move(w));
}

TruncatedSeries log_series(const TruncatedSeries& u) {
    if (std::abs(u[0] - Complex{1.0, 0.0}) > kUnitTol)
        throw std::domain_error("log_series: constant term must be 1");
    const int n = u.order();
    std::vector<Complex> L(static_cast<size_t>(n) + 1, Complex{});
    // n u_n = sum_{k=1}^{n} k L_k u_{n-k}, so with u_0 = 1:
    // L_n = u_n - (1/n) sum_{k=1}^{n-1} k L_k u_{n-k}
    for (int m = 1; m <= n; ++m) {
        ComplexL acc{};
        for (int k = 1; k < m; ++k)
            acc += static_cast<long double>(k) * widen(L[static_cast<size_t>(k)]) * widen(u[m - k]);
        L[static_cast<size_t>(m)] = narrow(widen(u[m]) - acc / static_cast<long double>(m));
    }
    return TruncatedSeries(std::move(L));
}

TruncatedSeries exp_series(const TruncatedSeries& u) {
    if (std::abs(u[0]) > kUnitTol)
        throw std::domain_error("exp_series: constant term must be 0");
    const int n = u.order();
    std::vector<Complex> E(static_cast<size_t>(n) + 1, Complex{});
    E[0] = Complex{1.0, 0.0};
    // n E_n = sum_{k=1}^{n} k u_k E_{n-k}
    for (int m = 1; m <= n; ++m) {
        ComplexL acc{};
        for (int k = 1; k <= m; ++k)
            acc += static_cast<long double>(k) * widen(u[k]) * widen(E[static_cast<size_t>(m - k)]);
        E[static_cast<size_t>(m)] = narrow(acc / static_cast<long double>(m));
    }
    return TruncatedSeries(std::move(E));
}

LogCoeffVector log_coefficients(const TruncatedSeries& f) {
    if (f.order() < 1 || std::abs(f[0]) > kUnitTol || std::abs(f[1] - Complex{1.0, 0.0}) > kUnitTol)
        throw std::domain_error("log_coefficients: series must be z + a2 z^2 + ...");
    const TruncatedSeries L = log_series(f.shifted_down());
    std::vector<Complex> gammas(static_cast<size_t>(L.order()));
    for (int k = 1; k <= L.order(); ++k) gammas[static_cast<size_t>(k - 1)] = 0.5 * L[k];
    return LogCoeffVector(std::move(gammas));
}

}  // namespace logcoef
