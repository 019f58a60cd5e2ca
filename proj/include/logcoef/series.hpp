#pragma once

#include <complex>
#include <vector>

namespace logcoef {

using Complex = std::complex<double>;

/// Finite Taylor expansion about z = 0 with complex coefficients.
/// Index n holds the z^n coefficient; order() is the highest retained power.
/// Arithmetic never extends the order: binary operations truncate to the
/// minimum order of the operands.
class TruncatedSeries {
public:
    TruncatedSeries() : coeffs_(1, Complex{}) {}
    explicit TruncatedSeries(std::vector<Complex> coeffs);

    static TruncatedSeries zero(int order);
    static TruncatedSeries constant(Complex value, int order);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Complex& operator[](int n) const { return coeffs_[static_cast<size_t>(n)]; }
    const std::vector<Complex>& coeffs() const { return coeffs_; }

    Complex& at(int n) { return coeffs_.at(static_cast<size_t>(n)); }

    /// Copy truncated (or zero-padded) to the given order.
    TruncatedSeries resized(int order) const;

    /// Divide by z. Requires a vanishing constant term; order drops by one.
    TruncatedSeries shifted_down() const;

    TruncatedSeries operator-() const;

private:
    std::vector<Complex> coeffs_;
};

TruncatedSeries operator+(const TruncatedSeries& u, const TruncatedSeries& v);
TruncatedSeries operator-(const TruncatedSeries& u, const TruncatedSeries& v);
TruncatedSeries operator*(const TruncatedSeries& u, const TruncatedSeries& v);
TruncatedSeries operator*(Complex s, const TruncatedSeries& u);

/// Cauchy quotient w with w*v = u up to truncation; v must have a nonzero
/// constant term.
TruncatedSeries operator/(const TruncatedSeries& u, const TruncatedSeries& v);

/// log of a series with constant term 1; the result L has L(0) = 0 and
/// exp(L) = u up to the truncation order. Uses the recurrence from L'*u = u'.
TruncatedSeries log_series(const TruncatedSeries& u);

/// exp of a series with constant term 0; inverse of log_series.
TruncatedSeries exp_series(const TruncatedSeries& u);

/// Logarithmic coefficients of a normalized function f = z + a2 z^2 + ...,
/// i.e. log(f(z)/z) = 2 * sum_n gamma_n z^n.
class LogCoeffVector {
public:
    LogCoeffVector() = default;
    explicit LogCoeffVector(std::vector<Complex> gammas) : gammas_(std::move(gammas)) {}

    int order() const { return static_cast<int>(gammas_.size()); }
    /// 1-based: gamma(n) is the coefficient gamma_n, 1 <= n <= order().
    Complex gamma(int n) const { return gammas_.at(static_cast<size_t>(n - 1)); }
    const std::vector<Complex>& gammas() const { return gammas_; }

private:
    std::vector<Complex> gammas_;
};

/// gamma_1..gamma_{order-1} of f; requires a_0 = 0 and a_1 = 1 (tol 1e-12).
LogCoeffVector log_coefficients(const TruncatedSeries& f);

}  // namespace logcoef
