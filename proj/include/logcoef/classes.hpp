#pragma once

#include <array>
#include <string>
#include <vector>

#include "logcoef/caratheodory.hpp"
#include "logcoef/series.hpp"

namespace logcoef {

enum class ClassId { F1, F2, F3 };

std::string class_name(ClassId id);
ClassId class_from_name(const std::string& name);

/// One of the three families {f : Re(P(z) f'(z)) > 0 on the disk} with
/// P in {1-z, 1-z^2, 1-z+z^2}. Members are close-to-convex with respect to
/// the starlike generator g(z) = z / P(z) = z + b2 z^2 + b3 z^3 + ...
class ClassSpec {
public:
    static const ClassSpec& get(ClassId id);

    ClassId id() const { return id_; }
    const std::string& name() const { return name_; }

    /// Ascending coefficients of the kernel polynomial P.
    const std::vector<double>& kernel() const { return kernel_; }
    Complex kernel_at(Complex z) const;

    /// b_n of the generator, n >= 1 (b_1 = 1). Computed once by series
    /// division of z by P.
    double b(int n) const { return b_.at(static_cast<size_t>(n - 1)); }

    /// b_2..b_{n_max}.
    std::vector<double> starlike_coefficients(int n_max) const;

    /// The generator g as a truncated series.
    TruncatedSeries generator(int order) const;

private:
    ClassSpec(ClassId id, std::string name, std::vector<double> kernel);

    ClassId id_;
    std::string name_;
    std::vector<double> kernel_;
    std::vector<double> b_;
};

/// A class member determined by its Herglotz factor h through z f' = g h.
/// The Taylor coefficients follow the convolution recurrence
///   n a_n = b_n + sum_{k=1}^{n-1} b_{n-k} c_k.
class CtcFunction {
public:
    CtcFunction(ClassId class_id, AtomicHerglotz h, int order);

    ClassId class_id() const { return class_id_; }
    const AtomicHerglotz& herglotz() const { return h_; }
    const TruncatedSeries& series() const { return f_; }
    Complex a(int n) const { return f_[n]; }

private:
    ClassId class_id_;
    AtomicHerglotz h_;
    TruncatedSeries f_;
};

CtcFunction build_ctc(const ClassSpec& cls, const AtomicHerglotz& h, int order = 16);

/// Minimum of Re(P(z) f'(z)) over a radial-angular grid (radii up to 0.999).
/// f' is taken from the exact identity z f' = g h by kernel summation, so no
/// truncation error enters near the boundary. Positive value certifies
/// sampled membership.
double membership_min(const CtcFunction& f, int radial_steps = 64, int angular_steps = 64);

/// Same grid test for an arbitrary normalized series against a class kernel;
/// f' here is the derivative of the truncated polynomial.
double membership_min_series(const ClassSpec& cls, const TruncatedSeries& f,
                             int radial_steps = 64, int angular_steps = 64);

struct GammaTriple {
    Complex g1;
    Complex g2;
    Complex g3;
};

/// First three logarithmic coefficients from the closed forms in (b, c):
///   gamma1 = (b2 + c1)/4
///   gamma2 = (8 b3 + 2 b2 c1 + 8 c2 - 3 b2^2 - 3 c1^2)/48
///   gamma3 = (6 c3 - b2^2 c1 - b2 c1^2 + 2 b2 c2 + 2 b3 c1 + b2^3
///             - 4 b3 b2 + 6 b4 + c1^3 - 4 c1 c2)/48
/// Agrees with the series route log_coefficients(f.series()).
GammaTriple gammas123(const CtcFunction& f);

GammaTriple gammas123_from_coeffs(const ClassSpec& cls, Complex c1, Complex c2, Complex c3);

}  // namespace logcoef
