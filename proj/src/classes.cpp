#include "logcoef/classes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace logcoef {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kMaxRadius = 0.999;
constexpr int kBOrder = 64;  // enough b_n for any series order used here
}  // namespace

std::string class_name(ClassId id) {
    switch (id) {
        case ClassId::F1: return "f1";
        case ClassId::F2: return "f2";
        case ClassId::F3: return "f3";
    }
    return "?";
}

ClassId class_from_name(const std::string& name) {
    if (name == "f1" || name == "F1") return ClassId::F1;
    if (name == "f2" || name == "F2") return ClassId::F2;
    if (name == "f3" || name == "F3") return ClassId::F3;
    throw std::invalid_argument("unknown class: " + name);
}

ClassSpec::ClassSpec(ClassId id, std::string name, std::vector<double> kernel)
    : id_(id), name_(std::move(name)), kernel_(std::move(kernel)) {
    // g = z / P: divide 1 by P and shift the index up by one.
    std::vector<Complex> pc(kernel_.size());
    for (size_t i = 0; i < kernel_.size(); ++i) pc[i] = Complex{kernel_[i], 0.0};
    const TruncatedSeries inv =
        TruncatedSeries::constant(1.0, kBOrder) / TruncatedSeries(pc).resized(kBOrder);
    b_.resize(static_cast<size_t>(kBOrder) + 1);
    for (int n = 1; n <= kBOrder + 1 && n - 1 <= inv.order(); ++n)
        b_[static_cast<size_t>(n - 1)] = inv[n - 1].real();
}

const ClassSpec& ClassSpec::get(ClassId id) {
    static const ClassSpec f1(ClassId::F1, "f1", {1.0, -1.0});
    static const ClassSpec f2(ClassId::F2, "f2", {1.0, 0.0, -1.0});
    static const ClassSpec f3(ClassId::F3, "f3", {1.0, -1.0, 1.0});
    switch (id) {
        case ClassId::F1: return f1;
        case ClassId::F2: return f2;
        case ClassId::F3: return f3;
    }
    throw std::logic_error("unreachable");
}

Complex ClassSpec::kernel_at(Complex z) const {
    Complex acc{};
    for (size_t i = kernel_.size(); i-- > 0;) acc = acc * z + kernel_[i];
    return acc;
}

std::vector<double> ClassSpec::starlike_coefficients(int n_max) const {
    std::vector<double> out;
    out.reserve(static_cast<size_t>(std::max(0, n_max - 1)));
    for (int n = 2; n <= n_max; ++n) out.push_back(b(n));
    return out;
}

TruncatedSeries ClassSpec::generator(int order) const {
    std::vector<Complex> c(static_cast<size_t>(order) + 1, Complex{});
    for (int n = 1; n <= order; ++n) c[static_cast<size_t>(n)] = Complex{b(n), 0.0};
    return TruncatedSeries(std::move(c));
}

CtcFunction::CtcFunction(ClassId class_id, AtomicHerglotz h, int order)
    : class_id_(class_id), h_(std::move(h)), f_(TruncatedSeries::zero(order)) {
    const ClassSpec& cls = ClassSpec::get(class_id_);
    const std::vector<Complex> c = h_.coefficients(order);
    std::vector<Complex> a(static_cast<size_t>(order) + 1, Complex{});
    a[1] = Complex{1.0, 0.0};
    for (int n = 2; n <= order; ++n) {
        Complex acc{cls.b(n), 0.0};
        for (int k = 1; k < n; ++k) acc += cls.b(n - k) * c[static_cast<size_t>(k - 1)];
        a[static_cast<size_t>(n)] = acc / static_cast<double>(n);
    }
    f_ = TruncatedSeries(std::move(a));
}

CtcFunction build_ctc(const ClassSpec& cls, const AtomicHerglotz& h, int order) {
    return CtcFunction(cls.id(), h, order);
}

double membership_min(const CtcFunction& f, int radial_steps, int angular_steps) {
    const ClassSpec& cls = ClassSpec::get(f.class_id());
    double lowest = std::numeric_limits<double>::infinity();
    for (int i = 1; i <= radial_steps; ++i) {
        const double r = kMaxRadius * static_cast<double>(i) / radial_steps;
        for (int j = 0; j < angular_steps; ++j) {
            const double theta = 2.0 * kPi * j / angular_steps;
            const Complex z = std::polar(r, theta);
            // z f' = g h with g = z / P, so f' = h / P and P f' = h.
            const Complex fprime = f.herglotz().evaluate(z) / cls.kernel_at(z);
            lowest = std::min(lowest, (cls.kernel_at(z) * fprime).real());
        }
    }
    return lowest;
}

double membership_min_series(const ClassSpec& cls, const TruncatedSeries& f,
                             int radial_steps, int angular_steps) {
    // derivative of the truncated polynomial
    std::vector<Complex> d(static_cast<size_t>(std::max(0, f.order() - 1)) + 1, Complex{});
    for (int n = 1; n <= f.order(); ++n)
        d[static_cast<size_t>(n - 1)] = static_cast<double>(n) * f[n];
    double lowest = std::numeric_limits<double>::infinity();
    for (int i = 1; i <= radial_steps; ++i) {
        const double r = kMaxRadius * static_cast<double>(i) / radial_steps;
        for (int j = 0; j < angular_steps; ++j) {
            const Complex z = std::polar(r, 2.0 * kPi * j / angular_steps);
            Complex fp{};
            for (size_t n = d.size(); n-- > 0;) fp = fp * z + d[n];
            lowest = std::min(lowest, (cls.kernel_at(z) * fp).real());
        }
    }
    return lowest;
}

GammaTriple gammas123_from_coeffs(const ClassSpec& cls, Complex c1, Complex c2, Complex c3) {
    const double b2 = cls.b(2), b3 = cls.b(3), b4 = cls.b(4);
    GammaTriple g{};
    g.g1 = (b2 + c1) / 4.0;
    g.g2 = (8.0 * b3 + 2.0 * b2 * c1 + 8.0 * c2 - 3.0 * b2 * b2 - 3.0 * c1 * c1) / 48.0;
    g.g3 = (6.0 * c3 - b2 * b2 * c1 - b2 * c1 * c1 + 2.0 * b2 * c2 + 2.0 * b3 * c1 +
            b2 * b2 * b2 - 4.0 * b3 * b2 + 6.0 * b4 + c1 * c1 * c1 - 4.0 * c1 * c2) /
           48.0;
    return g;
}

GammaTriple gammas123(const CtcFunction& f) {
    const ClassSpec& cls = ClassSpec::get(f.class_id());
    const std::vector<Complex> c = f.herglotz().coefficients(3);
    return gammas123_from_coeffs(cls, c[0], c[1], c[2]);
}

}  // namespace logcoef
