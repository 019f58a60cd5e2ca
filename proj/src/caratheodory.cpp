#include "logcoef/caratheodory.hpp"

#include <cmath>
#include <stdexcept>

namespace logcoef {

namespace {
constexpr double kWeightTol = 1e-12;
constexpr double kUnimodularTol = 1e-9;
constexpr double kDegenerateTol = 1e-9;
constexpr double kPi = 3.14159265358979323846;
}  // namespace

AtomicHerglotz::AtomicHerglotz(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
    if (atoms_.empty()) throw std::invalid_argument("AtomicHerglotz: no atoms");
    double total = 0.0;
    for (Atom& a : atoms_) {
        if (a.weight < -kWeightTol)
            throw std::invalid_argument("AtomicHerglotz: negative weight");
        const double mod = std::abs(a.point);
        if (std::abs(mod - 1.0) > kUnimodularTol)
            throw std::invalid_argument("AtomicHerglotz: atom off the unit circle");
        a.point /= mod;  // canonicalize onto the circle
        total += a.weight;
    }
    if (std::abs(total - 1.0) > kWeightTol)
        throw std::invalid_argument("AtomicHerglotz: weights do not sum to 1");
}

std::vector<Complex> AtomicHerglotz::coefficients(int n_max) const {
    std::vector<Complex> c(static_cast<size_t>(n_max));
    std::vector<Complex> powers(atoms_.size(), Complex{1.0, 0.0});
    for (int n = 1; n <= n_max; ++n) {
        Complex acc{};
        for (size_t k = 0; k < atoms_.size(); ++k) {
            powers[k] *= atoms_[k].point;
            acc += atoms_[k].weight * powers[k];
        }
        c[static_cast<size_t>(n - 1)] = 2.0 * acc;
    }
    return c;
}

Complex AtomicHerglotz::coefficient(int n) const {
    if (n < 1) throw std::invalid_argument("coefficient: index must be >= 1");
    Complex acc{};
    for (const Atom& a : atoms_) acc += a.weight * std::pow(a.point, n);
    return 2.0 * acc;
}

Complex AtomicHerglotz::evaluate(Complex z) const {
    Complex acc{};
    for (const Atom& a : atoms_)
        acc += a.weight * (1.0 + a.point * z) / (1.0 - a.point * z);
    return acc;
}

TruncatedSeries AtomicHerglotz::expansion(int order) const {
    std::vector<Complex> c(static_cast<size_t>(order) + 1);
    c[0] = Complex{1.0, 0.0};
    std::vector<Complex> tail = coefficients(order);
    for (int n = 1; n <= order; ++n) c[static_cast<size_t>(n)] = tail[static_cast<size_t>(n - 1)];
    return TruncatedSeries(std::move(c));
}

AtomicHerglotz AtomicHerglotz::pair_blend(double t, double theta) {
    if (t < 0.0 || t > 1.0)
        throw std::domain_error("pair_blend: t must lie in [0, 1]");
    const Complex mu = std::polar(1.0, theta);
    return AtomicHerglotz({{t + 0.5 * (1.0 - t), mu}, {0.5 * (1.0 - t), -mu}});
}

AtomicHerglotz AtomicHerglotz::conjugate_triple(double t, Complex mu) {
    if (t < 0.0 || t > 0.5)
        throw std::domain_error("conjugate_triple: t must lie in [0, 1/2]");
    if (std::abs(std::abs(mu) - 1.0) > kUnimodularTol)
        throw std::domain_error("conjugate_triple: |mu| must be 1");
    return AtomicHerglotz({{1.0 - 2.0 * t, Complex{1.0, 0.0}}, {t, mu}, {t, std::conj(mu)}});
}

AtomicHerglotz AtomicHerglotz::sample(SplitMix64& rng, bool real_mode) {
    const int n = 1 + static_cast<int>(rng.next_below(5));
    std::vector<double> w(static_cast<size_t>(n));
    double total = 0.0;
    for (double& wi : w) {
        // exponential draws normalize to a flat simplex point
        wi = -std::log(1.0 - rng.next_double());
        total += wi;
    }
    std::vector<Atom> atoms;
    atoms.reserve(static_cast<size_t>(2 * n));
    for (int k = 0; k < n; ++k) {
        const double weight = w[static_cast<size_t>(k)] / total;
        const double theta = 2.0 * kPi * rng.next_double();
        const Complex mu = std::polar(1.0, theta);
        if (real_mode && std::abs(mu.imag()) > 1e-15) {
            atoms.push_back({0.5 * weight, mu});
            atoms.push_back({0.5 * weight, std::conj(mu)});
        } else {
            atoms.push_back({weight, mu});
        }
    }
    return AtomicHerglotz(std::move(atoms));
}

namespace {

using ComplexL = std::complex<long double>;

inline ComplexL widen(const Complex& z) {
    return ComplexL(static_cast<long double>(z.real()), static_cast<long double>(z.imag()));
}

inline Complex narrow(const ComplexL& z) {
    return Complex(static_cast<double>(z.real()), static_cast<double>(z.imag()));
}

}  // namespace

CoefPair coeffs_from_params(const CoefParams& p) {
    const ComplexL c1 = widen(p.c1), x = widen(p.x), t = widen(p.t);
    const long double s = 4.0L - std::norm(c1);
    const ComplexL c2 = 0.5L * (c1 * c1 + x * s);
    const ComplexL c3 = 0.25L * (c1 * c1 * c1 + 2.0L * s * c1 * x - std::conj(c1) * s * x * x +
                                 2.0L * s * (1.0L - std::norm(x)) * t);
    return {narrow(c2), narrow(c3)};
}

RecoveredParams params_from_coeffs(Complex c1_in, Complex c2_in, Complex c3_in) {
    if (std::abs(c1_in) >= 2.0 - kDegenerateTol)
        throw std::domain_error("params_from_coeffs: |c1| too close to 2 (degenerate)");
    const ComplexL c1 = widen(c1_in), c2 = widen(c2_in), c3 = widen(c3_in);
    const long double s = 4.0L - std::norm(c1);
    const ComplexL x = (2.0L * c2 - c1 * c1) / s;
    RecoveredParams out{};
    out.x = narrow(x);
    const long double xa = std::abs(x);
    if (1.0L - xa < kDegenerateTol) {
        out.t = Complex{};
        out.t_unconstrained = true;
        out.feasible = (xa <= 1.0L + kDegenerateTol);
        return out;
    }
    const ComplexL t = (4.0L * c3 - c1 * c1 * c1 - 2.0L * s * c1 * x + std::conj(c1) * s * x * x) /
                       (2.0L * s * (1.0L - std::norm(x)));
    out.t = narrow(t);
    out.t_unconstrained = false;
    // recovering t divides by 2s(1-|x|^2), so rounding already present in the
    // coefficients is amplified by the condition number near |x| = 1; the
    // tolerance has to carry that factor
    const long double t_tol =
        kDegenerateTol + 1e-14L / (s * (1.0L - std::norm(x)));
    out.feasible = (xa <= 1.0L + kDegenerateTol) && (std::abs(t) <= 1.0L + t_tol);
    return out;
}

GapPair second_coef_gap(const AtomicHerglotz& h) {
    const std::vector<Complex> c = h.coefficients(2);
    const Complex c1 = c[0], c2 = c[1];
    return {std::abs(c2 - 0.5 * c1 * c1), 2.0 - 0.5 * std::norm(c1)};
}

FeketeSzego fekete_szego_bound(const AtomicHerglotz& h, Complex mu) {
    const std::vector<Complex> c = h.coefficients(2);
    const Complex c1 = c[0], c2 = c[1];
    return {std::abs(c2 - mu * c1 * c1), 2.0 * std::max(1.0, std::abs(2.0 * mu - 1.0))};
}

}  // namespace logcoef
