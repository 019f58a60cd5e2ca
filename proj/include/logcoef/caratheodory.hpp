#pragma once

#include <vector>

#include "logcoef/rng.hpp"
#include "logcoef/series.hpp"

namespace logcoef {

/// A function h with h(0) = 1 and Re h > 0 on the unit disk, represented as a
/// finite convex combination of Moebius kernels:
///
///   h(z) = sum_k w_k (1 + mu_k z) / (1 - mu_k z),   w_k >= 0, sum w_k = 1, |mu_k| = 1.
///
/// The representation guarantees class membership by construction and gives
/// the coefficients in closed form: c_n = 2 sum_k w_k mu_k^n, so |c_n| <= 2.
class AtomicHerglotz {
public:
    struct Atom {
        double weight;
        Complex point;
    };

    explicit AtomicHerglotz(std::vector<Atom> atoms);

    const std::vector<Atom>& atoms() const { return atoms_; }

    /// c_1..c_n of the expansion h(z) = 1 + sum c_n z^n.
    std::vector<Complex> coefficients(int n_max) const;
    Complex coefficient(int n) const;

    /// Kernel-sum evaluation at a point of the open disk.
    Complex evaluate(Complex z) const;

    /// Taylor expansion to the given order (constant term 1).
    TruncatedSeries expansion(int order) const;

    /// Blend of a point kernel at e^{i theta} with the symmetric pair kernel
    /// at +-e^{i theta}:
    ///   t (1+e^{i theta} z)/(1-e^{i theta} z) + (1-t)(1+e^{2i theta} z^2)/(1-e^{2i theta} z^2),
    /// i.e. atoms {t + (1-t)/2 at e^{i theta}, (1-t)/2 at -e^{i theta}}.
    /// Attains equality in the second-coefficient gap inequality for every t, theta.
    static AtomicHerglotz pair_blend(double t, double theta);

    /// Three-atom family with real coefficients: atoms {1-2t at 1, t at mu,
    /// t at conj(mu)}; requires 0 <= t <= 1/2 and |mu| = 1.
    static AtomicHerglotz conjugate_triple(double t, Complex mu);

    /// Random valid measure: 1..5 atoms, flat simplex weights, points uniform
    /// on the circle. In real mode every non-real atom is mirrored with its
    /// conjugate at half weight so that all c_n are real.
    static AtomicHerglotz sample(SplitMix64& rng, bool real_mode);

private:
    std::vector<Atom> atoms_;
};

/// Parameters (c1, x, t) of the coefficient parametrization
///   2 c2 = c1^2 + x (4 - |c1|^2)
///   4 c3 = c1^3 + 2 (4-|c1|^2) c1 x - conj(c1) (4-|c1|^2) x^2
///          + 2 (4-|c1|^2)(1-|x|^2) t
/// valid with |x| <= 1, |t| <= 1 for every member of the class. For real c1
/// (the regime of all the bound derivations) this is exactly the familiar
/// display with (4 - c1^2); the conjugate form is the rotation h(e^{i a} z)
/// of the real-c1 case and is what keeps |t| <= 1 for complex c1.
struct CoefParams {
    Complex c1;
    Complex x;
    Complex t;
};

struct CoefPair {
    Complex c2;
    Complex c3;
};

/// Forward direction: (c2, c3) from (c1, x, t) by the displayed formulas.
CoefPair coeffs_from_params(const CoefParams& p);

struct RecoveredParams {
    Complex x;
    Complex t;
    bool feasible;         // |x| <= 1 + tol and (|t| <= 1 + tol or t unconstrained)
    bool t_unconstrained;  // |x| = 1 within tol: the t-term vanishes
};

/// Inverse direction; requires |c1| < 2 - 1e-9 (the formulas collapse at the
/// degenerate boundary). When 1 - |x| < 1e-9 the t equation is singular and
/// t = 0 is returned with t_unconstrained set. The |t| <= 1 tolerance behind
/// `feasible` grows with 1/(1-|x|^2): the inversion divides by that factor,
/// so coefficient rounding reappears in t magnified near |x| = 1.
RecoveredParams params_from_coeffs(Complex c1, Complex c2, Complex c3);

/// lhs = |c2 - c1^2/2| and rhs = 2 - |c1|^2/2; lhs <= rhs for every member,
/// with equality exactly on the pair_blend family.
struct GapPair {
    double lhs;
    double rhs;
};
GapPair second_coef_gap(const AtomicHerglotz& h);

/// Fekete-Szego functional over the class: lhs = |c2 - mu c1^2| and
/// bound = 2 max(1, |2 mu - 1|).
struct FeketeSzego {
    double lhs;
    double bound;
};
FeketeSzego fekete_szego_bound(const AtomicHerglotz& h, Complex mu);

}  // namespace logcoef
