#pragma once

#include <functional>
#include <string>
#include <vector>

#include "logcoef/claimed.hpp"
#include "logcoef/classes.hpp"
#include "logcoef/objectives.hpp"

namespace logcoef {

struct Axis {
    std::string name;
    double lo;
    double hi;
};

using BoxObjective = std::function<double(const std::vector<double>&)>;

struct GridResult {
    double value;
    std::vector<double> point;
};

/// Maximum over the uniform lattice with `resolution` points per axis
/// (boundary hyperplanes included). Deterministic for fixed resolution;
/// lattice ties resolve to the smallest linear index, so the result is
/// independent of the thread count.
GridResult grid_maximize(const BoxObjective& f, const std::vector<Axis>& axes, int resolution,
                         int threads = 1);

/// Cyclic coordinate ascent: golden-section per axis inside a local window
/// (clipped to the box) until every per-axis movement is below tol. Never
/// decreases the objective. Throws on a non-finite objective value.
GridResult refine_local(const BoxObjective& f, const std::vector<Axis>& axes,
                        std::vector<double> start, double tol, double window);

/// Dense real polynomial, coefficients in ascending degree.
class RealPolynomial {
public:
    explicit RealPolynomial(std::vector<double> coeffs);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<double>& coeffs() const { return coeffs_; }
    double operator()(double x) const;
    RealPolynomial derivative() const;

private:
    std::vector<double> coeffs_;
};

/// All real roots in (lo, hi) to absolute accuracy tol. Sign-change
/// bracketing on a fine partition plus bisection; the partition is refined
/// with the stationary points of the polynomial so that even-multiplicity
/// roots are not missed up to the partition density. The default density is
/// 10 * degree brackets per unit length; brackets_per_unit overrides it.
std::vector<double> real_roots_in_interval(const RealPolynomial& poly, double lo, double hi,
                                           double tol = 1e-9, int brackets_per_unit = 0);

/// Built-in stationarity polynomials of the r = 1 face analysis (roots in
/// (0,2) are the candidate c values).
const RealPolynomial& poly_zeta1();     // f1, degree 10
const RealPolynomial& poly_octic_f2();  // f2, degree 8
const RealPolynomial& poly_zeta2();     // f3, degree 10
const RealPolynomial& named_poly(const std::string& name);

struct StationaryCandidate {
    CuboidPoint point;     // (c, 1, p(c))
    double value;          // objective at the class display scale
    bool p_in_range;       // p within [-1, 1]
};

/// Critical points of the gamma3 objective restricted to the face r = 1:
/// roots c of the class's stationarity polynomial paired with the closed-form
/// p(c); candidates with p outside [-1, 1] are kept but flagged.
std::vector<StationaryCandidate> stationarity_candidates(const ClassSpec& cls);

/// The ratio defining the squared radial coordinate of an interior critical
/// point of the gamma3 objective; a value outside (0, 1] certifies that no
/// interior extremum exists at that c.
double interior_r2_ratio(ClassId id, double c);

enum class Target { Gamma2, Gamma3 };

std::string target_name(Target t);
Target target_from_name(const std::string& name);

struct SearchReport {
    ClassId class_id;
    Target target;
    double max_value;             // at the class display scale
    std::vector<double> argmax;
    std::vector<std::string> axis_names;
    std::string stratum;          // interior / face:... / edge:... / vertex
    double closed_form;           // claimed value at the same scale
    double abs_gap;               // |max_value - closed_form|
    double scale;                 // max_value / scale bounds |gamma|
    double gamma_bound;           // max_value / scale
    double gamma_closed_form;
    std::vector<StationaryCandidate> face_r1;  // gamma3 only
    std::vector<std::string> flags;
};

/// Stratified lattice search (every face/edge/vertex plus the full box) with
/// local refinement, compared against the claimed closed form.
SearchReport verify_claimed_max(const ClassSpec& cls, Target which, int resolution = 201,
                                double tol = 1e-10, int threads = 1);

}  // namespace logcoef
