#pragma once

#include "logcoef/classes.hpp"

namespace logcoef {

/// Search variables of the gamma3 problem: c is the (real) first coefficient
/// of h, x = r e^{i theta} with r = |x| and p = cos theta. The closed box is
/// [0,2] x [0,1] x [-1,1].
struct CuboidPoint {
    double c;
    double r;
    double p;
};

/// Search variables of the gamma2 problem: d = |c1|, q = cos(arg c1);
/// box [0,2] x [-1,1].
struct Gamma2Point {
    double d;
    double q;
};

bool in_cuboid(const CuboidPoint& pt, double tol = 0.0);

/// |phi| with
///   phi = c^3 + (4 b3 - 2 b2^2) c + (2 b2^3 - 8 b2 b3 + 12 b4)
///         + x (4 - c^2)(2 b2 + 2 c - 3 c x),   x = r (p + i sqrt(1-p^2)).
/// This is the modulus term of the 96-scale gamma3 bound.
double gamma3_phi(const ClassSpec& cls, const CuboidPoint& pt);

/// Upper bound for 96|gamma3| at the parameter point:
///   6 (1 - r^2)(4 - c^2) + |phi|.
double gamma3_objective(const ClassSpec& cls, const CuboidPoint& pt);

/// Upper bound for 6|gamma2| at the parameter point. For F1 and F3 these are
/// the square objectives
///   f1: 2 - d^2/2 + (1/8) sqrt((d^2+5+2dq)^2 - 16 d^2 (1-q^2))
///   f3: 2 - d^2/2 + (1/8) sqrt((d^2+1-2dq)(d^2+9+6dq));
/// for F2 the route goes through the Fekete-Szego bound with mu = 3/8 and the
/// value is the constant 3.
double gamma2_objective(const ClassSpec& cls, const Gamma2Point& pt);

/// Upper bound for |gamma1| given |c1|: (|b2| + |c1|)/4.
double gamma1_objective(const ClassSpec& cls, double c1_mod);

/// Scale the class's gamma3 objective is conventionally displayed at:
/// 48 for f1 and 96 for f2/f3. display_value = native_value * scale / 96,
/// and display_value / scale bounds |gamma3|.
double gamma3_display_scale(ClassId id);

}  // namespace logcoef
