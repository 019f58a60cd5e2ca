#include "logcoef/objectives.hpp"

#include <cmath>
#include <stdexcept>

namespace logcoef {

bool in_cuboid(const CuboidPoint& pt, double tol) {
    return pt.c >= -tol && pt.c <= 2.0 + tol && pt.r >= -tol && pt.r <= 1.0 + tol &&
           pt.p >= -1.0 - tol && pt.p <= 1.0 + tol;
}

double gamma3_phi(const ClassSpec& cls, const CuboidPoint& pt) {
    if (!in_cuboid(pt, 1e-12)) throw std::domain_error("gamma3_phi: point outside the box");
    const double b2 = cls.b(2), b3 = cls.b(3), b4 = cls.b(4);
    const double c = pt.c;
    const double s = std::sqrt(std::max(0.0, 1.0 - pt.p * pt.p));
    const Complex x{pt.r * pt.p, pt.r * s};
    const Complex phi = c * c * c + (4.0 * b3 - 2.0 * b2 * b2) * c +
                        (2.0 * b2 * b2 * b2 - 8.0 * b2 * b3 + 12.0 * b4) +
                        x * (4.0 - c * c) * (2.0 * b2 + 2.0 * c - 3.0 * c * x);
    return std::abs(phi);
}

double gamma3_objective(const ClassSpec& cls, const CuboidPoint& pt) {
    return 6.0 * (1.0 - pt.r * pt.r) * (4.0 - pt.c * pt.c) + gamma3_phi(cls, pt);
}

double gamma2_objective(const ClassSpec& cls, const Gamma2Point& pt) {
    if (pt.d < -1e-12 || pt.d > 2.0 + 1e-12 || pt.q < -1.0 - 1e-12 || pt.q > 1.0 + 1e-12)
        throw std::domain_error("gamma2_objective: point outside the box");
    const double d = pt.d, q = pt.q;
    switch (cls.id()) {
        case ClassId::F1: {
            const double u = d * d + 5.0 + 2.0 * d * q;
            const double rad = u * u - 16.0 * d * d * (1.0 - q * q);
            return 2.0 - 0.5 * d * d + 0.125 * std::sqrt(std::max(0.0, rad));
        }
        case ClassId::F2:
            // |c2 - (3/8) c1^2| <= 2 plus the generator's fixed contribution 1
            return 3.0;
        case ClassId::F3: {
            const double rad = (d * d + 1.0 - 2.0 * d * q) * (d * d + 9.0 + 6.0 * d * q);
            return 2.0 - 0.5 * d * d + 0.125 * std::sqrt(std::max(0.0, rad));
        }
    }
    throw std::logic_error("unreachable");
}

double gamma1_objective(const ClassSpec& cls, double c1_mod) {
    if (c1_mod < 0.0 || c1_mod > 2.0 + 1e-12)
        throw std::domain_error("gamma1_objective: |c1| outside [0, 2]");
    return (std::abs(cls.b(2)) + c1_mod) / 4.0;
}

double gamma3_display_scale(ClassId id) {
    return id == ClassId::F1 ? 48.0 : 96.0;
}

}  // namespace logcoef
