#pragma once

#include <optional>
#include <string>
#include <vector>

#include "logcoef/claimed.hpp"
#include "logcoef/classes.hpp"

namespace logcoef {

/// One sharp-bound witness: the measure attaining the claimed |gamma_n|.
struct ExtremalWitness {
    ClassId class_id;
    int target;              // 1, 2 or 3
    AtomicHerglotz herglotz;
    double claimed_value;    // the claimed |gamma_target|
    double achieved_value;   // |gamma_target| of the built member
    double membership;       // membership_min of the built member
    std::vector<std::string> flags;
};

/// Three-atom witness attaining the gamma3 bound. Verifies |mu| = 1 and
/// 0 <= t <= 1/2 and that (c1, c2, c3) reproduce the claimed triple to 1e-10;
/// a violation would falsify the sharpness claim and throws.
ExtremalWitness gamma3_extremal(const ClassSpec& cls, int order = 16);

/// Witness attaining the gamma2 bound. For f1 and f2 this is the pair_blend
/// family (t = 1/6, theta = 0 and t = 0, theta = 0). For f3 the claimed blend
/// parameters (t = 1/10, theta = pi) do not attain the bound -- every blend
/// has |c2| = 2 while equality needs (c1, c2) = (-1/5, -49/25) -- so the
/// witness is the conjugate pair measure with mu = (-1 + i sqrt(99))/10,
/// which gives gamma2 = -2/5 exactly. The substitution is flagged.
ExtremalWitness gamma2_extremal(const ClassSpec& cls, int order = 16);

/// Witness attaining the gamma1 bound: the single-atom measure (|c1| = 2).
/// For f2 the achieved value 1/2 exceeds the stated bound 1/4; the report
/// carries the discrepancy flag instead of failing.
ExtremalWitness gamma1_extremal(const ClassSpec& cls, int order = 16);

/// All nine witnesses (three targets per class, or for one class only).
std::vector<ExtremalWitness> witness_table(std::optional<ClassId> only = std::nullopt,
                                           int order = 16);

}  // namespace logcoef
