#pragma once

#include "logcoef/classes.hpp"
#include "logcoef/objectives.hpp"

namespace logcoef {

/// Closed-form targets of the verification runs, one set per class. The
/// radical expressions are evaluated in long double before rounding so the
/// 1e-10 comparisons downstream are not limited by constant evaluation.
struct ClaimedValues {
    ClassId id;

    double gamma1_bound;          // operative bound (attained by a witness)
    double gamma1_stated;         // as printed in the claim; differs for f2

    double gamma2_bound;          // |gamma2| bound
    double gamma2_objective_max;  // at the 6|gamma2| scale
    Gamma2Point gamma2_argmax;    // of the square objective (f2: constant route)

    double gamma3_bound;          // |gamma3| bound
    double gamma3_display_max;    // at the class display scale (f1: 48, else 96)
    CuboidPoint gamma3_argmax;

    // stated three-atom witness parameters (unimodular mu, t in [0, 1/2])
    double witness_t;
    Complex witness_mu;
    // coefficient triple the achieving witness must reproduce; for f3 the
    // stated c3 belongs to the t = +1 branch and misses the bound, so c3
    // here carries the t = -1 value and c3_stated keeps the original
    Complex c1, c2, c3;
    Complex c3_stated;
    // measure that attains the gamma3 bound
    std::vector<AtomicHerglotz::Atom> witness_atoms;
};

const ClaimedValues& claimed(ClassId id);

}  // namespace logcoef
