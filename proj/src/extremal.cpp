#include "logcoef/extremal.hpp"

#include <cmath>
#include <stdexcept>

namespace logcoef {

namespace {
constexpr double kTripleTol = 1e-10;
}  // namespace

ExtremalWitness gamma3_extremal(const ClassSpec& cls, int order) {
    const ClaimedValues& ref = claimed(cls.id());
    if (std::abs(std::abs(ref.witness_mu) - 1.0) > 1e-12)
        throw std::runtime_error("gamma3_extremal: witness mu is not unimodular");
    if (ref.witness_t < 0.0 || ref.witness_t > 0.5)
        throw std::runtime_error("gamma3_extremal: witness t outside [0, 1/2]");
    const AtomicHerglotz h(ref.witness_atoms);
    const std::vector<Complex> c = h.coefficients(3);
    if (std::abs(c[0] - ref.c1) > kTripleTol || std::abs(c[1] - ref.c2) > kTripleTol ||
        std::abs(c[2] - ref.c3) > kTripleTol)
        throw std::runtime_error("gamma3_extremal: witness does not reproduce the coefficient triple");

    const CtcFunction f = build_ctc(cls, h, order);
    ExtremalWitness w{cls.id(), 3, h, ref.gamma3_bound, std::abs(gammas123(f).g3),
                      membership_min(f), {}};
    if (std::abs(ref.c3_stated - ref.c3) > kTripleTol) {
        const auto stated =
            gammas123_from_coeffs(cls, ref.c1, ref.c2, ref.c3_stated);
        w.flags.push_back(
            "gamma3 witness: the stated triple carries c3 = " +
            std::to_string(ref.c3_stated.real()) + " (the t = +1 branch), which achieves only " +
            "|gamma3| = " + std::to_string(std::abs(stated.g3)) +
            "; equality needs the t = -1 branch with c3 = " + std::to_string(ref.c3.real()) +
            ", realized by the three-atom measure with its real atom at -1");
    }
    return w;
}

ExtremalWitness gamma2_extremal(const ClassSpec& cls, int order) {
    const ClaimedValues& ref = claimed(cls.id());
    std::vector<std::string> flags;
    AtomicHerglotz h = [&]() -> AtomicHerglotz {
        switch (cls.id()) {
            case ClassId::F1: return AtomicHerglotz::pair_blend(1.0 / 6.0, 0.0);
            case ClassId::F2: return AtomicHerglotz::pair_blend(0.0, 0.0);
            case ClassId::F3: {
                // claimed blend parameters t = 1/10, theta = pi give only
                // |gamma2| = 13/50; equality needs c2 = -49/25, unreachable
                // for any blend (|c2| = 2), hence the conjugate pair below
                const Complex mu{-0.1, std::sqrt(99.0) / 10.0};
                flags.push_back(
                    "gamma2 witness: claimed blend parameters (t=1/10, theta=pi) achieve only "
                    "|gamma2| = 13/50; using the conjugate-pair measure with mu = (-1+i*sqrt(99))/10, "
                    "which attains 2/5");
                return AtomicHerglotz::conjugate_triple(0.5, mu);
            }
        }
        throw std::logic_error("unreachable");
    }();
    const CtcFunction f = build_ctc(cls, h, order);
    ExtremalWitness w{cls.id(), 2, h, ref.gamma2_bound, std::abs(gammas123(f).g2),
                      membership_min(f), std::move(flags)};
    return w;
}

ExtremalWitness gamma1_extremal(const ClassSpec& cls, int order) {
    const ClaimedValues& ref = claimed(cls.id());
    const AtomicHerglotz h = AtomicHerglotz::pair_blend(1.0, 0.0);
    const CtcFunction f = build_ctc(cls, h, order);
    ExtremalWitness w{cls.id(), 1, h, ref.gamma1_bound, std::abs(gammas123(f).g1),
                      membership_min(f), {}};
    if (ref.gamma1_stated < ref.gamma1_bound) {
        w.flags.push_back("gamma1 stated bound " + std::to_string(ref.gamma1_stated) +
                          " is exceeded by the witness (|gamma1| = " +
                          std::to_string(w.achieved_value) +
                          ", ratio 2.0); operative bound is " +
                          std::to_string(ref.gamma1_bound));
    }
    return w;
}

std::vector<ExtremalWitness> witness_table(std::optional<ClassId> only, int order) {
    std::vector<ExtremalWitness> table;
    for (ClassId id : {ClassId::F1, ClassId::F2, ClassId::F3}) {
        if (only && *only != id) continue;
        const ClassSpec& cls = ClassSpec::get(id);
        table.push_back(gamma1_extremal(cls, order));
        table.push_back(gamma2_extremal(cls, order));
        table.push_back(gamma3_extremal(cls, order));
    }
    return table;
}

}  // namespace logcoef
