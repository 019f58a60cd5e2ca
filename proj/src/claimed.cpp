#include "logcoef/claimed.hpp"

#include <cmath>
#include <stdexcept>

namespace logcoef {

namespace {

double ld(long double v) { return static_cast<double>(v); }

std::vector<AtomicHerglotz::Atom> triple_atoms(double t, Complex mu) {
    return {{1.0 - 2.0 * t, Complex{1.0, 0.0}}, {t, mu}, {t, std::conj(mu)}};
}

ClaimedValues make_f1() {
    const long double s30 = sqrtl(30.0L);
    ClaimedValues v{};
    v.id = ClassId::F1;
    v.gamma1_bound = 0.75;
    v.gamma1_stated = 0.75;
    v.gamma2_bound = ld(4.0L / 9.0L);
    v.gamma2_objective_max = ld(8.0L / 3.0L);
    v.gamma2_argmax = {ld(1.0L / 3.0L), 1.0};
    v.gamma3_bound = ld((11.0L + 15.0L * s30) / 288.0L);
    v.gamma3_display_max = ld((11.0L + 15.0L * s30) / 6.0L);
    v.gamma3_argmax = {ld((6.0L - s30) / 2.0L), ld((25.0L - s30) / 105.0L), 1.0};
    v.witness_t = ld(3.0L * (15.0L * s30 - 56.0L) / 278.0L);
    v.witness_mu = Complex(ld((-1.0L - s30) / 12.0L), ld(sqrtl(113.0L - 2.0L * s30) / 12.0L));
    v.c1 = Complex(ld((6.0L - s30) / 2.0L), 0.0);
    v.c2 = Complex(ld((76.0L - 13.0L * s30) / 12.0L), 0.0);
    v.c3 = Complex(ld((554.0L - 75.0L * s30) / 72.0L), 0.0);
    v.c3_stated = v.c3;
    v.witness_atoms = triple_atoms(v.witness_t, v.witness_mu);
    return v;
}

ClaimedValues make_f2() {
    const long double s46 = sqrtl(46.0L);
    ClaimedValues v{};
    v.id = ClassId::F2;
    v.gamma1_bound = 0.5;
    v.gamma1_stated = 0.25;
    v.gamma2_bound = 0.5;
    v.gamma2_objective_max = 3.0;
    v.gamma2_argmax = {0.0, -1.0};
    v.gamma3_bound = ld((95.0L + 23.0L * s46) / 972.0L);
    v.gamma3_display_max = ld(8.0L * (95.0L + 23.0L * s46) / 81.0L);
    v.gamma3_argmax = {ld((8.0L - s46) / 3.0L), ld((11.0L - s46) / 75.0L), 1.0};
    v.witness_t = ld((s46 - 4.0L) / 10.0L);
    v.witness_mu = Complex(ld((-1.0L - s46) / 18.0L), ld(sqrtl(277.0L - 2.0L * s46) / 18.0L));
    v.c1 = Complex(ld((8.0L - s46) / 3.0L), 0.0);
    v.c2 = Complex(ld((134.0L - 19.0L * s46) / 27.0L), 0.0);
    v.c3 = Complex(ld(2.0L * (721.0L - 71.0L * s46) / 243.0L), 0.0);
    v.c3_stated = v.c3;
    v.witness_atoms = triple_atoms(v.witness_t, v.witness_mu);
    return v;
}

ClaimedValues make_f3() {
    const long double s262 = sqrtl(262.0L);
    ClaimedValues v{};
    v.id = ClassId::F3;
    v.gamma1_bound = 0.75;
    v.gamma1_stated = 0.75;
    v.gamma2_bound = 0.4;
    v.gamma2_objective_max = 2.4;
    v.gamma2_argmax = {0.2, -1.0};
    v.gamma3_bound = ld((743.0L + 131.0L * s262) / 7776.0L);
    v.gamma3_display_max = ld((743.0L + 131.0L * s262) / 81.0L);
    v.gamma3_argmax = {ld((-14.0L + s262) / 6.0L), ld((3.0L + s262) / 69.0L), -1.0};
    v.witness_t = ld((32352.0L - 687.0L * s262) / 64622.0L);
    v.witness_mu = Complex(ld((-769.0L + 35.0L * s262) / 828.0L),
                           ld(sqrtl(-226727.0L + 53830.0L * s262) / 828.0L));
    v.c1 = Complex(ld((-14.0L + s262) / 6.0L), 0.0);
    v.c2 = Complex(ld((548.0L - 37.0L * s262) / 108.0L), 0.0);
    v.c3_stated = Complex(ld((47525.0L * s262 - 698926.0L) / 44712.0L), 0.0);
    // the stated c3 belongs to the t = +1 branch of the parametrization; at
    // the argmax the modulus block is negative real, so equality needs
    // t = -1, which shifts c3 by -(4-c1^2)(1-r^2):
    //   c3 = (14237 sqrt(262) - 319654)/44712 = -1.99517
    v.c3 = Complex(ld((14237.0L * s262 - 319654.0L) / 44712.0L), 0.0);

    // the attaining measure has its real atom at -1:
    //   c_n = 2(1-2w)(-1)^n + 4w Re(mu^n),
    // and (w, Re mu) solve the three coefficient equations exactly
    const long double c1 = (-14.0L + s262) / 6.0L;
    const long double c2 = (548.0L - 37.0L * s262) / 108.0L;
    const long double c3 = (14237.0L * s262 - 319654.0L) / 44712.0L;
    const long double ratio = (c1 + c2) / (c3 - c1);
    const long double disc = (4.0L * ratio + 2.0L) * (4.0L * ratio + 2.0L) - 16.0L * ratio;
    const long double u = ((4.0L * ratio + 2.0L) - sqrtl(disc)) / (8.0L * ratio);
    const long double w = (c1 + c2) / ((2.0L * u - 1.0L) * (u + 1.0L)) / 4.0L;
    const Complex mu_w(ld(u), ld(sqrtl(1.0L - u * u)));
    v.witness_atoms = {{ld(1.0L - 2.0L * w), Complex{-1.0, 0.0}},
                       {ld(w), mu_w},
                       {ld(w), std::conj(mu_w)}};
    return v;
}

}  // namespace

const ClaimedValues& claimed(ClassId id) {
    static const ClaimedValues f1 = make_f1();
    static const ClaimedValues f2 = make_f2();
    static const ClaimedValues f3 = make_f3();
    switch (id) {
        case ClassId::F1: return f1;
        case ClassId::F2: return f2;
        case ClassId::F3: return f3;
    }
    throw std::logic_error("unreachable");
}

}  // namespace logcoef
