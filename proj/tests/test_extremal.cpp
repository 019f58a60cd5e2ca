#include <doctest.h>

#include <cmath>

#include "logcoef/extremal.hpp"
#include "logcoef/search.hpp"

using logcoef::ClassId;
using logcoef::ClassSpec;
using logcoef::Complex;

TEST_CASE("witness mu values are exactly unimodular") {
    // each |mu|^2 - 1 reduces to an exact algebraic identity, e.g.
    // (1 + sqrt(30))^2 + 113 - 2 sqrt(30) = 144
    for (ClassId id : {ClassId::F1, ClassId::F2, ClassId::F3}) {
        const auto& ref = logcoef::claimed(id);
        CHECK(std::abs(std::norm(ref.witness_mu) - 1.0) <= 1e-12);
        CHECK(ref.witness_t >= 0.0);
        CHECK(ref.witness_t <= 0.5);
    }
    CHECK(logcoef::claimed(ClassId::F1).witness_t == doctest::Approx(0.28228).epsilon(1e-4));
    CHECK(logcoef::claimed(ClassId::F2).witness_t == doctest::Approx(0.27823).epsilon(1e-4));
    CHECK(logcoef::claimed(ClassId::F3).witness_t == doctest::Approx(0.32855).epsilon(1e-4));
}

TEST_CASE("gamma3 witnesses reproduce the operative coefficient triples") {
    for (ClassId id : {ClassId::F1, ClassId::F2, ClassId::F3}) {
        const auto w = logcoef::gamma3_extremal(ClassSpec::get(id));
        const auto& ref = logcoef::claimed(id);
        const auto c = w.herglotz.coefficients(3);
        CHECK(std::abs(c[0] - ref.c1) <= 1e-10);
        CHECK(std::abs(c[1] - ref.c2) <= 1e-10);
        CHECK(std::abs(c[2] - ref.c3) <= 1e-10);
    }
}

TEST_CASE("the stated f3 triple misses the bound and is flagged") {
    // the stated c3 = (47525 sqrt(262) - 698926)/44712 = +1.57303 pairs with
    // t = +1; at the p = -1 argmax the modulus block is negative, so the
    // aligned extremal needs t = -1 and c3 = (14237 sqrt(262) - 319654)/44712
    const auto& ref = logcoef::claimed(ClassId::F3);
    CHECK(ref.c3_stated.real() == doctest::Approx(1.5730302).epsilon(1e-7));
    CHECK(ref.c3.real() == doctest::Approx(-1.9951696).epsilon(1e-7));
    const auto stated = logcoef::gammas123_from_coeffs(ClassSpec::get(ClassId::F3), ref.c1,
                                                       ref.c2, ref.c3_stated);
    CHECK(std::abs(stated.g3) == doctest::Approx(0.0777868).epsilon(1e-5));
    // both triples are feasible (|t| = 1 on opposite branches)
    const auto rec_stated = logcoef::params_from_coeffs(ref.c1, ref.c2, ref.c3_stated);
    const auto rec_fixed = logcoef::params_from_coeffs(ref.c1, ref.c2, ref.c3);
    CHECK(rec_stated.t.real() == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(rec_fixed.t.real() == doctest::Approx(-1.0).epsilon(1e-9));

    const auto w = logcoef::gamma3_extremal(ClassSpec::get(ClassId::F3));
    REQUIRE(!w.flags.empty());
    CHECK(w.flags[0].find("t = -1") != std::string::npos);
    // the f1 and f2 witnesses are unflagged: their stated triples attain
    CHECK(logcoef::gamma3_extremal(ClassSpec::get(ClassId::F1)).flags.empty());
    CHECK(logcoef::gamma3_extremal(ClassSpec::get(ClassId::F2)).flags.empty());
}

TEST_CASE("gamma3 witnesses achieve the claimed bounds") {
    const auto f1 = logcoef::gamma3_extremal(ClassSpec::get(ClassId::F1));
    CHECK(std::abs(f1.achieved_value - f1.claimed_value) <= 1e-10);
    CHECK(f1.claimed_value == doctest::Approx(0.3234666).epsilon(1e-6));

    const auto f2 = logcoef::gamma3_extremal(ClassSpec::get(ClassId::F2));
    CHECK(std::abs(f2.achieved_value - f2.claimed_value) <= 1e-10);
    CHECK(f2.claimed_value == doctest::Approx(0.2582239).epsilon(1e-6));

    const auto f3 = logcoef::gamma3_extremal(ClassSpec::get(ClassId::F3));
    CHECK(std::abs(f3.achieved_value - f3.claimed_value) <= 1e-10);
    CHECK(f3.claimed_value == doctest::Approx(0.3682382).epsilon(1e-6));
}

TEST_CASE("gamma2 witnesses") {
    const auto f1 = logcoef::gamma2_extremal(ClassSpec::get(ClassId::F1));
    CHECK(std::abs(f1.achieved_value - 4.0 / 9.0) <= 1e-12);
    CHECK(f1.flags.empty());

    const auto f2 = logcoef::gamma2_extremal(ClassSpec::get(ClassId::F2));
    CHECK(std::abs(f2.achieved_value - 0.5) <= 1e-12);

    // the f3 witness deviates from the claimed blend parameters (flagged):
    // it is the conjugate pair with c1 = -1/5, c2 = -49/25
    const auto f3 = logcoef::gamma2_extremal(ClassSpec::get(ClassId::F3));
    CHECK(std::abs(f3.achieved_value - 0.4) <= 1e-12);
    REQUIRE(!f3.flags.empty());
    CHECK(f3.flags[0].find("13/50") != std::string::npos);
    const auto c = f3.herglotz.coefficients(2);
    CHECK(std::abs(c[0] - Complex{-0.2, 0.0}) <= 1e-12);
    CHECK(std::abs(c[1] - Complex{-1.96, 0.0}) <= 1e-12);
}

TEST_CASE("gamma1 witnesses and the f2 discrepancy flag") {
    const auto f1 = logcoef::gamma1_extremal(ClassSpec::get(ClassId::F1));
    CHECK(std::abs(f1.achieved_value - 0.75) <= 1e-12);
    CHECK(f1.flags.empty());

    const auto f3 = logcoef::gamma1_extremal(ClassSpec::get(ClassId::F3));
    CHECK(std::abs(f3.achieved_value - 0.75) <= 1e-12);

    const auto f2 = logcoef::gamma1_extremal(ClassSpec::get(ClassId::F2));
    CHECK(std::abs(f2.achieved_value - 0.5) <= 1e-12);
    REQUIRE(!f2.flags.empty());
    CHECK(f2.flags[0].find("ratio 2.0") != std::string::npos);
}

TEST_CASE("every witness is a sampled member of its class") {
    for (const auto& w : logcoef::witness_table()) {
        CHECK(w.membership > 0.0);
    }
}

TEST_CASE("witness values agree with the search maxima") {
    // achieved |gamma| equals the search maximum divided by the scale
    for (ClassId id : {ClassId::F1, ClassId::F2, ClassId::F3}) {
        const auto& cls = ClassSpec::get(id);
        const auto report = logcoef::verify_claimed_max(cls, logcoef::Target::Gamma3, 81);
        const auto witness = logcoef::gamma3_extremal(cls);
        CHECK(std::abs(report.max_value / report.scale - witness.achieved_value) <= 1e-6);
    }
}

TEST_CASE("witness triples sit on the argmax parameters of the box") {
    // recovering (x, t) from each operative triple lands on the class argmax:
    // x = r for the p = 1 classes, x = -r for f3 (p = -1), and |t| = 1 with
    // the sign that aligns the t block with the modulus block
    for (ClassId id : {ClassId::F1, ClassId::F2, ClassId::F3}) {
        const auto& ref = logcoef::claimed(id);
        const auto rec = logcoef::params_from_coeffs(ref.c1, ref.c2, ref.c3);
        const double expected_x = ref.gamma3_argmax.r * ref.gamma3_argmax.p;
        CHECK(std::abs(rec.x - Complex{expected_x, 0.0}) <= 1e-10);
        const double expected_t = id == ClassId::F3 ? -1.0 : 1.0;
        CHECK(std::abs(rec.t - Complex{expected_t, 0.0}) <= 1e-9);
        CHECK(rec.feasible);
    }
}
