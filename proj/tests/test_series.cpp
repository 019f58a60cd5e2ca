#include <doctest.h>

#include <cmath>

#include "logcoef/rng.hpp"
#include "logcoef/series.hpp"

using logcoef::Complex;
using logcoef::TruncatedSeries;

namespace {

TruncatedSeries geometric(int order) {
    std::vector<Complex> c(static_cast<size_t>(order) + 1, Complex{1.0, 0.0});
    return TruncatedSeries(std::move(c));
}

TruncatedSeries from_reals(std::vector<double> v) {
    std::vector<Complex> c(v.size());
    for (size_t i = 0; i < v.size(); ++i) c[i] = Complex{v[i], 0.0};
    return TruncatedSeries(std::move(c));
}

/// independent convolution oracle for products
std::vector<Complex> brute_convolution(const TruncatedSeries& u, const TruncatedSeries& v,
                                       int order) {
    std::vector<Complex> out(static_cast<size_t>(order) + 1, Complex{});
    for (int i = 0; i <= u.order(); ++i)
        for (int j = 0; j <= v.order(); ++j)
            if (i + j <= order) out[static_cast<size_t>(i + j)] += u[i] * v[j];
    return out;
}

}  // namespace

TEST_CASE("product truncates to the minimum order") {
    const auto u = from_reals({1.0, 1.0});              // 1 + z
    const auto v = from_reals({1.0, -1.0, 0.0, 0.0});   // 1 - z
    const auto w = u * v;
    CHECK(w.order() == 1);
    CHECK(w[0] == Complex{1.0, 0.0});
    CHECK(w[1] == Complex{0.0, 0.0});

    const auto w2 = u.resized(5) * v.resized(5);        // 1 - z^2
    CHECK(w2.order() == 5);
    CHECK(w2[2] == Complex{-1.0, 0.0});
    for (int n : {1, 3, 4, 5}) CHECK(std::abs(w2[n]) == 0.0);
}

TEST_CASE("squared geometric series has coefficients n+1") {
    const auto w = geometric(12) * geometric(12);
    for (int n = 0; n <= 12; ++n) CHECK(w[n].real() == doctest::Approx(n + 1.0).epsilon(1e-15));
}

TEST_CASE("product z/(1-z) * (1+z)/(1-z) against the convolution oracle") {
    const int order = 10;
    auto zg = from_reals({0.0, 1.0}).resized(order);  // z
    const auto g = zg * geometric(order);             // z/(1-z)
    const auto h = from_reals({1.0, 1.0}).resized(order) * geometric(order);  // (1+z)/(1-z)
    const auto w = g * h;
    const auto oracle = brute_convolution(g, h, order);
    for (int n = 0; n <= order; ++n) CHECK(std::abs(w[n] - oracle[n]) <= 1e-14);
    for (int n = 1; n <= order; ++n)
        CHECK(w[n].real() == doctest::Approx(2.0 * n - 1.0).epsilon(1e-14));
}

TEST_CASE("division inverts the geometric series") {
    const auto one = TruncatedSeries::constant(1.0, 16);
    const auto w = one / from_reals({1.0, -1.0}).resized(16);
    for (int n = 0; n <= 16; ++n) CHECK(w[n].real() == doctest::Approx(1.0));
}

TEST_CASE("1/(1-z+z^2) repeats with period six") {
    // long-division oracle: the pattern 1,1,0,-1,-1,0
    const auto w = TruncatedSeries::constant(1.0, 17) / from_reals({1.0, -1.0, 1.0}).resized(17);
    const double pattern[6] = {1.0, 1.0, 0.0, -1.0, -1.0, 0.0};
    for (int n = 0; n <= 17; ++n) {
        CHECK(w[n].real() == doctest::Approx(pattern[n % 6]).epsilon(1e-14));
        CHECK(w[n].imag() == 0.0);
    }
}

TEST_CASE("division by a zero constant term is rejected") {
    const auto u = from_reals({1.0, 1.0});
    const auto v = from_reals({0.0, 1.0});
    CHECK_THROWS_AS(u / v, std::domain_error);
}

TEST_CASE("shifted_down divides by z") {
    const auto w = from_reals({0.0, 1.0, 1.0}).shifted_down();  // (z + z^2)/z
    CHECK(w.order() == 1);
    CHECK(w[0].real() == 1.0);
    CHECK(w[1].real() == 1.0);
    CHECK_THROWS_AS(from_reals({0.5, 1.0}).shifted_down(), std::domain_error);
}

TEST_CASE("log of 1/(1-z) is the harmonic series") {
    const auto L = logcoef::log_series(geometric(30));
    for (int n = 1; n <= 30; ++n)
        CHECK(std::abs(L[n].real() - 1.0 / n) <= 1e-14);
}

TEST_CASE("log of 1+z alternates") {
    const auto L = logcoef::log_series(from_reals({1.0, 1.0}).resized(20));
    for (int n = 1; n <= 20; ++n)
        CHECK(L[n].real() == doctest::Approx((n % 2 ? 1.0 : -1.0) / n).epsilon(1e-13));
}

TEST_CASE("log rejects a constant term away from 1") {
    CHECK_THROWS_AS(logcoef::log_series(from_reals({1.5, 1.0})), std::domain_error);
}

TEST_CASE("koebe logarithmic coefficients are 1/n") {
    // k(z) = z/(1-z)^2 has coefficients n at z^n
    const int order = 51;
    std::vector<Complex> k(static_cast<size_t>(order) + 1);
    for (int n = 0; n <= order; ++n) k[static_cast<size_t>(n)] = Complex{double(n), 0.0};
    const auto g = logcoef::log_coefficients(TruncatedSeries(std::move(k)));
    REQUIRE(g.order() == 50);
    for (int n = 1; n <= 50; ++n) CHECK(std::abs(g.gamma(n) - Complex{1.0 / n, 0.0}) <= 1e-12);
}

TEST_CASE("identity has vanishing logarithmic coefficients") {
    const auto g = logcoef::log_coefficients(from_reals({0.0, 1.0}).resized(16));
    for (int n = 1; n <= g.order(); ++n) CHECK(std::abs(g.gamma(n)) == 0.0);
}

TEST_CASE("gamma3 closed form equals the series route") {
    // both routes on a2, a3, a4 = 3/2, 5/3, 7/4
    const double a2 = 1.5, a3 = 5.0 / 3.0, a4 = 1.75;
    const auto g = logcoef::log_coefficients(from_reals({0.0, 1.0, a2, a3, a4}).resized(8));
    const double expected = 0.5 * (a4 - a2 * a3 + a2 * a2 * a2 / 3.0);
    CHECK(std::abs(g.gamma(1).real() - 0.5 * a2) <= 1e-12);
    CHECK(std::abs(g.gamma(2).real() - 0.5 * (a3 - 0.5 * a2 * a2)) <= 1e-12);
    CHECK(std::abs(g.gamma(3).real() - expected) <= 1e-12);
}

TEST_CASE("log_coefficients rejects a broken normalization") {
    CHECK_THROWS_AS(logcoef::log_coefficients(from_reals({0.0, 2.0, 1.0})), std::domain_error);
    CHECK_THROWS_AS(logcoef::log_coefficients(from_reals({1.0, 1.0, 1.0})), std::domain_error);
}

TEST_CASE("exp undoes log at order 50") {
    logcoef::SplitMix64 rng(2024);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Complex> c(51);
        c[0] = Complex{1.0, 0.0};
        for (size_t n = 1; n < c.size(); ++n)
            c[n] = Complex{rng.next_double() - 0.5, rng.next_double() - 0.5};
        const TruncatedSeries u(std::move(c));
        const auto back = logcoef::exp_series(logcoef::log_series(u));
        for (int n = 0; n <= 50; ++n) CHECK(std::abs(back[n] - u[n]) <= 1e-11);
    }
}

TEST_CASE("log coefficients add under multiplication of unit-constant factors") {
    logcoef::SplitMix64 rng(77);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Complex> uc(17), vc(17);
        uc[0] = vc[0] = Complex{1.0, 0.0};
        for (size_t n = 1; n < uc.size(); ++n) {
            uc[n] = Complex{0.5 * (rng.next_double() - 0.5), 0.5 * (rng.next_double() - 0.5)};
            vc[n] = Complex{0.5 * (rng.next_double() - 0.5), 0.5 * (rng.next_double() - 0.5)};
        }
        const TruncatedSeries u(uc), v(vc);
        // f = z u v  ->  gamma_n(f) = (log u + log v)_n / 2
        std::vector<Complex> fc(18, Complex{});
        const auto prod = u * v;
        for (int n = 0; n <= 16; ++n) fc[static_cast<size_t>(n + 1)] = prod[n];
        const auto g = logcoef::log_coefficients(TruncatedSeries(std::move(fc)));
        const auto lu = logcoef::log_series(u), lv = logcoef::log_series(v);
        for (int n = 1; n <= 16; ++n)
            CHECK(std::abs(g.gamma(n) - 0.5 * (lu[n] + lv[n])) <= 1e-12);
    }
}
