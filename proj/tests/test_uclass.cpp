#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "uclass.hpp"

using namespace ulog;

namespace {

SchwarzCoeffs coeffs(cplx c1, cplx c2 = 0.0, cplx c3 = 0.0) {
    SchwarzCoeffs w;
    w.c = {c1, c2, c3};
    return w;
}

} // namespace

TEST_CASE("lambda_star values and limits") {
    CHECK(lambda_star(0.5) == doctest::Approx(0.707106781186547524).epsilon(1e-14));
    CHECK(lambda_star(1e-9) == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(lambda_star(1.0 - 1e-9) < 1e-8);
    CHECK_THROWS_AS(lambda_star(0.0), std::invalid_argument);
    CHECK_THROWS_AS(lambda_star(1.0), std::invalid_argument);
}

TEST_CASE("lambda_star is strictly decreasing") {
    double prev = lambda_star(1.0 / 1001);
    for (int i = 2; i <= 1000; ++i) {
        double cur = lambda_star(static_cast<double>(i) / 1001);
        CHECK(cur < prev);
        prev = cur;
    }
}

TEST_CASE("ClassParams validation and the star flag") {
    CHECK_THROWS_AS(ClassParams(1.2, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(ClassParams(0.5, 0.0), std::invalid_argument);
    CHECK(ClassParams(0.5, 0.5).within_star());
    CHECK_FALSE(ClassParams(0.9, 0.5).within_star());
}

TEST_CASE("build_function on the single-c1 extremal") {
    ClassParams p(0.5, 0.5);
    auto s = build_function(p, coeffs(1.0), 8);
    CHECK(std::abs(s[0] - cplx{1, 0}) < 1e-14);
    // f1(z)/z = (1 - (a L/(1-a)) z)^(-1/a): second coefficient L/(1-a) = 1
    CHECK(std::abs(s[1] - cplx{1, 0}) < 1e-12);
}

TEST_CASE("build_function of the zero Schwarz function is 1") {
    ClassParams p(0.3, 0.4);
    auto s = build_function(p, coeffs(0.0), 6);
    CHECK(std::abs(s[0] - cplx{1, 0}) < 1e-15);
    for (int k = 1; k <= 6; ++k)
        CHECK(std::abs(s[k]) < 1e-15);
}

TEST_CASE("coeffs_a closed forms") {
    ClassParams p(0.5, 0.5);
    auto a = coeffs_a(p, coeffs(1.0));
    CHECK(std::abs(a.a2 - cplx{1, 0}) < 1e-14);
    CHECK(std::abs(a.a3 - cplx{0.75, 0}) < 1e-14);
    CHECK(std::abs(a.a4 - cplx{0.5, 0}) < 1e-14);

    ClassParams q(0.6, 0.3);
    auto b = coeffs_a(q, coeffs(0.0, 1.0));
    CHECK(std::abs(b.a2) < 1e-15);
    CHECK(std::abs(b.a3 - cplx{0.3 / 1.4, 0}) < 1e-14);
    CHECK(std::abs(b.a4) < 1e-15);
}

TEST_CASE("log_coeffs_closed single-coefficient cases") {
    ClassParams p(0.5, 0.5);
    auto g = log_coeffs_closed(p, coeffs(1.0));
    CHECK(std::abs(g.g1 - cplx{0.5, 0}) < 1e-14);

    ClassParams q(0.3, 0.4);
    auto g3 = log_coeffs_closed(q, coeffs(0.0, 0.0, 1.0));
    CHECK(std::abs(g3.g1) < 1e-15);
    CHECK(std::abs(g3.g2) < 1e-15);
    CHECK(std::abs(g3.g3 - cplx{0.4 / 5.4, 0}) < 1e-14);

    ClassParams r(0.6, 0.3);
    auto g2 = log_coeffs_closed(r, coeffs(0.0, 1.0));
    CHECK(std::abs(g2.g2 - cplx{0.25 * 2 * 0.3 / 1.4, 0}) < 1e-14);
}

TEST_CASE("mu_nu") {
    auto [mu, nu] = mu_nu(ClassParams(0.5, 0.5));
    CHECK(mu == doctest::Approx(5.0 / 6.0).epsilon(1e-14));
    CHECK(nu == doctest::Approx(5.0 / 12.0).epsilon(1e-14));

    auto [mu0, nu0] = mu_nu(ClassParams(0.5, 1e-9));
    CHECK(mu0 < 1e-8);
    CHECK(nu0 < 1e-15);
}

TEST_CASE("series pipeline agrees with closed forms on random inputs") {
    std::mt19937 rng(31);
    std::uniform_real_distribution<double> ua(0.05, 0.95);
    std::uniform_real_distribution<double> um(0.0, 1.0);
    std::uniform_real_distribution<double> uph(0.0, 2 * 3.141592653589793);
    for (int trial = 0; trial < 200; ++trial) {
        double alpha = ua(rng);
        double lambda = um(rng) * lambda_star(alpha);
        if (lambda <= 0.0)
            continue;
        ClassParams p(alpha, lambda);
        SchwarzCoeffs w;
        // random point of the two-coefficient body plus a small c3
        double m1 = um(rng);
        w.c[0] = std::polar(m1, uph(rng));
        w.c[1] = std::polar((1 - m1 * m1) * um(rng), uph(rng));
        w.c[2] = std::polar(0.3 * um(rng), uph(rng));

        auto s = build_function(p, w, 8);
        auto a = coeffs_a(p, w);
        CHECK(std::abs(a.a2 - s[1]) < 1e-10);
        CHECK(std::abs(a.a3 - s[2]) < 1e-10);
        CHECK(std::abs(a.a4 - s[3]) < 1e-10);

        auto lg = log1(s);
        auto g = log_coeffs_closed(p, w);
        CHECK(std::abs(g.g1 - 0.5 * lg[1]) < 1e-10);
        CHECK(std::abs(g.g2 - 0.5 * lg[2]) < 1e-10);
        CHECK(std::abs(g.g3 - 0.5 * lg[3]) < 1e-10);

        // Eq-(9)-style combination of the a's
        auto ga = log_coeffs_from_a(a);
        CHECK(std::abs(g.g1 - ga.g1) < 1e-12);
        CHECK(std::abs(g.g2 - ga.g2) < 1e-12);
        CHECK(std::abs(g.g3 - ga.g3) < 1e-12);
    }
}

TEST_CASE("membership residual of the identity is zero") {
    ClassParams p(0.5, 0.5);
    CHECK(membership_residual(TruncatedSeries::one(10), p, 0.9, 64) < 1e-14);
}

TEST_CASE("membership residual equals lambda * r for w(z) = z") {
    ClassParams p(0.5, 0.5);
    auto s = build_function(p, coeffs(1.0), 24);
    CHECK(membership_residual(s, p, 0.9, 128) == doctest::Approx(0.45).epsilon(1e-3));
}

TEST_CASE("membership residual equals lambda * r^3 for w(z) = z^3") {
    ClassParams p(0.3, 0.4);
    auto s = build_function(p, coeffs(0.0, 0.0, 1.0), 24);
    CHECK(membership_residual(s, p, 0.8, 128) == doctest::Approx(0.4 * 0.512).epsilon(1e-3));
}

TEST_CASE("membership residual rejects bad radius") {
    ClassParams p(0.5, 0.5);
    CHECK_THROWS_AS(membership_residual(TruncatedSeries::one(4), p, 1.0, 64),
                    std::invalid_argument);
}
