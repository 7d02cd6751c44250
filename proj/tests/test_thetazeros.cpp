#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hookpoly/theta.hpp"
#include "hookpoly/thetazeros.hpp"

using namespace hookpoly;

TEST_CASE("the plain partition series never vanishes in the disc") {
    // t = 1: S(z) = sum p(i) z^i = 1/(z;z)_inf, zero-free on |z| < 1
    auto rep = theta_zeros(ThetaSpec{1, 0}, 0.5);
    CHECK(rep.count == 0);
    CHECK(rep.disc_zeros.empty());
    CHECK(rep.zeros.empty());
    CHECK(rep.radius > 0.66);
    CHECK(rep.radius < 0.67);
}

TEST_CASE("residue classes mod 2 are zero-free up to radius 2/3") {
    for (unsigned ell = 0; ell < 2; ++ell) {
        auto rep = theta_zeros(ThetaSpec{2, ell}, 0.5);
        CHECK(rep.count == 0);
        CHECK(rep.disc_zeros.empty());
    }
}

TEST_CASE("the class 5 mod 7 has exactly three zeros up to radius 2/3") {
    ThetaSpec spec{7, 5};
    auto rep = theta_zeros(spec, 0.5);
    REQUIRE(rep.count == 3);
    REQUIRE(rep.disc_zeros.size() == 3);
    REQUIRE(rep.zeros.size() == 3);

    // sorted by (modulus, argument): the real zero first, then the pair
    CHECK(rep.disc_zeros[0].re.to_double() == doctest::Approx(-0.305010092816).epsilon(1e-6));
    CHECK(rep.disc_zeros[0].im.abs().to_double() < 1e-8);
    CHECK(rep.disc_zeros[1].re.abs().to_double() < 1e-6);
    CHECK(rep.disc_zeros[1].im.to_double() == doctest::Approx(-0.552277188381).epsilon(1e-6));
    CHECK(rep.disc_zeros[2].im.to_double() == doctest::Approx(0.552277188381).epsilon(1e-6));

    for (const auto& z : rep.disc_zeros) {
        // each zero is certified: the series core vanishes inside the ball
        Complex f = theta_series_core(spec, z, 1e-30);
        CHECK(f.abs_lower().is_zero());
        CHECK(z.err.to_double_up() < 1e-10);
    }
    // the reported exceptional points are the reciprocals
    for (size_t i = 0; i < 3; ++i) {
        Complex prod = rep.disc_zeros[i] * rep.zeros[i];
        CHECK((prod - Complex::one(prod.re.prec())).abs_upper().to_double_up() < 1e-12);
    }
}

TEST_CASE("shrinking the disc keeps only the inner zero") {
    auto rep = theta_zeros(ThetaSpec{7, 5}, 2.0);  // radius 1/3
    REQUIRE(rep.count == 1);
    REQUIRE(rep.disc_zeros.size() == 1);
    CHECK(rep.disc_zeros[0].re.to_double() == doctest::Approx(-0.305010092816).epsilon(1e-6));
}

TEST_CASE("winding counts are stable under sampling-density doubling") {
    for (int density : {1, 2}) {
        CHECK(theta_circle_winding(ThetaSpec{7, 5}, 2.0 / 3.0, {}, density) == 3);
        CHECK(theta_circle_winding(ThetaSpec{2, 0}, 2.0 / 3.0, {}, density) == 0);
    }
}

TEST_CASE("zero reports are deterministic") {
    auto a = theta_zeros(ThetaSpec{7, 5}, 2.0);
    auto b = theta_zeros(ThetaSpec{7, 5}, 2.0);
    REQUIRE(a.disc_zeros.size() == b.disc_zeros.size());
    for (size_t i = 0; i < a.disc_zeros.size(); ++i) {
        CHECK(a.disc_zeros[i].re.str() == b.disc_zeros[i].re.str());
        CHECK(a.disc_zeros[i].im.str() == b.disc_zeros[i].im.str());
    }
}

TEST_CASE("bad parameters are rejected") {
    CHECK_THROWS_AS(theta_zeros(ThetaSpec{7, 9}, 0.5), domain_error);
    CHECK_THROWS_AS(theta_zeros(ThetaSpec{7, 5}, 0.0), domain_error);
    CHECK_THROWS_AS(theta_zeros(ThetaSpec{7, 5}, -0.2), domain_error);
    CHECK_THROWS_AS(theta_circle_winding(ThetaSpec{7, 5}, 1.25), domain_error);
}
