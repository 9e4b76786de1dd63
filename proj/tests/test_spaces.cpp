#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "tph/numerics.hpp"
#include "tph/spaces.hpp"

using namespace tph;

TEST_CASE("space parameters from (family, m)") {
    Space s2 = make_space(Family::sphere, 2);
    CHECK(s2.alpha == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(s2.beta == doctest::Approx(0.0).epsilon(1e-15));

    Space circle = make_space(Family::sphere, 1);
    CHECK(circle.alpha == doctest::Approx(-0.5));
    CHECK(circle.beta == doctest::Approx(-0.5));

    Space rp2 = make_space(Family::real_projective, 2);
    CHECK(rp2.alpha == doctest::Approx(0.0));
    CHECK(rp2.beta == doctest::Approx(-0.5));

    Space cp4 = make_space(Family::complex_projective, 4);
    CHECK(cp4.alpha == doctest::Approx(1.0));
    CHECK(cp4.beta == doctest::Approx(0.0));

    Space hp8 = make_space(Family::quaternion_projective, 8);
    CHECK(hp8.alpha == doctest::Approx(3.0));
    CHECK(hp8.beta == doctest::Approx(1.0));

    Space ca = make_space(Family::cayley_plane, 16);
    CHECK(ca.alpha == doctest::Approx(7.0));
    CHECK(ca.beta == doctest::Approx(3.0));

    // alpha = (m-2)/2 across the whole catalog
    for (const Space& sp : catalog()) CHECK(sp.alpha == doctest::Approx((sp.m - 2) / 2.0));
}

TEST_CASE("inadmissible dimensions are rejected") {
    CHECK_THROWS_AS(make_space(Family::sphere, 0), std::invalid_argument);
    CHECK_THROWS_AS(make_space(Family::real_projective, 1), std::invalid_argument);
    CHECK_THROWS_AS(make_space(Family::complex_projective, 5), std::invalid_argument);
    CHECK_THROWS_AS(make_space(Family::complex_projective, 2), std::invalid_argument);
    CHECK_THROWS_AS(make_space(Family::quaternion_projective, 10), std::invalid_argument);
    CHECK_THROWS_AS(make_space(Family::quaternion_projective, 4), std::invalid_argument);
    CHECK_THROWS_AS(make_space(Family::cayley_plane, 15), std::invalid_argument);
    CHECK_THROWS_AS(make_space(Family::cayley_plane, 32), std::invalid_argument);
}

TEST_CASE("family names round-trip") {
    for (const Space& sp : catalog()) {
        CHECK(family_from_name(family_name(sp.family)) == sp.family);
    }
    CHECK_THROWS_AS(family_from_name("dodecahedron"), std::invalid_argument);
}

TEST_CASE("laplace eigenvalues k(k + alpha + beta + 1)") {
    Space s2 = make_space(Family::sphere, 2);
    for (int k = 0; k <= 40; ++k)
        CHECK(laplace_eigenvalue(s2, k) == doctest::Approx(k * (k + 1.0)).epsilon(1e-15));

    // circle: alpha + beta + 1 = 0, so lambda_k = k^2
    Space circle = make_space(Family::sphere, 1);
    for (int k = 0; k <= 40; ++k)
        CHECK(laplace_eigenvalue(circle, k) == doctest::Approx(double(k) * k).epsilon(1e-15));

    for (const Space& sp : catalog())
        for (int k = 0; k < 200; ++k)
            CHECK(laplace_eigenvalue(sp, k + 1) > laplace_eigenvalue(sp, k));
}

TEST_CASE("harmonic dimensions match closed forms") {
    // sphere S^2: d_k = 2k + 1
    Space s2 = make_space(Family::sphere, 2);
    CHECK(harmonic_dim(s2, 0) == 1.0);
    for (int k = 1; k <= 30; ++k) CHECK(harmonic_dim(s2, k) == doctest::Approx(2.0 * k + 1.0));

    // circle: d_k = 2 for k >= 1
    Space circle = make_space(Family::sphere, 1);
    CHECK(harmonic_dim(circle, 0) == 1.0);
    for (int k = 1; k <= 30; ++k) CHECK(harmonic_dim(circle, k) == doctest::Approx(2.0));

    // real projective plane: even-degree sphere harmonics, d_k = 4k + 1
    Space rp2 = make_space(Family::real_projective, 2);
    for (int k = 1; k <= 30; ++k) CHECK(harmonic_dim(rp2, k) == doctest::Approx(4.0 * k + 1.0));

    // CP^2 (m = 4): d_k = (k+1)^3
    Space cp4 = make_space(Family::complex_projective, 4);
    for (int k = 1; k <= 20; ++k)
        CHECK(harmonic_dim(cp4, k) == doctest::Approx(std::pow(k + 1.0, 3)).epsilon(1e-12));

    // first nontrivial eigenspaces of HP^2 and the Cayley plane
    CHECK(harmonic_dim(make_space(Family::quaternion_projective, 8), 1) == doctest::Approx(14.0));
    CHECK(harmonic_dim(make_space(Family::cayley_plane, 16), 1) == doctest::Approx(26.0));
}

TEST_CASE("log dimensions agree with dimensions") {
    for (const Space& sp : catalog())
        for (int k = 1; k <= 50; ++k) {
            double d = harmonic_dim(sp, k);
            CHECK(std::exp(harmonic_dim_log(sp, k)) == doctest::Approx(d).epsilon(1e-12));
        }
}

TEST_CASE("cumulative dimension sums the blocks") {
    for (const Space& sp : catalog()) {
        double acc = 0.0;
        for (int n = 0; n <= 24; ++n) {
            acc += harmonic_dim(sp, n);
            CHECK(cumulative_dim(sp, n) == doctest::Approx(acc).epsilon(1e-13));
        }
    }
    // sphere S^2: D_n = (n+1)^2 exactly
    Space s2 = make_space(Family::sphere, 2);
    for (int n = 0; n <= 40; ++n)
        CHECK(cumulative_dim(s2, n) == doctest::Approx(std::pow(n + 1.0, 2)));
}

TEST_CASE("eigenspace dimensions grow like k^{m-1}") {
    for (const Space& sp : catalog()) {
        if (sp.m < 2) continue;
        std::vector<double> lx, lu, ly;
        for (int k = 64; k <= 512; k += 16) {
            lx.push_back(std::log(double(k)));
            lu.push_back(1.0 / k);
            ly.push_back(harmonic_dim_log(sp, k));
        }
        double slope = fit_slope_corrected(lx, lu, ly);
        CHECK(slope == doctest::Approx(sp.m - 1.0).epsilon(5e-3));
    }
}
