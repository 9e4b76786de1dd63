#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "tph/numerics.hpp"
#include "tph/smoothness.hpp"

using namespace tph;

TEST_CASE("oracle K-functional solves single-mode problems in closed form") {
    // one active degree makes the objective linear in theta_k, so the minimum
    // sits at an endpoint: min(1, t^r (1 + lambda^{r/2})) ||f||_2
    Space sp = make_space(Family::sphere, 2);
    for (int k0 : {0, 3, 6, 20}) {
        ZonalFunction f;
        f.space = sp;
        f.h.assign(25, 0.0);
        f.h[k0] = 1.3;
        double norm2 = 1.3 / std::sqrt(harmonic_dim(sp, k0));
        for (double t : {0.05, 0.5, 1.0}) {
            double r = 1.0;
            double lam = laplace_eigenvalue(sp, k0);
            double want = std::min(1.0, std::pow(t, r) * (1.0 + std::pow(lam, 0.5 * r))) * norm2;
            OracleResult res = k_functional_oracle(f, r, t);
            CHECK(res.value == doctest::Approx(want).epsilon(1e-9));
        }
    }
}

TEST_CASE("oracle sits below the realized surrogate and the plain norm") {
    for (int trial = 0; trial < 6; ++trial) {
        Space sp = make_space(trial % 2 ? Family::complex_projective : Family::sphere,
                              trial % 2 ? 4 : 2);
        ZonalFunction f = random_function(sp, 96, 400 + trial);
        double norm2 = lp_norm(f, 2.0);
        for (double t : {0.02, 0.2, 0.9}) {
            double r = 2.0;
            OracleResult res = k_functional_oracle(f, r, t);
            CHECK(res.value <= norm2 * (1.0 + 1e-12) + 1e-15);
            for (double a : {0.5, 1.0, 2.0})
                CHECK(res.value <= k_functional_realized(f, r, t, 2.0, a) * (1.0 + 1e-12));
        }
    }
}

TEST_CASE("objective and gradient have the documented boundary values") {
    Space sp = make_space(Family::sphere, 3);
    ZonalFunction f = random_function(sp, 32, 5);
    std::vector<double> s = energies(f);
    std::vector<double> lam_r(33);
    double r = 2.0, t = 0.3;
    for (int k = 0; k <= 32; ++k) lam_r[k] = std::pow(laplace_eigenvalue(sp, k), r);

    std::vector<double> zero(33, 0.0), one(33, 1.0);
    double f0 = kfunc_objective(zero, s, lam_r, r, t);
    CHECK(f0 == doctest::Approx(std::sqrt(pairwise_sum(s))).epsilon(1e-12));

    double n2 = std::sqrt(pairwise_sum(s));
    std::vector<double> ls(33);
    for (int k = 0; k <= 32; ++k) ls[k] = lam_r[k] * s[k];
    double want1 = std::pow(t, r) * (n2 + std::sqrt(pairwise_sum(ls)));
    CHECK(kfunc_objective(one, s, lam_r, r, t) == doctest::Approx(want1).epsilon(1e-12));

    // gradients stay finite at the corners where one of the norms vanishes
    for (double g : kfunc_gradient(zero, s, lam_r, r, t)) CHECK(std::isfinite(g));
    for (double g : kfunc_gradient(one, s, lam_r, r, t)) CHECK(std::isfinite(g));
}

TEST_CASE("modulus is monotone in t and bounded by the multiplier ceiling") {
    Space sp = make_space(Family::real_projective, 2);
    ZonalFunction f = random_function(sp, 64, 13);
    double r = 2.0;
    double w1 = modulus(f, r, 0.05, 2.0);
    double w2 = modulus(f, r, 0.2, 2.0);
    double w3 = modulus(f, r, 0.8, 2.0);
    CHECK(w1 > 0.0);
    // sup over a larger scale can only grow, up to fresh-grid resolution slack
    CHECK(w1 <= w2 * (1.0 + 1e-6));
    CHECK(w2 <= w3 * (1.0 + 1e-6));
    // mu_k = u_k^{r/2} <= 2^{r/2}, so omega_r(f,t)_2 <= 2^{r/2} ||f||_2
    CHECK(w3 <= std::pow(2.0, 0.5 * r) * lp_norm(f, 2.0) * (1.0 + 1e-12));

    CHECK_THROWS_AS(modulus(f, 0.0, 0.1, 2.0), std::invalid_argument);
    CHECK_THROWS_AS(modulus(f, 1.0, 0.0, 2.0), std::invalid_argument);
    CHECK_THROWS_AS(modulus(f, 1.0, 3.15, 2.0), std::invalid_argument);
}

TEST_CASE("weighted coefficient sums match direct evaluation at p = 2") {
    // q = 2 collapses the dimension power to 1: exact sum = sum (1-m_r)^2 s_k
    Space sp = make_space(Family::sphere, 2);
    ZonalFunction f = random_function(sp, 48, 19);
    std::vector<double> s = energies(f);
    int r = 2;
    double t = 0.15;
    std::vector<double> om = one_minus_m_r(sp, r, t, 48);
    double direct = 0.0, direct_min = 0.0;
    for (int k = 1; k <= 48; ++k) {
        direct += om[k] * om[k] * s[k];
        // the printed weight is (min{1,tk})^{rq} entering the sum once
        direct_min += std::pow(std::min(1.0, t * k), r * 2.0) * s[k];
    }
    HySums hy = hy_weighted_sum(f, r, t, 2.0);
    CHECK(hy.exact == doctest::Approx(std::sqrt(direct)).epsilon(1e-12));
    CHECK(hy.min_power == doctest::Approx(std::sqrt(direct_min)).epsilon(1e-12));
}

TEST_CASE("weighted coefficient sums match direct evaluation at p = 1.5 and p = 1") {
    Space sp = make_space(Family::complex_projective, 4);
    ZonalFunction f = random_function(sp, 24, 23);
    std::vector<double> s = energies(f);
    int r = 1;
    double t = 0.2;
    std::vector<double> om = one_minus_m_r(sp, r, t, 24);

    double q = 3.0;  // p = 1.5
    double sum_exact = 0.0, sum_min = 0.0;
    for (int k = 1; k <= 24; ++k) {
        double dpow = std::pow(harmonic_dim(sp, k), (2.0 - q) / (2.0 * q));
        sum_exact += dpow * std::pow(std::abs(om[k]), q) * std::pow(s[k], 0.5 * q);
        sum_min += dpow * std::pow(std::min(1.0, t * k), r * q) * std::pow(s[k], 0.5 * q);
    }
    HySums hy = hy_weighted_sum(f, r, t, 1.5);
    CHECK(hy.exact == doctest::Approx(std::pow(sum_exact, 1.0 / q)).epsilon(1e-12));
    CHECK(hy.min_power == doctest::Approx(std::pow(sum_min, 1.0 / q)).epsilon(1e-12));

    // p = 1: sup forms
    double sup_exact = 0.0, sup_min = 0.0;
    for (int k = 1; k <= 24; ++k) {
        double root = std::sqrt(s[k] / harmonic_dim(sp, k));
        sup_exact = std::max(sup_exact, std::abs(om[k]) * root);
        sup_min = std::max(sup_min, std::pow(std::min(1.0, t * k), 2.0 * r) * root);
    }
    HySums h1 = hy_weighted_sum(f, r, t, 1.0);
    CHECK(h1.exact == doctest::Approx(sup_exact).epsilon(1e-13));
    CHECK(h1.min_power == doctest::Approx(sup_min).epsilon(1e-13));

    CHECK_THROWS_AS(hy_weighted_sum(f, r, t, 2.5), std::invalid_argument);
    CHECK_THROWS_AS(hy_weighted_sum(f, 0, t, 2.0), std::invalid_argument);
}

TEST_CASE("equivalence report carries consistent columns") {
    Space sp = make_space(Family::sphere, 2);
    ZonalFunction f = random_function(sp, 64, 29);
    EquivalenceReport rep = equivalence_report(f, 1, geomspace(0.02, 0.5, 8), 2.0);

    REQUIRE(rep.t_grid.size() == 8);
    for (std::size_t i = 1; i < 8; ++i) CHECK(rep.t_grid[i] > rep.t_grid[i - 1]);

    const std::vector<double>& omega = rep.col("omega_2r");
    for (std::size_t i = 1; i < 8; ++i) CHECK(omega[i] >= omega[i - 1]);  // running sup

    // || S_{r,t} f - f ||_2 equals the exact weighted sum at p = 2
    const std::vector<double>& srt = rep.col("norm_Srt_diff");
    for (std::size_t i = 0; i < 8; ++i) {
        HySums hy = hy_weighted_sum(f, 1, rep.t_grid[i], 2.0);
        CHECK(srt[i] == doctest::Approx(hy.exact).epsilon(1e-10));
    }

    // oracle never exceeds realized on the grid
    const std::vector<double>& kr = rep.col("K_realized");
    const std::vector<double>& ko = rep.col("K_oracle");
    for (std::size_t i = 0; i < 8; ++i) CHECK(ko[i] <= kr[i] * (1.0 + 1e-12));

    // all four primary columns positive => all twelve ordered spreads present
    CHECK(rep.ratio_spread.size() == 12);
    for (const auto& [name, spread] : rep.ratio_spread) {
        CHECK(spread >= 1.0 - 1e-12);
        CHECK(std::isfinite(spread));
        CHECK(name.find('/') != std::string::npos);
    }

    CHECK_THROWS_AS(rep.col("no_such_column"), std::out_of_range);

    // p = 4: oracle and weighted-sum columns are NaN, spreads drop them
    EquivalenceReport rep4 = equivalence_report(f, 1, geomspace(0.05, 0.3, 8), 4.0);
    for (double v : rep4.col("K_oracle")) CHECK(std::isnan(v));
    for (double v : rep4.col("hy_sum_exact")) CHECK(std::isnan(v));
    CHECK(rep4.ratio_spread.size() == 6);  // pairs among the three live columns
}

TEST_CASE("realized K-functional assembles cutoff, difference, and Sobolev term") {
    Space sp = make_space(Family::sphere, 3);
    ZonalFunction f = random_function(sp, 40, 37);
    double r = 2.0, t = 0.1, a = 2.0, p = 2.0;
    MultiplierSequence cut = eta_multipliers(sp, a * t, 40);
    ZonalFunction g = apply(cut, f);
    double want = lp_norm(subtract(f, g), p) + std::pow(t, r) * sobolev_norm(g, r, p);
    CHECK(k_functional_realized(f, r, t, p, a) == doctest::Approx(want).epsilon(1e-13));
    CHECK_THROWS_AS(k_functional_realized(f, 0.0, t, p), std::invalid_argument);
    CHECK_THROWS_AS(k_functional_realized(f, r, 0.0, p), std::invalid_argument);
}
