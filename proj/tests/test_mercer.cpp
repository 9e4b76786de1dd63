#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "tph/mercer.hpp"
#include "tph/numerics.hpp"
#include "tph/zonal.hpp"

using namespace tph;

namespace {

MercerKernel kernel_of(const Space& sp, std::vector<double> b) {
    MercerKernel k;
    k.space = sp;
    k.b = std::move(b);
    return k;
}

// power-law kernel b_k = (1+k)^{-s}
MercerKernel power_kernel(const Space& sp, double s, int kmax) {
    std::vector<double> b(kmax + 1);
    for (int k = 0; k <= kmax; ++k) b[k] = std::pow(1.0 + k, -s);
    return kernel_of(sp, b);
}

}  // namespace

TEST_CASE("validation flags sign, monotonicity, and summability") {
    Space sp = make_space(Family::sphere, 2);

    std::vector<double> geo(40);
    for (int k = 0; k < 40; ++k) geo[k] = std::pow(2.0, -k);
    KernelValidation ok = validate(kernel_of(sp, geo));
    CHECK(ok.ok());
    CHECK(ok.describe() == "ok");
    // d_k b_k = (2k+1) 2^-k: consecutive ratio -> 1/2 plus a polynomial drift
    CHECK(ok.tail_ratio > 0.45);
    CHECK(ok.tail_ratio < 0.6);

    KernelValidation inc = validate(kernel_of(sp, {1.0, 2.0}));
    CHECK(!inc.monotone);
    CHECK(inc.first_nonmonotone == 0);
    CHECK(inc.positive);

    KernelValidation neg = validate(kernel_of(sp, {1.0, 0.5, -0.25, 0.1}));
    CHECK(!neg.positive);
    CHECK(neg.first_negative == 2);

    // d_k b_k growing: tail ratio above 1
    KernelValidation div = validate(power_kernel(sp, 0.2, 120));
    CHECK(!div.summable);
    CHECK(div.tail_ratio > 1.0);
}

TEST_CASE("tail ratio handles short, finite-rank, and geometric inputs") {
    CHECK(tail_ratio({}) == 0.0);
    CHECK(tail_ratio({1.0, 0.5, 0.25}) == 0.0);  // too short to diagnose
    std::vector<double> finite(60, 0.0);
    finite[0] = 1.0;
    finite[1] = 0.5;
    CHECK(tail_ratio(finite) == 0.0);  // trailing zeros stripped, then too short
    std::vector<double> geo(60);
    for (int k = 0; k < 60; ++k) geo[k] = std::pow(3.0, -k);
    CHECK(tail_ratio(geo) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("eigenvalue sequences repeat each coefficient d_k times") {
    Space sp = make_space(Family::sphere, 2);  // d = 1, 3, 5, ...
    MercerKernel k = kernel_of(sp, {1.0, 0.5, 0.25});
    std::vector<double> lam = eigen_sequence(k, 9);
    std::vector<double> want = {1.0, 0.5, 0.5, 0.5, 0.25, 0.25, 0.25, 0.25, 0.25};
    CHECK(lam == want);

    CHECK(eigen_sequence(k, 1) == std::vector<double>{1.0});
    CHECK_THROWS_AS(eigen_sequence(k, 10), std::out_of_range);  // beyond D_2 = 9
    CHECK_THROWS_AS(eigen_sequence(k, 0), std::invalid_argument);
    CHECK_THROWS_AS(eigen_sequence(kernel_of(sp, {1.0, 2.0}), 2), std::invalid_argument);

    // nonincreasing along a long expansion
    MercerKernel pk = power_kernel(sp, 3.0, 40);
    std::vector<double> seq = eigen_sequence(pk, 800);
    for (std::size_t i = 1; i < seq.size(); ++i) CHECK(seq[i] <= seq[i - 1]);
}

TEST_CASE("square-root kernels halve the exponent") {
    Space sp = make_space(Family::sphere, 2);
    MercerKernel k = power_kernel(sp, 6.0, 32);
    MercerKernel r1 = sqrt_kernel(k);
    MercerKernel r2 = sqrt_kernel(r1);
    for (int j = 0; j <= 32; ++j) {
        CHECK(r1.b[j] == doctest::Approx(std::pow(k.b[j], 0.5)).epsilon(1e-15));
        CHECK(r2.b[j] == doctest::Approx(std::pow(k.b[j], 0.25)).epsilon(1e-14));
    }

    // fixed points of the square root
    MercerKernel idem = kernel_of(sp, {1.0, 1.0, 0.0, 0.0});
    MercerKernel ridem = sqrt_kernel(idem);
    CHECK(ridem.b == idem.b);
}

TEST_CASE("fractional kernel trace equals the derivative norm of the root slice") {
    // trace(B^{2r,0} K) = sum d lambda^r b = || B^r K_{1/2}^y ||_2^2, with the
    // right side integrated by quadrature -- two genuinely different routes
    Space sp = make_space(Family::sphere, 3);
    MercerKernel k = power_kernel(sp, 7.0, 64);
    double r = 1.0;
    FractionalKernel fk = fractional_kernel(k, r);
    CHECK(fk.coeffs[0] == 0.0);
    CHECK(fk.trace_tail_ratio < 1.0);

    ZonalFunction g = fractional_derivative(kernel_slice(sqrt_kernel(k)), r);
    double norm = lp_norm(g, 2.0);
    CHECK(fk.trace == doctest::Approx(norm * norm).epsilon(1e-10));

    CHECK_THROWS_AS(fractional_kernel(k, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(fractional_kernel(k, -1.0), std::invalid_argument);
}

TEST_CASE("n-widths read the square root of the next eigenvalue") {
    Space sp = make_space(Family::sphere, 2);
    MercerKernel k = kernel_of(sp, {1.0, 0.25, 1.0 / 9.0});
    CHECK(n_width(k, 0) == 1.0);
    CHECK(n_width(k, 1) == 0.5);
    CHECK(n_width(k, 3) == 0.5);
    CHECK(n_width(k, 4) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(n_width(k, 8) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK_THROWS_AS(n_width(k, 9), std::out_of_range);
    CHECK_THROWS_AS(n_width(k, -1), std::invalid_argument);
}

TEST_CASE("block sequence records midpoints and cumulative dimensions") {
    Space sp = make_space(Family::sphere, 2);
    MercerKernel k = power_kernel(sp, 4.0, 3);
    BlockSeq bs = block_sequence(k);
    // d = {1,3,5,7}: midpoints 1, 3, 7, 13; cumulative 1, 4, 9, 16
    CHECK(bs.n_mid == std::vector<double>{1.0, 3.0, 7.0, 13.0});
    CHECK(bs.d_cum == std::vector<double>{1.0, 4.0, 9.0, 16.0});
    CHECK(bs.lambda == k.b);
    CHECK(bs.degree == std::vector<double>{0.0, 1.0, 2.0, 3.0});
}

TEST_CASE("sobolev decay verdict accepts a trace-class power kernel") {
    // b_k = lambda^-r d^-1 k^{-1.01}: eigenvalues decay like n^{-(1+r)-0.005},
    // sitting just inside the n^{-(1+2r/m)} target for m = 2, r = 1
    Space sp = make_space(Family::sphere, 2);
    int kmax = 512;
    double r = 1.0;
    std::vector<double> b(kmax + 1);
    for (int k = 1; k <= kmax; ++k)
        b[k] = std::pow(laplace_eigenvalue(sp, k), -r) / harmonic_dim(sp, k) *
               std::pow(double(k), -1.01);
    b[0] = b[1];
    MercerKernel k = kernel_of(sp, b);
    REQUIRE(validate(k).ok());

    DecayReport rep = decay_verdict_sobolev(k, r);
    CHECK(rep.target_slope == doctest::Approx(-2.0));
    CHECK(rep.fitted_slope == doctest::Approx(-2.005).epsilon(0.02));
    CHECK(rep.slope_ok);
    CHECK(rep.sup_ok);
    CHECK(rep.verdict);

    CHECK_THROWS_AS(decay_verdict_sobolev(k, 0.0), std::invalid_argument);
}

TEST_CASE("sobolev decay verdict needs a convergent fractional trace") {
    // b_k = 1/(d_k lambda_k): fractional trace terms d lambda b = 1 never decay
    Space sp = make_space(Family::sphere, 2);
    int kmax = 256;
    std::vector<double> b(kmax + 1);
    for (int k = 1; k <= kmax; ++k)
        b[k] = 1.0 / (harmonic_dim(sp, k) * laplace_eigenvalue(sp, k));
    b[0] = b[1];
    CHECK_THROWS_AS(decay_verdict_sobolev(kernel_of(sp, b), 1.0), std::runtime_error);
}

TEST_CASE("logarithmic excess defeats the holder decay verdict") {
    // b_k = (1+k)^{-(2+beta)} log^2(k+3) decays to eye-level like the target
    // n^{-(1+beta/m)} but carries a log^2 factor; the fitted slope picks up
    // the +2/ln n excess and the verdict must refuse
    Space sp = make_space(Family::sphere, 2);
    int kmax = 511;
    double beta = 1.0;
    std::vector<double> b(kmax + 1);
    for (int k = 0; k <= kmax; ++k)
        b[k] = std::pow(1.0 + k, -(2.0 + beta)) * std::pow(std::log(k + 3.0), 2.0);
    MercerKernel k = kernel_of(sp, b);
    REQUIRE(validate(k).ok());

    DecayReport rep = decay_verdict_holder(k, beta);
    CHECK(!rep.slope_ok);
    CHECK(!rep.verdict);
    CHECK(rep.fitted_slope > rep.target_slope + rep.slope_tol);

    // the clean power law with the same exponent passes
    std::vector<double> clean(kmax + 1);
    for (int kk = 0; kk <= kmax; ++kk) clean[kk] = std::pow(1.0 + kk, -(2.0 + beta));
    DecayReport rep_clean = decay_verdict_holder(kernel_of(sp, clean), beta);
    CHECK(rep_clean.verdict);

    CHECK_THROWS_AS(decay_verdict_holder(k, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(decay_verdict_holder(k, 2.5), std::invalid_argument);
}

TEST_CASE("decay fits refuse windows below two decades") {
    Space sp = make_space(Family::sphere, 2);
    CHECK_THROWS_AS(decay_verdict_holder(power_kernel(sp, 4.0, 16), 1.0),
                    std::invalid_argument);
}

TEST_CASE("holder exponent of an analytic kernel saturates the ceiling") {
    // D(t) ~ c t^2 for a smooth kernel; the log-log slope approaches 2 from
    // below at any positive scale, and beta is clamped into (0, 2]
    Space sp = make_space(Family::sphere, 2);
    int kmax = 48;
    std::vector<double> b(kmax + 1);
    for (int k = 0; k <= kmax; ++k) b[k] = std::exp(-double(k));
    MercerKernel k = kernel_of(sp, b);

    HolderFit fit = holder_exponent(k, geomspace(0.02, 0.2, 12), 512);
    CHECK(!fit.degenerate);
    CHECK(fit.raw_slope > 1.9);
    CHECK(fit.raw_slope < 2.02);
    CHECK(fit.beta <= 2.0);
    CHECK(fit.beta > 1.9);
    REQUIRE(fit.d_values.size() == 12);
    for (double v : fit.d_values) CHECK(v > 0.0);
    for (std::size_t i = 1; i < fit.d_values.size(); ++i)
        CHECK(fit.d_values[i] > fit.d_values[i - 1]);  // t^2 growth over this window
}

TEST_CASE("degree-0 kernels have no holder exponent") {
    Space sp = make_space(Family::sphere, 2);
    HolderFit fit = holder_exponent(kernel_of(sp, {2.0, 0.0, 0.0}), geomspace(0.05, 0.5, 8), 64);
    CHECK(fit.degenerate);
    CHECK(fit.beta == 0.0);

    CHECK_THROWS_AS(holder_exponent(kernel_of(sp, {1.0, 0.5}), geomspace(0.05, 0.5, 5), 64),
                    std::invalid_argument);  // too few grid points
    CHECK_THROWS_AS(holder_exponent(kernel_of(sp, {1.0, 0.5}), geomspace(0.05, 4.0, 8), 64),
                    std::invalid_argument);  // t beyond pi
}

TEST_CASE("worked kernel example collapses to the closed-form power law") {
    MercerKernel k = example_kernel(Family::complex_projective, 4, 0.5, 1, 256);
    CHECK(k.b[0] == 1.0);
    CHECK(k.note.empty());
    double s = 4.0 * 1.5 + 2.0 * 1.0 - 1.0;  // m(1+eps) + 2r - 1 = 7
    for (int n = 1; n <= 256; ++n)
        CHECK(k.b[n] * std::pow(double(n), s) == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(example_kernel_closed_form_gap(k, 0.5, 1, 256) <= 1e-8);
    CHECK(validate(k).ok());

    // sphere-family kernels carry the advisory note; projective ones do not
    MercerKernel ks = example_kernel(Family::sphere, 2, 1.0, 1, 64);
    CHECK(!ks.note.empty());

    CHECK_THROWS_AS(example_kernel(Family::sphere, 2, 0.4, 1, 64), std::invalid_argument);
    CHECK_THROWS_AS(example_kernel(Family::sphere, 2, 1.0, 0, 64), std::invalid_argument);
}

TEST_CASE("kernel slice weights coefficients by the eigenspace dimensions") {
    Space sp = make_space(Family::sphere, 2);
    MercerKernel k = kernel_of(sp, {1.0, 0.5, 0.25});
    ZonalFunction f = kernel_slice(k);
    CHECK(f.h == std::vector<double>{1.0, 1.5, 1.25});
}
