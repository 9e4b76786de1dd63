#pragma once

// Mercer kernels K(x,y) = sum_k b_k d_k Q_k(cos d(x,y)) given by nonnegative
// nonincreasing degree coefficients b_k: validation, eigenvalue sequences
// (b_k with multiplicity d_k), square-root and fractional kernels, Holder
// exponent estimation, eigenvalue-decay verdicts, and Kolmogorov n-widths
// kappa_n = sqrt(lambda_{n+1}).

#include <optional>
#include <string>
#include <vector>

#include "tph/spaces.hpp"
#include "tph/zonal.hpp"

namespace tph {

struct MercerKernel {
    Space space;
    std::vector<double> b;  // b[k], k = 0..K_max
    std::string note;       // advisory annotations (e.g. sphere-family caveat)

    int k_max() const { return static_cast<int>(b.size()) - 1; }
};

// The kernel slice K^y as a zonal function: h_k = b_k d_k.
ZonalFunction kernel_slice(const MercerKernel& k);

struct KernelValidation {
    bool positive = true;
    bool monotone = true;
    bool summable = true;        // tail ratio of d_k b_k below 1 (or finite rank)
    long first_negative = -1;    // first k with b_k < 0
    long first_nonmonotone = -1; // first k with b_{k+1} > b_k
    double tail_ratio = 0.0;     // geometric mean of term ratios over the last decade

    bool ok() const { return positive && monotone && summable; }
    std::string describe() const;
};
KernelValidation validate(const MercerKernel& k);

// Geometric-mean ratio of consecutive terms over the last decade of indices;
// < 1 is the (desk-scale) convergence diagnostic for sum terms[k].
double tail_ratio(const std::vector<double>& terms);

// Eigenvalues lambda_1 >= lambda_2 >= ... >= lambda_N: b_k repeated d_k times
// in degree order.  Requires a valid kernel, N <= D_{K_max}, and a sane
// materialization size.
std::vector<double> eigen_sequence(const MercerKernel& k, std::int64_t n);

// Degree coefficients sqrt(b_k); the square-root operator's kernel.
MercerKernel sqrt_kernel(const MercerKernel& k);

// Coefficients lambda_k^r b_k of B^{2r,0}K (not necessarily monotone) plus the
// trace sum_k d_k lambda_k^r b_k and its tail diagnostic.
struct FractionalKernel {
    Space space;
    double r = 0.0;
    std::vector<double> coeffs;
    double trace = 0.0;
    double trace_tail_ratio = 0.0;
};
FractionalKernel fractional_kernel(const MercerKernel& k, double r);

// Holder exponent estimate: D(t) = max_u |sum_k b_k d_k (Q_k(cos t)-1) Q_k(u)|
// over a Chebyshev u-grid (default 2048 points), then the log-log slope of
// D(t) on t_grid, clamped to (0,2].  Kernels supported on degree 0 only are
// degenerate (no exponent).
struct HolderFit {
    bool degenerate = false;
    double beta = 0.0;          // clamped slope
    double raw_slope = 0.0;     // unclamped regression slope
    std::vector<double> d_values;
};
HolderFit holder_exponent(const MercerKernel& k, const std::vector<double>& t_grid,
                          int u_points = 2048);

// Decay verdict data.  Eigenvalue fits use one point per degree block
// (midpoint index, block value) so multiplicity stairs do not bias the slope,
// with a 1/deg correction column; the sup statistic is b_deg D_deg^{-target}.
struct DecayReport {
    double fitted_slope = 0.0;
    double target_slope = 0.0;
    double slope_tol = 0.1;
    double sup_last_decade_max = 0.0;
    double sup_window_median = 0.0;
    bool slope_ok = false;
    bool sup_ok = false;
    bool verdict = false;
    double n_lo = 0.0, n_hi = 0.0;  // fit window in eigenvalue index
    std::string diagnostic;
};

// Verdict against lambda_n = O(n^{-1-beta/m}): fitted slope within slope_tol
// above the target and a non-diverging sup statistic (last-decade max <= 2x
// window median).  Window defaults to the middle two decades of the block
// midpoints; fewer than two available decades is an error.
DecayReport decay_verdict_holder(const MercerKernel& k, double beta, double slope_tol = 0.1,
                                 double n_lo = 0.0, double n_hi = 0.0);

// Same machinery against lambda_n = O(n^{-1-2r/m}); requires the fractional
// trace tail to converge (diagnostic in the thrown message otherwise).
DecayReport decay_verdict_sobolev(const MercerKernel& k, double r, double slope_tol = 0.1,
                                  double n_lo = 0.0, double n_hi = 0.0);

// The worked example: b_0 = 1 and, via the Gamma-ratio construction,
//   b_n = c_n P_n(1) / (n^{m(1+eps)+2r-1} d_n)  with
//   c_n = G(b+1)(2n+a+b+1)G(n+a+b+1)/(G(a+b+2)G(n+b+1)),
// which collapses algebraically to b_n = n^{-(m(1+eps)+2r-1)} because
// d_n = c_n binom(n+a,n); the construction keeps the Gamma route and the
// simplification is asserted numerically (n <= 512, 1e-8).  Requires
// m*eps > 1.  Sphere-family kernels carry an advisory note.
MercerKernel example_kernel(Family family, int m, double eps, int r, int kmax);

// max_n |b_n n^{m(1+eps)+2r-1} - 1| over 1 <= n <= n_max.
double example_kernel_closed_form_gap(const MercerKernel& k, double eps, int r, int n_max);

// Kolmogorov n-width kappa_n = sqrt(lambda_{n+1}); n+1 must be within D_{K_max}.
double n_width(const MercerKernel& k, std::int64_t n);

// Block data used by the decay fits: midpoint index and eigenvalue per degree.
struct BlockSeq {
    std::vector<double> n_mid;   // D_{deg-1} + (d_deg+1)/2
    std::vector<double> lambda;  // b_deg
    std::vector<double> degree;
    std::vector<double> d_cum;   // D_deg
};
BlockSeq block_sequence(const MercerKernel& k);

}  // namespace tph
