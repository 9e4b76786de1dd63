#pragma once

// Smoothness functionals: moduli of smoothness, K-functionals (a realized
// surrogate through the eta cutoff, and a p=2 oracle solved as a box-
// constrained convex problem), Hausdorff-Young weighted coefficient sums, and
// the grid reports comparing all of them.

#include <map>
#include <string>
#include <vector>

#include "tph/multipliers.hpp"
#include "tph/zonal.hpp"

namespace tph {

// omega_r(f,t)_p: sup over a geometric s-grid in (0,t] (default 64 points,
// three decades) of || (I - S_s)^{r/2} f ||_p, i.e. the norm of the multiplier
// image with mu_k = (1 - Q_k(cos s))^{r/2}.  The base is clamped to [0,2];
// a base below -1e-10 (Q-bound violation) throws.
double modulus(const ZonalFunction& f, double r, double t, double p, int s_points = 64);

// Realization surrogate || f - eta_{at} f ||_p + t^r || eta_{at} f ||_{W_p^r}.
double k_functional_realized(const ZonalFunction& f, double r, double t, double p, double a = 1.0);

// p = 2 K-functional: minimizes over g with g_k = theta_k h_k,
//   F(theta) = sqrt(sum (1-theta_k)^2 s_k)
//            + t^r [ sqrt(sum theta_k^2 s_k) + sqrt(sum theta_k^2 lambda_k^r s_k) ],
// theta in [0,1]^{K+1} (the L^2-optimal g is degree-diagonal).  Projected
// gradient with BB steps; converged when the projected gradient 2-norm is
// <= 1e-9 or after 1e4 iterations (flagged, best value kept).  The iterate set
// includes theta_k = eta(tk), theta = 0 and theta = 1, so the result never
// exceeds the realized surrogate or ||f||_2.
struct OracleResult {
    double value = 0.0;
    bool converged = false;
    int iterations = 0;
    double pg_norm = 0.0;
};
OracleResult k_functional_oracle(const ZonalFunction& f, double r, double t);

// Objective/gradient of the oracle problem, exposed for finite-difference
// validation.  s = energies, lam_r = lambda_k^r premultiplied.
double kfunc_objective(const std::vector<double>& theta, const std::vector<double>& s,
                       const std::vector<double>& lam_r, double r, double t);
std::vector<double> kfunc_gradient(const std::vector<double>& theta, const std::vector<double>& s,
                                   const std::vector<double>& lam_r, double r, double t);

// Hausdorff-Young weighted sums, q = p' = p/(p-1):
//   p in (1,2]:  { sum_k d_k^{(2-q)/(2q)} w_k^q s_k^{q/2} }^{1/q}
//   p = 1:        sup_k d_k^{-1/2} w_k sqrt(s_k)
// with the exact weight w_k = |1 - m_r(k,t)| and the printed min-power weight
// (min{1,tk})^{rq} (p=1: (min{1,tk})^{2r}); both are returned, exact first.
struct HySums {
    double exact = 0.0;
    double min_power = 0.0;
};
HySums hy_weighted_sum(const ZonalFunction& f, int r, double t, double p);

// Grid report over t for one function: realized/oracle K-functionals of order
// 2r, || S_{r,t} f - f ||_p, omega_{2r}, HY sums, cutoff-scale sensitivity
// columns (a = 1/2, 2), and all pairwise ratio spreads (max/min over the
// grid) among the four primary columns.  Oracle requires p = 2, HY requires
// p <= 2; unavailable columns are NaN and their spreads are omitted.
struct EquivalenceReport {
    std::vector<double> t_grid;
    std::vector<std::pair<std::string, std::vector<double>>> columns;
    std::vector<std::pair<std::string, double>> ratio_spread;  // "A/B" -> spread

    const std::vector<double>& col(const std::string& name) const;
};
EquivalenceReport equivalence_report(const ZonalFunction& f, int r, std::vector<double> t_grid,
                                     double p);

}  // namespace tph
