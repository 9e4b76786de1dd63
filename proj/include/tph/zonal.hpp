#pragma once

// Zonal functions f(t) = sum_k h_k Q_k(cos t) on a catalog space, their L^p
// norms against the normalized polar measure
//     c_{a,b} sin^{2a+1}(t/2) cos^{2b+1}(t/2) dt   on [0, pi],
// per-degree energies s_k = h_k^2 / d_k, fractional derivatives, and Sobolev
// norms.  The measure is a probability measure (c_{a,b} = 1/B(a+1,b+1) after
// the x = cos t substitution), so norms are monotone in p.

#include <cstdint>
#include <vector>

#include "tph/jacobi.hpp"
#include "tph/spaces.hpp"

namespace tph {

struct ZonalFunction {
    Space space;
    std::vector<double> h;  // h[k], k = 0..K_max

    int k_max() const { return static_cast<int>(h.size()) - 1; }
};

// f(t) at geodesic distance t in [0, pi] (Clenshaw on the Q recurrence).
double evaluate(const ZonalFunction& f, double t);

// Same, at x = cos t; rec must cover f.k_max().
double evaluate_x(const ZonalFunction& f, const QRecurrence& rec, double x);

// L^p norm; p in [1, inf].  p < inf integrates |f|^p by Gauss-Jacobi with
// n_nodes nodes (0 = default max(64, 2 K_max + 16)); p = inf takes the max of
// |f| over a dense uniform t-grid (0 = default max(2048, 8 K_max + 16)).
double lp_norm(const ZonalFunction& f, double p, int n_nodes = 0);

// s_k = h_k^2 / d_k; sums to ||f||_2^2 (Parseval).
std::vector<double> energies(const ZonalFunction& f);

// Coefficients h_k -> lambda_k^{r/2} h_k (degree 0 maps to 0).
ZonalFunction fractional_derivative(const ZonalFunction& f, double r);

// ||f||_p + ||B^r f||_p.
double sobolev_norm(const ZonalFunction& f, double r, double p);

// Seeded test function h_k = g_k (1+k)^{-decay} with g_k standard normal from
// the counter RNG; deterministic in (seed, k).
ZonalFunction random_function(const Space& sp, int kmax, std::uint64_t seed, double decay = 2.0);

// Coefficientwise sum/difference (same space, same truncation required).
ZonalFunction subtract(const ZonalFunction& f, const ZonalFunction& g);
ZonalFunction add(const ZonalFunction& f, const ZonalFunction& g);

}  // namespace tph
