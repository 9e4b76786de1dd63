#pragma once

// Jacobi polynomial evaluation, normalization, cosine expansions, and
// Gauss-Jacobi quadrature for the weight (1-x)^alpha (1+x)^beta on [-1,1].

#include <vector>

#include "tph/spaces.hpp"

namespace tph {

struct JacobiIndex {
    double alpha;
    double beta;
};

JacobiIndex jacobi_index(const Space& sp);  // (alpha, beta) of a catalog space

// Standard Jacobi polynomial P_k^{(alpha,beta)}(x) by the three-term
// recurrence; P_k(1) = binom(k+alpha, k).  x outside [-1,1] is rejected.
double jacobi_P(const JacobiIndex& idx, int k, double x);

// P_k(1), computed in log space.
double jacobi_P_at_one(const JacobiIndex& idx, int k);

// Normalized polynomial Q_k = P_k / P_k(1), so Q_k(1) = 1.
double jacobi_Q(const JacobiIndex& idx, int k, double x);

// Recurrence for the normalized family:
//   Q_{k+1} = (a_k x + b_k) Q_k - c_k Q_{k-1},  Q_0 = 1, Q_1 = a_0 x + b_0.
// b_k is stored as 1 + c_k - a_k, which the coefficients satisfy identically;
// enforcing it keeps Q_k(1) = 1 exact and makes the complemented recurrence
// below cancellation-free.
struct QRecurrence {
    std::vector<double> a, b, c;  // index k, c[0] = 0
};
QRecurrence q_recurrence(const JacobiIndex& idx, int kmax);

// Q_0(x)..Q_K(x) in one forward pass.
void jacobi_Q_column(const QRecurrence& rec, double x, int kmax, double* out);

// u_k = 1 - Q_k(cos s) without forming the difference:
//   u_{k+1} = a_k(1-x) + (a_k x + b_k) u_k - c_k u_{k-1},  1-x = 2 sin^2(s/2).
// Accurate down to u ~ 1e-300 where the direct subtraction loses all digits.
void one_minus_Q_column(const QRecurrence& rec, double s, int kmax, double* out);

// Coefficients {c_v} with Q_k(cos theta) = sum_v c_v cos(v theta), extracted by
// discrete cosine analysis of samples at N >= 4k+8 Chebyshev angles.  The
// reconstruction residual is checked against 1e-10 and a failure throws.
std::vector<double> cosine_coeffs(const JacobiIndex& idx, int k);

struct QuadratureRule {
    std::vector<double> nodes;    // ascending, inside (-1,1)
    std::vector<double> weights;  // positive, sum to the weight's total mass
};

// Total mass 2^{alpha+beta+1} B(alpha+1, beta+1) of the Jacobi weight.
double jacobi_weight_mass(const JacobiIndex& idx);

// Golub-Welsch rule: nodes are eigenvalues of the Jacobi matrix, weights come
// from first eigenvector components; exact for degree <= 2n-1.  A failed
// tridiagonal eigen-solve throws a construction error.
QuadratureRule gauss_jacobi(const JacobiIndex& idx, int n);

}  // namespace tph
