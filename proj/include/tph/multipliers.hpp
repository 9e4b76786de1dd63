#pragma once

// Multiplier operators acting diagonally on the harmonic decomposition:
// the shifting operator S_t (mu_k = Q_k(cos t)), the generalized shifting
// operator S_{r,t} with
//   m_r(k,t) = (-2/binom(2r,r)) sum_{j=1..r} (-1)^j binom(2r, r-j) Q_k(cos jt),
// the smooth cutoff eta_t, forward differences, dyadic Marcinkiewicz
// statistics, and the three sequences used to compare S_{r,t} with the
// K-functional machinery.

#include <array>
#include <string>
#include <vector>

#include "tph/spaces.hpp"
#include "tph/zonal.hpp"

namespace tph {

struct MultiplierSequence {
    Space space;
    std::vector<double> mu;  // mu[k], k = 0..K
    std::string label;
};

// mu_k = Q_k(cos t), 0 < t < pi.  t = 0 returns the identity sequence.
MultiplierSequence shift_multipliers(const Space& sp, double t, int kmax);

// 1 - m_r(k,t) assembled from complemented Q columns (no 1 - Q subtraction),
// the quantity every ratio/weight below is built from.
std::vector<double> one_minus_m_r(const Space& sp, int r, double t, int kmax);

// m_r(k,t) = 1 - one_minus_m_r(...)[k]; m_r(0,t) = 1 exactly.  t beyond
// pi/(2r) is allowed but annotated in the label (outside the small-shift
// regime of the ratio bounds).
MultiplierSequence gen_shift_multipliers(const Space& sp, int r, double t, int kmax);

// Smooth partition bump: 1 on [0,1], 0 on [2,inf),
// phi(2-s)/(phi(2-s)+phi(s-1)) with phi(u)=exp(-1/u) in between; nonincreasing.
double eta(double s);

// mu_k = eta(t k).
MultiplierSequence eta_multipliers(const Space& sp, double t, int kmax);

// Coefficients h_k -> mu_k h_k; spaces must match, the shorter truncation wins.
ZonalFunction apply(const MultiplierSequence& mu, const ZonalFunction& f);

// j-fold forward difference; output length shrinks by j.
std::vector<double> forward_difference(const std::vector<double>& seq, int j);

// Dyadic block statistics 2^{j(s-1)} sum_{l=2^j..2^{j+1}} |Delta^s mu_l| for
// j = 0..jmax, plus sup_k |mu_k|; M is the max of all of them.  Requires
// K >= 2^{jmax+1} + s.
struct MarcinkiewiczReport {
    int s = 0;
    int jmax = 0;
    double sup_abs = 0.0;
    std::vector<double> block;  // block[j]
    double bound = 0.0;         // M
};
MarcinkiewiczReport marcinkiewicz_report(const MultiplierSequence& mu, int s, int jmax);
double marcinkiewicz_bound(const MultiplierSequence& mu, int s, int jmax);

// Default difference order for a space: smallest integer > m/2.
int marcinkiewicz_order(const Space& sp);

// The three comparison sequences (labels "mu1", "mu2", "mu3"):
//   mu1 = (1 - eta(atk)) m_r^4 / (1 - m_r)        (zero wherever atk <= 1)
//   mu2 = (1 - m_r) / (lambda_k^r t^{2r}) eta(atk)
//   mu3 = lambda_k^r t^{2r} / (1 - m_r) eta(atk)
// k = 0 uses the limit convention: the k=1 value of 1-m_r with lambda replaced
// by its slope alpha+beta+1 (slope 1 for the circle, where alpha+beta+1 = 0).
std::array<MultiplierSequence, 3> proof_sequences(const Space& sp, int r, double t, double a,
                                                  int kmax);

// Empirical constants of the two-sided comparison
//   0 < a <= (1 - m_r(k,t)) / (kt)^{2r} <= b   on  0 < kt <= pi,
// and sup of m_r over the saturated cells kt >= 1 and kt >= pi.
struct ShiftRatioReport {
    double ratio_min = 0.0;  // over k >= 1, kt <= pi
    double ratio_max = 0.0;
    double max_m_kt_ge_1 = 0.0;
    double max_m_kt_ge_pi = 0.0;
    long samples = 0;
};
ShiftRatioReport equivalence_ratio_report(const Space& sp, int r, const std::vector<double>& t_grid,
                                          int kmax);

}  // namespace tph
