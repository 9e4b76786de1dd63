#include "tph/multipliers.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "tph/jacobi.hpp"
#include "tph/numerics.hpp"

namespace tph {

static std::string format_param(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

MultiplierSequence shift_multipliers(const Space& sp, double t, int kmax) {
    if (t < 0.0 || t >= std::acos(-1.0))
        throw std::invalid_argument("shift radius t must lie in [0, pi)");
    MultiplierSequence seq;
    seq.space = sp;
    seq.mu.resize(kmax + 1);
    seq.label = "S_t[t=" + format_param(t) + "]";
    if (t == 0.0) {
        std::fill(seq.mu.begin(), seq.mu.end(), 1.0);
        return seq;
    }
    QRecurrence rec = q_recurrence(jacobi_index(sp), kmax);
    jacobi_Q_column(rec, std::cos(t), kmax, seq.mu.data());
    return seq;
}

// exact binomial for small arguments
static double binom(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    double v = 1.0;
    for (int i = 1; i <= k; ++i) v = v * (n - k + i) / i;
    return std::round(v);
}

std::vector<double> one_minus_m_r(const Space& sp, int r, double t, int kmax) {
    if (r < 1) throw std::invalid_argument("generalized shift order r must be >= 1");
    if (t < 0.0) throw std::invalid_argument("shift radius t must be >= 0");
    std::vector<double> out(kmax + 1, 0.0);
    if (t == 0.0) return out;
    // 1 - m_r(k,t) = (2/binom(2r,r)) sum_{j=1..r} (-1)^{j+1} binom(2r,r-j) u_k(jt),
    // u_k(s) = 1 - Q_k(cos s); the j >= 1 terms carry all the k-dependence and
    // the alternating binomial identity absorbs the constant.
    QRecurrence rec = q_recurrence(jacobi_index(sp), kmax);
    std::vector<double> u(kmax + 1);
    double c = binom(2 * r, r);
    for (int j = 1; j <= r; ++j) {
        one_minus_Q_column(rec, j * t, kmax, u.data());
        double w = ((j % 2 == 1) ? 2.0 : -2.0) * binom(2 * r, r - j) / c;
        for (int k = 0; k <= kmax; ++k) out[k] += w * u[k];
    }
    out[0] = 0.0;  // u_0 = 0 identically; keep the normalization exact
    return out;
}

MultiplierSequence gen_shift_multipliers(const Space& sp, int r, double t, int kmax) {
    std::vector<double> om = one_minus_m_r(sp, r, t, kmax);
    MultiplierSequence seq;
    seq.space = sp;
    seq.mu.resize(kmax + 1);
    for (int k = 0; k <= kmax; ++k) seq.mu[k] = 1.0 - om[k];
    seq.label = "S_{r,t}[r=" + std::to_string(r) + ",t=" + format_param(t) + "]";
    if (t > std::acos(-1.0) / (2.0 * r) + 1e-15) seq.label += " (t beyond pi/(2r))";
    return seq;
}

double eta(double s) {
    if (s < 0.0) throw std::invalid_argument("eta argument must be >= 0");
    if (s <= 1.0) return 1.0;
    if (s >= 2.0) return 0.0;
    auto phi = [](double u) { return u > 0.0 ? std::exp(-1.0 / u) : 0.0; };
    double hi = phi(2.0 - s), lo = phi(s - 1.0);
    return hi / (hi + lo);
}

MultiplierSequence eta_multipliers(const Space& sp, double t, int kmax) {
    if (!(t > 0.0)) throw std::invalid_argument("cutoff scale t must be > 0");
    MultiplierSequence seq;
    seq.space = sp;
    seq.mu.resize(kmax + 1);
    for (int k = 0; k <= kmax; ++k) seq.mu[k] = eta(t * k);
    seq.label = "eta_t[t=" + format_param(t) + "]";
    return seq;
}

ZonalFunction apply(const MultiplierSequence& mu, const ZonalFunction& f) {
    if (!(mu.space == f.space))
        throw std::invalid_argument("multiplier sequence and function live on different spaces");
    std::size_t n = std::min(mu.mu.size(), f.h.size());  // shorter truncation wins
    ZonalFunction g;
    g.space = f.space;
    g.h.resize(n);
    for (std::size_t k = 0; k < n; ++k) g.h[k] = mu.mu[k] * f.h[k];
    return g;
}

std::vector<double> forward_difference(const std::vector<double>& seq, int j) {
    if (j < 0 || static_cast<std::size_t>(j) > seq.size())
        throw std::invalid_argument("difference order exceeds sequence length");
    std::vector<double> d(seq);
    for (int pass = 0; pass < j; ++pass) {
        for (std::size_t i = 0; i + 1 < d.size(); ++i) d[i] = d[i + 1] - d[i];
        d.pop_back();
    }
    return d;
}

int marcinkiewicz_order(const Space& sp) { return sp.m / 2 + 1; }

MarcinkiewiczReport marcinkiewicz_report(const MultiplierSequence& mu, int s, int jmax) {
    if (s < 1) throw std::invalid_argument("difference order s must be >= 1");
    if (jmax < 0) throw std::invalid_argument("jmax must be >= 0");
    std::int64_t need = (std::int64_t{1} << (jmax + 1)) + s;
    if (static_cast<std::int64_t>(mu.mu.size()) - 1 < need)
        throw std::invalid_argument("multiplier truncation too short for jmax=" +
                                    std::to_string(jmax) + " (need K >= " + std::to_string(need) +
                                    ")");
    MarcinkiewiczReport rep;
    rep.s = s;
    rep.jmax = jmax;
    for (double v : mu.mu) rep.sup_abs = std::max(rep.sup_abs, std::abs(v));
    std::vector<double> diff = forward_difference(mu.mu, s);
    rep.block.resize(jmax + 1);
    for (int j = 0; j <= jmax; ++j) {
        std::int64_t lo = std::int64_t{1} << j, hi = std::int64_t{1} << (j + 1);
        double sum = 0.0;
        for (std::int64_t l = lo; l <= hi; ++l) sum += std::abs(diff[l]);
        rep.block[j] = std::pow(2.0, j * (s - 1.0)) * sum;
    }
    rep.bound = rep.sup_abs;
    for (double b : rep.block) rep.bound = std::max(rep.bound, b);
    return rep;
}

double marcinkiewicz_bound(const MultiplierSequence& mu, int s, int jmax) {
    return marcinkiewicz_report(mu, s, jmax).bound;
}

std::array<MultiplierSequence, 3> proof_sequences(const Space& sp, int r, double t, double a,
                                                  int kmax) {
    if (!(t > 0.0) || t > std::acos(-1.0) / 2.0 + 1e-15)
        throw std::invalid_argument("proof sequences need t in (0, pi/2]");
    if (!(a > 0.0)) throw std::invalid_argument("cutoff factor a must be > 0");
    std::vector<double> om = one_minus_m_r(sp, r, t, kmax);

    std::array<MultiplierSequence, 3> out;
    for (auto& seq : out) {
        seq.space = sp;
        seq.mu.assign(kmax + 1, 0.0);
    }
    std::string suffix = "[r=" + std::to_string(r) + ",t=" + format_param(t) +
                         ",a=" + format_param(a) + "]";
    out[0].label = "mu1" + suffix;
    out[1].label = "mu2" + suffix;
    out[2].label = "mu3" + suffix;

    double t2r = std::pow(t, 2.0 * r);
    for (int k = 1; k <= kmax; ++k) {
        double e = eta(a * t * k);
        double o = std::max(om[k], 0.0);
        double lam_r = std::pow(laplace_eigenvalue(sp, k), static_cast<double>(r));
        if (a * t * k > 1.0 && o > 0.0) {
            double m = 1.0 - o;
            out[0].mu[k] = (1.0 - e) * m * m * m * m / o;
        }
        if (e > 0.0 && o > 0.0) {
            out[1].mu[k] = o / (lam_r * t2r) * e;
            out[2].mu[k] = lam_r * t2r / o * e;
        }
    }
    // k = 0: the printed expressions are 0/0 (lambda_0 = 0).  Use the k -> 0
    // limit convention: the k = 1 numerator with lambda replaced by its slope
    // alpha+beta+1 (slope 1 on the circle, where alpha+beta+1 = 0).  mu1 is 0
    // there since eta(0) = 1.  Block sums never touch k = 0.
    double slope = sp.alpha + sp.beta + 1.0;
    if (slope <= 0.0) slope = 1.0;
    double o1 = std::max(one_minus_m_r(sp, r, t, 1)[1], 1e-300);
    out[1].mu[0] = o1 / (std::pow(slope, r) * t2r);
    out[2].mu[0] = std::pow(slope, r) * t2r / o1;
    return out;
}

ShiftRatioReport equivalence_ratio_report(const Space& sp, int r, const std::vector<double>& t_grid,
                                          int kmax) {
    const double pi = std::acos(-1.0);
    ShiftRatioReport rep;
    rep.ratio_min = std::numeric_limits<double>::infinity();
    rep.ratio_max = 0.0;
    for (double t : t_grid) {
        if (!(t > 0.0) || t > pi / 2.0 + 1e-15)
            throw std::invalid_argument("ratio report needs t in (0, pi/2]");
        std::vector<double> om = one_minus_m_r(sp, r, t, kmax);
        for (int k = 1; k <= kmax; ++k) {
            double kt = k * t;
            double m = 1.0 - om[k];
            if (kt <= pi) {
                double ratio = om[k] / std::pow(kt, 2.0 * r);
                rep.ratio_min = std::min(rep.ratio_min, ratio);
                rep.ratio_max = std::max(rep.ratio_max, ratio);
                ++rep.samples;
            }
            if (kt >= 1.0) rep.max_m_kt_ge_1 = std::max(rep.max_m_kt_ge_1, m);
            if (kt >= pi) rep.max_m_kt_ge_pi = std::max(rep.max_m_kt_ge_pi, m);
        }
    }
    return rep;
}

}  // namespace tph
