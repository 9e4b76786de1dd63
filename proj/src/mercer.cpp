#include "tph/mercer.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "tph/jacobi.hpp"
#include "tph/numerics.hpp"

namespace tph {

static std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, pattern, a, b, c);
    return buf;
}

ZonalFunction kernel_slice(const MercerKernel& k) {
    ZonalFunction f;
    f.space = k.space;
    f.h.resize(k.b.size());
    for (int j = 0; j <= k.k_max(); ++j) f.h[j] = k.b[j] * harmonic_dim(k.space, j);
    return f;
}

double tail_ratio(const std::vector<double>& terms) {
    // last nonzero index; all-zero or very short sequences diagnose as fine
    long last = static_cast<long>(terms.size()) - 1;
    while (last >= 0 && terms[last] == 0.0) --last;
    if (last < 0) return 0.0;
    long k0 = last / 10;
    while (k0 < last && !(terms[k0] > 0.0)) ++k0;
    if (last - k0 < 4) return 0.0;
    if (!(terms[last] > 0.0)) return 0.0;
    // geometric mean of the consecutive ratios telescopes to the endpoints
    return std::exp((std::log(terms[last]) - std::log(terms[k0])) / double(last - k0));
}

std::string KernelValidation::describe() const {
    std::string s;
    if (!positive) s += "negative coefficient at k=" + std::to_string(first_negative) + "; ";
    if (!monotone) s += "coefficients increase at k=" + std::to_string(first_nonmonotone) + "; ";
    if (!summable) s += fmt("tail ratio %.6f of d_k b_k not below 1; ", tail_ratio);
    if (s.empty()) return "ok";
    s.resize(s.size() - 2);
    return s;
}

KernelValidation validate(const MercerKernel& k) {
    KernelValidation v;
    long n = static_cast<long>(k.b.size());
    for (long j = 0; j < n; ++j) {
        if (k.b[j] < 0.0) {
            v.positive = false;
            v.first_negative = j;
            break;
        }
    }
    for (long j = 0; j + 1 < n; ++j) {
        if (k.b[j + 1] > k.b[j]) {
            v.monotone = false;
            v.first_nonmonotone = j;
            break;
        }
    }
    std::vector<double> terms(n);
    for (long j = 0; j < n; ++j) terms[j] = harmonic_dim(k.space, j) * std::abs(k.b[j]);
    v.tail_ratio = tail_ratio(terms);
    v.summable = v.tail_ratio < 1.0;
    return v;
}

static void require_valid(const MercerKernel& k, const char* who) {
    KernelValidation v = validate(k);
    if (!v.ok())
        throw std::invalid_argument(std::string(who) + ": kernel fails validation (" +
                                    v.describe() + ")");
}

std::vector<double> eigen_sequence(const MercerKernel& k, std::int64_t n) {
    require_valid(k, "eigen_sequence");
    if (n < 1) throw std::invalid_argument("eigen_sequence: need n >= 1");
    double avail = cumulative_dim(k.space, k.k_max());
    if (static_cast<double>(n) > avail + 0.5)
        throw std::out_of_range(fmt("eigen_sequence: n = %.0f beyond D_{K_max} = %.0f",
                                    static_cast<double>(n), avail));
    if (n > 50'000'000)
        throw std::length_error(fmt("eigen_sequence: materializing %.3g eigenvalues "
                                    "exceeds the 5e7 cap; use block_sequence",
                                    static_cast<double>(n)));
    std::vector<double> lam;
    lam.reserve(static_cast<std::size_t>(n));
    for (int deg = 0; deg <= k.k_max() && static_cast<std::int64_t>(lam.size()) < n; ++deg) {
        double d = harmonic_dim(k.space, deg);
        std::int64_t left = n - static_cast<std::int64_t>(lam.size());
        std::int64_t fill = d >= static_cast<double>(left) ? left
                                                           : static_cast<std::int64_t>(d);
        lam.insert(lam.end(), static_cast<std::size_t>(fill), k.b[deg]);
    }
    return lam;
}

MercerKernel sqrt_kernel(const MercerKernel& k) {
    require_valid(k, "sqrt_kernel");
    MercerKernel r = k;
    for (double& v : r.b) v = std::sqrt(v);
    return r;
}

FractionalKernel fractional_kernel(const MercerKernel& k, double r) {
    if (!(r > 0.0)) throw std::invalid_argument("fractional_kernel: need r > 0");
    require_valid(k, "fractional_kernel");
    FractionalKernel out;
    out.space = k.space;
    out.r = r;
    int kmax = k.k_max();
    out.coeffs.resize(kmax + 1);
    std::vector<double> terms(kmax + 1);
    for (int j = 0; j <= kmax; ++j) {
        out.coeffs[j] = j == 0 ? 0.0 : std::pow(laplace_eigenvalue(k.space, j), r) * k.b[j];
        terms[j] = harmonic_dim(k.space, j) * out.coeffs[j];
    }
    out.trace = pairwise_sum(terms);
    out.trace_tail_ratio = tail_ratio(terms);
    return out;
}

HolderFit holder_exponent(const MercerKernel& k, const std::vector<double>& t_grid,
                          int u_points) {
    require_valid(k, "holder_exponent");
    if (static_cast<int>(t_grid.size()) < 8)
        throw std::invalid_argument("holder_exponent: need at least 8 grid points");
    const double pi = std::acos(-1.0);
    for (double t : t_grid)
        if (!(t > 0.0) || !(t < pi))
            throw std::invalid_argument("holder_exponent: t_grid must lie in (0, pi)");
    if (u_points < 2) throw std::invalid_argument("holder_exponent: need u_points >= 2");

    HolderFit fit;
    int kmax = k.k_max();
    bool constant_only = true;
    for (int j = 1; j <= kmax; ++j)
        if (k.b[j] != 0.0) constant_only = false;
    if (constant_only) {
        fit.degenerate = true;
        fit.d_values.assign(t_grid.size(), 0.0);
        return fit;
    }

    std::vector<double> slice(kmax + 1);
    for (int j = 0; j <= kmax; ++j) slice[j] = k.b[j] * harmonic_dim(k.space, j);
    QRecurrence rec = q_recurrence(jacobi_index(k.space), std::max(kmax, 1));

    // Chebyshev-spaced x plus both endpoints; the sup sits at x = 1 whenever
    // the coefficients share a sign, so the endpoints pin it exactly
    std::vector<double> xs(u_points + 2);
    for (int j = 0; j < u_points; ++j) xs[j] = std::cos(pi * (j + 0.5) / u_points);
    xs[u_points] = 1.0;
    xs[u_points + 1] = -1.0;

    fit.d_values.assign(t_grid.size(), 0.0);
    parallel_for(static_cast<std::int64_t>(t_grid.size()), [&](std::int64_t i) {
        std::vector<double> u(kmax + 1);
        one_minus_Q_column(rec, t_grid[i], kmax, u.data());
        ZonalFunction g;
        g.space = k.space;
        g.h.resize(kmax + 1);
        for (int j = 0; j <= kmax; ++j) g.h[j] = -slice[j] * u[j];
        double best = 0.0;
        for (double x : xs) best = std::max(best, std::abs(evaluate_x(g, rec, x)));
        fit.d_values[i] = best;
    });

    std::vector<double> lx, ly;
    for (std::size_t i = 0; i < t_grid.size(); ++i) {
        if (!(fit.d_values[i] > 0.0)) {
            fit.degenerate = true;
            return fit;
        }
        lx.push_back(std::log(t_grid[i]));
        ly.push_back(std::log(fit.d_values[i]));
    }
    fit.raw_slope = fit_line(lx, ly).slope;
    if (fit.raw_slope <= 0.0) {
        fit.degenerate = true;  // no exponent in (0, 2] fits a flat/decreasing D
        return fit;
    }
    fit.beta = std::min(fit.raw_slope, 2.0);
    return fit;
}

BlockSeq block_sequence(const MercerKernel& k) {
    BlockSeq bs;
    double cum = 0.0;
    for (int deg = 0; deg <= k.k_max(); ++deg) {
        double d = harmonic_dim(k.space, deg);
        bs.n_mid.push_back(cum + 0.5 * (d + 1.0));
        cum += d;
        bs.lambda.push_back(k.b[deg]);
        bs.degree.push_back(deg);
        bs.d_cum.push_back(cum);
    }
    return bs;
}

static DecayReport decay_fit(const MercerKernel& k, double target, double slope_tol,
                             double n_lo, double n_hi) {
    DecayReport rep;
    rep.target_slope = target;
    rep.slope_tol = slope_tol;

    BlockSeq bs = block_sequence(k);
    if (k.k_max() < 2)
        throw std::invalid_argument("decay fit: kernel truncated below degree 2");
    double lo_all = bs.n_mid[1];  // degree-0 block excluded from fits
    double hi_all = bs.n_mid.back();
    if (std::log10(hi_all / lo_all) < 2.0)
        throw std::invalid_argument(
            fmt("decay fit: block midpoints span [%.3g, %.3g], fewer than two decades",
                lo_all, hi_all));
    if (n_lo <= 0.0 || n_hi <= 0.0) {
        double mid = 0.5 * (std::log10(lo_all) + std::log10(hi_all));
        n_lo = std::pow(10.0, mid - 1.0);
        n_hi = std::pow(10.0, mid + 1.0);
    }
    rep.n_lo = n_lo;
    rep.n_hi = n_hi;

    std::vector<double> lx, lu, ly, sup_window, sup_last;
    for (std::size_t i = 1; i < bs.n_mid.size(); ++i) {
        if (!(bs.lambda[i] > 0.0)) continue;
        double stat = bs.lambda[i] * std::pow(bs.d_cum[i], -target);
        if (bs.n_mid[i] >= n_lo && bs.n_mid[i] <= n_hi) {
            lx.push_back(std::log(bs.n_mid[i]));
            lu.push_back(1.0 / bs.degree[i]);
            ly.push_back(std::log(bs.lambda[i]));
            sup_window.push_back(stat);
        }
        if (bs.n_mid[i] >= hi_all / 10.0) sup_last.push_back(stat);
    }
    if (lx.size() < 8)
        throw std::invalid_argument(fmt("decay fit: only %.0f blocks in window [%.3g, %.3g]",
                                        double(lx.size()), n_lo, n_hi));

    rep.fitted_slope = fit_slope_corrected(lx, lu, ly);
    rep.sup_window_median = median(sup_window);
    rep.sup_last_decade_max = sup_last.empty() ? 0.0
                                               : *std::max_element(sup_last.begin(),
                                                                   sup_last.end());
    rep.slope_ok = rep.fitted_slope <= target + slope_tol;
    rep.sup_ok = rep.sup_window_median > 0.0
                     ? rep.sup_last_decade_max <= 2.0 * rep.sup_window_median
                     : rep.sup_last_decade_max == 0.0;
    rep.verdict = rep.slope_ok && rep.sup_ok;
    rep.diagnostic = fmt("slope %.4f vs target %.4f", rep.fitted_slope, target) +
                     fmt(" (tol %.2f); ", slope_tol) +
                     fmt("sup stat last-decade max %.4g vs window median %.4g; ",
                         rep.sup_last_decade_max, rep.sup_window_median) +
                     fmt("%.0f blocks in [%.4g, %.4g]", double(lx.size()), n_lo, n_hi);
    return rep;
}

DecayReport decay_verdict_holder(const MercerKernel& k, double beta, double slope_tol,
                                 double n_lo, double n_hi) {
    require_valid(k, "decay_verdict_holder");
    if (!(beta > 0.0) || beta > 2.0)
        throw std::invalid_argument("decay_verdict_holder: beta must lie in (0, 2]");
    return decay_fit(k, -(1.0 + beta / k.space.m), slope_tol, n_lo, n_hi);
}

DecayReport decay_verdict_sobolev(const MercerKernel& k, double r, double slope_tol,
                                  double n_lo, double n_hi) {
    FractionalKernel fk = fractional_kernel(k, r);  // rejects r <= 0, validates
    if (fk.trace_tail_ratio >= 1.0)
        throw std::runtime_error(
            fmt("decay_verdict_sobolev: fractional trace tail ratio %.6f >= 1, "
                "trace does not converge at this truncation",
                fk.trace_tail_ratio));
    return decay_fit(k, -(1.0 + 2.0 * r / k.space.m), slope_tol, n_lo, n_hi);
}

MercerKernel example_kernel(Family family, int m, double eps, int r, int kmax) {
    Space sp = make_space(family, m);
    if (!(m * eps > 1.0))
        throw std::invalid_argument(fmt("example_kernel: need m*eps > 1, got %.4f", m * eps));
    if (r < 1) throw std::invalid_argument("example_kernel: need r >= 1");
    if (kmax < 1) throw std::invalid_argument("example_kernel: need kmax >= 1");

    double a = sp.alpha, b = sp.beta;
    double s = m * (1.0 + eps) + 2.0 * r - 1.0;
    MercerKernel k;
    k.space = sp;
    k.b.resize(kmax + 1);
    k.b[0] = 1.0;
    for (int n = 1; n <= kmax; ++n) {
        // Gamma-ratio coefficient c_n, P_n(1), and 1/d_n assembled in log space
        double log_c = std::lgamma(b + 1.0) + std::log(2.0 * n + a + b + 1.0) +
                       std::lgamma(n + a + b + 1.0) - std::lgamma(a + b + 2.0) -
                       std::lgamma(n + b + 1.0);
        double log_p1 = std::lgamma(n + a + 1.0) - std::lgamma(a + 1.0) -
                        std::lgamma(n + 1.0);
        k.b[n] = std::exp(log_c + log_p1 - s * std::log(double(n)) -
                          harmonic_dim_log(sp, n));
    }
    double gap = example_kernel_closed_form_gap(k, eps, r, 512);
    if (gap > 1e-8)
        throw std::logic_error(
            fmt("example_kernel: Gamma construction deviates from n^{-s} by %.3g", gap));
    if (family == Family::sphere)
        k.note = "sphere family: coefficient construction is uniform across the catalog; "
                 "decay targets match the projective-space cases";
    return k;
}

double example_kernel_closed_form_gap(const MercerKernel& k, double eps, int r, int n_max) {
    double s = k.space.m * (1.0 + eps) + 2.0 * r - 1.0;
    double gap = 0.0;
    for (int n = 1; n <= std::min(n_max, k.k_max()); ++n)
        gap = std::max(gap, std::abs(k.b[n] * std::exp(s * std::log(double(n))) - 1.0));
    return gap;
}

double n_width(const MercerKernel& k, std::int64_t n) {
    if (n < 0) throw std::invalid_argument("n_width: need n >= 0");
    std::vector<double> lam = eigen_sequence(k, n + 1);
    return std::sqrt(lam[static_cast<std::size_t>(n)]);
}

}  // namespace tph
