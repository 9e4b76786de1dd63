#include "tph/acceptance.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <string>
#include <vector>

#include "tph/jacobi.hpp"
#include "tph/mercer.hpp"
#include "tph/multipliers.hpp"
#include "tph/numerics.hpp"
#include "tph/smoothness.hpp"
#include "tph/spaces.hpp"
#include "tph/zonal.hpp"

namespace tph {

namespace {

std::string num(double v, const char* pat = "%.3e") {
    char buf[64];
    std::snprintf(buf, sizeof buf, pat, v);
    return buf;
}

// one representative per family, smallest catalog dimension each
const std::vector<Space>& representatives() {
    static const std::vector<Space> reps = {
        make_space(Family::sphere, 2),           make_space(Family::real_projective, 2),
        make_space(Family::complex_projective, 4), make_space(Family::quaternion_projective, 8),
        make_space(Family::cayley_plane, 16),
    };
    return reps;
}

// ---------------------------------------------------------------- criterion 1
CriterionResult crit_normalization(std::uint64_t) {
    CriterionResult res{1, "multiplier-normalization", false, "", 0.0};
    double worst = 0.0;
    std::vector<double> ts = geomspace(1e-3, 3.0, 50);
    for (const Space& sp : representatives())
        for (int ord = 1; ord <= 6; ++ord)
            for (double t : ts)
                worst = std::max(worst,
                                 std::abs(gen_shift_multipliers(sp, ord, t, 4).mu[0] - 1.0));
    res.pass = worst <= 1e-12;
    res.detail = "max |m_r(0,t) - 1| = " + num(worst) +
                 " over 5 families, r = 1..6, 50 t in [1e-3, 3]";
    return res;
}

// ---------------------------------------------------------------- criterion 2
CriterionResult crit_parseval(std::uint64_t seed) {
    CriterionResult res{2, "parseval-multiplier-identity", false, "", 0.0};
    const int kmax = 256;
    std::vector<double> ts = geomspace(0.1, 1.0, 5);
    const auto& reps = representatives();
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
        const Space& sp = reps[i % 5];
        int ord = 1 + i % 3;
        double t = ts[i % 5];
        ZonalFunction f = random_function(sp, kmax, seed + i);
        std::vector<double> om = one_minus_m_r(sp, ord, t, kmax);
        ZonalFunction diff = f;
        for (int k = 0; k <= kmax; ++k) diff.h[k] = -om[k] * f.h[k];
        std::vector<double> sf = energies(f), sd = energies(diff);
        for (int k = 0; k <= kmax; ++k) {
            double want = om[k] * om[k] * sf[k];
            if (want == 0.0 && sd[k] == 0.0) continue;
            worst = std::max(worst, std::abs(sd[k] - want) / std::max(want, 1e-300));
        }
    }
    res.pass = worst <= 1e-12;
    res.detail = "max relative energy error " + num(worst) +
                 " over 50 functions, K = 256, r cycling {1,2,3}";
    return res;
}

// ---------------------------------------------------------------- criterion 3
CriterionResult crit_hy_equality(std::uint64_t seed) {
    CriterionResult res{3, "hy-p2-equality", false, "", 0.0};
    const int kmax = 256;
    std::vector<double> ts = geomspace(0.1, 1.0, 5);
    const auto& reps = representatives();
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
        const Space& sp = reps[i % 5];
        int ord = 1 + i % 3;
        double t = ts[i % 5];
        ZonalFunction f = random_function(sp, kmax, seed + i);
        std::vector<double> om = one_minus_m_r(sp, ord, t, kmax);
        ZonalFunction diff = f;
        for (int k = 0; k <= kmax; ++k) diff.h[k] = -om[k] * f.h[k];
        double lhs = hy_weighted_sum(f, ord, t, 2.0).exact;
        double rhs = lp_norm(diff, 2.0);
        worst = std::max(worst, std::abs(lhs - rhs) / rhs);
    }
    res.pass = worst <= 1e-10;
    res.detail = "max relative gap " + num(worst) +
                 " between the exact-weight sum and ||S_{r,t}f - f||_2, 50 functions";
    return res;
}

// ---------------------------------------------------------------- criterion 4
CriterionResult crit_ratio_bounds(std::uint64_t) {
    CriterionResult res{4, "shift-ratio-bounds", false, "", 0.0};
    const double pi = std::acos(-1.0);
    std::vector<double> ts = geomspace(1e-3, pi / 2.0, 60);
    double min_ratio = std::numeric_limits<double>::infinity();
    double max_ratio = 0.0, max_m = 0.0;
    for (const Space& sp : representatives())
        for (int ord = 1; ord <= 3; ++ord) {
            ShiftRatioReport rep = equivalence_ratio_report(sp, ord, ts, 512);
            min_ratio = std::min(min_ratio, rep.ratio_min);
            max_ratio = std::max(max_ratio, rep.ratio_max);
            max_m = std::max(max_m, rep.max_m_kt_ge_1);
        }
    res.pass = min_ratio > 0.0 && std::isfinite(max_ratio) && max_m <= 1.0 - 1e-4;
    res.detail = "(1-m_r)/(kt)^{2r} in [" + num(min_ratio) + ", " + num(max_ratio) +
                 "] on kt <= pi; max m_r on kt >= 1 is " + num(max_m, "%.6f") +
                 " (k <= 512, r <= 3, 5 families)";
    return res;
}

// ------------------------------------------------------- criteria 5 and 6
std::vector<EquivalenceReport> equivalence_suite(std::uint64_t seed) {
    std::vector<double> ts = geomspace(0.01, 1.0, 32);
    const auto& reps = representatives();
    std::vector<EquivalenceReport> out(20);
    parallel_for(20, [&](std::int64_t i) {
        ZonalFunction f = random_function(reps[i % 5], 128, seed + 100 + i);
        out[i] = equivalence_report(f, 1, ts, 2.0);
    });
    return out;
}

double spread_of(const EquivalenceReport& rep, const std::string& key) {
    for (const auto& [name, v] : rep.ratio_spread)
        if (name == key) return v;
    return std::numeric_limits<double>::quiet_NaN();
}

CriterionResult crit_kfunc_equivalence(std::uint64_t seed) {
    CriterionResult res{5, "kfunctional-equivalence-p2", false, "", 0.0};
    double worst_os = 0.0, worst_ro = 0.0;
    for (const auto& rep : equivalence_suite(seed)) {
        worst_os = std::max(worst_os, spread_of(rep, "K_oracle/norm_Srt_diff"));
        worst_ro = std::max(worst_ro, spread_of(rep, "K_realized/K_oracle"));
    }
    res.pass = worst_os < 50.0 && worst_ro < 20.0;
    res.detail = "worst spreads: K_oracle/||S_{r,t}f - f|| = " + num(worst_os, "%.2f") +
                 " (< 50), K_realized/K_oracle = " + num(worst_ro, "%.2f") +
                 " (< 20), 20 functions, 32 t in [0.01, 1]";
    return res;
}

CriterionResult crit_kfunc_modulus(std::uint64_t seed) {
    CriterionResult res{6, "kfunctional-modulus-equivalence", false, "", 0.0};
    double worst = 0.0;
    for (const auto& rep : equivalence_suite(seed))
        worst = std::max(worst, spread_of(rep, "K_oracle/omega_2r"));
    res.pass = worst < 50.0;
    res.detail = "worst spread K_oracle/omega_2r = " + num(worst, "%.2f") +
                 " (< 50), 20 functions, 32 t in [0.01, 1]";
    return res;
}

// ---------------------------------------------------------------- criterion 7
CriterionResult crit_cosine_nonneg(std::uint64_t) {
    CriterionResult res{7, "cosine-coeff-nonnegativity", false, "", 0.0};
    double min_coeff = std::numeric_limits<double>::infinity();
    for (const Space& sp : catalog()) {
        JacobiIndex idx = jacobi_index(sp);
        for (int k = 0; k <= 64; ++k)
            for (double c : cosine_coeffs(idx, k)) min_coeff = std::min(min_coeff, c);
    }
    res.pass = min_coeff >= -1e-10;
    res.detail = "min cosine coefficient " + num(min_coeff) +
                 " over the full catalog, k <= 64";
    return res;
}

// ---------------------------------------------------------------- criterion 8
// Dyadic block statistics of the three proof sequences.  The gate requires
// the per-block statistic to be non-increasing trendwise (least-squares
// slope of the raw values over all blocks <= 0, up to roundoff) and every
// block to stay within 10x the median of the j <= 3 blocks.  Note that at
// small t the statistic of these sequences concentrates in the blocks
// straddling the cutoff scale k ~ 1/t and is zero or tiny for j <= 3, so
// the reference level sits far below the peak; the measured tables are
// emitted in the detail string.
struct MarcGate {
    bool bounded = true;
    bool trend = true;
    double ref = 0.0;    // 10x the j <= 3 median
    double peak = 0.0;
    std::size_t jpeak = 0;
    double slope = 0.0;  // least-squares slope of block value vs j
};

MarcGate marc_gate(const std::vector<double>& block) {
    MarcGate g;
    if (block.empty()) return g;
    std::vector<double> head(block.begin(),
                             block.begin() + std::min<std::size_t>(4, block.size()));
    g.ref = 10.0 * median(head);
    for (std::size_t j = 0; j < block.size(); ++j)
        if (block[j] > block[g.jpeak]) g.jpeak = j;
    g.peak = block[g.jpeak];
    g.bounded = g.peak <= g.ref + 1e-12 * g.peak;
    std::vector<double> xs, ys;
    for (std::size_t j = 0; j < block.size(); ++j) {
        xs.push_back(static_cast<double>(j));
        ys.push_back(block[j]);
    }
    g.slope = xs.size() >= 2 ? fit_line(xs, ys).slope : 0.0;
    g.trend = g.slope <= 1e-12 * g.peak;
    return g;
}

CriterionResult crit_marcinkiewicz(std::uint64_t) {
    CriterionResult res{8, "marcinkiewicz-proof-sequences", false, "", 0.0};
    struct Config {
        Space sp;
        int ord;
        double t;
    };
    std::vector<Config> configs;
    for (const Space& sp :
         {make_space(Family::sphere, 2), make_space(Family::complex_projective, 4)})
        for (auto& [ord, t] : std::vector<std::pair<int, double>>{{1, 0.01}, {2, 0.005}})
            configs.push_back({sp, ord, t});

    const int jmax = 10;
    bool all_ok = true;
    std::string det;
    for (const Config& c : configs) {
        int s = marcinkiewicz_order(c.sp);
        int kmax = (1 << (jmax + 1)) + s + 4;
        auto seqs = proof_sequences(c.sp, c.ord, c.t, 1.0, kmax);
        for (const auto& sq : seqs) {
            MarcinkiewiczReport rep = marcinkiewicz_report(sq, s, jmax);
            MarcGate g = marc_gate(rep.block);
            bool ok = g.bounded && g.trend;
            all_ok = all_ok && ok;
            det += "m=" + std::to_string(c.sp.m) + " r=" + std::to_string(c.ord) + " " +
                   sq.label + ": peak " + num(g.peak) + " at j=" + std::to_string(g.jpeak) +
                   " vs 10x j<=3 median " + num(g.ref) + ", slope " + num(g.slope) +
                   (ok ? " ok" : " FAIL") + "; blocks";
            for (double v : rep.block) det += " " + num(v, "%.2e");
            det += " | ";
        }
    }
    if (!all_ok)
        det += "(statistic concentrates at the cutoff scale k ~ 1/t, blocks j=6..8 at "
               "these t, and vanishes beyond it; the j<=3 reference misses the peak)";
    res.pass = all_ok;
    res.detail = det;
    return res;
}

// ---------------------------------------------------------------- criterion 9
struct ExampleCase {
    Family fam;
    int m;
    double eps;
    int ord;
};

const std::vector<ExampleCase>& example_cases() {
    static const std::vector<ExampleCase> cs = {
        {Family::complex_projective, 4, 0.5, 1},
        {Family::sphere, 2, 1.0, 1},
        {Family::quaternion_projective, 8, 0.25, 2},
    };
    return cs;
}

CriterionResult crit_example_decay(std::uint64_t) {
    CriterionResult res{9, "example-kernel-decay", false, "", 0.0};
    bool all_ok = true;
    std::string det;
    for (const ExampleCase& c : example_cases()) {
        MercerKernel k = example_kernel(c.fam, c.m, c.eps, c.ord, 512);
        double gap = example_kernel_closed_form_gap(k, c.eps, c.ord, 512);
        double dlo = cumulative_dim(k.space, 16), dhi = cumulative_dim(k.space, 256);
        DecayReport rep = decay_verdict_sobolev(k, c.ord, 0.1, dlo, dhi);
        double target = -(1.0 + c.eps + (2.0 * c.ord - 1.0) / c.m);
        double sobolev_cap = -(1.0 + 2.0 * c.ord / c.m);
        bool ok = gap <= 1e-8 && std::abs(rep.fitted_slope - target) <= 0.1 &&
                  rep.fitted_slope <= sobolev_cap && rep.verdict;
        all_ok = all_ok && ok;
        det += family_name(c.fam) + " m=" + std::to_string(c.m) + ": gap " + num(gap) +
               ", slope " + num(rep.fitted_slope, "%.4f") + " vs " + num(target, "%.4f") +
               " (cap " + num(sobolev_cap, "%.4f") + ")" + (ok ? " ok" : " FAIL") + " | ";
    }
    res.pass = all_ok;
    res.detail = det;
    return res;
}

// --------------------------------------------------------------- criterion 10
MercerKernel beta_family(double beta0, int kmax) {
    Space sp = make_space(Family::sphere, 2);
    MercerKernel k;
    k.space = sp;
    k.b.resize(kmax + 1);
    for (int n = 1; n <= kmax; ++n)
        k.b[n] = std::pow(static_cast<double>(n), -1.0 - beta0) / harmonic_dim(sp, n);
    k.b[0] = k.b[1];
    return k;
}

CriterionResult crit_holder_recovery(std::uint64_t) {
    CriterionResult res{10, "holder-recovery", false, "", 0.0};
    std::vector<double> ts = geomspace(0.02, 0.4, 16);
    bool all_ok = true;
    std::string det;
    for (double beta0 : {0.5, 1.0, 1.5}) {
        MercerKernel k = beta_family(beta0, 4096);
        HolderFit fit = holder_exponent(k, ts);
        DecayReport rep = decay_verdict_holder(k, beta0);
        bool ok = !fit.degenerate && std::abs(fit.beta - beta0) <= 0.1 && rep.verdict;
        all_ok = all_ok && ok;
        det += "beta0 " + num(beta0, "%.1f") + ": recovered " + num(fit.beta, "%.4f") +
               ", decay slope " + num(rep.fitted_slope, "%.4f") + " vs " +
               num(rep.target_slope, "%.4f") + (ok ? " ok" : " FAIL") + " | ";
    }
    res.pass = all_ok;
    res.detail = det;
    return res;
}

// --------------------------------------------------------------- criterion 11
CriterionResult crit_nwidths(std::uint64_t) {
    CriterionResult res{11, "n-widths", false, "", 0.0};
    bool all_ok = true;
    std::string det;
    for (const ExampleCase& c : example_cases()) {
        MercerKernel k = example_kernel(c.fam, c.m, c.eps, c.ord, 512);
        std::vector<double> lam = eigen_sequence(k, 1000);
        bool exact = true;
        for (std::int64_t n : {0, 1, 5, 99, 999})
            exact = exact && n_width(k, n) == std::sqrt(lam[n]);

        // block-level kappa fit over the same window as the eigenvalue fit
        BlockSeq bs = block_sequence(k);
        double dlo = cumulative_dim(k.space, 16), dhi = cumulative_dim(k.space, 256);
        std::vector<double> lx, lu, ly;
        for (std::size_t i = 1; i < bs.n_mid.size(); ++i)
            if (bs.n_mid[i] >= dlo && bs.n_mid[i] <= dhi && bs.lambda[i] > 0.0) {
                lx.push_back(std::log(bs.n_mid[i]));
                lu.push_back(1.0 / bs.degree[i]);
                ly.push_back(0.5 * std::log(bs.lambda[i]));
            }
        double slope = fit_slope_corrected(lx, lu, ly);
        double target = -0.5 * (1.0 + c.eps + (2.0 * c.ord - 1.0) / c.m);
        bool ok = exact && std::abs(slope - target) <= 0.05;
        all_ok = all_ok && ok;
        det += family_name(c.fam) + " m=" + std::to_string(c.m) +
               ": kappa slope " + num(slope, "%.4f") + " vs " + num(target, "%.4f") +
               (exact ? "" : ", sqrt mismatch") + (ok ? " ok" : " FAIL") + " | ";
    }
    res.pass = all_ok;
    res.detail = det;
    return res;
}

// --------------------------------------------------------------- criterion 12
CriterionResult crit_hygiene(std::uint64_t seed) {
    CriterionResult res{12, "numerics-hygiene", false, "", 0.0};
    std::string det;

    // (a) oracle gradient against central finite differences
    double worst_grad = 0.0;
    for (int i = 0; i < 20; ++i) {
        const Space& sp = representatives()[i % 5];
        int kmax = 64;
        ZonalFunction f = random_function(sp, kmax, seed + 300 + i);
        std::vector<double> s = energies(f), lam_r(kmax + 1);
        double ord = 1.0 + i % 2, t = (i % 4 < 2) ? 0.1 : 0.5;
        for (int k = 0; k <= kmax; ++k)
            lam_r[k] = std::pow(laplace_eigenvalue(sp, k), ord);
        CounterRng rng(seed + 7000 + i);
        std::vector<double> theta(kmax + 1);
        for (int k = 0; k <= kmax; ++k) theta[k] = 0.1 + 0.8 * rng.uniform(k);
        std::vector<double> g = kfunc_gradient(theta, s, lam_r, ord, t);
        double num2 = 0.0, den2 = 0.0;
        const double h = 1e-6;
        for (int k = 0; k <= kmax; ++k) {
            std::vector<double> tp = theta, tm = theta;
            tp[k] += h;
            tm[k] -= h;
            double fd = (kfunc_objective(tp, s, lam_r, ord, t) -
                         kfunc_objective(tm, s, lam_r, ord, t)) /
                        (2.0 * h);
            num2 += (fd - g[k]) * (fd - g[k]);
            den2 += g[k] * g[k];
        }
        worst_grad = std::max(worst_grad, std::sqrt(num2 / den2));
    }
    bool grad_ok = worst_grad <= 1e-5;
    det += "gradient vs FD " + num(worst_grad) + (grad_ok ? " ok" : " FAIL") + "; ";

    // (b) quadrature exactness: monic orthogonality against the closed-form
    // norms mass * prod(be_l), i, j <= 32 on a 40-node rule
    double worst_quad = 0.0;
    for (const Space& sp : representatives()) {
        JacobiIndex idx = jacobi_index(sp);
        double a = idx.alpha, b = idx.beta;
        QuadratureRule rule = gauss_jacobi(idx, 40);
        const int imax = 32;
        // monic recurrence coefficients
        std::vector<double> al(imax + 1), be(imax + 1);
        al[0] = (b - a) / (a + b + 2.0);
        for (int k = 1; k <= imax; ++k) {
            double s2 = 2.0 * k + a + b;
            al[k] = (b * b - a * a) / (s2 * (s2 + 2.0));
            be[k] = k == 1 ? 4.0 * (a + 1.0) * (b + 1.0) /
                                 ((a + b + 2.0) * (a + b + 2.0) * (a + b + 3.0))
                           : 4.0 * k * (k + a) * (k + b) * (k + a + b) /
                                 (s2 * s2 * (s2 + 1.0) * (s2 - 1.0));
        }
        // pi_i at every node
        std::size_t nn = rule.nodes.size();
        std::vector<std::vector<double>> pi_rows(imax + 1, std::vector<double>(nn));
        for (std::size_t q = 0; q < nn; ++q) {
            double x = rule.nodes[q], pm = 0.0, pc = 1.0;
            pi_rows[0][q] = 1.0;
            for (int k = 0; k < imax; ++k) {
                double pn = (x - al[k]) * pc - (k > 0 ? be[k] : 0.0) * pm;
                pm = pc;
                pc = pn;
                pi_rows[k + 1][q] = pc;
            }
        }
        std::vector<double> norm(imax + 1);
        norm[0] = jacobi_weight_mass(idx);
        for (int k = 1; k <= imax; ++k) norm[k] = norm[k - 1] * be[k];
        for (int i = 0; i <= imax; ++i)
            for (int j = 0; j <= imax; ++j) {
                std::vector<double> terms(nn);
                for (std::size_t q = 0; q < nn; ++q)
                    terms[q] = rule.weights[q] * pi_rows[i][q] * pi_rows[j][q];
                double got = pairwise_sum(terms);
                double want = i == j ? norm[i] : 0.0;
                worst_quad = std::max(worst_quad, std::abs(got - want) /
                                                      std::sqrt(norm[i] * norm[j]));
            }
    }
    bool quad_ok = worst_quad <= 1e-12;
    det += "quadrature orthogonality " + num(worst_quad) + (quad_ok ? " ok" : " FAIL") + "; ";

    // (c) doubling internal grids moves reported values by < 0.1%
    double worst_double = 0.0;
    for (int i = 0; i < 5; ++i) {
        ZonalFunction f = random_function(representatives()[i], 128, seed + 400 + i);
        for (double p : {1.0, 2.5, 4.0}) {
            double v1 = lp_norm(f, p, 272), v2 = lp_norm(f, p, 544);
            worst_double = std::max(worst_double, std::abs(v1 - v2) / v2);
        }
        double s1 = lp_norm(f, std::numeric_limits<double>::infinity(), 1040);
        double s2 = lp_norm(f, std::numeric_limits<double>::infinity(), 2080);
        worst_double = std::max(worst_double, std::abs(s1 - s2) / s2);
        double m1 = modulus(f, 2.0, 0.3, 2.0, 64), m2 = modulus(f, 2.0, 0.3, 2.0, 128);
        worst_double = std::max(worst_double, std::abs(m1 - m2) / m2);
    }
    {
        MercerKernel k = beta_family(1.0, 512);
        std::vector<double> ts = geomspace(0.05, 0.4, 8);
        double b1 = holder_exponent(k, ts, 1024).beta;
        double b2 = holder_exponent(k, ts, 2048).beta;
        worst_double = std::max(worst_double, std::abs(b1 - b2) / b2);
    }
    bool double_ok = worst_double < 1e-3;
    det += "grid doubling worst shift " + num(worst_double) + (double_ok ? " ok" : " FAIL");

    res.pass = grad_ok && quad_ok && double_ok;
    res.detail = det;
    return res;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(std::uint64_t seed, std::ostream* log) {
    using Runner = CriterionResult (*)(std::uint64_t);
    const Runner runners[] = {
        crit_normalization, crit_parseval,        crit_hy_equality,  crit_ratio_bounds,
        crit_kfunc_equivalence, crit_kfunc_modulus, crit_cosine_nonneg, crit_marcinkiewicz,
        crit_example_decay, crit_holder_recovery, crit_nwidths,      crit_hygiene,
    };
    std::vector<CriterionResult> out;
    for (Runner run : runners) {
        auto start = std::chrono::steady_clock::now();
        CriterionResult r;
        try {
            r = run(seed);
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = std::string("exception: ") + e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                        .count();
        if (r.id == 0) {  // exception path lost the id: recover from position
            r.id = static_cast<int>(out.size()) + 1;
            static const char* names[] = {
                "multiplier-normalization", "parseval-multiplier-identity", "hy-p2-equality",
                "shift-ratio-bounds",       "kfunctional-equivalence-p2",
                "kfunctional-modulus-equivalence", "cosine-coeff-nonnegativity",
                "marcinkiewicz-proof-sequences",   "example-kernel-decay", "holder-recovery",
                "n-widths",                 "numerics-hygiene"};
            r.name = names[out.size()];
        }
        if (log)
            *log << "[" << (r.pass ? "PASS" : "FAIL") << "] " << r.id << " " << r.name
                 << " (" << num(r.seconds, "%.2f") << " s)\n";
        out.push_back(r);
    }
    return out;
}

}  // namespace tph
