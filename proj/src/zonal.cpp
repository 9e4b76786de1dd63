#include "tph/zonal.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "tph/numerics.hpp"

namespace tph {

double evaluate_x(const ZonalFunction& f, const QRecurrence& rec, double x) {
    // Clenshaw for Q_{k+1} = (a_k x + b_k) Q_k - c_k Q_{k-1}: since Q_1 is the
    // k=0 recurrence applied to Q_0 = 1, the sum collapses to u_0.
    int kmax = f.k_max();
    if (kmax == 0) return f.h[0];
    double u2 = 0.0, u1 = 0.0;
    for (int k = kmax; k >= 1; --k) {
        double u0 = f.h[k] + (rec.a[k] * x + rec.b[k]) * u1 -
                    (k + 1 <= kmax ? rec.c[k + 1] * u2 : 0.0);
        u2 = u1;
        u1 = u0;
    }
    return f.h[0] + (rec.a[0] * x + rec.b[0]) * u1 - rec.c[1] * u2;
}

double evaluate(const ZonalFunction& f, double t) {
    if (t < 0.0 || t > std::acos(-1.0) + 1e-12)
        throw std::invalid_argument("geodesic distance t must lie in [0, pi]");
    QRecurrence rec = q_recurrence(jacobi_index(f.space), std::max(f.k_max(), 1));
    return evaluate_x(f, rec, std::cos(t));
}

static int default_norm_nodes(int kmax) { return std::max(64, 2 * kmax + 16); }
static int default_inf_grid(int kmax) { return std::max(2048, 8 * kmax + 16); }

double lp_norm(const ZonalFunction& f, double p, int n_nodes) {
    if (!(p >= 1.0)) throw std::invalid_argument("lp_norm requires p >= 1");
    int kmax = f.k_max();
    JacobiIndex idx = jacobi_index(f.space);
    QRecurrence rec = q_recurrence(idx, std::max(kmax, 1));
    if (std::isinf(p)) {
        int n = n_nodes > 0 ? n_nodes : default_inf_grid(kmax);
        const double pi = std::acos(-1.0);
        double best = 0.0;
        int ibest = 0;
        for (int i = 0; i < n; ++i) {
            double t = pi * i / (n - 1.0);
            double v = std::abs(evaluate_x(f, rec, std::cos(t)));
            if (v > best) {
                best = v;
                ibest = i;
            }
        }
        // polish around the grid argmax so the sup barely moves under grid
        // doubling
        double lo = pi * std::max(ibest - 1, 0) / (n - 1.0);
        double hi = pi * std::min(ibest + 1, n - 1) / (n - 1.0);
        double polished = golden_max(lo, hi, 48, [&](double t) {
            return std::abs(evaluate_x(f, rec, std::cos(t)));
        });
        return std::max(best, polished);
    }
    int n = n_nodes > 0 ? n_nodes : default_norm_nodes(kmax);
    QuadratureRule rule = gauss_jacobi(idx, n);
    double mass = jacobi_weight_mass(idx);
    std::vector<double> terms(n);
    for (int i = 0; i < n; ++i) {
        double v = std::abs(evaluate_x(f, rec, rule.nodes[i]));
        terms[i] = rule.weights[i] / mass * (p == 2.0 ? v * v : std::pow(v, p));
    }
    double s = pairwise_sum(terms);
    s = std::max(s, 0.0);
    return p == 2.0 ? std::sqrt(s) : std::pow(s, 1.0 / p);
}

std::vector<double> energies(const ZonalFunction& f) {
    std::vector<double> s(f.h.size());
    for (int k = 0; k <= f.k_max(); ++k) s[k] = f.h[k] * f.h[k] / harmonic_dim(f.space, k);
    return s;
}

ZonalFunction fractional_derivative(const ZonalFunction& f, double r) {
    if (!(r > 0.0)) throw std::invalid_argument("fractional order r must be > 0");
    ZonalFunction g = f;
    g.h[0] = 0.0;
    for (int k = 1; k <= f.k_max(); ++k)
        g.h[k] = f.h[k] * std::pow(laplace_eigenvalue(f.space, k), 0.5 * r);
    return g;
}

double sobolev_norm(const ZonalFunction& f, double r, double p) {
    return lp_norm(f, p) + lp_norm(fractional_derivative(f, r), p);
}

ZonalFunction random_function(const Space& sp, int kmax, std::uint64_t seed, double decay) {
    CounterRng rng(seed);
    ZonalFunction f;
    f.space = sp;
    f.h.resize(kmax + 1);
    for (int k = 0; k <= kmax; ++k) f.h[k] = rng.normal(k) * std::pow(1.0 + k, -decay);
    return f;
}

static void check_compatible(const ZonalFunction& f, const ZonalFunction& g) {
    if (!(f.space == g.space))
        throw std::invalid_argument("zonal functions live on different spaces");
    if (f.h.size() != g.h.size())
        throw std::invalid_argument("zonal functions have different truncations");
}

ZonalFunction subtract(const ZonalFunction& f, const ZonalFunction& g) {
    check_compatible(f, g);
    ZonalFunction r = f;
    for (std::size_t k = 0; k < r.h.size(); ++k) r.h[k] = f.h[k] - g.h[k];
    return r;
}

ZonalFunction add(const ZonalFunction& f, const ZonalFunction& g) {
    check_compatible(f, g);
    ZonalFunction r = f;
    for (std::size_t k = 0; k < r.h.size(); ++k) r.h[k] = f.h[k] + g.h[k];
    return r;
}

}  // namespace tph
