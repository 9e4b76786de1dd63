#include "tph/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace tph {

JacobiIndex jacobi_index(const Space& sp) { return {sp.alpha, sp.beta}; }

static void check_index(const JacobiIndex& idx) {
    if (!(idx.alpha > -1.0) || !(idx.beta > -1.0))
        throw std::invalid_argument("Jacobi parameters must satisfy alpha, beta > -1");
}

double jacobi_P_at_one(const JacobiIndex& idx, int k) {
    // P_k(1) = binom(k+alpha, k) = G(k+alpha+1) / (G(alpha+1) G(k+1))
    return std::exp(std::lgamma(k + idx.alpha + 1.0) - std::lgamma(idx.alpha + 1.0) -
                    std::lgamma(k + 1.0));
}

double jacobi_P(const JacobiIndex& idx, int k, double x) {
    check_index(idx);
    if (k < 0) throw std::invalid_argument("degree k must be >= 0");
    if (x < -1.0 || x > 1.0)
        throw std::invalid_argument("jacobi_P argument x=" + std::to_string(x) +
                                    " outside [-1,1]");
    double a = idx.alpha, b = idx.beta;
    if (k == 0) return 1.0;
    double pkm1 = 1.0;
    double pk = 0.5 * (a + b + 2.0) * x + 0.5 * (a - b);
    for (int n = 1; n < k; ++n) {
        // standard three-term recurrence for P_{n+1}
        double c = 2.0 * n + a + b;
        double a1 = 2.0 * (n + 1.0) * (n + a + b + 1.0) * c;
        double a2 = (c + 1.0) * (a * a - b * b);
        double a3 = (c + 1.0) * c * (c + 2.0);
        double a4 = 2.0 * (n + a) * (n + b) * (c + 2.0);
        double pnext = ((a2 + a3 * x) * pk - a4 * pkm1) / a1;
        pkm1 = pk;
        pk = pnext;
    }
    return pk;
}

QRecurrence q_recurrence(const JacobiIndex& idx, int kmax) {
    check_index(idx);
    if (kmax < 0) throw std::invalid_argument("kmax must be >= 0");
    double a = idx.alpha, b = idx.beta;
    QRecurrence rec;
    int n = kmax + 1;  // one past kmax so Clenshaw can read c[kmax]
    rec.a.resize(n);
    rec.b.resize(n);
    rec.c.resize(n);
    // Q_1 = a_0 x + b_0 with a_0 + b_0 = 1
    rec.a[0] = (a + b + 2.0) / (2.0 * (a + 1.0));
    rec.c[0] = 0.0;
    rec.b[0] = 1.0 - rec.a[0];
    for (int k = 1; k < n; ++k) {
        double s = 2.0 * k + a + b;
        rec.a[k] = (s + 1.0) * (s + 2.0) / (2.0 * (k + a + b + 1.0) * (k + a + 1.0));
        rec.c[k] = k * (k + b) * (s + 2.0) / ((k + a + b + 1.0) * s * (k + a + 1.0));
        // a_k + b_k = 1 + c_k holds identically (Q_k(1) = 1); storing b_k this
        // way makes it exact in floating point as well.
        rec.b[k] = 1.0 + rec.c[k] - rec.a[k];
    }
    return rec;
}

void jacobi_Q_column(const QRecurrence& rec, double x, int kmax, double* out) {
    out[0] = 1.0;
    if (kmax == 0) return;
    out[1] = rec.a[0] * x + rec.b[0];
    for (int k = 1; k < kmax; ++k)
        out[k + 1] = (rec.a[k] * x + rec.b[k]) * out[k] - rec.c[k] * out[k - 1];
}

double jacobi_Q(const JacobiIndex& idx, int k, double x) {
    check_index(idx);
    if (k < 0) throw std::invalid_argument("degree k must be >= 0");
    if (x < -1.0 || x > 1.0)
        throw std::invalid_argument("jacobi_Q argument x=" + std::to_string(x) +
                                    " outside [-1,1]");
    QRecurrence rec = q_recurrence(idx, k);
    std::vector<double> col(k + 1);
    jacobi_Q_column(rec, x, k, col.data());
    return col[k];
}

void one_minus_Q_column(const QRecurrence& rec, double s, int kmax, double* out) {
    // u_k = 1 - Q_k(cos s); the recurrence keeps everything as sums of small
    // positive pieces, so u_k is accurate even at u ~ 1e-30.
    double sh = std::sin(0.5 * s);
    double one_minus_x = 2.0 * sh * sh;
    double x = 1.0 - one_minus_x;
    out[0] = 0.0;
    if (kmax == 0) return;
    out[1] = rec.a[0] * one_minus_x;
    for (int k = 1; k < kmax; ++k)
        out[k + 1] =
            rec.a[k] * one_minus_x + (rec.a[k] * x + rec.b[k]) * out[k] - rec.c[k] * out[k - 1];
}

std::vector<double> cosine_coeffs(const JacobiIndex& idx, int k) {
    check_index(idx);
    if (k < 0) throw std::invalid_argument("degree k must be >= 0");
    // Q_k(cos theta) is a cosine polynomial of degree k; sample at N Chebyshev
    // angles theta_j = pi (j+1/2)/N and apply the DCT-II analysis formulas,
    // exact for degree < N.
    int n_samples = 4 * k + 8;
    QRecurrence rec = q_recurrence(idx, k);
    std::vector<double> col(k + 1);
    std::vector<double> f(n_samples);
    const double pi = std::acos(-1.0);
    for (int j = 0; j < n_samples; ++j) {
        double theta = pi * (j + 0.5) / n_samples;
        jacobi_Q_column(rec, std::cos(theta), k, col.data());
        f[j] = col[k];
    }
    std::vector<double> coeff(k + 1, 0.0);
    for (int v = 0; v <= k; ++v) {
        double s = 0.0;
        for (int j = 0; j < n_samples; ++j) s += f[j] * std::cos(v * pi * (j + 0.5) / n_samples);
        coeff[v] = (v == 0 ? 1.0 : 2.0) * s / n_samples;
    }
    // reconstruction check at the sample angles
    double resid = 0.0;
    for (int j = 0; j < n_samples; ++j) {
        double g = 0.0;
        for (int v = k; v >= 0; --v) g += coeff[v] * std::cos(v * pi * (j + 0.5) / n_samples);
        resid = std::max(resid, std::abs(g - f[j]));
    }
    if (resid > 1e-10)
        throw std::runtime_error("cosine expansion of Q_" + std::to_string(k) +
                                 " failed to reconstruct (residual " + std::to_string(resid) +
                                 ")");
    return coeff;
}

double jacobi_weight_mass(const JacobiIndex& idx) {
    // 2^{a+b+1} B(a+1, b+1)
    return std::exp((idx.alpha + idx.beta + 1.0) * std::log(2.0) + std::lgamma(idx.alpha + 1.0) +
                    std::lgamma(idx.beta + 1.0) - std::lgamma(idx.alpha + idx.beta + 2.0));
}

// Symmetric tridiagonal QL with implicit shifts, accumulating only the first
// row of the eigenvector matrix (all Golub-Welsch needs).  d = diagonal,
// e = subdiagonal in e[0..n-2], z starts as (1,0,...,0).
static void tridiag_ql_first_row(std::vector<double>& d, std::vector<double>& e,
                                 std::vector<double>& z) {
    int n = static_cast<int>(d.size());
    e.resize(n, 0.0);  // e[n-1] used as scratch
    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= 1e-15 * dd) break;
            }
            if (m != l) {
                if (iter++ == 60)
                    throw std::runtime_error(
                        "Gauss-Jacobi construction failed: tridiagonal QL did not converge");
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                for (int i = m - 1; i >= l; --i) {
                    double f = s * e[i];
                    double b = c * e[i];
                    r = std::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                    f = z[i + 1];
                    z[i + 1] = s * z[i] + c * f;
                    z[i] = c * z[i] - s * f;
                }
                if (r == 0.0 && m - 1 >= l) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
}

QuadratureRule gauss_jacobi(const JacobiIndex& idx, int n) {
    check_index(idx);
    if (n < 1) throw std::invalid_argument("quadrature order must be >= 1");
    double a = idx.alpha, b = idx.beta;
    // Monic recurrence pi_{k+1} = (x - al_k) pi_k - be_k pi_{k-1} (Gautschi):
    //   al_0 = (b-a)/(a+b+2),    al_k = (b^2-a^2)/((2k+a+b)(2k+a+b+2))
    //   be_1 = 4(a+1)(b+1)/((a+b+2)^2 (a+b+3))
    //   be_k = 4k(k+a)(k+b)(k+a+b)/((2k+a+b)^2 (2k+a+b+1)(2k+a+b-1))
    std::vector<double> diag(n), sub(n > 1 ? n - 1 : 0);
    diag[0] = (b - a) / (a + b + 2.0);
    for (int k = 1; k < n; ++k) {
        double s = 2.0 * k + a + b;
        diag[k] = (b * b - a * a) / (s * (s + 2.0));
        double be;
        if (k == 1)
            be = 4.0 * (a + 1.0) * (b + 1.0) / ((a + b + 2.0) * (a + b + 2.0) * (a + b + 3.0));
        else
            be = 4.0 * k * (k + a) * (k + b) * (k + a + b) / (s * s * (s + 1.0) * (s - 1.0));
        sub[k - 1] = std::sqrt(be);
    }
    std::vector<double> z(n, 0.0);
    z[0] = 1.0;
    std::vector<double> e(sub);
    tridiag_ql_first_row(diag, e, z);

    double mass = jacobi_weight_mass(idx);
    QuadratureRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int i, int j) { return diag[i] < diag[j]; });
    for (int i = 0; i < n; ++i) {
        rule.nodes[i] = diag[order[i]];
        rule.weights[i] = mass * z[order[i]] * z[order[i]];
    }
    return rule;
}

}  // namespace tph
