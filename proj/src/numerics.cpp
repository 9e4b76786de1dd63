#include "tph/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <thread>

namespace tph {

double pairwise_sum(const double* x, std::size_t n) {
    if (n == 0) return 0.0;
    if (n <= 16) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) s += x[i];
        return s;
    }
    std::size_t half = n / 2;
    return pairwise_sum(x, half) + pairwise_sum(x + half, n - half);
}

double pairwise_sum(const std::vector<double>& x) { return pairwise_sum(x.data(), x.size()); }

double median(std::vector<double> v) {
    if (v.empty()) throw std::invalid_argument("median of empty sequence");
    std::sort(v.begin(), v.end());
    std::size_t n = v.size();
    return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

std::vector<double> geomspace(double a, double b, int n) {
    if (a <= 0.0 || b <= 0.0) throw std::invalid_argument("geomspace endpoints must be positive");
    if (n < 1) throw std::invalid_argument("geomspace needs n >= 1");
    std::vector<double> g(n);
    if (n == 1) {
        g[0] = b;
        return g;
    }
    double la = std::log(a), lb = std::log(b);
    for (int i = 0; i < n; ++i) g[i] = std::exp(la + (lb - la) * i / (n - 1.0));
    g.front() = a;
    g.back() = b;
    return g;
}

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("fit_line needs >= 2 points");
    double n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    double det = n * sxx - sx * sx;
    if (det == 0.0) throw std::invalid_argument("fit_line: degenerate abscissae");
    LineFit f;
    f.slope = (n * sxy - sx * sy) / det;
    f.intercept = (sy - f.slope * sx) / n;
    return f;
}

double fit_slope_corrected(const std::vector<double>& x, const std::vector<double>& u,
                           const std::vector<double>& y) {
    std::size_t n = x.size();
    if (u.size() != n || y.size() != n || n < 3)
        throw std::invalid_argument("fit_slope_corrected needs >= 3 points");
    // normal equations for y ~ c0 + c1 x + c2 u, solved by 3x3 elimination
    double A[3][3] = {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}};
    double r[3] = {0, 0, 0};
    for (std::size_t i = 0; i < n; ++i) {
        double row[3] = {1.0, x[i], u[i]};
        for (int a = 0; a < 3; ++a) {
            for (int b = 0; b < 3; ++b) A[a][b] += row[a] * row[b];
            r[a] += row[a] * y[i];
        }
    }
    for (int col = 0; col < 3; ++col) {  // partial pivoting
        int piv = col;
        for (int k = col + 1; k < 3; ++k)
            if (std::abs(A[k][col]) > std::abs(A[piv][col])) piv = k;
        if (A[piv][col] == 0.0) throw std::invalid_argument("fit_slope_corrected: singular system");
        std::swap(A[col], A[piv]);
        std::swap(r[col], r[piv]);
        for (int k = col + 1; k < 3; ++k) {
            double f = A[k][col] / A[col][col];
            for (int b = col; b < 3; ++b) A[k][b] -= f * A[col][b];
            r[k] -= f * r[col];
        }
    }
    double c[3];
    for (int k = 2; k >= 0; --k) {
        double s = r[k];
        for (int b = k + 1; b < 3; ++b) s -= A[k][b] * c[b];
        c[k] = s / A[k][k];
    }
    return c[1];
}

double golden_max(double lo, double hi, int iterations,
                  const std::function<double(double)>& fn) {
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
    double f1 = fn(x1), f2 = fn(x2);
    double best = std::max(f1, f2);
    for (int it = 0; it < iterations; ++it) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + gr * (hi - lo);
            f2 = fn(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - gr * (hi - lo);
            f1 = fn(x1);
        }
        best = std::max(best, std::max(f1, f2));
    }
    return best;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

double CounterRng::uniform(std::uint64_t i) const {
    std::uint64_t h = splitmix64(seed ^ splitmix64(i));
    return (static_cast<double>(h >> 11) + 0.5) * 0x1.0p-53;  // in (0,1)
}

double CounterRng::normal(std::uint64_t i) const {
    double u1 = uniform(2 * i);
    double u2 = uniform(2 * i + 1);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::acos(-1.0) * u2);
}

int default_thread_count() {
    if (const char* env = std::getenv("TPH_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

void parallel_for(std::int64_t n, const std::function<void(std::int64_t)>& body) {
    if (n <= 0) return;
    int threads = default_thread_count();
    if (threads <= 1 || n < 4 * threads) {
        for (std::int64_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(threads);
    std::int64_t chunk = (n + threads - 1) / threads;
    for (int th = 0; th < threads; ++th) {
        std::int64_t lo = th * chunk;
        std::int64_t hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &body] {
            for (std::int64_t i = lo; i < hi; ++i) body(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace tph
