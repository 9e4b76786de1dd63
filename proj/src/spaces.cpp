#include "tph/spaces.hpp"

#include <cmath>
#include <stdexcept>

namespace tph {

std::string family_name(Family f) {
    switch (f) {
        case Family::sphere: return "sphere";
        case Family::real_projective: return "real-projective";
        case Family::complex_projective: return "complex-projective";
        case Family::quaternion_projective: return "quaternion-projective";
        case Family::cayley_plane: return "cayley-plane";
    }
    throw std::logic_error("unknown family enum");
}

Family family_from_name(const std::string& name) {
    if (name == "sphere") return Family::sphere;
    if (name == "real-projective") return Family::real_projective;
    if (name == "complex-projective") return Family::complex_projective;
    if (name == "quaternion-projective") return Family::quaternion_projective;
    if (name == "cayley-plane") return Family::cayley_plane;
    throw std::invalid_argument(
        "unknown family '" + name +
        "' (expected sphere, real-projective, complex-projective, "
        "quaternion-projective, or cayley-plane)");
}

Space make_space(Family f, int m) {
    double sigma = 0.0, rho = 0.0;
    switch (f) {
        case Family::sphere:
            if (m < 1)
                throw std::invalid_argument("sphere requires m >= 1, got m=" + std::to_string(m));
            sigma = 0.0;
            rho = m - 1.0;
            break;
        case Family::real_projective:
            if (m < 2)
                throw std::invalid_argument("real projective space requires m >= 2, got m=" +
                                            std::to_string(m));
            sigma = m - 1.0;
            rho = 0.0;
            break;
        case Family::complex_projective:
            if (m < 4 || m % 2 != 0)
                throw std::invalid_argument(
                    "complex projective space requires m in {4,6,8,...}, got m=" +
                    std::to_string(m));
            sigma = m - 2.0;
            rho = 1.0;
            break;
        case Family::quaternion_projective:
            if (m < 8 || m % 4 != 0)
                throw std::invalid_argument(
                    "quaternion projective space requires m in {8,12,16,...}, got m=" +
                    std::to_string(m));
            sigma = m - 4.0;
            rho = 3.0;
            break;
        case Family::cayley_plane:
            if (m != 16)
                throw std::invalid_argument("the Cayley plane requires m = 16, got m=" +
                                            std::to_string(m));
            sigma = 8.0;
            rho = 7.0;
            break;
    }
    Space sp;
    sp.family = f;
    sp.m = m;
    sp.sigma = sigma;
    sp.rho = rho;
    sp.alpha = (sigma + rho - 1.0) / 2.0;  // == (m-2)/2 for every family
    sp.beta = (rho - 1.0) / 2.0;
    return sp;
}

const std::vector<Space>& catalog() {
    static const std::vector<Space> entries = [] {
        std::vector<Space> v;
        for (int m : {1, 2, 3, 4, 8}) v.push_back(make_space(Family::sphere, m));
        for (int m : {2, 3, 4, 8}) v.push_back(make_space(Family::real_projective, m));
        for (int m : {4, 6, 8}) v.push_back(make_space(Family::complex_projective, m));
        for (int m : {8, 12}) v.push_back(make_space(Family::quaternion_projective, m));
        v.push_back(make_space(Family::cayley_plane, 16));
        return v;
    }();
    return entries;
}

double laplace_eigenvalue(const Space& sp, std::int64_t k) {
    if (k < 0) throw std::invalid_argument("degree k must be >= 0");
    double kk = static_cast<double>(k);
    return kk * (kk + sp.alpha + sp.beta + 1.0);
}

double harmonic_dim_log(const Space& sp, std::int64_t k) {
    if (k < 0) throw std::invalid_argument("degree k must be >= 0");
    if (k == 0) return 0.0;
    double a = sp.alpha, b = sp.beta, kk = static_cast<double>(k);
    // all lgamma arguments are >= 1/2 on the catalog range
    return std::log(2.0 * kk + a + b + 1.0) + std::lgamma(b + 1.0) + std::lgamma(kk + a + b + 1.0) +
           std::lgamma(kk + a + 1.0) - std::lgamma(a + b + 2.0) - std::lgamma(a + 1.0) -
           std::lgamma(kk + 1.0) - std::lgamma(kk + b + 1.0);
}

double harmonic_dim(const Space& sp, std::int64_t k) {
    if (k == 0) return 1.0;
    double v = std::exp(harmonic_dim_log(sp, k));
    // d_k is an integer; snap to it while that is representable
    if (v < 9.007e15) return std::round(v);
    return v;
}

double cumulative_dim(const Space& sp, std::int64_t n) {
    if (n < 0) throw std::invalid_argument("degree n must be >= 0");
    double sum = 0.0, c = 0.0;  // Kahan
    for (std::int64_t k = 0; k <= n; ++k) {
        double y = harmonic_dim(sp, k) - c;
        double t = sum + y;
        c = (t - sum) - y;
        sum = t;
    }
    return sum;
}

}  // namespace tph
