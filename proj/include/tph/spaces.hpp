#pragma once

// Catalog of compact two-point homogeneous spaces and their spectral data.
//
// Each space is described by its real dimension m and the root multiplicities
// (sigma, rho), which fix the Jacobi parameters
//     alpha = (sigma + rho - 1)/2 = (m - 2)/2,   beta = (rho - 1)/2.
// The Laplace-Beltrami spectrum is lambda_k = k(k + alpha + beta + 1) with
// eigenspaces of dimension d_k growing like k^{m-1}.

#include <cstdint>
#include <string>
#include <vector>

namespace tph {

enum class Family {
    sphere,
    real_projective,
    complex_projective,
    quaternion_projective,
    cayley_plane,
};

// Kebab-case spelling used by the CLI and the JSON schemas.
std::string family_name(Family f);
Family family_from_name(const std::string& name);

struct Space {
    Family family;
    int m;         // real dimension
    double sigma;  // root multiplicities
    double rho;
    double alpha;  // Jacobi parameters
    double beta;

    bool operator==(const Space& o) const { return family == o.family && m == o.m; }
};

// Builds the parameter quadruple for (family, m).  Throws std::invalid_argument
// naming the admissible dimension set when m is not allowed:
//   sphere m >= 1, real projective m >= 2, complex projective m in {4,6,8,...},
//   quaternion projective m in {8,12,16,...}, Cayley plane m = 16.
Space make_space(Family f, int m);

// Canonical list of spaces exercised by tests and sweeps (several m per family).
const std::vector<Space>& catalog();

// lambda_k = k(k + alpha + beta + 1); strictly increasing in k.
double laplace_eigenvalue(const Space& sp, std::int64_t k);

// Eigenspace dimension
//   d_k = (2k+a+b+1) G(b+1)G(k+a+b+1)G(k+a+1) / (G(a+b+2)G(a+1)G(k+1)G(k+b+1))
// for k >= 1 (a = alpha, b = beta, G = Gamma), d_0 = 1.  Evaluated through
// lgamma to stay overflow-free at large k; the result is rounded to the exact
// integer whenever it is below 2^53.
double harmonic_dim(const Space& sp, std::int64_t k);
double harmonic_dim_log(const Space& sp, std::int64_t k);  // log d_k

// D_n = sum_{k<=n} d_k; grows like n^m.
double cumulative_dim(const Space& sp, std::int64_t n);

}  // namespace tph
