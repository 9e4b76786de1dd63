#pragma once

// Small numeric utilities shared across modules: deterministic summation,
// least-squares slope fits, medians, grids, and a counter-based RNG whose
// output is independent of evaluation order (hence of thread count).

#include <cstdint>
#include <functional>
#include <vector>

namespace tph {

// Pairwise (cascade) summation; deterministic for a fixed input order.
double pairwise_sum(const double* x, std::size_t n);
double pairwise_sum(const std::vector<double>& x);

double median(std::vector<double> v);  // by value: sorts a copy

// n points from a to b inclusive, geometrically spaced (a, b > 0).
std::vector<double> geomspace(double a, double b, int n);

struct LineFit {
    double slope;
    double intercept;
};

// Ordinary least squares of y against x.
LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

// Least squares of y against {1, x, u} returning the x-coefficient.  Used for
// power-law exponents with a 1/k finite-size correction column u: a plain
// log-log fit of d_k ~ c k^{m-1}(1 + a/k + ...) is biased by -a/k at desk
// windows, which the extra column absorbs.
double fit_slope_corrected(const std::vector<double>& x,
                           const std::vector<double>& u,
                           const std::vector<double>& y);

// Golden-section maximization of a locally unimodal function on [lo, hi] with
// a fixed iteration count (deterministic).  Used to polish grid-argmax sup
// estimates so reported values are insensitive to the grid density.
double golden_max(double lo, double hi, int iterations,
                  const std::function<double(double)>& fn);

// --- counter-based RNG ------------------------------------------------------
// SplitMix64 finalizer applied to (seed, counter); no sequential state, so
// h(seed, i) can be evaluated in any order or in parallel with identical
// results.

std::uint64_t splitmix64(std::uint64_t x);

struct CounterRng {
    std::uint64_t seed;

    explicit CounterRng(std::uint64_t s) : seed(s) {}

    // uniform in (0,1)
    double uniform(std::uint64_t i) const;

    // standard normal via Box-Muller on counters (2i, 2i+1)
    double normal(std::uint64_t i) const;
};

// --- parallel sweep ---------------------------------------------------------
// Static block partition of [0,n) over a fixed thread count; every index is
// processed exactly once and results must go to disjoint slots, so output is
// identical for any thread count.  Thread count: TPH_THREADS if set, else
// hardware concurrency.

int default_thread_count();
void parallel_for(std::int64_t n, const std::function<void(std::int64_t)>& body);

}  // namespace tph
