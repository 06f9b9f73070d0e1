#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "permstat/permutation.hpp"

namespace permstat {

/// Uniform permutation of {1..n} by Fisher–Yates, driven by std::mt19937_64
/// seeded from (seed, stream). Bounded draws use rejection sampling, so the
/// output is identical on every platform.
Permutation sample_uniform(int n, std::uint64_t seed, std::uint64_t stream = 0);

struct HistogramBin {
    double lo = 0;
    double hi = 0;
    std::uint64_t count = 0;
};

struct EpsilonFraction {
    double epsilon = 0;
    double fraction = 0;  // share of samples with |d/n − median/n| ≤ ε
};

/// Monte Carlo summary of the displacement d(π) of uniform permutations.
struct SampleStats {
    int n = 0;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    double mean = 0;     // of d
    double median = 0;   // of d; lower middle order statistic
    double stddev = 0;   // of d, population form
    std::vector<HistogramBin> histogram;
    std::vector<EpsilonFraction> fractions;
    /// Σ|i − π(i)| of every trial, sorted ascending.
    std::vector<std::int64_t> displacement_sums;

    /// Share of samples with lo < d < hi.
    double fraction_between(double lo, double hi) const;
};

/// Trial t uses sample_uniform(n, seed, t), so the result does not depend
/// on how trials are spread over threads. Requires trials >= 1.
SampleStats empirical_stats(int n, std::uint64_t trials, std::uint64_t seed, const std::vector<double>& epsilons,
                            int bins = 50);

/// Explicit concentration bound for S_n with the normalized Hamming metric
/// and counting measure: at least max(0, 1 − 2·c1·exp(−c2·ε²·n)) of S_n
/// lies within ε of the median of any 1-Lipschitz function.
struct ConcentrationBound {
    static constexpr double c1 = 2.0;
    static constexpr double c2 = 1.0 / 64.0;
    static double bound(double epsilon, int n);
};

struct ConcentrationRow {
    double epsilon = 0;
    double empirical = 0;
    double bound = 0;
    bool holds = false;  // empirical >= bound
};

std::vector<ConcentrationRow> concentration_report(const SampleStats& stats);

/// True iff |d(π)/n − d(σ)/n| ≤ ρ_n(π, σ) for every pair, checked exactly.
/// Throws std::invalid_argument if a pair has different sizes.
bool lipschitz_check(const std::vector<std::pair<Permutation, Permutation>>& pairs);

}  // namespace permstat
