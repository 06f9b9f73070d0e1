#pragma once

#include <cstdint>
#include <vector>

#include "permstat/permutation.hpp"
#include "permstat/product_value.hpp"
#include "permstat/ratio.hpp"

namespace permstat {

/// A nonempty collection of subsets of {1..n}, each with at least two
/// elements so that diam(A) = max A − min A is positive.
class IntervalFamily {
public:
    /// Throws std::invalid_argument on an empty family, a member with fewer
    /// than two distinct elements, or an element outside {1..n}.
    IntervalFamily(int n, std::vector<std::vector<int>> sets);

    /// {{i, i+1} : 1 ≤ i < n}. Requires n ≥ 2.
    static IntervalFamily consecutive_pairs(int n);

    int n() const { return n_; }
    const std::vector<std::vector<int>>& sets() const { return sets_; }

private:
    int n_;
    std::vector<std::vector<int>> sets_;
};

/// Arithmetic mean of diam(π(A)) / diam(A) over the family.
ExactRatio stretch_additive(const IntervalFamily& family, const Permutation& p);

/// Product of diam(π(A)) / diam(A) over the family, reduced, with root |family|.
ProductValue stretch_multiplicative(const IntervalFamily& family, const Permutation& p);

/// Σ |π(i) − π(i+1)|, the numerator of the consecutive-pairs additive stretch.
std::int64_t gap_sum(const Permutation& p);

/// Π |π(i) − π(i+1)| with root n − 1; the consecutive-pairs multiplicative
/// stretch without building a family.
ProductValue gap_product(const Permutation& p);

/// (2m²−1)/(2m−1) for n = 2m; (2m²+2m−1)/(2m) for n = 2m+1. n ≥ 2.
ExactRatio max_additive_stretch(int n);

/// True iff p oscillates between the two halves and starts/ends at the
/// middle values, in the forms that attain max_additive_stretch(n).
/// Decided structurally, without evaluating the stretch. n ≥ 2.
bool is_additive_maximizer(const Permutation& p);

/// True iff every consecutive pair of images alternates between `low` =
/// {1..split} and its complement.
bool oscillates(const Permutation& p, int split);

struct PartitionMax {
    BigInt value;
    std::vector<std::int64_t> parts;  // ascending, sums to s
};

/// Largest product of n positive integers with sum s, with the balanced
/// multiset attaining it. Throws std::invalid_argument unless 1 ≤ n ≤ s.
PartitionMax max_product_partition(std::int64_t n, std::int64_t s);

/// m^m(m+1)^(m−1) for n = 2m, m^m(m+1)(m+2)^(m−1) for n = 2m+1; root n−1.
ProductValue max_multiplicative_stretch(int n);

/// Every permutation attaining max_multiplicative_stretch(n), sorted.
/// Two for even n, four for odd n ≥ 3.
std::vector<Permutation> multiplicative_maximizers(int n);

}  // namespace permstat
