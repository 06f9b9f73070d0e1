#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "permstat/permutation.hpp"
#include "permstat/product_value.hpp"
#include "permstat/ratio.hpp"

namespace permstat {

// Exhaustive enumeration of S_n. Everything here is ground truth for the
// closed forms in the other modules and must not call into them.

inline constexpr int kOracleDefaultLimit = 9;
inline constexpr int kOracleHardCap = 11;

enum class Statistic { displacement, additive_stretch, multiplicative_stretch, cycle_stat };

std::string to_string(Statistic s);

using StatValue = std::variant<ExactRatio, ProductValue>;

struct ArgmaxReport {
    int n = 0;
    Statistic statistic = Statistic::displacement;
    StatValue max_value;
    /// Sorted. For cycle_stat these are the successor maps ρ of the optimal
    /// n-cycles, written in one-line notation.
    std::vector<Permutation> maximizers;
    std::size_t count = 0;
};

/// Maximum and complete maximizer set of a statistic over S_n (over all
/// n-cycles for cycle_stat). Throws std::out_of_range when n exceeds
/// `limit`, or `limit` exceeds kOracleHardCap. The stretch statistics need
/// n >= 2.
ArgmaxReport brute_argmax(int n, Statistic statistic, int limit = kOracleDefaultLimit);

/// Mean displacement over all n! permutations, exactly.
ExactRatio brute_average_displacement(int n, int limit = kOracleDefaultLimit);

/// All of S_n in lexicographic order.
std::vector<Permutation> all_permutations(int n, int limit = kOracleDefaultLimit);

}  // namespace permstat
