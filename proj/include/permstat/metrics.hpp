#pragma once

#include <cstdint>

#include "permstat/permutation.hpp"
#include "permstat/ratio.hpp"

namespace permstat {

/// Σ |i − π(i)|, the undivided displacement. At most ⌊n²/2⌋.
std::int64_t displacement_sum(const Permutation& p);

/// Average absolute delay: Σ |i − π(i)| / n.
ExactRatio displacement(const Permutation& p);

/// displacement(p) / n, always within [0, 1/2].
ExactRatio normalized_displacement(const Permutation& p);

/// Mean displacement over all of S_n in closed form, (n² − 1) / (3n).
ExactRatio average_displacement_exact(int n);

/// Normalized Hamming distance |{i : p(i) ≠ q(i)}| / n.
/// Throws std::invalid_argument on differing sizes.
ExactRatio hamming_distance(const Permutation& p, const Permutation& q);

enum class TransformKind { reverse, complement, inverse };

/// reverse: i ↦ π(n+1−i); complement: i ↦ n+1−π(i); inverse: group inverse.
Permutation transform(const Permutation& p, TransformKind kind);

/// min over i of |i − π(i)|; zero exactly when p has a fixed point.
int min_delay(const Permutation& p);

// The two pair statistics below need n >= 2 and throw std::domain_error
// otherwise.

/// min over i < j of |i − j| + |π(i) − π(j)|.
int spread(const Permutation& p);

/// Distinct difference vectors (i − j, π(i) − π(j)) over all pairs i < j,
/// divided by n(n − 1)/2.
ExactRatio dispersion(const Permutation& p);

}  // namespace permstat
