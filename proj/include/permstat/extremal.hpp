#pragma once

#include <optional>

#include "permstat/permutation.hpp"
#include "permstat/ratio.hpp"

namespace permstat {

/// Two positions whose closed intervals [i, π(i)] and [j, π(j)] are
/// disjoint, with i < j (so i's interval lies to the left of j's).
struct CrossingWitness {
    int i = 0;
    int j = 0;
    friend bool operator==(const CrossingWitness&, const CrossingWitness&) = default;
};

struct CrossingResult {
    bool crossing = false;
    std::optional<CrossingWitness> witness;  // present iff !crossing
};

/// O(n²) test from the definition: every pair of intervals [i, π(i)]
/// meets. Returns the lexicographically first disjoint pair, if any.
std::optional<CrossingWitness> find_disjoint_pair(const Permutation& p);

/// O(n) test by image sets. With n = 2m: {1..m} maps onto {m+1..n}.
/// With n = 2m+1: {1..m} maps into {m+1..n} and {m+2..n} into {1..m+1}.
bool is_crossing_by_halves(const Permutation& p);

/// Runs both tests. A disagreement is a bug and raises std::logic_error.
CrossingResult is_crossing(const Permutation& p);

/// Largest displacement over S_n: n/2 for even n, (n−1)(n+1)/(2n) for odd n.
ExactRatio max_displacement(int n);

/// Number of permutations attaining max_displacement(n):
/// (m!)² for n = 2m and (2m+1)(m!)² for n = 2m+1.
BigInt count_max_displacement(int n);

/// Swaps the witness positions of a noncrossing permutation, ρ = π ∘ (i j),
/// which strictly increases displacement. Throws std::invalid_argument if
/// p is crossing.
Permutation improve_noncrossing(const Permutation& p);

struct PrescribedDisplacement {
    Permutation permutation;
    int block = 0;            // u: the first u points trade places with the next u
    ExactRatio achieved;      // normalized displacement, exactly 2u²/n²
};

/// Block-swap permutation with normalized displacement near d ∈ [0, 1/2]:
/// u = ⌈√(2d)·n/2⌉ clamped to ⌊n/2⌋, i ↦ i+u for i ≤ u, i ↦ i−u for
/// u < i ≤ 2u, identity beyond. Throws std::out_of_range for d outside
/// [0, 1/2].
PrescribedDisplacement construct_prescribed(int n, const ExactRatio& d);

}  // namespace permstat
