#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "permstat/permutation.hpp"
#include "permstat/product_value.hpp"

namespace permstat {

/// An n-cycle ρ on {1..n} together with a designated beginning. Each
/// arc k ↦ ρ(k) is a "jump" of length |k − ρ(k)|, named by its start k.
class CycleWithStart {
public:
    /// `successor[k-1]` is ρ(k). Throws std::invalid_argument unless the
    /// successor map is a single cycle through all of {1..n} and start is
    /// in range.
    CycleWithStart(std::vector<int> successor, int start);

    int size() const { return static_cast<int>(successor_.size()); }
    int start() const { return start_; }
    int next(int k) const { return successor_[static_cast<std::size_t>(k - 1)]; }
    std::span<const int> successor() const { return successor_; }

    int jump_length(int k) const;
    int shortest_jump_length() const;
    bool is_short(int k) const { return jump_length(k) == shortest_jump_length(); }

    /// The successor map ρ viewed as an element of S_n.
    Permutation as_permutation() const { return Permutation(successor_); }

    /// "{1→2, 2→3, 3→1} start 1".
    std::string to_string() const;

    friend bool operator==(const CycleWithStart&, const CycleWithStart&) = default;

private:
    std::vector<int> successor_;
    int start_;
};

/// ρ(π(i)) = π(i+1), ρ(π(n)) = π(1), start π(1).
CycleWithStart perm_to_cycle(const Permutation& p);

/// Inverse of perm_to_cycle: π(1) = start, π(k+1) = ρ(π(k)).
Permutation cycle_to_perm(const CycleWithStart& c);

/// Max over one excluded jump of the product of the remaining jump lengths,
/// with root n − 1 (root 1 when n = 1, where the product is empty).
/// Independent of the start.
ProductValue cycle_stat(const CycleWithStart& c);

/// Unrolls c so that a shortest jump is the one left out, so the gap
/// product of the result equals cycle_stat(c). Ties go to the smallest
/// jump start.
Permutation best_unrolling(const CycleWithStart& c);

/// Replaces jumps a ↦ ρ(a), b ↦ ρ(b) by a ↦ b and ρ(a) ↦ ρ(b), reversing
/// the segment between them so the result stays a single cycle. The start
/// is kept. Throws std::invalid_argument unless the four endpoints are
/// distinct.
CycleWithStart two_opt(const CycleWithStart& c, int a, int b);

enum class JumpRelation { shared_endpoint, disjoint, skips, bridges, nontrivial_intersection };

struct JumpClass {
    JumpRelation relation = JumpRelation::disjoint;
    bool same_direction = false;
    bool first_short = false;
    bool second_short = false;
    /// For skips/bridges: whether the first jump's interval contains the second's.
    bool first_outer = false;
};

/// Relation between jumps a ↦ ρ(a) and b ↦ ρ(b) as intervals. Jumps with
/// a shared endpoint are `skips` when one interval contains the other and
/// `shared_endpoint` otherwise; with four distinct endpoints they are
/// `disjoint`, `bridges`, or `nontrivial_intersection`. Requires a ≠ b.
JumpClass classify_jumps(const CycleWithStart& c, int a, int b);

std::string to_string(JumpRelation r);

/// The exchange condition under which two_opt(c, i, j) raises cycle_stat:
/// i is a shortest jump, the endpoints are distinct and |i − j| > |j − ρ(j)|.
bool exchange_improves(const CycleWithStart& c, int i, int j);

enum class ImprovementRule {
    disjoint_same_direction = 1,       // (i)
    short_crosses_opposite = 2,        // (ii)
    short_disjoint_from_opposite = 3,  // (iii)
    disjoint_opposite = 4,             // (iv)
    bridges_long_opposite = 5,         // (v)
};

struct Improvement {
    CycleWithStart cycle;
    ImprovementRule rule;
    int first = 0;   // jump starts passed to two_opt
    int second = 0;
};

/// Tries the local-improvement rules in order (i)..(v), each over jump
/// pairs in lexicographic order, and returns the first rewiring found.
/// A returned cycle always has strictly larger cycle_stat.
std::optional<Improvement> find_improvement(const CycleWithStart& c);

}  // namespace permstat
