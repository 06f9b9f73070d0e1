#pragma once

#include <optional>
#include <string>
#include <vector>

#include "permstat/oracle.hpp"
#include "permstat/permutation.hpp"

namespace permstat {

struct CheckResult {
    std::string name;
    bool passed = true;
    std::string detail;
    /// Smallest failing input (smallest n, then lexicographic), if any.
    std::optional<Permutation> counterexample;
};

/// Compares every closed form and constructor against exhaustive
/// enumeration for n ≤ max_n (smaller ranges for the costlier checks).
/// Deterministic; `oracle_limit` caps max_n.
std::vector<CheckResult> run_theorem_checks(int max_n, int oracle_limit = kOracleDefaultLimit);

}  // namespace permstat
