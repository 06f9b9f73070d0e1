#include "permstat/metrics.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <vector>

namespace permstat {

std::int64_t displacement_sum(const Permutation& p) {
    std::int64_t sum = 0;
    for (int i = 1; i <= p.size(); ++i) sum += std::abs(i - p(i));
    return sum;
}

ExactRatio displacement(const Permutation& p) { return ExactRatio(displacement_sum(p), p.size()); }

ExactRatio normalized_displacement(const Permutation& p) {
    const std::int64_t n = p.size();
    return ExactRatio(displacement_sum(p), n * n);
}

ExactRatio average_displacement_exact(int n) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    const std::int64_t nn = n;
    return ExactRatio(nn * nn - 1, 3 * nn);
}

ExactRatio hamming_distance(const Permutation& p, const Permutation& q) {
    if (p.size() != q.size())
        throw std::invalid_argument("incompatible sizes: " + std::to_string(p.size()) + " vs " +
                                    std::to_string(q.size()));
    std::int64_t differ = 0;
    for (int i = 1; i <= p.size(); ++i)
        if (p(i) != q(i)) ++differ;
    return ExactRatio(differ, p.size());
}

Permutation transform(const Permutation& p, TransformKind kind) {
    const int n = p.size();
    std::vector<int> v(static_cast<std::size_t>(n));
    switch (kind) {
        case TransformKind::reverse:
            for (int i = 1; i <= n; ++i) v[static_cast<std::size_t>(i - 1)] = p(n + 1 - i);
            break;
        case TransformKind::complement:
            for (int i = 1; i <= n; ++i) v[static_cast<std::size_t>(i - 1)] = n + 1 - p(i);
            break;
        case TransformKind::inverse:
            return p.inverse();
    }
    return Permutation(std::move(v));
}

int min_delay(const Permutation& p) {
    int best = std::numeric_limits<int>::max();
    for (int i = 1; i <= p.size(); ++i) best = std::min(best, std::abs(i - p(i)));
    return best;
}

namespace {
void require_pairs(const Permutation& p, const char* what) {
    if (p.size() < 2) throw std::domain_error(std::string(what) + " is undefined for n < 2");
}
}  // namespace

int spread(const Permutation& p) {
    require_pairs(p, "spread");
    const int n = p.size();
    int best = std::numeric_limits<int>::max();
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) best = std::min(best, (j - i) + std::abs(p(i) - p(j)));
    return best;
}

ExactRatio dispersion(const Permutation& p) {
    require_pairs(p, "dispersion");
    const std::int64_t n = p.size();
    // Index by (j − i) ∈ [1, n−1] and π(j) − π(i) ∈ [−(n−1), n−1].
    const std::int64_t width = 2 * n - 1;
    std::vector<bool> seen(static_cast<std::size_t>((n - 1) * width), false);
    std::int64_t distinct = 0;
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            const std::int64_t row = j - i - 1;
            const std::int64_t col = (p(j) - p(i)) + (n - 1);
            auto slot = static_cast<std::size_t>(row * width + col);
            if (!seen[slot]) {
                seen[slot] = true;
                ++distinct;
            }
        }
    }
    return ExactRatio(distinct, n * (n - 1) / 2);
}

}  // namespace permstat
