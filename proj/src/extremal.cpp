#include "permstat/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "permstat/metrics.hpp"

namespace permstat {

std::optional<CrossingWitness> find_disjoint_pair(const Permutation& p) {
    const int n = p.size();
    for (int i = 1; i <= n; ++i) {
        const int hi_i = std::max(i, p(i));
        for (int j = i + 1; j <= n; ++j) {
            // i < j forces i's interval to be the left one when they are disjoint.
            if (hi_i < std::min(j, p(j))) return CrossingWitness{i, j};
        }
    }
    return std::nullopt;
}

bool is_crossing_by_halves(const Permutation& p) {
    const int n = p.size();
    const int m = n / 2;
    for (int i = 1; i <= m; ++i)
        if (p(i) <= m) return false;
    if (n % 2 == 0) return true;  // the lower half then maps onto the upper half
    for (int i = m + 2; i <= n; ++i)
        if (p(i) > m + 1) return false;
    return true;
}

CrossingResult is_crossing(const Permutation& p) {
    CrossingResult result;
    result.witness = find_disjoint_pair(p);
    result.crossing = !result.witness.has_value();
    if (result.crossing != is_crossing_by_halves(p))
        throw std::logic_error("crossing tests disagree on " + p.to_string());
    return result;
}

ExactRatio max_displacement(int n) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    const std::int64_t nn = n;
    if (n % 2 == 0) return ExactRatio(nn, 2);
    return ExactRatio((nn - 1) * (nn + 1), 2 * nn);
}

BigInt count_max_displacement(int n) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    const unsigned long m = static_cast<unsigned long>(n / 2);
    BigInt f;
    mpz_fac_ui(f.get_mpz_t(), m);
    BigInt count = f * f;
    if (n % 2 == 1) count *= n;
    return count;
}

Permutation improve_noncrossing(const Permutation& p) {
    auto witness = find_disjoint_pair(p);
    if (!witness) throw std::invalid_argument("permutation " + p.to_string() + " is crossing; no improvement exists");
    std::vector<int> v(p.images().begin(), p.images().end());
    std::swap(v[static_cast<std::size_t>(witness->i - 1)], v[static_cast<std::size_t>(witness->j - 1)]);
    return Permutation(std::move(v));
}

namespace {

// Smallest u >= 0 with u >= √(2d)·n/2, i.e. 2u² >= d·n². The floating
// estimate is only a starting point; the exact test settles it.
int ceil_half_block(int n, const ExactRatio& d) {
    const BigInt num = d.numerator();
    const BigInt den = d.denominator();
    const BigInt target = num * BigInt(n) * BigInt(n);  // need 2u²·den >= target
    auto enough = [&](long u) { return BigInt(2) * BigInt(u) * BigInt(u) * den >= target; };

    const double delta = std::sqrt(2.0 * d.to_double());
    long u = static_cast<long>(std::ceil(delta * n / 2.0));
    u = std::max(u, 0L);
    while (u > 0 && enough(u - 1)) --u;
    while (!enough(u)) ++u;
    return static_cast<int>(u);
}

}  // namespace

PrescribedDisplacement construct_prescribed(int n, const ExactRatio& d) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (d < ExactRatio(0) || d > ExactRatio(1, 2))
        throw std::out_of_range("displacement " + d.to_string() + " outside [0, 1/2]");

    const int u = std::min(ceil_half_block(n, d), n / 2);
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        int image = i;
        if (i <= u)
            image = i + u;
        else if (i <= 2 * u)
            image = i - u;
        v[static_cast<std::size_t>(i - 1)] = image;
    }
    const std::int64_t uu = u;
    const std::int64_t nn = n;
    return PrescribedDisplacement{Permutation(std::move(v)), u, ExactRatio(2 * uu * uu, nn * nn)};
}

}  // namespace permstat
