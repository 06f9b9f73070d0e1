#include "permstat/stretch.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "permstat/cycle.hpp"
#include "permstat/metrics.hpp"

namespace permstat {

IntervalFamily::IntervalFamily(int n, std::vector<std::vector<int>> sets) : n_(n), sets_(std::move(sets)) {
    if (sets_.empty()) throw std::invalid_argument("interval family must be nonempty");
    for (auto& set : sets_) {
        for (int v : set)
            if (v < 1 || v > n_)
                throw std::invalid_argument("family member element " + std::to_string(v) + " outside 1.." +
                                            std::to_string(n_));
        std::sort(set.begin(), set.end());
        set.erase(std::unique(set.begin(), set.end()), set.end());
        if (set.size() < 2) throw std::invalid_argument("family member must have at least two elements");
    }
}

IntervalFamily IntervalFamily::consecutive_pairs(int n) {
    if (n < 2) throw std::invalid_argument("consecutive-pairs family needs n >= 2");
    std::vector<std::vector<int>> sets;
    sets.reserve(static_cast<std::size_t>(n - 1));
    for (int i = 1; i < n; ++i) sets.push_back({i, i + 1});
    return IntervalFamily(n, std::move(sets));
}

namespace {

void check_family(const IntervalFamily& family, const Permutation& p) {
    if (family.n() != p.size())
        throw std::invalid_argument("family over 1.." + std::to_string(family.n()) + " used with a permutation of size " +
                                    std::to_string(p.size()));
}

std::int64_t image_diameter(const std::vector<int>& set, const Permutation& p) {
    int lo = p(set.front()), hi = lo;
    for (int v : set) {
        lo = std::min(lo, p(v));
        hi = std::max(hi, p(v));
    }
    return hi - lo;
}

std::int64_t diameter(const std::vector<int>& sorted_set) { return sorted_set.back() - sorted_set.front(); }

}  // namespace

ExactRatio stretch_additive(const IntervalFamily& family, const Permutation& p) {
    check_family(family, p);
    ExactRatio total(0);
    for (const auto& set : family.sets()) total += ExactRatio(image_diameter(set, p), diameter(set));
    return total / ExactRatio(static_cast<std::int64_t>(family.sets().size()));
}

ProductValue stretch_multiplicative(const IntervalFamily& family, const Permutation& p) {
    check_family(family, p);
    BigInt num = 1, den = 1;
    for (const auto& set : family.sets()) {
        num *= BigInt(static_cast<long>(image_diameter(set, p)));
        den *= BigInt(static_cast<long>(diameter(set)));
    }
    BigInt g;
    mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return ProductValue{num / g, den / g, static_cast<unsigned>(family.sets().size())};
}

std::int64_t gap_sum(const Permutation& p) {
    std::int64_t sum = 0;
    for (int i = 1; i < p.size(); ++i) sum += std::abs(p(i) - p(i + 1));
    return sum;
}

ProductValue gap_product(const Permutation& p) {
    if (p.size() < 2) throw std::invalid_argument("multiplicative stretch needs n >= 2");
    BigInt product = 1;
    for (int i = 1; i < p.size(); ++i) product *= std::abs(p(i) - p(i + 1));
    return ProductValue{product, 1, static_cast<unsigned>(p.size() - 1)};
}

ExactRatio max_additive_stretch(int n) {
    if (n < 2) throw std::invalid_argument("additive stretch needs n >= 2");
    const std::int64_t m = n / 2;
    if (n % 2 == 0) return ExactRatio(2 * m * m - 1, 2 * m - 1);
    return ExactRatio(2 * m * m + 2 * m - 1, 2 * m);
}

bool oscillates(const Permutation& p, int split) {
    for (int i = 1; i < p.size(); ++i)
        if ((p(i) <= split) == (p(i + 1) <= split)) return false;
    return true;
}

bool is_additive_maximizer(const Permutation& p) {
    const int n = p.size();
    if (n < 2) throw std::invalid_argument("additive stretch needs n >= 2");
    const int m = n / 2;
    const int first = p(1), last = p(n);
    auto ends_are = [&](int x, int y) { return (first == x && last == y) || (first == y && last == x); };
    if (n % 2 == 0) return oscillates(p, m) && ends_are(m, m + 1);
    return (oscillates(p, m) && ends_are(m + 1, m + 2)) || (oscillates(p, m + 1) && ends_are(m, m + 1));
}

PartitionMax max_product_partition(std::int64_t n, std::int64_t s) {
    if (n < 1 || s < n) throw std::invalid_argument("need 1 <= n <= s, got n=" + std::to_string(n) + ", s=" + std::to_string(s));
    const std::int64_t lo = s / n;
    const std::int64_t hi = lo + (s % n != 0 ? 1 : 0);
    const std::int64_t low_count = n * hi - s;
    BigInt a, b;
    mpz_ui_pow_ui(a.get_mpz_t(), static_cast<unsigned long>(lo), static_cast<unsigned long>(low_count));
    mpz_ui_pow_ui(b.get_mpz_t(), static_cast<unsigned long>(hi), static_cast<unsigned long>(n - low_count));
    PartitionMax out{a * b, {}};
    out.parts.assign(static_cast<std::size_t>(low_count), lo);
    out.parts.insert(out.parts.end(), static_cast<std::size_t>(n - low_count), hi);
    return out;
}

ProductValue max_multiplicative_stretch(int n) {
    if (n < 2) throw std::invalid_argument("multiplicative stretch needs n >= 2");
    const unsigned long m = static_cast<unsigned long>(n / 2);
    BigInt a, b, c;
    mpz_ui_pow_ui(a.get_mpz_t(), m, m);
    if (n % 2 == 0) {
        mpz_ui_pow_ui(b.get_mpz_t(), m + 1, m - 1);
        return ProductValue{a * b, 1, static_cast<unsigned>(n - 1)};
    }
    mpz_ui_pow_ui(c.get_mpz_t(), m + 2, m - 1);
    return ProductValue{a * BigInt(m + 1) * c, 1, static_cast<unsigned>(n - 1)};
}

namespace {

// The odd-n optimal cycle whose unique short jump is m ↦ m+1 and whose
// jump after it is a right jump; built from the parity-split closed form.
CycleWithStart odd_optimal_cycle(int n) {
    const int m = n / 2;
    std::vector<int> succ(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        const bool even = i % 2 == 0;
        int next = 0;
        if (i == m) {
            next = i + 1;
        } else if (m % 2 == 1) {
            if (i == m + 2) next = i - (m + 1);
            else if (even && i < m + 2) next = i + m;
            else if (!even && i < m) next = i + (m + 2);
            else if (even && i > m + 1) next = i - m;
            else next = i - (m + 2);  // odd, i > m + 2
        } else {
            if (i == 1) next = i + (m + 1);
            else if (!even && i < m + 2) next = i + m;
            else if (even && i < m) next = i + (m + 2);
            else if (even && i > m + 1) next = i - m;
            else next = i - (m + 2);  // odd, i > m + 2
        }
        succ[static_cast<std::size_t>(i - 1)] = next;
    }
    return CycleWithStart(std::move(succ), m + 1);
}

}  // namespace

std::vector<Permutation> multiplicative_maximizers(int n) {
    if (n < 2) throw std::invalid_argument("multiplicative stretch needs n >= 2");
    const int m = n / 2;
    std::vector<Permutation> out;
    if (n % 2 == 0) {
        std::vector<int> first(static_cast<std::size_t>(n)), second(static_cast<std::size_t>(n));
        for (int i = 1; i <= m; ++i) {
            first[static_cast<std::size_t>(2 * i - 1)] = n - i + 1;
            first[static_cast<std::size_t>(2 * i - 2)] = m - i + 1;
            second[static_cast<std::size_t>(2 * i - 1)] = i;
            second[static_cast<std::size_t>(2 * i - 2)] = m + i;
        }
        out.emplace_back(std::move(first));
        out.emplace_back(std::move(second));
    } else {
        // Leaving out the short jump m ↦ m+1 gives π(1) = m+1, π(n) = m.
        const Permutation base = cycle_to_perm(odd_optimal_cycle(n));
        const Permutation rev = transform(base, TransformKind::reverse);
        out = {base, rev, transform(base, TransformKind::complement), transform(rev, TransformKind::complement)};
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace permstat
