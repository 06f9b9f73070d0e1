#include "permstat/sampling.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>
#include <thread>

#include "permstat/metrics.hpp"
#include "permstat/ratio.hpp"

namespace permstat {

namespace {

std::mt19937_64 make_engine(std::uint64_t seed, std::uint64_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    return std::mt19937_64(seq);
}

// Uniform in [0, bound) without modulo bias.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

}  // namespace

Permutation sample_uniform(int n, std::uint64_t seed, std::uint64_t stream) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    auto rng = make_engine(seed, stream);
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    for (std::size_t i = v.size() - 1; i > 0; --i) std::swap(v[i], v[draw_below(rng, i + 1)]);
    return Permutation(std::move(v));
}

double SampleStats::fraction_between(double lo, double hi) const {
    if (displacement_sums.empty()) return 0;
    std::uint64_t inside = 0;
    for (auto s : displacement_sums) {
        const double d = static_cast<double>(s) / n;
        if (lo < d && d < hi) ++inside;
    }
    return static_cast<double>(inside) / static_cast<double>(displacement_sums.size());
}

SampleStats empirical_stats(int n, std::uint64_t trials, std::uint64_t seed, const std::vector<double>& epsilons,
                            int bins) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    if (bins < 1) throw std::invalid_argument("bins must be >= 1");

    SampleStats out;
    out.n = n;
    out.trials = trials;
    out.seed = seed;
    out.displacement_sums.resize(trials);

    std::atomic<std::uint64_t> next{0};
    constexpr std::uint64_t chunk = 256;
    auto worker = [&] {
        for (std::uint64_t begin; (begin = next.fetch_add(chunk)) < trials;) {
            const std::uint64_t end = std::min(trials, begin + chunk);
            for (std::uint64_t t = begin; t < end; ++t)
                out.displacement_sums[t] = displacement_sum(sample_uniform(n, seed, t));
        }
    };
    const unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    auto& sums = out.displacement_sums;
    std::sort(sums.begin(), sums.end());

    // Exact accumulation; decimals only for reporting.
    BigInt total = 0, total_sq = 0;
    for (auto s : sums) {
        const BigInt b(static_cast<long>(s));
        total += b;
        total_sq += b * b;
    }
    const BigInt count(static_cast<unsigned long>(trials));
    const ExactRatio mean_sum(total, count);
    out.mean = (mean_sum / ExactRatio(n)).to_double();
    const ExactRatio var_sum = ExactRatio(total_sq, count) - mean_sum * mean_sum;
    out.stddev = std::sqrt(var_sum.to_double()) / n;

    const std::int64_t median_sum = sums[(trials - 1) / 2];
    out.median = static_cast<double>(median_sum) / n;

    const double lo = static_cast<double>(sums.front()) / n;
    const double hi = static_cast<double>(sums.back()) / n;
    if (sums.front() == sums.back()) {
        out.histogram.push_back({lo, hi, trials});
    } else {
        const double width = (hi - lo) / bins;
        out.histogram.resize(static_cast<std::size_t>(bins));
        for (int b = 0; b < bins; ++b) {
            out.histogram[static_cast<std::size_t>(b)].lo = lo + width * b;
            out.histogram[static_cast<std::size_t>(b)].hi = b + 1 == bins ? hi : lo + width * (b + 1);
        }
        for (auto s : sums) {
            const double d = static_cast<double>(s) / n;
            auto b = static_cast<int>((d - lo) / width);
            b = std::clamp(b, 0, bins - 1);
            ++out.histogram[static_cast<std::size_t>(b)].count;
        }
    }

    // |s/n² − median_sum/n²| ≤ ε  ⇔  |s − median_sum| ≤ ε·n².
    std::vector<double> eps = epsilons;
    std::sort(eps.begin(), eps.end());
    const double nn = static_cast<double>(n) * n;
    for (double e : eps) {
        if (e < 0) throw std::invalid_argument("epsilon must be nonnegative");
        std::uint64_t within = 0;
        for (auto s : sums)
            if (static_cast<double>(std::llabs(s - median_sum)) <= e * nn) ++within;
        out.fractions.push_back({e, static_cast<double>(within) / static_cast<double>(trials)});
    }
    return out;
}

double ConcentrationBound::bound(double epsilon, int n) {
    return std::max(0.0, 1.0 - 2.0 * c1 * std::exp(-c2 * epsilon * epsilon * n));
}

std::vector<ConcentrationRow> concentration_report(const SampleStats& stats) {
    std::vector<ConcentrationRow> rows;
    for (const auto& f : stats.fractions) {
        ConcentrationRow row{f.epsilon, f.fraction, ConcentrationBound::bound(f.epsilon, stats.n), false};
        row.holds = row.empirical >= row.bound;
        rows.push_back(row);
    }
    return rows;
}

bool lipschitz_check(const std::vector<std::pair<Permutation, Permutation>>& pairs) {
    for (const auto& [p, q] : pairs) {
        const ExactRatio dist = hamming_distance(p, q);  // throws on size mismatch
        if (abs(normalized_displacement(p) - normalized_displacement(q)) > dist) return false;
    }
    return true;
}

}  // namespace permstat
