#include "permstat/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace permstat {

std::string to_string(Statistic s) {
    switch (s) {
        case Statistic::displacement: return "displacement";
        case Statistic::additive_stretch: return "additive-stretch";
        case Statistic::multiplicative_stretch: return "multiplicative-stretch";
        case Statistic::cycle_stat: return "cycle-stat";
    }
    return "?";
}

namespace {

void check_limit(int n, int limit) {
    if (limit > kOracleHardCap)
        throw std::out_of_range("oracle limit " + std::to_string(limit) + " exceeds hard cap " +
                                std::to_string(kOracleHardCap));
    if (n < 1) throw std::out_of_range("oracle needs n >= 1");
    if (n > limit)
        throw std::out_of_range("oracle n=" + std::to_string(n) + " exceeds limit " + std::to_string(limit));
}

using Key = std::uint64_t;
using Images = std::vector<int>;

// Each task owns the block of arrangements with a fixed value at position
// `fixed_prefix` (after any positions pinned earlier). Tasks never share
// state; merging is order-insensitive because the result is sorted.
struct TaskResult {
    Key best = 0;
    bool any = false;
    std::vector<Images> arg;
    std::uint64_t total = 0;  // sum of keys, for averages
};

template <class KeyFn>
std::vector<TaskResult> run_tasks(int n, bool cycles, KeyFn key_of, bool keep_argmax) {
    // Permutations: task t fixes π(1) = t+1.
    // Cycles: arrangement (1, x2, ..., xn) with task t fixing x2 = t+2.
    const int tasks = cycles ? std::max(1, n - 1) : n;
    std::vector<TaskResult> results(static_cast<std::size_t>(tasks));
    std::atomic<int> next_task{0};

    auto worker = [&] {
        for (int t; (t = next_task.fetch_add(1)) < tasks;) {
            TaskResult& r = results[static_cast<std::size_t>(t)];
            Images seq(static_cast<std::size_t>(n));
            std::iota(seq.begin(), seq.end(), 1);
            std::size_t pinned = 1;
            if (!cycles) {
                std::rotate(seq.begin(), seq.begin() + t, seq.begin() + t + 1);
            } else if (n >= 2) {
                std::rotate(seq.begin() + 1, seq.begin() + 1 + t, seq.begin() + 2 + t);
                pinned = 2;
            }
            do {
                const Key k = key_of(seq);
                r.total += k;
                if (!r.any || k > r.best) {
                    r.best = k;
                    r.any = true;
                    r.arg.clear();
                }
                if (keep_argmax && k == r.best) r.arg.push_back(seq);
            } while (std::next_permutation(seq.begin() + static_cast<std::ptrdiff_t>(std::min<std::size_t>(pinned, seq.size())), seq.end()));
        }
    };

    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const int workers = std::min<int>(tasks, static_cast<int>(hw));
    std::vector<std::thread> pool;
    for (int w = 1; w < workers; ++w) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    return results;
}

Key displacement_key(const Images& v) {
    Key s = 0;
    for (std::size_t i = 0; i < v.size(); ++i) s += static_cast<Key>(std::abs(static_cast<int>(i) + 1 - v[i]));
    return s;
}

Key gap_sum_key(const Images& v) {
    Key s = 0;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) s += static_cast<Key>(std::abs(v[i] - v[i + 1]));
    return s;
}

Key gap_product_key(const Images& v) {
    Key p = 1;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) p *= static_cast<Key>(std::abs(v[i] - v[i + 1]));
    return p;
}

// `order` lists the cycle starting at 1; its successor map closes the loop.
Key cycle_key(const Images& order) {
    const std::size_t n = order.size();
    if (n == 1) return 1;
    Key product = 1;
    Key shortest = ~Key{0};
    for (std::size_t i = 0; i < n; ++i) {
        const Key len = static_cast<Key>(std::abs(order[i] - order[(i + 1) % n]));
        product *= len;
        shortest = std::min(shortest, len);
    }
    return product / shortest;
}

Images successor_of(const Images& order) {
    Images succ(order.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        succ[static_cast<std::size_t>(order[i] - 1)] = order[(i + 1) % order.size()];
    return succ;
}

}  // namespace

ArgmaxReport brute_argmax(int n, Statistic statistic, int limit) {
    check_limit(n, limit);
    if ((statistic == Statistic::additive_stretch || statistic == Statistic::multiplicative_stretch) && n < 2)
        throw std::out_of_range("stretch statistics need n >= 2");

    std::function<Key(const Images&)> key_of;
    const bool cycles = statistic == Statistic::cycle_stat;
    switch (statistic) {
        case Statistic::displacement: key_of = displacement_key; break;
        case Statistic::additive_stretch: key_of = gap_sum_key; break;
        case Statistic::multiplicative_stretch: key_of = gap_product_key; break;
        case Statistic::cycle_stat: key_of = cycle_key; break;
    }
    auto results = run_tasks(n, cycles, key_of, true);

    Key best = 0;
    for (const auto& r : results)
        if (r.any) best = std::max(best, r.best);

    ArgmaxReport report;
    report.n = n;
    report.statistic = statistic;
    for (auto& r : results) {
        if (!r.any || r.best != best) continue;
        for (auto& images : r.arg) report.maximizers.emplace_back(cycles ? successor_of(images) : std::move(images));
    }
    std::sort(report.maximizers.begin(), report.maximizers.end());
    report.count = report.maximizers.size();

    const std::int64_t nn = n;
    const auto big = BigInt(static_cast<unsigned long>(best));
    const unsigned root = n > 1 ? static_cast<unsigned>(n - 1) : 1u;
    switch (statistic) {
        case Statistic::displacement: report.max_value = ExactRatio(big, BigInt(static_cast<long>(nn))); break;
        case Statistic::additive_stretch: report.max_value = ExactRatio(big, BigInt(static_cast<long>(nn - 1))); break;
        case Statistic::multiplicative_stretch:
        case Statistic::cycle_stat: report.max_value = ProductValue{big, 1, root}; break;
    }
    return report;
}

ExactRatio brute_average_displacement(int n, int limit) {
    check_limit(n, limit);
    auto results = run_tasks(n, false, displacement_key, false);
    BigInt total = 0;
    BigInt count = 0;
    for (const auto& r : results) total += BigInt(static_cast<unsigned long>(r.total));
    mpz_fac_ui(count.get_mpz_t(), static_cast<unsigned long>(n));
    return ExactRatio(total, count * n);
}

std::vector<Permutation> all_permutations(int n, int limit) {
    check_limit(n, limit);
    std::vector<Permutation> out;
    Images v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    do {
        out.emplace_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

}  // namespace permstat
