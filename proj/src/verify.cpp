#include "permstat/verify.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "permstat/cycle.hpp"
#include "permstat/extremal.hpp"
#include "permstat/metrics.hpp"
#include "permstat/sampling.hpp"
#include "permstat/stretch.hpp"

namespace permstat {

namespace {

std::string range(int lo, int hi) { return "n=" + std::to_string(lo) + ".." + std::to_string(hi); }

// First permutation (lexicographically) that is in exactly one of the two
// sorted sets.
std::optional<Permutation> first_difference(const std::vector<Permutation>& a, const std::vector<Permutation>& b) {
    std::vector<Permutation> diff;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(diff));
    if (diff.empty()) return std::nullopt;
    return diff.front();
}

std::vector<Permutation> filter(const std::vector<Permutation>& all, const std::function<bool(const Permutation&)>& keep) {
    std::vector<Permutation> out;
    std::copy_if(all.begin(), all.end(), std::back_inserter(out), keep);
    return out;
}

BigInt best_composition(int parts, int sum) {
    // Exhaustive over all compositions of `sum` into `parts` positive integers.
    if (parts == 1) return sum;
    BigInt best = 0;
    for (int first = 1; first <= sum - (parts - 1); ++first) {
        const BigInt candidate = BigInt(first) * best_composition(parts - 1, sum - first);
        if (candidate > best) best = candidate;
    }
    return best;
}

CheckResult check_average(int max_n, int limit) {
    CheckResult r{"average-displacement", true, range(1, max_n), std::nullopt};
    for (int n = 1; n <= max_n; ++n) {
        if (brute_average_displacement(n, limit) != average_displacement_exact(n)) {
            r.passed = false;
            r.detail = "mismatch at n=" + std::to_string(n);
            return r;
        }
    }
    return r;
}

CheckResult check_max_displacement(int max_n, int limit) {
    CheckResult r{"max-displacement", true, range(1, max_n), std::nullopt};
    for (int n = 1; n <= max_n; ++n) {
        const auto report = brute_argmax(n, Statistic::displacement, limit);
        const auto all = all_permutations(n, limit);
        std::vector<Permutation> crossing;
        try {
            crossing = filter(all, [](const Permutation& p) { return is_crossing(p).crossing; });
        } catch (const std::logic_error& e) {
            r.passed = false;
            r.detail = e.what();
            return r;
        }
        if (auto diff = first_difference(report.maximizers, crossing)) {
            r.passed = false;
            r.detail = "argmax differs from crossing set at n=" + std::to_string(n);
            r.counterexample = diff;
            return r;
        }
        if (std::get<ExactRatio>(report.max_value) != max_displacement(n) ||
            BigInt(static_cast<unsigned long>(report.count)) != count_max_displacement(n)) {
            r.passed = false;
            r.detail = "value or count mismatch at n=" + std::to_string(n) + ": oracle count " +
                       std::to_string(report.count);
            return r;
        }
    }
    return r;
}

CheckResult check_additive(int max_n, int limit) {
    CheckResult r{"additive-stretch", true, range(2, max_n), std::nullopt};
    for (int n = 2; n <= max_n; ++n) {
        const auto report = brute_argmax(n, Statistic::additive_stretch, limit);
        const auto predicted = filter(all_permutations(n, limit), is_additive_maximizer);
        if (auto diff = first_difference(report.maximizers, predicted)) {
            r.passed = false;
            r.detail = "argmax differs from characterization at n=" + std::to_string(n);
            r.counterexample = diff;
            return r;
        }
        if (std::get<ExactRatio>(report.max_value) != max_additive_stretch(n)) {
            r.passed = false;
            r.detail = "maximum mismatch at n=" + std::to_string(n);
            return r;
        }
    }
    return r;
}

CheckResult check_multiplicative(int max_n, int limit) {
    CheckResult r{"multiplicative-stretch", true, range(2, max_n), std::nullopt};
    for (int n = 2; n <= max_n; ++n) {
        const auto report = brute_argmax(n, Statistic::multiplicative_stretch, limit);
        const auto built = multiplicative_maximizers(n);
        if (auto diff = first_difference(report.maximizers, built)) {
            r.passed = false;
            r.detail = "argmax differs from constructed maximizers at n=" + std::to_string(n);
            r.counterexample = diff;
            return r;
        }
        const std::size_t expected = (n % 2 == 0 || n == 1) ? 2 : 4;
        if (std::get<ProductValue>(report.max_value) != max_multiplicative_stretch(n) || report.count != expected) {
            r.passed = false;
            r.detail = "maximum or count mismatch at n=" + std::to_string(n);
            return r;
        }
    }
    return r;
}

CheckResult check_partition() {
    CheckResult r{"product-partition", true, "n=1..6, s=n..36", std::nullopt};
    for (int n = 1; n <= 6; ++n) {
        BigInt previous = 0;
        for (int s = n; s <= 36; ++s) {
            const auto best = max_product_partition(n, s);
            if (best.value != best_composition(n, s) || (s > n && !(previous < best.value))) {
                r.passed = false;
                r.detail = "mismatch at n=" + std::to_string(n) + ", s=" + std::to_string(s);
                return r;
            }
            previous = best.value;
        }
    }
    return r;
}

CheckResult check_increase(int max_n, int limit) {
    const int top = std::min(max_n, 7);
    CheckResult r{"noncrossing-improvement", true, range(1, top), std::nullopt};
    for (int n = 1; n <= top; ++n) {
        for (const auto& p : all_permutations(n, std::max(limit, top))) {
            bool ok;
            if (is_crossing(p).crossing) {
                try {
                    improve_noncrossing(p);
                    ok = false;
                } catch (const std::invalid_argument&) {
                    ok = true;
                }
            } else {
                ok = displacement_sum(improve_noncrossing(p)) > displacement_sum(p);
            }
            if (!ok) {
                r.passed = false;
                r.detail = "failed at n=" + std::to_string(n);
                r.counterexample = p;
                return r;
            }
        }
    }
    return r;
}

CheckResult check_cycles(int max_n, int limit) {
    const int round_trip_top = std::min(max_n, 6);
    const int max_top = std::min(max_n, 7);
    CheckResult r{"cycle-correspondence", true,
                  "round trip " + range(1, round_trip_top) + "; maxima " + range(2, max_top), std::nullopt};
    for (int n = 1; n <= round_trip_top; ++n) {
        for (const auto& p : all_permutations(n, std::max(limit, round_trip_top))) {
            const auto c = perm_to_cycle(p);
            if (cycle_to_perm(c) != p ||
                perm_to_cycle(cycle_to_perm(c)) != c) {
                r.passed = false;
                r.detail = "round trip failed at n=" + std::to_string(n);
                r.counterexample = p;
                return r;
            }
        }
    }
    for (int n = 2; n <= max_top; ++n) {
        const auto by_perm = brute_argmax(n, Statistic::multiplicative_stretch, std::max(limit, max_top));
        const auto by_cycle = brute_argmax(n, Statistic::cycle_stat, std::max(limit, max_top));
        if (std::get<ProductValue>(by_perm.max_value) != std::get<ProductValue>(by_cycle.max_value)) {
            r.passed = false;
            r.detail = "maxima differ at n=" + std::to_string(n);
            return r;
        }
    }
    return r;
}

CheckResult check_improvement_rules(int max_n, int limit) {
    const int top = std::min(max_n, 7);
    CheckResult r{"improvement-rules", true, "every n-cycle, " + range(2, top), std::nullopt};
    for (int n = 2; n <= top; ++n) {
        for (const auto& p : all_permutations(n, std::max(limit, top))) {
            if (p(1) != 1) break;  // start 1 lists each n-cycle once
            const auto c = perm_to_cycle(p);
            auto step = find_improvement(c);
            if (step && !(cycle_stat(step->cycle) > cycle_stat(c))) {
                r.passed = false;
                r.detail = "rule " + std::to_string(static_cast<int>(step->rule)) + " did not improve at n=" +
                           std::to_string(n);
                r.counterexample = p;
                return r;
            }
        }
    }
    return r;
}

CheckResult check_lipschitz(int max_n, int limit) {
    const int top = std::min(max_n, 5);
    CheckResult r{"lipschitz", true, "all pairs, " + range(1, top), std::nullopt};
    for (int n = 1; n <= top; ++n) {
        const auto all = all_permutations(n, std::max(limit, top));
        for (const auto& p : all) {
            std::vector<std::pair<Permutation, Permutation>> pairs;
            for (const auto& q : all) pairs.emplace_back(p, q);
            if (!lipschitz_check(pairs)) {
                r.passed = false;
                r.detail = "violated at n=" + std::to_string(n);
                r.counterexample = p;
                return r;
            }
        }
    }
    return r;
}

}  // namespace

std::vector<CheckResult> run_theorem_checks(int max_n, int oracle_limit) {
    if (max_n < 1) throw std::out_of_range("max-n must be >= 1");
    if (max_n > oracle_limit)
        throw std::out_of_range("max-n " + std::to_string(max_n) + " exceeds oracle limit " +
                                std::to_string(oracle_limit));
    return {
        check_average(max_n, oracle_limit),
        check_max_displacement(max_n, oracle_limit),
        check_additive(max_n, oracle_limit),
        check_multiplicative(max_n, oracle_limit),
        check_partition(),
        check_increase(max_n, oracle_limit),
        check_cycles(max_n, oracle_limit),
        check_improvement_rules(max_n, oracle_limit),
        check_lipschitz(max_n, oracle_limit),
    };
}

}  // namespace permstat
