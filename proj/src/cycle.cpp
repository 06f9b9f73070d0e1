#include "permstat/cycle.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <stdexcept>

namespace permstat {

CycleWithStart::CycleWithStart(std::vector<int> successor, int start)
    : successor_(std::move(successor)), start_(start) {
    const int n = size();
    if (n < 1) throw std::invalid_argument("cycle must have n >= 1");
    if (start_ < 1 || start_ > n)
        throw std::invalid_argument("start " + std::to_string(start_) + " out of range 1.." + std::to_string(n));
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int v : successor_) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("successor map is not a permutation");
        seen[static_cast<std::size_t>(v)] = true;
    }
    int k = start_;
    for (int steps = 1; steps < n; ++steps) {
        k = next(k);
        if (k == start_) throw std::invalid_argument("successor map is not a single n-cycle");
    }
    if (next(k) != start_) throw std::invalid_argument("successor map is not a single n-cycle");
}

int CycleWithStart::jump_length(int k) const { return std::abs(k - next(k)); }

int CycleWithStart::shortest_jump_length() const {
    int best = std::numeric_limits<int>::max();
    for (int k = 1; k <= size(); ++k) best = std::min(best, jump_length(k));
    return best;
}

std::string CycleWithStart::to_string() const {
    std::string out = "{";
    for (int k = 1; k <= size(); ++k) {
        if (k > 1) out += ", ";
        out += std::to_string(k) + "->" + std::to_string(next(k));
    }
    return out + "} start " + std::to_string(start_);
}

CycleWithStart perm_to_cycle(const Permutation& p) {
    const int n = p.size();
    std::vector<int> succ(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) succ[static_cast<std::size_t>(p(i) - 1)] = p(i == n ? 1 : i + 1);
    return CycleWithStart(std::move(succ), p(1));
}

Permutation cycle_to_perm(const CycleWithStart& c) {
    std::vector<int> v;
    v.reserve(static_cast<std::size_t>(c.size()));
    int k = c.start();
    for (int i = 0; i < c.size(); ++i) {
        v.push_back(k);
        k = c.next(k);
    }
    return Permutation(std::move(v));
}

ProductValue cycle_stat(const CycleWithStart& c) {
    const int n = c.size();
    ProductValue out;
    out.root = n > 1 ? static_cast<unsigned>(n - 1) : 1u;
    if (n == 1) return out;
    // Every jump of an n-cycle with n >= 2 has length >= 1, so dropping the
    // shortest factor from the full product is the best exclusion.
    BigInt product = 1;
    for (int k = 1; k <= n; ++k) product *= c.jump_length(k);
    out.product = product / c.shortest_jump_length();
    return out;
}

Permutation best_unrolling(const CycleWithStart& c) {
    const int shortest = c.shortest_jump_length();
    int k = 1;
    while (c.jump_length(k) != shortest) ++k;
    return cycle_to_perm(CycleWithStart(std::vector<int>(c.successor().begin(), c.successor().end()), c.next(k)));
}

namespace {

bool distinct_endpoints(const CycleWithStart& c, int a, int b) {
    const int ra = c.next(a), rb = c.next(b);
    return a != b && a != rb && b != ra && ra != rb;
}

void check_index(const CycleWithStart& c, int k) {
    if (k < 1 || k > c.size())
        throw std::invalid_argument("jump " + std::to_string(k) + " out of range 1.." + std::to_string(c.size()));
}

}  // namespace

CycleWithStart two_opt(const CycleWithStart& c, int a, int b) {
    check_index(c, a);
    check_index(c, b);
    if (!distinct_endpoints(c, a, b))
        throw std::invalid_argument("two_opt needs jumps with four distinct endpoints: {" + std::to_string(a) + "," +
                                    std::to_string(c.next(a)) + "," + std::to_string(b) + "," +
                                    std::to_string(c.next(b)) + "}");
    const int n = c.size();
    // Walk the cycle from a: a, ρ(a), ..., b, ρ(b), ...
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n));
    for (int k = a, i = 0; i < n; ++i, k = c.next(k)) order.push_back(k);
    auto pos_b = std::find(order.begin(), order.end(), b);
    // a, b, ..., ρ(a), ρ(b), ...
    std::reverse(order.begin() + 1, pos_b + 1);

    std::vector<int> succ(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < order.size(); ++i)
        succ[static_cast<std::size_t>(order[i] - 1)] = order[(i + 1) % order.size()];
    return CycleWithStart(std::move(succ), c.start());
}

JumpClass classify_jumps(const CycleWithStart& c, int a, int b) {
    check_index(c, a);
    check_index(c, b);
    if (a == b) throw std::invalid_argument("classify_jumps needs two different jumps");
    const int ra = c.next(a), rb = c.next(b);
    const int lo_a = std::min(a, ra), hi_a = std::max(a, ra);
    const int lo_b = std::min(b, rb), hi_b = std::max(b, rb);

    JumpClass out;
    out.same_direction = static_cast<long>(a - ra) * static_cast<long>(b - rb) > 0;
    out.first_short = c.is_short(a);
    out.second_short = c.is_short(b);

    const bool a_holds_b = lo_a <= lo_b && hi_b <= hi_a;
    const bool b_holds_a = lo_b <= lo_a && hi_a <= hi_b;
    const bool disjoint = hi_a < lo_b || hi_b < lo_a;
    out.first_outer = a_holds_b;

    if (!distinct_endpoints(c, a, b))
        out.relation = (a_holds_b || b_holds_a) ? JumpRelation::skips : JumpRelation::shared_endpoint;
    else if (disjoint)
        out.relation = JumpRelation::disjoint;
    else if (a_holds_b || b_holds_a)
        out.relation = JumpRelation::bridges;
    else
        out.relation = JumpRelation::nontrivial_intersection;
    return out;
}

std::string to_string(JumpRelation r) {
    switch (r) {
        case JumpRelation::shared_endpoint: return "shared-endpoint";
        case JumpRelation::disjoint: return "disjoint";
        case JumpRelation::skips: return "skips";
        case JumpRelation::bridges: return "bridges";
        case JumpRelation::nontrivial_intersection: return "nontrivial-intersection";
    }
    return "?";
}

bool exchange_improves(const CycleWithStart& c, int i, int j) {
    return distinct_endpoints(c, i, j) && c.is_short(i) && std::abs(i - j) > c.jump_length(j);
}

namespace {

struct Move {
    int first;
    int second;
};

// Rules (i)..(iii) for one unordered pair of jumps; returns the two_opt
// arguments when the rule fires.
std::optional<Move> match_rule(const CycleWithStart& c, ImprovementRule rule, int a, int b) {
    const JumpClass k = classify_jumps(c, a, b);
    switch (rule) {
        case ImprovementRule::disjoint_same_direction:
            if (k.relation == JumpRelation::disjoint && k.same_direction) return Move{a, b};
            break;
        case ImprovementRule::short_crosses_opposite:
            if (k.relation == JumpRelation::nontrivial_intersection && !k.same_direction) {
                if (k.first_short) return Move{a, b};
                if (k.second_short) return Move{b, a};
            }
            break;
        case ImprovementRule::short_disjoint_from_opposite:
            if (k.relation == JumpRelation::disjoint && !k.same_direction) {
                if (k.first_short) return Move{a, b};
                if (k.second_short) return Move{b, a};
            }
            break;
        case ImprovementRule::disjoint_opposite:
            if (k.relation == JumpRelation::disjoint && !k.same_direction) return Move{a, b};
            break;
        case ImprovementRule::bridges_long_opposite:
            // The outer jump bridges the inner one; the inner must be long.
            if (k.relation == JumpRelation::bridges && !k.same_direction) {
                if (k.first_outer && !k.second_short) return Move{a, b};
                if (!k.first_outer && !k.first_short) return Move{b, a};
            }
            break;
    }
    return std::nullopt;
}

constexpr ImprovementRule kBasicRules[] = {
    ImprovementRule::disjoint_same_direction,
    ImprovementRule::short_crosses_opposite,
    ImprovementRule::short_disjoint_from_opposite,
};

}  // namespace

std::optional<Improvement> find_improvement(const CycleWithStart& c) {
    const int n = c.size();
    auto scan = [&](ImprovementRule rule) -> std::optional<Move> {
        for (int a = 1; a <= n; ++a)
            for (int b = a + 1; b <= n; ++b)
                if (auto m = match_rule(c, rule, a, b)) return m;
        return std::nullopt;
    };
    auto make = [&](ImprovementRule rule, Move m) {
        return Improvement{two_opt(c, m.first, m.second), rule, m.first, m.second};
    };

    for (ImprovementRule rule : kBasicRules)
        if (auto m = scan(rule)) return make(rule, *m);

    if (auto m = scan(ImprovementRule::disjoint_opposite)) {
        // Neither jump is short here, else (iii) would have fired. A shortest
        // jump then meets one of them in a way that (i)..(iii) handle.
        int s = 1;
        while (!c.is_short(s)) ++s;
        for (int other : {m->first, m->second}) {
            if (other == s) continue;
            for (ImprovementRule rule : kBasicRules)
                if (auto r = match_rule(c, rule, std::min(s, other), std::max(s, other)))
                    return make(ImprovementRule::disjoint_opposite, *r);
        }
        throw std::logic_error("disjoint opposite jumps without a reducible short jump in " + c.to_string());
    }

    if (auto m = scan(ImprovementRule::bridges_long_opposite))
        return make(ImprovementRule::bridges_long_opposite, *m);
    return std::nullopt;
}

}  // namespace permstat
