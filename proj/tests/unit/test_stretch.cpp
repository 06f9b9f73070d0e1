#include <doctest.h>

#include "permstat/metrics.hpp"
#include "permstat/oracle.hpp"
#include "permstat/stretch.hpp"

using namespace permstat;

TEST_CASE("interval family validation") {
    CHECK_THROWS_AS(IntervalFamily(3, {}), std::invalid_argument);
    CHECK_THROWS_AS(IntervalFamily(3, {{1}}), std::invalid_argument);
    CHECK_THROWS_AS(IntervalFamily(3, {{2, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(IntervalFamily(3, {{1, 4}}), std::invalid_argument);
    CHECK_THROWS_AS(IntervalFamily::consecutive_pairs(1), std::invalid_argument);
    CHECK_THROWS_AS(stretch_additive(IntervalFamily::consecutive_pairs(3), Permutation{1, 2}), std::invalid_argument);
}

TEST_CASE("additive stretch") {
    const IntervalFamily family(3, {{1, 2}, {2, 3}});
    CHECK(stretch_additive(family, Permutation{1, 3, 2}) == ExactRatio(3, 2));
    CHECK(stretch_additive(family, Permutation::identity(3)) == ExactRatio(1));
    CHECK(stretch_additive(IntervalFamily(5, {{1, 3, 5}, {2, 4}}), Permutation::identity(5)) == ExactRatio(1));
    CHECK(stretch_additive(IntervalFamily::consecutive_pairs(4), Permutation{2, 4, 1, 3}) == ExactRatio(7, 3));
}

TEST_CASE("multiplicative stretch") {
    const IntervalFamily family(3, {{1, 2}, {2, 3}});
    const auto v = stretch_multiplicative(family, Permutation{1, 3, 2});
    CHECK(v.product == 2);
    CHECK(v.root == 2);
    CHECK(v.is_integral());
    CHECK(stretch_multiplicative(family, Permutation::identity(3)).product == 1);

    const auto b = stretch_multiplicative(IntervalFamily::consecutive_pairs(4), Permutation{2, 4, 1, 3});
    CHECK(b.product == 12);
    CHECK(b.root == 3);
    CHECK(b == gap_product(Permutation{2, 4, 1, 3}));

    // {1,3} has diameter 2, so a non-integral ratio appears.
    const auto r = stretch_multiplicative(IntervalFamily(3, {{1, 3}}), Permutation{2, 1, 3});
    CHECK(r.product == 1);
    CHECK(r.divisor == 2);
}

TEST_CASE("maximum additive stretch") {
    CHECK(max_additive_stretch(4) == ExactRatio(7, 3));
    CHECK(max_additive_stretch(5) == ExactRatio(11, 4));
    CHECK(max_additive_stretch(2) == ExactRatio(1));
    CHECK_THROWS(max_additive_stretch(1));
}

TEST_CASE("additive maximizer predicate") {
    CHECK(is_additive_maximizer(Permutation{2, 4, 1, 3}));
    CHECK_FALSE(is_additive_maximizer(Permutation::identity(4)));
    CHECK(is_additive_maximizer(Permutation{3, 5, 1, 4, 2}));
    CHECK(is_additive_maximizer(Permutation{1, 2}));
    CHECK(is_additive_maximizer(Permutation{2, 1}));
}

TEST_CASE("product partitions") {
    auto a = max_product_partition(3, 7);
    CHECK(a.value == 12);
    CHECK(a.parts == std::vector<std::int64_t>{2, 2, 3});
    auto b = max_product_partition(5, 5);
    CHECK(b.value == 1);
    CHECK(b.parts == std::vector<std::int64_t>(5, 1));
    auto c = max_product_partition(2, 5);
    CHECK(c.value == 6);
    CHECK(c.parts == std::vector<std::int64_t>{2, 3});
    CHECK_THROWS_AS(max_product_partition(4, 3), std::invalid_argument);
}

TEST_CASE("exchange inequality (x−1)(y+1) < xy on a grid") {
    for (long x = 1; x <= 60; ++x)
        for (long y = x; y <= 60; ++y) REQUIRE((x - 1) * (y + 1) < x * y);
}

TEST_CASE("maximum multiplicative stretch") {
    CHECK(max_multiplicative_stretch(4).product == 12);
    CHECK(max_multiplicative_stretch(4).root == 3);
    CHECK(max_multiplicative_stretch(5).product == 48);
    CHECK(max_multiplicative_stretch(2).product == 1);
    CHECK(max_multiplicative_stretch(3).product == 2);
    CHECK_THROWS(max_multiplicative_stretch(1));
}

TEST_CASE("multiplicative maximizers") {
    CHECK(multiplicative_maximizers(4) == std::vector<Permutation>{{2, 4, 1, 3}, {3, 1, 4, 2}});
    CHECK(multiplicative_maximizers(5) ==
          std::vector<Permutation>{{2, 4, 1, 5, 3}, {3, 1, 5, 2, 4}, {3, 5, 1, 4, 2}, {4, 2, 5, 1, 3}});
    CHECK(multiplicative_maximizers(3) == std::vector<Permutation>{{1, 3, 2}, {2, 1, 3}, {2, 3, 1}, {3, 1, 2}});
    CHECK(multiplicative_maximizers(2) == std::vector<Permutation>{{1, 2}, {2, 1}});
}

TEST_CASE("constructed maximizers attain the closed form for large n") {
    for (int n = 2; n <= 41; ++n) {
        const auto list = multiplicative_maximizers(n);
        REQUIRE(list.size() == (n % 2 == 0 ? 2u : 4u));
        REQUIRE(std::is_sorted(list.begin(), list.end()));
        for (const auto& p : list) {
            REQUIRE(gap_product(p) == max_multiplicative_stretch(n));
            // They also attain the additive maximum.
            REQUIRE(is_additive_maximizer(p));
        }
    }
}

TEST_CASE("stretch invariants, exhaustive n <= 6") {
    for (int n = 2; n <= 6; ++n) {
        const auto family = IntervalFamily::consecutive_pairs(n);
        for (const auto& p : all_permutations(n)) {
            const auto add = stretch_additive(family, p);
            const auto mul = stretch_multiplicative(family, p);
            REQUIRE(add == ExactRatio(gap_sum(p), n - 1));
            REQUIRE(mul == gap_product(p));
            REQUIRE(mul.product >= 1);
            REQUIRE(add <= max_additive_stretch(n));
            REQUIRE(ExactRatio(gap_sum(p)) <= ExactRatio(n - 1) * max_additive_stretch(n));
            for (auto kind : {TransformKind::reverse, TransformKind::complement}) {
                const auto q = transform(p, kind);
                REQUIRE(stretch_additive(family, q) == add);
                REQUIRE(stretch_multiplicative(family, q) == mul);
            }
        }
    }
}
