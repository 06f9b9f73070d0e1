#include <doctest.h>

#include <cmath>

#include "permstat/extremal.hpp"
#include "permstat/metrics.hpp"
#include "permstat/oracle.hpp"

using namespace permstat;

TEST_CASE("crossing examples") {
    auto id2 = is_crossing(Permutation::identity(2));
    CHECK_FALSE(id2.crossing);
    REQUIRE(id2.witness);
    CHECK(*id2.witness == CrossingWitness{1, 2});

    CHECK(is_crossing(Permutation{2, 1}).crossing);
    CHECK(is_crossing(Permutation{4, 5, 3, 1, 2}).crossing);
    CHECK_FALSE(is_crossing(Permutation{4, 5, 3, 1, 2}).witness);
    // Optimal for s* but not for displacement.
    CHECK_FALSE(is_crossing(Permutation{3, 5, 1, 4, 2}).crossing);
    CHECK(is_crossing(Permutation::reversal(7)).crossing);
    CHECK(is_crossing(Permutation{1}).crossing);
}

TEST_CASE("both crossing tests agree and witnesses are disjoint, n <= 8") {
    for (int n = 1; n <= 8; ++n) {
        for (const auto& p : all_permutations(n)) {
            const auto r = is_crossing(p);  // throws on disagreement
            if (r.witness) {
                const auto [i, j] = *r.witness;
                REQUIRE(i < j);
                REQUIRE(std::max(i, p(i)) < std::min(j, p(j)));
            }
        }
    }
}

TEST_CASE("maximal displacement closed form") {
    CHECK(max_displacement(4) == ExactRatio(2));
    CHECK(max_displacement(3) == ExactRatio(4, 3));
    CHECK(max_displacement(1) == ExactRatio(0));
    CHECK(count_max_displacement(4) == 4);
    CHECK(count_max_displacement(3) == 3);
    CHECK(count_max_displacement(5) == 20);
    CHECK(count_max_displacement(1) == 1);
}

TEST_CASE("odd count formula agrees with enumeration") {
    // The odd-n count is derived rather than quoted, so it is gated on the oracle.
    for (int n : {1, 3, 5, 7, 9}) {
        const auto report = brute_argmax(n, Statistic::displacement);
        CHECK(BigInt(static_cast<unsigned long>(report.count)) == count_max_displacement(n));
    }
}

TEST_CASE("improving noncrossing permutations") {
    CHECK(improve_noncrossing(Permutation::identity(2)) == Permutation{2, 1});
    CHECK(improve_noncrossing(Permutation::identity(3)) == Permutation{2, 1, 3});
    CHECK(displacement(Permutation{2, 1, 3}) == ExactRatio(2, 3));
    CHECK(improve_noncrossing(Permutation{1, 3, 2}) == Permutation{3, 1, 2});
    CHECK_THROWS_AS(improve_noncrossing(Permutation{2, 1}), std::invalid_argument);

    // Repeated improvement reaches the maximum.
    Permutation p = Permutation::identity(9);
    while (!is_crossing(p).crossing) {
        const auto next = improve_noncrossing(p);
        REQUIRE(displacement(next) > displacement(p));
        p = next;
    }
    CHECK(displacement(p) == max_displacement(9));
}

TEST_CASE("prescribed displacement examples") {
    auto full = construct_prescribed(10, ExactRatio(1, 2));
    CHECK(full.permutation == Permutation{6, 7, 8, 9, 10, 1, 2, 3, 4, 5});
    CHECK(full.achieved == ExactRatio(1, 2));
    CHECK(normalized_displacement(full.permutation) == full.achieved);

    for (int n : {1, 2, 17, 100}) {
        auto zero = construct_prescribed(n, ExactRatio(0));
        CHECK(zero.permutation == Permutation::identity(n));
        CHECK(zero.achieved == ExactRatio(0));
    }

    auto eighth = construct_prescribed(100, ExactRatio(1, 8));
    CHECK(eighth.block == 25);
    CHECK(eighth.achieved == ExactRatio(1, 8));

    CHECK_THROWS_AS(construct_prescribed(10, ExactRatio(3, 5)), std::out_of_range);
    CHECK_THROWS_AS(construct_prescribed(10, ExactRatio(-1, 5)), std::out_of_range);
}

TEST_CASE("prescribed displacement bound and block size over a grid") {
    for (int n = 1; n <= 60; ++n) {
        for (int k = 0; k <= 40; ++k) {
            const ExactRatio d(k, 80);
            const auto built = construct_prescribed(n, d);
            REQUIRE(normalized_displacement(built.permutation) == built.achieved);
            REQUIRE(abs(built.achieved - d) <= ExactRatio(2, n));
            // u >= √(2d)·n/2 unless clamped to ⌊n/2⌋.
            if (built.block < n / 2) {
                const double delta = std::sqrt(2.0 * d.to_double());
                REQUIRE(built.block >= delta * n / 2 - 1e-9);
                REQUIRE(built.block - 1 < delta * n / 2 + 1e-9);
            }
        }
    }
}

TEST_CASE("prescribed displacement converges") {
    const ExactRatio d(3, 10);
    ExactRatio previous_error(1);
    for (int n : {100, 1000, 10000}) {
        const auto built = construct_prescribed(n, d);
        const auto err = abs(built.achieved - d);
        CHECK(err <= ExactRatio(2, n));
        CHECK(err <= previous_error);
        previous_error = err;
    }
}
