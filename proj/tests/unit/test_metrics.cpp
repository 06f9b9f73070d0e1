#include <doctest.h>

#include "permstat/metrics.hpp"
#include "permstat/oracle.hpp"
#include "permstat/sampling.hpp"

using namespace permstat;

TEST_CASE("permutation validation and parsing") {
    CHECK_THROWS_AS(Permutation({1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation({0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation(std::vector<int>{}), std::invalid_argument);
    CHECK(parse_permutation("2 4 1 3") == Permutation{2, 4, 1, 3});
    CHECK(parse_permutation("2,4, 1,3\n") == Permutation{2, 4, 1, 3});
    CHECK(parse_permutation("n=4 2 4 1 3") == Permutation{2, 4, 1, 3});
    CHECK(parse_permutation(Permutation{3, 5, 1, 4, 2}.to_string()) == Permutation{3, 5, 1, 4, 2});

    auto message = [](const std::string& text) {
        try {
            parse_permutation(text);
        } catch (const std::invalid_argument& e) {
            return std::string(e.what());
        }
        return std::string();
    };
    CHECK(message("2 2 1").find("'2'") != std::string::npos);
    CHECK(message("1 x 2").find("'x'") != std::string::npos);
    CHECK(message("1 2 7").find("'7'") != std::string::npos);
    CHECK(!message("").empty());
}

TEST_CASE("displacement") {
    CHECK(displacement(Permutation::identity(3)) == ExactRatio(0));
    CHECK(displacement(Permutation{3, 1, 2}) == ExactRatio(4, 3));
    CHECK(displacement(Permutation{2, 4, 1, 3}) == ExactRatio(3, 2));
}

TEST_CASE("normalized displacement") {
    CHECK(normalized_displacement(Permutation::identity(7)) == ExactRatio(0));
    CHECK(normalized_displacement(Permutation{2, 1}) == ExactRatio(1, 2));
    CHECK(normalized_displacement(Permutation{3, 1, 2}) == ExactRatio(4, 9));
}

TEST_CASE("average displacement closed form") {
    CHECK(average_displacement_exact(1) == ExactRatio(0));
    CHECK(average_displacement_exact(3) == ExactRatio(8, 9));
    CHECK(average_displacement_exact(1000) == ExactRatio(999999, 3000));
    CHECK_THROWS(average_displacement_exact(0));
}

TEST_CASE("hamming distance") {
    const Permutation p{1, 2, 3};
    CHECK(hamming_distance(p, p) == ExactRatio(0));
    CHECK(hamming_distance(p, Permutation{2, 1, 3}) == ExactRatio(2, 3));
    CHECK(hamming_distance(Permutation{1, 2}, Permutation{2, 1}) == ExactRatio(1));
    CHECK_THROWS_AS(hamming_distance(p, Permutation{1, 2}), std::invalid_argument);
}

TEST_CASE("transforms") {
    CHECK(transform(Permutation{3, 5, 1, 4, 2}, TransformKind::reverse) == Permutation{2, 4, 1, 5, 3});
    CHECK(transform(Permutation{2, 4, 1, 3}, TransformKind::complement) == Permutation{3, 1, 4, 2});
    CHECK(transform(Permutation{3, 1, 2}, TransformKind::inverse) == Permutation{2, 3, 1});
}

TEST_CASE("delay, spread and dispersion") {
    CHECK(min_delay(Permutation::identity(4)) == 0);
    CHECK(min_delay(Permutation{2, 1}) == 1);
    CHECK(min_delay(Permutation{3, 5, 1, 4, 2}) == 0);

    CHECK(spread(Permutation::identity(3)) == 2);
    CHECK(spread(Permutation{2, 4, 1, 3}) == 3);
    CHECK(spread(Permutation{2, 1}) == 2);
    CHECK(spread(Permutation{1, 2}) == 2);
    CHECK_THROWS_AS(spread(Permutation{1}), std::domain_error);

    CHECK(dispersion(Permutation{2, 1}) == ExactRatio(1));
    CHECK(dispersion(Permutation::identity(3)) == ExactRatio(2, 3));
    CHECK(dispersion(Permutation{2, 4, 1, 3}) == ExactRatio(2, 3));
    CHECK_THROWS_AS(dispersion(Permutation{1}), std::domain_error);
}

TEST_CASE("core invariants hold exhaustively for n <= 6") {
    for (int n = 1; n <= 6; ++n) {
        for (const auto& p : all_permutations(n)) {
            const auto nd = normalized_displacement(p);
            REQUIRE(nd >= ExactRatio(0));
            REQUIRE(nd <= ExactRatio(1, 2));
            REQUIRE(displacement_sum(p) <= static_cast<std::int64_t>(n) * n / 2);
            REQUIRE(displacement(transform(p, TransformKind::inverse)) == displacement(p));
            REQUIRE(displacement(transform(transform(p, TransformKind::complement), TransformKind::reverse)) ==
                    displacement(p));
            for (auto kind : {TransformKind::reverse, TransformKind::complement, TransformKind::inverse})
                REQUIRE(transform(transform(p, kind), kind) == p);
            REQUIRE(transform(transform(p, TransformKind::reverse), TransformKind::complement) ==
                    transform(transform(p, TransformKind::complement), TransformKind::reverse));
            REQUIRE((min_delay(p) == 0) == [&] {
                for (int i = 1; i <= n; ++i)
                    if (p(i) == i) return true;
                return false;
            }());
            if (n >= 2) {
                REQUIRE(spread(p) >= 2);
                REQUIRE(dispersion(p) > ExactRatio(0));
                REQUIRE(dispersion(p) <= ExactRatio(1));
            }
        }
    }
}

TEST_CASE("hamming distance is never exactly 1/n") {
    for (int n = 2; n <= 5; ++n) {
        const auto all = all_permutations(n);
        for (const auto& p : all)
            for (const auto& q : all) {
                const auto h = hamming_distance(p, q);
                REQUIRE(h != ExactRatio(1, n));
                REQUIRE((h == ExactRatio(0)) == (p == q));
            }
    }
}

TEST_CASE("normalized displacement is 1-Lipschitz on random large permutations") {
    for (std::uint64_t t = 0; t < 200; ++t) {
        const auto p = sample_uniform(200, 7, 2 * t);
        const auto q = sample_uniform(200, 7, 2 * t + 1);
        REQUIRE(abs(normalized_displacement(p) - normalized_displacement(q)) <= hamming_distance(p, q));
    }
}
