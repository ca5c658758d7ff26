#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "hyperdeg/partition.hpp"

using namespace hyperdeg;

TEST_CASE("majorization basics") {
    REQUIRE(strictly_majorizes({3, 3, 1, 1, 1}, {3, 2, 2, 1, 1}));
    REQUIRE(majorizes({3, 2, 2, 1, 1}, {3, 2, 2, 1, 1}));
    REQUIRE_FALSE(strictly_majorizes({3, 2, 2, 1, 1}, {3, 2, 2, 1, 1}));
    REQUIRE(strictly_majorizes({23, 17, 15, 13, 12, 11, 8, 6, 3},
                               {23, 16, 16, 12, 12, 12, 7, 7, 3}));
    REQUIRE_THROWS_AS(majorizes({2, 1}, {1, 1}), DomainError);
}

TEST_CASE("the sorted rearrangement majorizes the original sequence") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        int len = 1 + static_cast<int>(rng() % 8);
        std::vector<int> v(len);
        for (int& x : v) x = static_cast<int>(rng() % 10);
        std::vector<int> sorted = v;
        std::sort(sorted.begin(), sorted.end(), std::greater<int>());
        REQUIRE(majorizes(sorted, v));
    }
}

TEST_CASE("conjugate and trace") {
    REQUIRE(conjugate({3, 1}) == Partition{2, 1, 1});
    REQUIRE(trace({2, 2, 2}) == 2);
    REQUIRE(trace({}) == 0);
    std::mt19937 rng(123);
    for (int trial = 0; trial < 100; ++trial) {
        int len = static_cast<int>(rng() % 7);
        std::vector<int> v(len);
        for (int& x : v) x = 1 + static_cast<int>(rng() % 7);
        Partition p = normalized_partition(v);
        REQUIRE(conjugate(conjugate(p)) == p);
        REQUIRE(weight(conjugate(p)) == weight(p));
    }
}

TEST_CASE("diagonal cuts") {
    auto [a1, b1] = alpha_beta({2, 2, 2});
    REQUIRE(a1 == StrictPartition{2, 1});
    REQUIRE(b1 == StrictPartition{2, 1});

    auto [a2, b2] = alpha_beta({1, 1, 1, 1});
    REQUIRE(a2 == StrictPartition{1});
    REQUIRE(b2 == StrictPartition{3});

    auto [a3, b3] = alpha_beta({});
    REQUIRE(a3.empty());
    REQUIRE(b3.empty());

    // alpha and beta tile the diagram
    std::mt19937 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        int len = static_cast<int>(rng() % 6);
        std::vector<int> v(len);
        for (int& x : v) x = 1 + static_cast<int>(rng() % 6);
        Partition p = normalized_partition(v);
        auto [a, b] = alpha_beta(p);
        REQUIRE(weight(a) + weight(b) == weight(p));
        for (std::size_t i = 1; i < a.size(); ++i) REQUIRE(a[i - 1] > a[i]);
        for (std::size_t i = 1; i < b.size(); ++i) REQUIRE(b[i - 1] > b[i]);
    }
}

TEST_CASE("weak majorization") {
    REQUIRE(weakly_majorizes({3}, {1}));
    REQUIRE(weakly_majorizes({2, 1}, {2, 1}));
    REQUIRE_FALSE(weakly_majorizes({1}, {3}));
    REQUIRE_FALSE(weakly_majorizes({1, 1, 1}, {2}));
}

TEST_CASE("dominance moves step strictly down or up") {
    Partition p = {3, 2, 1};
    for (const auto& q : dominance_down_moves(p, 6)) {
        REQUIRE(is_partition(q));
        REQUIRE(strictly_majorizes(p, q));
    }
    for (const auto& q : dominance_up_moves(p, 10)) {
        REQUIRE(is_partition(q));
        REQUIRE(strictly_majorizes(q, p));
    }
    // down moves from (2) within 2 slots: only (1,1)
    auto down = dominance_down_moves({2}, 2);
    REQUIRE(down == std::vector<Partition>{{1, 1}});
}

TEST_CASE("partitions_of enumerates the box") {
    auto ps = partitions_of(6, 6, 6);
    REQUIRE(ps.size() == 11);
    for (std::size_t i = 1; i < ps.size(); ++i) REQUIRE(lex_greater(ps[i - 1], ps[i]));
    REQUIRE(partitions_of(0, 3, 3) == std::vector<Partition>{{}});
    REQUIRE(partitions_of(7, 2, 3).empty());  // exceeds the 2x3 box
    // box restriction: partitions of 4 in a 2x2 box: just (2,2)
    REQUIRE(partitions_of(4, 2, 2) == std::vector<Partition>{{2, 2}});
}

TEST_CASE("rearrangement counts") {
    REQUIRE(rearrangement_count({2, 1, 1}, 4) == 12);
    REQUIRE(rearrangement_count({}, 5) == 1);
    REQUIRE(rearrangement_count({3, 3}, 2) == 1);
    REQUIRE(rearrangement_count({1}, 3) == 3);

    // cross-check against direct enumeration
    std::set<std::vector<int>> seen;
    for_each_rearrangement({2, 1, 1}, 4, [&](const std::vector<int>& v) { seen.insert(v); });
    REQUIRE(seen.size() == 12);
}
