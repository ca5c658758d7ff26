#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "hyperdeg/degseq.hpp"

using namespace hyperdeg;

namespace {

// Havel–Hakimi, the classical exact test for graphical sequences; serves as
// an oracle independent of the shifted-majorization route.
bool havel_hakimi(std::vector<int> d) {
    while (true) {
        std::sort(d.begin(), d.end(), std::greater<int>());
        while (!d.empty() && d.back() == 0) d.pop_back();
        if (d.empty()) return true;
        int take = d[0];
        if (take > static_cast<int>(d.size()) - 1) return false;
        d.erase(d.begin());
        for (int i = 0; i < take; ++i)
            if (--d[i] < 0) return false;
    }
}

}  // namespace

TEST_CASE("is_degree_sequence on the worked examples") {
    REQUIRE(is_degree_sequence({2, 2, 2}, 2));
    REQUIRE_FALSE(is_degree_sequence({3, 3}, 2));
    REQUIRE(is_degree_sequence({9, 6, 6, 5, 4, 3}, 3));
    REQUIRE(is_degree_sequence({0, 0, 0}, 2));
    REQUIRE_THROWS_AS(is_degree_sequence({1, 1, 1}, 2), DomainError);  // odd sum
}

TEST_CASE("is_degree_sequence matches Havel-Hakimi for graphs") {
    for (int m = 0; m <= 5; ++m)
        for (const auto& p : partitions_of(2 * m, 2 * m, 2 * m))
            REQUIRE(is_degree_sequence(p, 2) == havel_hakimi(p));
}

TEST_CASE("degree-sequence census reproduces the published table") {
    REQUIRE(count_degree_sequences(3, 2) == 8);
    REQUIRE(count_degree_sequences(4, 1) == 16);
    REQUIRE(count_degree_sequences(4, 2) == 54);
    REQUIRE(count_degree_sequences(4, 3) == 16);
    REQUIRE(count_degree_sequences(5, 2) == 533);
    REQUIRE(count_degree_sequences(5, 3) == 533);
}

TEST_CASE("census symmetry between k and n-k") {
    for (int n = 2; n <= 6; ++n)
        for (int k = 1; k < n; ++k)
            REQUIRE(count_degree_sequences(n, k) == count_degree_sequences(n, n - k));
}

TEST_CASE("ruch_gutman and merris_roby") {
    REQUIRE(ruch_gutman_graphical({2, 2, 2}));
    REQUIRE(ruch_gutman_graphical({1, 1, 1, 1}));
    REQUIRE_FALSE(ruch_gutman_graphical({3, 3}));
    REQUIRE_THROWS_AS(ruch_gutman_graphical({2, 1}), DomainError);

    REQUIRE(merris_roby({2, 2, 2}) == MerrisRobyClass::shifted_degree);
    REQUIRE(merris_roby({1, 1, 1, 1}) == MerrisRobyClass::graphical);
    REQUIRE(merris_roby({3, 3}) == MerrisRobyClass::not_graphical);
}

TEST_CASE("merris_roby, ruch_gutman, and realizability agree on all small partitions") {
    for (int m = 0; m <= 6; ++m) {
        // shifted 2-family degrees of size m, from the enumeration itself
        std::set<Partition> shifted_degrees;
        for (const auto& K : enumerate_shifted(2, m)) {
            Partition d = degree_sequence(K);
            while (!d.empty() && d.back() == 0) d.pop_back();
            shifted_degrees.insert(d);
        }
        for (const auto& p : partitions_of(2 * m, 2 * m, 2 * m)) {
            MerrisRobyClass mr = merris_roby(p);
            bool graphical = mr != MerrisRobyClass::not_graphical;
            REQUIRE(graphical == ruch_gutman_graphical(p));
            REQUIRE(graphical == havel_hakimi(p));
            REQUIRE((mr == MerrisRobyClass::shifted_degree) ==
                    (shifted_degrees.count(p) == 1));
        }
    }
}

TEST_CASE("shifted catalog sizes") {
    // shifted graphs on [n] are strict partitions in the staircase: 2^(n-1)
    for (int n = 2; n <= 7; ++n) {
        const auto& cat = shifted_catalog(n, 2);
        long long total = 0;
        for (const auto& bucket : cat.by_size)
            for (const auto& e : bucket) total += e.count;
        REQUIRE(total == (1 << (n - 1)));
    }
    // ideal counts of C([n],3)
    std::vector<long long> expect = {2, 5, 16, 66};
    for (int n = 3; n <= 6; ++n) {
        const auto& cat = shifted_catalog(n, 3);
        long long total = 0;
        for (const auto& bucket : cat.by_size)
            for (const auto& e : bucket) total += e.count;
        REQUIRE(total == expect[n - 3]);
    }
}

TEST_CASE("dominating shifted witnesses majorize the query") {
    std::vector<int> d = {2, 2, 1, 1, 1, 1};
    auto w = find_dominating_shifted(d, 2);
    REQUIRE(w.has_value());
    REQUIRE(is_shifted(*w));
    Partition wd = degree_sequence(*w);
    while (!wd.empty() && wd.back() == 0) wd.pop_back();
    REQUIRE(majorizes(wd, normalized_partition(d)));
}

TEST_CASE("subfacet-degree reconstruction") {
    KFamily K = shifted_generate(6, 3, {{2, 3, 5}, {1, 4, 6}});
    auto f = i_degree_function(K, 2);
    KFamily R = reconstruct_shifted_from_subfacet_degrees(f, 6, 3);
    REQUIRE(R == K);

    KFamily empty = reconstruct_shifted_from_subfacet_degrees({}, 5, 3);
    REQUIRE(empty.size() == 0);

    KFamily bipyramid = KFamily::from_members(
        5, 3, {{1, 2, 4}, {1, 2, 5}, {1, 3, 4}, {1, 3, 5}, {2, 3, 4}, {2, 3, 5}});
    auto g = i_degree_function(bipyramid, 2);
    REQUIRE_THROWS_AS(reconstruct_shifted_from_subfacet_degrees(g, 5, 3), DomainError);

    // round trips over every shifted 3-family of size <= 4
    for (int m = 0; m <= 4; ++m)
        for (const auto& S : enumerate_shifted(3, m)) {
            auto h = i_degree_function(S, 2);
            REQUIRE(reconstruct_shifted_from_subfacet_degrees(h, S.n(), 3) == S);
        }
}
