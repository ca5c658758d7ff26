#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "hyperdeg/zonotope.hpp"

using namespace hyperdeg;

TEST_CASE("membership basics") {
    ZonotopeSpec z(4, 2);
    // degree sequences are members (indicator weights)
    KFamily K = KFamily::from_members(4, 2, {{1, 2}, {2, 3}, {3, 4}});
    REQUIRE(zonotope_membership(degree_sequence(K), z));
    // the all-ones weight vector gives the coordinatewise maximum
    std::vector<int> top(4, 3);
    REQUIRE(zonotope_membership(top, z));
    // exceeding the coordinate bound cannot be reached
    REQUIRE_FALSE(zonotope_membership({12, 0, 0, 0}, z));
    REQUIRE_THROWS_AS(zonotope_membership({1, 1}, z), DomainError);
}

TEST_CASE("membership is invariant under permuting coordinates") {
    ZonotopeSpec z(5, 3);
    std::mt19937 rng(31);
    for (int trial = 0; trial < 15; ++trial) {
        std::vector<int> d(5);
        for (int& x : d) x = static_cast<int>(rng() % 7);
        bool base = zonotope_membership(d, z);
        std::vector<int> q = d;
        std::sort(q.begin(), q.end());
        do {
            REQUIRE(zonotope_membership(q, z) == base);
        } while (std::next_permutation(q.begin(), q.end()) && (rng() % 4) != 0);
    }
}

TEST_CASE("realizable degree sequences lie in the polytope") {
    for (int n = 4; n <= 6; ++n) {
        ZonotopeSpec z(n, 3);
        int bound = static_cast<int>(binomial(n - 1, 2));
        for (long long w = 0; w <= static_cast<long long>(bound) * n; w += 3)
            for (const auto& p : partitions_of(static_cast<int>(w), n, bound)) {
                std::vector<int> d(p);
                d.resize(n, 0);
                if (is_degree_sequence(d, 3)) REQUIRE(zonotope_membership(d, z));
            }
    }
}

TEST_CASE("vertices of the degree polytope") {
    ZonotopeSpec z(5, 3);
    KFamily complete(5, 3);
    for (std::uint64_t r = 0; r < complete.codec().count(); ++r) complete.add_rank(r);
    REQUIRE(zonotope_is_vertex(degree_sequence(complete), z));

    ZonotopeSpec z6(6, 2);
    REQUIRE_FALSE(zonotope_is_vertex({2, 2, 2, 2, 2, 2}, z6));  // two hexagon/triangle realizations
    REQUIRE_FALSE(zonotope_is_vertex({5, 1, 0, 0, 0, 0}, z6));  // not realizable at all
}

TEST_CASE("vertex test matches threshold recognition exhaustively") {
    for (auto [n, k] : {std::pair{5, 2}, std::pair{5, 3}}) {
        ZonotopeSpec z(n, k);
        KFamily probe(n, k);
        std::uint64_t total = probe.codec().count();
        for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << total); ++mask) {
            KFamily K(n, k);
            for (std::uint64_t r = 0; r < total; ++r)
                if ((mask >> r) & 1) K.add_rank(r);
            bool thr = is_threshold(K).has_value();
            REQUIRE(zonotope_is_vertex(degree_sequence(K), z) == thr);
        }
    }
}

TEST_CASE("koren system") {
    REQUIRE(koren_system({2, 2, 2}, 3).ok);
    auto bad = koren_system({3, 3, 0, 0}, 4);
    REQUIRE_FALSE(bad.ok);
    REQUIRE_FALSE(bad.S.empty());
    REQUIRE(koren_system({0, 0, 0, 0}, 4).ok);
}

TEST_CASE("koren system describes the polytope; with even sum it detects graphicality") {
    for (int n = 3; n <= 6; ++n) {
        ZonotopeSpec z(n, 2);
        int bound = n - 1;
        for (long long w = 0; w <= static_cast<long long>(bound) * n; ++w) {
            for (const auto& p : partitions_of(static_cast<int>(w), n, bound)) {
                std::vector<int> d(p);
                d.resize(n, 0);
                bool koren = koren_system(d, n).ok;
                // the inequalities are exactly the facets of D_n(2)
                REQUIRE(koren == zonotope_membership(d, z));
                // on even-sum points they recognize degree sequences
                if (w % 2 == 0) {
                    REQUIRE(koren == ruch_gutman_graphical(p));
                    REQUIRE(koren == is_degree_sequence(d, 2));
                }
            }
        }
    }
}

TEST_CASE("no holes at small scale") {
    auto r25 = holes_report(5, 2);
    REQUIRE(r25.holes.empty());
    auto r26 = holes_report(6, 2);
    REQUIRE(r26.holes.empty());
    auto r35 = holes_report(5, 3);
    REQUIRE(r35.holes.empty());
    // k=1: the unit cube, every 0/1 point realizable
    auto r14 = holes_report(4, 1);
    REQUIRE(r14.holes.empty());
    REQUIRE(r14.candidates == r14.realizable);
}
