#pragma once

#include <atomic>
#include <chrono>
#include <sstream>
#include <thread>

#include "hyperdeg/cubes.hpp"
#include "hyperdeg/hwv.hpp"
#include "hyperdeg/symfunc.hpp"
#include "hyperdeg/zonotope.hpp"

namespace hyperdeg {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

namespace verify_detail {

// Runs fn over every mask in [0, total), in parallel chunks; returns the
// number of masks where fn reported a violation (returned false or threw).
template <typename Fn>
std::uint64_t count_violations(std::uint64_t total, int threads, Fn&& fn) {
    threads = std::max(1, threads);
    auto safe = [&fn](std::uint64_t mask) {
        try {
            return fn(mask);
        } catch (...) {
            return false;
        }
    };
    if (threads == 1) {
        std::uint64_t bad = 0;
        for (std::uint64_t mask = 0; mask < total; ++mask)
            if (!safe(mask)) ++bad;
        return bad;
    }
    std::atomic<std::uint64_t> bad{0};
    std::atomic<std::uint64_t> next{0};
    const std::uint64_t chunk = 256;
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&]() {
            while (true) {
                std::uint64_t lo = next.fetch_add(chunk);
                if (lo >= total) return;
                std::uint64_t hi = std::min(total, lo + chunk);
                for (std::uint64_t mask = lo; mask < hi; ++mask)
                    if (!safe(mask)) bad.fetch_add(1);
            }
        });
    }
    for (auto& th : pool) th.join();
    return bad.load();
}

inline KFamily family_from_mask(int n, int k, std::uint64_t mask) {
    KFamily K(n, k);
    std::uint64_t total = K.codec().count();
    for (std::uint64_t r = 0; r < total; ++r)
        if ((mask >> r) & 1) K.add_rank(r);
    return K;
}

}  // namespace verify_detail

// The acceptance criteria.  Each entry runs one criterion at its stated
// bounds; `extended` adds the long-running variants.
inline std::vector<CriterionResult> run_acceptance(bool extended = false, int threads = 1) {
    using clock = std::chrono::steady_clock;
    std::vector<CriterionResult> results;

    auto run = [&](int id, const std::string& name, auto&& body) {
        CriterionResult r;
        r.id = id;
        r.name = name;
        auto t0 = clock::now();
        try {
            std::string detail = body();
            r.pass = detail.empty();
            r.detail = detail;
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = std::string("exception: ") + e.what();
        }
        r.seconds = std::chrono::duration<double>(clock::now() - t0).count();
        results.push_back(std::move(r));
    };

    run(1, "degree-sequence census matches the published table", [&]() -> std::string {
        struct Row {
            int k, n;
            std::uint64_t expect;
        };
        std::vector<Row> rows = {{1, 8, 256},   {2, 5, 533},    {2, 6, 6944},
                                 {2, 7, 111850}, {3, 5, 533},   {3, 6, 42175}};
        if (extended) rows.push_back({3, 7, 5554128});
        std::ostringstream bad;
        for (const auto& row : rows) {
            std::uint64_t got = count_degree_sequences(row.n, row.k);
            if (got != row.expect)
                bad << " (k=" << row.k << ",n=" << row.n << ") got " << got << " want "
                    << row.expect << ";";
        }
        return bad.str();
    });

    run(2, "Littlewood identity for k=2, m <= 5, multiplicity-free", [&]() -> std::string {
        for (int m = 0; m <= 5; ++m) {
            SymPoly lhs = plethysm_em_ek(m, 2);
            SymPoly rhs = phi(2, m);
            if (!(lhs.coeffs == rhs.coeffs)) return "plethysm != shifted sum at m=" + std::to_string(m);
            for (const auto& [lam, c] : lhs.coeffs)
                if (c != 1) return "multiplicity above 1 at m=" + std::to_string(m);
        }
        return "";
    });

    run(3, "shifted counts bound the k=3 plethysm from below; equality for short shapes",
        [&]() -> std::string {
            for (int m = 1; m <= 3; ++m) {
                SymPoly plet = plethysm_em_ek(m, 3);
                SymPoly shifted = phi(3, m);
                for (const auto& [lam, c] : shifted.coeffs)
                    if (plet.coeff(lam) < c) return "a < a' at m=" + std::to_string(m);
                for (const auto& [lam, c] : plet.coeffs) {
                    mpz_class cp = shifted.coeff(lam);
                    if (cp > c) return "a' exceeds a at m=" + std::to_string(m);
                    if (static_cast<int>(lam.size()) <= 5 && cp != c)
                        return "equality fails for a short shape at m=" + std::to_string(m);
                }
            }
            return "";
        });

    run(4, "upsilon vanishing and alternating Schur positivity", [&]() -> std::string {
        for (int k = 1; k <= 6; ++k)
            if (!upsilon(k, 1).zero()) return "upsilon(k,1) != 0 at k=" + std::to_string(k);
        std::vector<std::pair<int, int>> range = {{2, 2}, {2, 3}, {2, 4}, {2, 5},
                                                  {3, 2}, {3, 3}, {4, 2}};
        for (auto [k, m] : range) {
            SymPoly u = sym_scale(upsilon(k, m), (m % 2 == 0) ? 1 : -1);
            if (!is_schur_positive(u).positive)
                return "(-1)^m upsilon not Schur-positive at (k,m)=(" + std::to_string(k) +
                       "," + std::to_string(m) + ")";
        }
        return "";
    });

    run(5, "the strictness battery from the hierarchy theorem", [&]() -> std::string {
        // (a) shifted but not degree-maximal
        KFamily A = shifted_generate(9, 3, {{1, 7, 8}, {2, 3, 9}, {4, 5, 6}});
        if (!is_shifted(A)) return "(a) generator family not shifted";
        Partition da = normalized_partition(degree_sequence(A));
        if (da != Partition{23, 16, 16, 12, 12, 12, 7, 7, 3}) return "(a) degree mismatch";
        Partition wit = {23, 17, 15, 13, 12, 11, 8, 6, 3};
        if (!strictly_majorizes(wit, da)) return "(a) witness does not majorize";
        KFamily W = shifted_generate(9, 3, {{1, 4, 9}, {1, 6, 8}, {2, 3, 8}, {2, 5, 7}, {3, 5, 6}});
        if (normalized_partition(degree_sequence(W)) != wit) return "(a) witness family degree mismatch";
        if (!is_degree_sequence(wit, 3)) return "(a) witness not recognized as realizable";
        if (is_degree_maximal(A).maximal) return "(a) family wrongly judged degree-maximal";
        // (b) degree-maximal degree with two realizations
        KFamily B1 = shifted_generate(9, 3, {{4, 5, 7}, {1, 6, 8}, {1, 4, 9}, {2, 4, 8}, {2, 3, 9}});
        KFamily B2 = shifted_generate(9, 3, {{4, 5, 6}, {3, 5, 7}, {3, 4, 8}, {2, 6, 7}, {1, 5, 9}});
        Partition db = {23, 19, 18, 17, 15, 12, 11, 7, 4};
        if (normalized_partition(degree_sequence(B1)) != db ||
            normalized_partition(degree_sequence(B2)) != db)
            return "(b) stated degree not achieved";
        if (B1 == B2) return "(b) families coincide";
        if (!is_degree_maximal(B1).maximal) return "(b) degree not maximal";
        // (c) CC_3 and DCC_3 hold, DCC_2 fails
        KFamily C = KFamily::from_members(5, 3, {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}});
        if (!satisfies_cc(C, 3).ok || !satisfies_dcc(C, 3).ok) return "(c) CC_3/DCC_3 fail";
        if (satisfies_dcc(C, 2).ok) return "(c) DCC_2 unexpectedly holds";
        // (d) H_7^3 threshold but not positive threshold
        KFamily H = hypersimplex_family(7, 3);
        LinearFunctional labels;
        for (int v = 1; v <= 15; ++v) labels.coefficients.push_back(v - 8);
        bool iff_positive = true;
        H.codec().for_each_subset([&](const Subset& s) {
            if ((labels.value(s) > 0) != H.has(s)) iff_positive = false;
        });
        if (!iff_positive) return "(d) label functional fails membership-iff-positive";
        if (!is_threshold(H).has_value()) return "(d) H_7^3 not recognized as threshold";
        if (is_positive_threshold(H).has_value()) return "(d) H_7^3 wrongly positive threshold";
        return "";
    });

    run(6, std::string("k=2 hierarchy collapse on [5]") + (extended ? " and [6]" : ""),
        [&]() -> std::string {
            for (int n = 5; n <= (extended ? 6 : 5); ++n) {
                std::uint64_t total = binomial(n, 2);
                std::uint64_t bad = verify_detail::count_violations(
                    std::uint64_t(1) << total, threads, [&](std::uint64_t mask) {
                        KFamily K = verify_detail::family_from_mask(n, 2, mask);
                        HierarchyReport rep = hierarchy_report(K);
                        return rep.positive_threshold == rep.threshold &&
                               rep.threshold == rep.uniquely_realizable &&
                               rep.uniquely_realizable == rep.degree_maximal &&
                               rep.degree_maximal == rep.shifted_isomorphic &&
                               rep.shifted_isomorphic == rep.vicinal_total &&
                               rep.vicinal_total == rep.rrst;
                    });
                if (bad) return std::to_string(bad) + " graphs break the collapse on [" +
                                std::to_string(n) + "]";
            }
            return "";
        });

    run(7, "shifted-geometry equivalence and fiber degrees for all 3-families on [5]",
        [&]() -> std::string {
            std::uint64_t total = binomial(5, 3);
            std::uint64_t bad = verify_detail::count_violations(
                std::uint64_t(1) << total, threads, [&](std::uint64_t mask) {
                    KFamily K = verify_detail::family_from_mask(5, 3, mask);
                    GeometryReport rep = shifted_equivalence_check(K);  // asserts 4-way equality
                    if (rep.shifted != is_shifted(K)) return false;
                    DegreeSequence d = degree_sequence(K);
                    for (int v = 1; v <= 5; ++v)
                        if (fiber_degree_vertex(K, v) != d[v - 1]) return false;
                    for (const auto& [T, cnt] : i_degree_function(K, 2))
                        if (fiber_degree_subfacet(K, T) != cnt) return false;
                    return true;
                });
            if (bad) return std::to_string(bad) + " families break the equivalence";
            return "";
        });

    run(8, "highest weight vectors are the shifted families on [5], k=2 and 3",
        [&]() -> std::string {
            for (int k : {2, 3}) {
                std::uint64_t total = binomial(5, k);
                std::uint64_t bad = verify_detail::count_violations(
                    std::uint64_t(1) << total, threads, [&](std::uint64_t mask) {
                        KFamily K = verify_detail::family_from_mask(5, k, mask);
                        return is_highest_weight(K) == is_shifted(K);
                    });
                if (bad) return std::to_string(bad) + " disagreements at k=" + std::to_string(k);
            }
            return "";
        });

    run(9, "kernel dimensions equal Kostka-inverted plethysm coefficients up to weight 8",
        [&]() -> std::string {
            for (int k = 1; k <= 8; ++k) {
                for (int m = 1; m * k <= 8; ++m) {
                    int d = m * k;
                    SymPoly plet = plethysm_em_ek(m, k);
                    for (const auto& lam : partitions_of(d, d, d)) {
                        if (!lam.empty() && lam[0] > m) continue;
                        long long dim = hw_space_dimension(lam, k, static_cast<int>(
                                                                        std::max<std::size_t>(
                                                                            lam.size(), 1)));
                        if (mpz_class(static_cast<long>(dim)) != plet.coeff(lam))
                            return "multiplicity mismatch at k=" + std::to_string(k) +
                                   ", m=" + std::to_string(m);
                    }
                    // sum rule ties the three pipelines together
                    for (const auto& mu : partitions_of(d, d, d)) {
                        if (!mu.empty() && mu[0] > m) continue;
                        mpz_class lhs = 0;
                        for (const auto& [lam, a] : plet.coeffs) lhs += a * kostka(lam, mu);
                        if (lhs != count_families_with_degree(mu, k))
                            return "sum rule fails at k=" + std::to_string(k) +
                                   ", m=" + std::to_string(m);
                    }
                }
            }
            return "";
        });

    run(10, std::string("no holes in the degree polytope for k=3, n <= ") +
                (extended ? "7" : "6"),
        [&]() -> std::string {
            for (int n = 3; n <= (extended ? 7 : 6); ++n) {
                auto rep = holes_report(n, 3);
                if (!rep.holes.empty())
                    return std::to_string(rep.holes.size()) + " holes at n=" + std::to_string(n);
            }
            return "";
        });

    run(11, "Merris-Roby / Ruch-Gutman / realizability agree for all partitions up to 12",
        [&]() -> std::string {
            for (int m = 0; m <= 6; ++m) {
                std::set<Partition> shifted_degrees;
                for (const auto& K : enumerate_shifted(2, m)) {
                    Partition d = normalized_partition(degree_sequence(K));
                    shifted_degrees.insert(d);
                }
                for (const auto& p : partitions_of(2 * m, 2 * m, 2 * m)) {
                    MerrisRobyClass mr = merris_roby(p);
                    bool graphical = mr != MerrisRobyClass::not_graphical;
                    if (graphical != ruch_gutman_graphical(p)) return "MR vs RG mismatch";
                    bool realizable = count_realizations(p, 2, 0).count > 0;
                    if (graphical != realizable) return "MR vs brute-force mismatch";
                    if ((mr == MerrisRobyClass::shifted_degree) != (shifted_degrees.count(p) == 1))
                        return "shifted-degree verdict mismatch";
                }
            }
            return "";
        });

    run(12, "both symmetry propositions for k in {1,2,3}, n <= 6", [&]() -> std::string {
        for (int k = 1; k <= 3; ++k)
            for (int n = k; n <= 6; ++n) {
                auto one = check_symmetry_one(k, n);
                if (!one.ok)
                    return "symmetry one: " + one.failure + " at k=" + std::to_string(k) +
                           ", n=" + std::to_string(n);
                auto two = check_symmetry_two(k, n);
                if (!two.ok)
                    return "symmetry two: " + two.failure + " at k=" + std::to_string(k) +
                           ", n=" + std::to_string(n);
            }
        return "";
    });

    return results;
}

}  // namespace hyperdeg
