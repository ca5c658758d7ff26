#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>

#include "hyperdeg/family.hpp"
#include "hyperdeg/partition.hpp"

namespace hyperdeg {

// All shifted families on [n], grouped by size, with degree partitions
// deduplicated.  Built once per (n,k) and memoized; this is the workhorse
// behind realizability tests and the degree-sequence census.
struct ShiftedCatalog {
    int n = 0, k = 0;
    struct Entry {
        Partition degree;
        KFamily representative;  // some shifted family with this degree
        long long count = 0;     // number of shifted families with this degree
    };
    std::vector<std::vector<Entry>> by_size;  // index = family size m

    const std::vector<Entry>& entries(int m) const {
        static const std::vector<Entry> none;
        if (m < 0 || m >= static_cast<int>(by_size.size())) return none;
        return by_size[m];
    }
};

inline const ShiftedCatalog& shifted_catalog(int n, int k,
                                             std::uint64_t max_families = 100'000'000ull) {
    static std::map<std::pair<int, int>, std::unique_ptr<ShiftedCatalog>> memo;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(n, k);
    auto it = memo.find(key);
    if (it != memo.end()) return *it->second;

    auto cat = std::make_unique<ShiftedCatalog>();
    cat->n = n;
    cat->k = k;
    std::uint64_t total = binomial(n, k);
    cat->by_size.resize(total + 1);
    std::vector<std::map<Partition, std::pair<KFamily, long long>>> buckets(total + 1);
    for_each_shifted_on(n, k, [&](const KFamily& K) {
        Partition deg = degree_sequence(K);
        while (!deg.empty() && deg.back() == 0) deg.pop_back();
        auto& slot = buckets[K.size()];
        auto ins = slot.try_emplace(deg, K, 0);
        ++ins.first->second.second;
    }, max_families);
    for (std::uint64_t m = 0; m <= total; ++m)
        for (auto& [deg, rep] : buckets[m])
            cat->by_size[m].push_back({deg, rep.first, rep.second});
    auto& ref = *cat;
    memo[key] = std::move(cat);
    return ref;
}

// Some shifted family whose degree sequence majorizes d, if one exists.
// Realizability reduces to this: d is a degree sequence iff such a family
// exists, and then reverse swings walk it down to d.
inline std::optional<KFamily> find_dominating_shifted(const std::vector<int>& d, int k,
                                                      std::uint64_t max_families =
                                                          100'000'000ull) {
    for (int x : d)
        if (x < 0) throw DomainError("degree entries must be nonnegative");
    long long total = vector_sum(d);
    if (k < 1) throw DomainError("need k >= 1");
    if (total % k != 0) throw DomainError("degree sum must be divisible by k");
    Partition sorted = normalized_partition(d);
    int m = static_cast<int>(total / k);
    if (m == 0) return KFamily(std::max<int>(1, sorted.size()), k);
    int p = static_cast<int>(sorted.size());
    // a family whose degree majorizes d has at most p positive degrees, and a
    // shifted family's support is an initial segment, so [p] suffices
    const ShiftedCatalog& cat = shifted_catalog(p, k, max_families);
    for (const auto& e : cat.entries(m))
        if (weight(e.degree) == total && majorizes(e.degree, sorted)) return e.representative;
    return std::nullopt;
}

inline bool is_degree_sequence(const std::vector<int>& d, int k,
                               std::uint64_t max_families = 100'000'000ull) {
    return find_dominating_shifted(d, k, max_families).has_value();
}

// The distinct degree partitions of k-families on [n], one weight class at a
// time: shifted degrees on [n] closed downward under single-box dominance
// moves.  The census count sums rearrangement counts over these partitions.
template <typename F>
void for_each_degree_partition(int n, int k, F&& f,
                               std::uint64_t max_families = 100'000'000ull) {
    if (n < 0 || k < 1) throw DomainError("degree census: need n >= 0, k >= 1");
    const ShiftedCatalog& cat = shifted_catalog(n, k, max_families);
    for (std::size_t m = 0; m < cat.by_size.size(); ++m) {
        std::set<Partition> visited;
        std::vector<Partition> stack;
        for (const auto& e : cat.by_size[m])
            if (visited.insert(e.degree).second) stack.push_back(e.degree);
        while (!stack.empty()) {
            Partition p = std::move(stack.back());
            stack.pop_back();
            for (auto& q : dominance_down_moves(p, n))
                if (visited.insert(q).second) stack.push_back(q);
        }
        for (const auto& p : visited) f(p);
    }
}

// Number of distinct degree sequences of k-families on [n] (sequences, not
// partitions: every rearrangement counts).
inline std::uint64_t count_degree_sequences(int n, int k,
                                            std::uint64_t max_families = 100'000'000ull) {
    mpz_class total = 0;
    for_each_degree_partition(
        n, k, [&](const Partition& p) { total += rearrangement_count(p, n); }, max_families);
    if (!total.fits_ulong_p())
        throw BudgetError("count_degree_sequences: count exceeds 64 bits");
    return total.get_ui();
}

// Ruch–Gutman test: sum_{i<=t} (d_i + 1) <= sum_{i<=t} d^T_i for every prefix
// up to the trace.
inline bool ruch_gutman_graphical(const Partition& d) {
    if (!is_partition(d)) throw DomainError("ruch_gutman_graphical: not a partition");
    if (weight(d) % 2 != 0) throw DomainError("ruch_gutman_graphical: weight must be even");
    Partition dT = conjugate(d);
    int t = trace(d);
    long long lhs = 0, rhs = 0;
    for (int i = 0; i < t; ++i) {
        lhs += d[i] + 1;
        rhs += dT[i];
        if (lhs > rhs) return false;
    }
    return true;
}

enum class MerrisRobyClass { not_graphical, graphical, shifted_degree };

// Merris–Roby classification via the diagonal cut: graphical iff beta weakly
// majorizes alpha; a shifted-family degree iff they are equal.
inline MerrisRobyClass merris_roby(const Partition& d) {
    if (!is_partition(d)) throw DomainError("merris_roby: not a partition");
    if (weight(d) % 2 != 0) throw DomainError("merris_roby: weight must be even");
    auto [alpha, beta] = alpha_beta(d);
    if (!weakly_majorizes(beta, alpha)) return MerrisRobyClass::not_graphical;
    if (alpha == beta) return MerrisRobyClass::shifted_degree;
    return MerrisRobyClass::graphical;
}

// Rebuilds a shifted family from its subfacet-degree function.  For shifted K
// and a (k-1)-set T, the link N_K(T) is a shifted 1-family on [n] \ T, i.e.
// the f(T) smallest vertices outside T.
inline KFamily reconstruct_shifted_from_subfacet_degrees(
    const std::map<Subset, long long>& f, int n, int k) {
    if (k < 1 || n < 0) throw DomainError("reconstruct: need k >= 1, n >= 0");
    KFamily K(n, k);
    SubsetCodec dom(n, k - 1);
    for (const auto& [T, cnt] : f) {
        if (!dom.valid_subset(T))
            throw DomainError("reconstruct: key is not a (k-1)-subset of [n]");
        if (cnt < 0 || cnt > n - (k - 1))
            throw DomainError("reconstruct: not a shifted subfacet-degree function (bad count)");
        long long taken = 0;
        for (int v = 1; v <= n && taken < cnt; ++v) {
            if (contains_vertex(T, v)) continue;
            K.add(with_vertex(T, v));
            ++taken;
        }
    }
    if (!is_shifted(K))
        throw DomainError("reconstruct: not a shifted subfacet-degree function (not shifted)");
    auto g = i_degree_function(K, k - 1);
    for (auto& [T, cnt] : g) {
        auto it = f.find(T);
        long long want = (it == f.end()) ? 0 : it->second;
        if (cnt != want)
            throw DomainError(
                "reconstruct: not a shifted subfacet-degree function (degree mismatch)");
    }
    return K;
}

}  // namespace hyperdeg
