#pragma once

#include <map>
#include <optional>

#include "hyperdeg/degseq.hpp"
#include "hyperdeg/family.hpp"
#include "hyperdeg/lp.hpp"
#include "hyperdeg/partition.hpp"

namespace hyperdeg {

struct LinearFunctional {
    std::vector<Rational> coefficients;   // one per vertex
    std::optional<Rational> threshold;    // set for the positive variant

    Rational value(const Subset& s) const {
        Rational v = 0;
        for (int i : s) v += coefficients[i - 1];
        return v;
    }

    // w(χ_S) > 0 for members and < 0 for non-members, checked exactly.
    bool separates(const KFamily& K) const {
        bool ok = true;
        K.codec().for_each_subset([&](const Subset& s) {
            if (!ok) return;
            Rational v = value(s);
            if (K.has(s) ? !(v > 0) : !(v < 0)) ok = false;
        });
        return ok;
    }

    // Positive-threshold certificate check in the Golumbic/RRST sense: all
    // c_i > 0, t > 0, every member weighs more than t and every stable set
    // (one containing no member) weighs at most t.  Monotonicity reduces the
    // stable-set side to the maximal stable sets, and implies the weight of
    // any edge-containing set exceeds t.
    bool positively_separates(const KFamily& K) const;
};

// All maximal stable sets of K: subsets of [n] containing no member, to which
// no vertex can be added without swallowing one.  DFS over vertices with
// stability pruning.
inline std::vector<Subset> maximal_stable_sets(const KFamily& K,
                                               std::uint64_t node_budget = 50'000'000ull) {
    int n = K.n();
    std::vector<Subset> members = K.members();
    std::vector<Subset> out;
    Subset cur;
    std::uint64_t nodes = 0;
    // adding v to cur creates a member iff some member containing v has its
    // remainder inside cur
    auto creates_member = [&](const Subset& base, int v) {
        for (const Subset& s : members)
            if (contains_vertex(s, v) && is_subset_of(without_vertex(s, v), base)) return true;
        return false;
    };
    auto rec = [&](auto&& self, int v) -> void {
        if (++nodes > node_budget)
            throw BudgetError("maximal_stable_sets: node budget exceeded");
        if (v > n) {
            for (int u = 1; u <= n; ++u) {
                if (contains_vertex(cur, u)) continue;
                if (!creates_member(cur, u)) return;  // extendable: not maximal
            }
            out.push_back(cur);
            return;
        }
        if (!creates_member(cur, v)) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
        self(self, v + 1);
    };
    rec(rec, 1);
    return out;
}

inline bool LinearFunctional::positively_separates(const KFamily& K) const {
    if (!threshold || !(*threshold > 0)) return false;
    for (const auto& c : coefficients)
        if (!(c > 0)) return false;
    bool ok = true;
    K.for_each_member_rank([&](std::uint64_t r) {
        if (ok && !(value(K.codec().unrank(r)) > *threshold)) ok = false;
    });
    if (!ok) return false;
    for (const Subset& X : maximal_stable_sets(K))
        if (!(value(X) <= *threshold)) return false;
    return true;
}

// Threshold recognition by exact LP feasibility.  Strictness is normalized by
// homogeneity: w(χ_S) >= 1 on K and <= -1 off K; w is split as p - q with
// p, q >= 0.
inline std::optional<LinearFunctional> is_threshold(const KFamily& K) {
    int n = K.n();
    std::vector<lp::Constraint> cons;
    K.codec().for_each_subset([&](const Subset& s) {
        lp::Constraint c;
        c.a.assign(2 * n, 0);
        for (int i : s) {
            c.a[i - 1] = 1;
            c.a[n + i - 1] = -1;
        }
        c.rel = K.has(s) ? lp::Rel::GE : lp::Rel::LE;
        c.b = K.has(s) ? 1 : -1;
        cons.push_back(std::move(c));
    });
    auto x = lp::feasible_point(2 * n, cons);
    if (!x) return std::nullopt;
    LinearFunctional w;
    w.coefficients.resize(n);
    for (int i = 0; i < n; ++i) w.coefficients[i] = (*x)[i] - (*x)[n + i];
    if (!w.separates(K))
        throw InternalCheckError("is_threshold: LP certificate fails exact verification");
    return w;
}

// Positive-threshold recognition in the Golumbic/RRST sense: positive vertex
// weights c and a positive threshold t such that a subset of [n] contains a
// member exactly when its weight exceeds t.  Monotonicity reduces this to
// c(S) > t on members and c(X) <= t on maximal stable sets; strictness is
// normalized to margin 1 (c_i >= 1, t >= 1) via c = 1+u, t = 1+v.
// Demanding the separation only on k-subsets would be vacuous: adding a large
// constant to every coordinate of a threshold functional makes it positive on
// fixed-cardinality sets.
inline std::optional<LinearFunctional> is_positive_threshold(const KFamily& K) {
    int n = K.n();
    std::vector<lp::Constraint> cons;
    K.for_each_member_rank([&](std::uint64_t r) {
        Subset s = K.codec().unrank(r);
        lp::Constraint c;
        c.a.assign(n + 1, 0);
        for (int i : s) c.a[i - 1] = 1;
        c.a[n] = -1;
        c.rel = lp::Rel::GE;
        c.b = 2 - static_cast<int>(s.size());
        cons.push_back(std::move(c));
    });
    for (const Subset& X : maximal_stable_sets(K)) {
        lp::Constraint c;
        c.a.assign(n + 1, 0);
        for (int i : X) c.a[i - 1] = 1;
        c.a[n] = -1;
        c.rel = lp::Rel::LE;
        c.b = -static_cast<int>(X.size());
        cons.push_back(std::move(c));
    }
    auto x = lp::feasible_point(n + 1, cons);
    if (!x) return std::nullopt;
    LinearFunctional w;
    w.coefficients.resize(n);
    for (int i = 0; i < n; ++i) w.coefficients[i] = (*x)[i] + 1;
    w.threshold = (*x)[n] + 1;
    if (!w.positively_separates(K))
        throw InternalCheckError(
            "is_positive_threshold: LP certificate fails exact verification");
    return w;
}

// H_m^k: k-subsets of {-m,...,m} (relabeled to [2m+1]) with positive label sum.
inline KFamily hypersimplex_family(int m, int k) {
    if (m < 1 || k < 1) throw DomainError("hypersimplex_family: need m, k >= 1");
    int n = 2 * m + 1;
    KFamily K(n, k);
    K.codec().for_each_subset([&](const Subset& s) {
        long long sum = 0;
        for (int v : s) sum += v - m - 1;
        if (sum > 0) K.add(s);
    });
    return K;
}

// Chvátal–Hammer weights for a shifted graph, by peeling: the top vertex when
// isolated (t <- 2t+1, a_v <- 1, others doubled), else vertex 1, which is a
// cone (a_v <- t).  All-integer by construction.
inline LinearFunctional chvatal_hammer_weights(const KFamily& K) {
    if (K.k() != 2) throw DomainError("chvatal_hammer_weights: k must be 2");
    if (!is_shifted(K)) throw DomainError("chvatal_hammer_weights: family must be shifted");

    auto rec = [&](auto&& self, const KFamily& G) -> std::pair<std::vector<mpz_class>, mpz_class> {
        int n = G.n();
        if (n == 0) return {{}, 1};
        DegreeSequence d = degree_sequence(G);
        if (d[n - 1] == 0) {
            // vertex n is isolated
            KFamily H(n - 1, 2);
            G.for_each_member_rank([&](std::uint64_t r) { H.add(G.codec().unrank(r)); });
            auto [a, t] = self(self, H);
            for (auto& ai : a) ai *= 2;
            a.push_back(1);
            return {a, 2 * t + 1};
        }
        // some edge touches n, so vertex 1 is a cone over the rest
        KFamily H(n - 1, 2);
        G.for_each_member_rank([&](std::uint64_t r) {
            Subset s = G.codec().unrank(r);
            if (s[0] == 1) return;
            H.add({s[0] - 1, s[1] - 1});
        });
        auto [a, t] = self(self, H);
        std::vector<mpz_class> full;
        full.reserve(n);
        full.push_back(t);
        for (auto& ai : a) full.push_back(ai);
        return {full, t};
    };

    auto [a, t] = rec(rec, K);
    LinearFunctional w;
    for (auto& ai : a) w.coefficients.push_back(Rational(ai));
    w.threshold = Rational(t);
    if (!w.positively_separates(K))
        throw InternalCheckError("chvatal_hammer_weights: certificate fails verification");
    return w;
}

struct RealizationCount {
    long long count = 0;          // realizations found (a lower bound if capped)
    bool capped = false;          // true when the search stopped at cap+1
    std::vector<KFamily> found;   // up to `collect` realizations, in search order
};

// Number of k-families on [n] with degree vector exactly d (n = d.size()),
// by backtracking over members in colex order.  With cap >= 0 the search
// stops once count exceeds cap.
inline RealizationCount count_realizations(const std::vector<int>& d, int k,
                                           long long cap = -1, int collect = 2,
                                           std::uint64_t node_budget = 400'000'000ull) {
    for (int x : d)
        if (x < 0) throw DomainError("count_realizations: negative degree");
    if (k < 1) throw DomainError("count_realizations: need k >= 1");
    int n = static_cast<int>(d.size());
    RealizationCount res;
    long long total = vector_sum(d);
    if (total % k != 0) return res;  // no family can realize it
    int m = static_cast<int>(total / k);
    KFamily fam(n, k);
    std::uint64_t N = fam.codec().count();
    std::vector<Subset> table(N);
    for (std::uint64_t r = 0; r < N; ++r) table[r] = fam.codec().unrank(r);
    std::vector<int> residual(d);
    std::uint64_t nodes = 0;

    auto rec = [&](auto&& self, std::uint64_t next_rank, int rem) -> bool {
        if (++nodes > node_budget) throw BudgetError("count_realizations: node budget exceeded");
        if (rem == 0) {
            ++res.count;
            if (static_cast<int>(res.found.size()) < collect) res.found.push_back(fam);
            return cap >= 0 && res.count > cap;
        }
        int vmin = 0;
        while (vmin < n && residual[vmin] == 0) ++vmin;
        if (vmin == n) return false;                    // degrees consumed but rem > 0
        if (residual[vmin] > rem) return false;         // cannot cover the lowest vertex
        long long capacity = 0;
        for (int v = vmin; v < n; ++v) capacity += std::min(residual[v], rem);
        if (capacity < static_cast<long long>(k) * rem) return false;
        bool must_hit = residual[vmin] == rem;
        for (std::uint64_t t = next_rank; t < N; ++t) {
            const Subset& s = table[t];
            if (must_hit && s[0] != vmin + 1) continue;
            bool usable = true;
            for (int v : s)
                if (residual[v - 1] == 0) {
                    usable = false;
                    break;
                }
            if (!usable) continue;
            for (int v : s) --residual[v - 1];
            fam.add_rank(t);
            bool stop = self(self, t + 1, rem - 1);
            fam.remove_rank(t);
            for (int v : s) ++residual[v - 1];
            if (stop) return true;
        }
        return false;
    };
    rec(rec, 0, m);
    if (cap >= 0 && res.count > cap) res.capped = true;
    return res;
}

inline std::vector<KFamily> realizations(const std::vector<int>& d, int k, int limit) {
    auto rc = count_realizations(d, k, limit, limit);
    return rc.found;
}

struct DegreeMaximalResult {
    bool maximal = true;
    std::optional<Partition> witness_degree;  // realizable partition strictly above
    std::optional<KFamily> witness;           // a realization of it
};

// Degree-maximality of the sorted degree sequence (the isomorphism-invariant
// question).  Since realizability is downward closed under dominance, it is
// enough to test the partitions one box-move above d(K).
inline DegreeMaximalResult is_degree_maximal(const KFamily& K) {
    DegreeMaximalResult res;
    DegreeSequence d = degree_sequence(K);
    Partition p = normalized_partition(d);
    int bound = static_cast<int>(binomial(K.n() - 1, K.k() - 1));
    for (const auto& q : dominance_up_moves(p, bound)) {
        auto dom = find_dominating_shifted(q, K.k());
        if (dom) {
            res.maximal = false;
            res.witness_degree = q;
            res.witness = realize_majorized(*dom, q);
            return res;
        }
    }
    return res;
}

struct CancellationResult {
    bool ok = true;
    std::vector<Subset> member_tuple;     // the violating A-tuple when !ok
    std::vector<Subset> nonmember_tuple;  // the violating B-tuple when !ok
};

namespace detail {

template <bool Distinct>
CancellationResult cancellation_search(const KFamily& K, int t, std::uint64_t node_budget) {
    if (t < 1) throw DomainError("cancellation condition: need t >= 1");
    std::vector<std::uint64_t> members, nonmembers;
    for (std::uint64_t r = 0; r < K.codec().count(); ++r)
        (K.has_rank(r) ? members : nonmembers).push_back(r);

    std::vector<Subset> table(K.codec().count());
    for (std::uint64_t r = 0; r < K.codec().count(); ++r) table[r] = K.codec().unrank(r);

    std::uint64_t nodes = 0;
    auto bump = [&]() {
        if (++nodes > node_budget) throw BudgetError("cancellation search: budget exceeded");
    };

    // sum vector -> one tuple achieving it from the member side
    std::map<std::vector<int>, std::vector<std::uint64_t>> sums;
    std::vector<int> sum(K.n(), 0);
    std::vector<std::uint64_t> tuple;
    auto emit_member = [&](auto&& self, std::size_t start) -> void {
        if (tuple.size() == static_cast<std::size_t>(t)) {
            bump();
            sums.try_emplace(sum, tuple);
            return;
        }
        for (std::size_t i = start; i < members.size(); ++i) {
            tuple.push_back(members[i]);
            for (int v : table[members[i]]) ++sum[v - 1];
            self(self, Distinct ? i + 1 : i);
            for (int v : table[members[i]]) --sum[v - 1];
            tuple.pop_back();
        }
    };
    emit_member(emit_member, 0);

    CancellationResult res;
    if (sums.empty()) return res;
    auto scan_nonmember = [&](auto&& self, std::size_t start) -> bool {
        if (tuple.size() == static_cast<std::size_t>(t)) {
            bump();
            auto it = sums.find(sum);
            if (it == sums.end()) return false;
            for (auto r : it->second) res.member_tuple.push_back(table[r]);
            for (auto r : tuple) res.nonmember_tuple.push_back(table[r]);
            res.ok = false;
            return true;
        }
        for (std::size_t i = start; i < nonmembers.size(); ++i) {
            tuple.push_back(nonmembers[i]);
            for (int v : table[nonmembers[i]]) ++sum[v - 1];
            bool hit = self(self, Distinct ? i + 1 : i);
            for (int v : table[nonmembers[i]]) --sum[v - 1];
            tuple.pop_back();
            if (hit) return true;
        }
        return false;
    };
    scan_nonmember(scan_nonmember, 0);
    return res;
}

}  // namespace detail

// CC_t: no t-multiset of members shares its characteristic-vector sum with a
// t-multiset of non-members.
inline CancellationResult satisfies_cc(const KFamily& K, int t,
                                       std::uint64_t node_budget = 50'000'000ull) {
    return detail::cancellation_search<false>(K, t, node_budget);
}

// DCC_t: as CC_t but with t distinct sets on each side (Chow trade-robustness).
inline CancellationResult satisfies_dcc(const KFamily& K, int t,
                                        std::uint64_t node_budget = 50'000'000ull) {
    return detail::cancellation_search<true>(K, t, node_budget);
}

// Shared with the zonotope module: d(K) is a vertex of the degree polytope iff
// d has a unique realization and that realization is threshold.
inline bool degree_is_polytope_vertex(const std::vector<int>& d, int k) {
    auto rc = count_realizations(d, k, 1, 1);
    if (rc.count != 1) return false;
    return is_threshold(rc.found[0]).has_value();
}

struct HierarchyReport {
    bool positive_threshold = false;
    bool threshold = false;
    bool zonotope_vertex = false;
    bool uniquely_realizable = false;
    bool degree_maximal = false;  // up to isomorphism (sorted degree sequence)
    bool vicinal_total = false;
    bool rrst = false;
    bool shifted_isomorphic = false;

    std::optional<LinearFunctional> threshold_certificate;
    std::optional<LinearFunctional> positive_certificate;
    std::optional<KFamily> second_realization;     // when not uniquely realizable
    std::optional<Partition> majorizing_degree;    // when not degree-maximal
    std::vector<RrstViolation> rrst_witnesses;     // when RRST fails
};

inline HierarchyReport hierarchy_report(const KFamily& K) {
    HierarchyReport rep;

    rep.positive_certificate = is_positive_threshold(K);
    rep.positive_threshold = rep.positive_certificate.has_value();
    rep.threshold_certificate = is_threshold(K);
    rep.threshold = rep.threshold_certificate.has_value();

    DegreeSequence d = degree_sequence(K);
    auto rc = count_realizations(d, K.k(), 1, 2);
    rep.uniquely_realizable = rc.count == 1;
    if (rc.count > 1)
        rep.second_realization = rc.found[0] == K ? rc.found[1] : rc.found[0];
    rep.zonotope_vertex = degree_is_polytope_vertex(d, K.k());

    auto dm = is_degree_maximal(K);
    rep.degree_maximal = dm.maximal;
    rep.majorizing_degree = dm.witness_degree;

    rep.vicinal_total = is_total(vicinal_preorder(K));
    rep.rrst_witnesses = rrst_violations(K);
    rep.rrst = rep.rrst_witnesses.empty();
    rep.shifted_isomorphic = rep.vicinal_total;

    // the implication chain and the proven equivalences must hold
    bool chain = (!rep.positive_threshold || rep.threshold) &&
                 (!rep.threshold || rep.uniquely_realizable) &&
                 (!rep.uniquely_realizable || rep.degree_maximal) &&
                 (!rep.degree_maximal || rep.shifted_isomorphic);
    bool equiv = (rep.threshold == rep.zonotope_vertex) &&
                 (rep.vicinal_total == rep.rrst) &&
                 (rep.shifted_isomorphic == rep.vicinal_total);
    if (!chain || !equiv)
        throw InternalCheckError("hierarchy_report: implication chain violated");
    return rep;
}

}  // namespace hyperdeg
