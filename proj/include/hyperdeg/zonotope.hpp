#pragma once

#include "hyperdeg/classify.hpp"
#include "hyperdeg/degseq.hpp"
#include "hyperdeg/lp.hpp"

namespace hyperdeg {

// The degree polytope D_n(k): Minkowski sum of the segments [0, χ_S] over all
// k-subsets S of [n].
struct ZonotopeSpec {
    int n = 0, k = 0;
    ZonotopeSpec(int n_, int k_) : n(n_), k(k_) {
        if (n < 0 || k < 1 || k > n) throw DomainError("ZonotopeSpec: need 1 <= k <= n");
    }
};

// Exact membership: d ∈ D_n(k) iff the transportation system
// { d = Σ λ_S χ_S, 0 <= λ_S <= 1 } is feasible over the rationals.
inline bool zonotope_membership(const std::vector<int>& d, const ZonotopeSpec& spec) {
    if (static_cast<int>(d.size()) != spec.n)
        throw DomainError("zonotope_membership: length mismatch");
    for (int x : d)
        if (x < 0) throw DomainError("zonotope_membership: entries must be nonnegative");
    SubsetCodec codec(spec.n, spec.k);
    int nvars = static_cast<int>(codec.count());
    std::vector<lp::Constraint> cons;
    for (int i = 0; i < spec.n; ++i) {
        lp::Constraint c;
        c.a.assign(nvars, 0);
        c.rel = lp::Rel::EQ;
        c.b = d[i];
        cons.push_back(std::move(c));
    }
    {
        std::uint64_t r = 0;
        codec.for_each_subset([&](const Subset& s) {
            for (int v : s) cons[v - 1].a[r] = 1;
            ++r;
        });
    }
    for (int j = 0; j < nvars; ++j) {
        lp::Constraint box;
        box.a.assign(nvars, 0);
        box.a[j] = 1;
        box.rel = lp::Rel::LE;
        box.b = 1;
        cons.push_back(std::move(box));
    }
    return lp::feasible_point(nvars, cons).has_value();
}

// d is a vertex of D_n(k) iff it has a unique realization and that
// realization is threshold.
inline bool zonotope_is_vertex(const std::vector<int>& d, const ZonotopeSpec& spec) {
    if (static_cast<int>(d.size()) != spec.n)
        throw DomainError("zonotope_is_vertex: length mismatch");
    return degree_is_polytope_vertex(d, spec.k);
}

struct KorenResult {
    bool ok = true;
    Subset S, T;  // violating pair when !ok
};

// Koren's linear system for k=2: for all disjoint S, T not both empty,
// Σ_{i∈S} d_i − Σ_{j∈T} d_j <= |S|(n−1−|T|).
inline KorenResult koren_system(const std::vector<int>& d, int n) {
    if (static_cast<int>(d.size()) != n) throw DomainError("koren_system: length mismatch");
    if (n > 15) throw BudgetError("koren_system: n too large for the 3^n scan");
    KorenResult res;
    std::vector<int> assign(n, 0);  // 0 = neither, 1 = S, 2 = T
    auto rec = [&](auto&& self, int v) -> bool {
        if (v == n) {
            long long sum_s = 0, sum_t = 0, cs = 0, ct = 0;
            for (int i = 0; i < n; ++i) {
                if (assign[i] == 1) {
                    sum_s += d[i];
                    ++cs;
                } else if (assign[i] == 2) {
                    sum_t += d[i];
                    ++ct;
                }
            }
            if (cs == 0 && ct == 0) return false;
            if (sum_s - sum_t > cs * (n - 1 - ct)) {
                res.ok = false;
                for (int i = 0; i < n; ++i) {
                    if (assign[i] == 1) res.S.push_back(i + 1);
                    if (assign[i] == 2) res.T.push_back(i + 1);
                }
                return true;
            }
            return false;
        }
        for (int c = 0; c < 3; ++c) {
            assign[v] = c;
            if (self(self, v + 1)) return true;
        }
        return false;
    };
    rec(rec, 0);
    return res;
}

struct HolesReport {
    long long candidates = 0;   // weakly decreasing lattice points scanned
    long long realizable = 0;   // of those, degree sequences
    std::vector<std::vector<int>> holes;  // members of D_n(k) that are not degree sequences
};

// Scans every weakly decreasing d with entries in [0, C(n-1,k-1)] and
// k-divisible sum; reports those inside the polytope that no family realizes.
// Each reported vector stands for its whole rearrangement orbit.
inline HolesReport holes_report(int n, int k, std::uint64_t max_families = 100'000'000ull) {
    ZonotopeSpec spec(n, k);
    int bound = static_cast<int>(binomial(n - 1, k - 1));
    HolesReport rep;
    for (long long w = 0; w <= static_cast<long long>(bound) * n; w += k) {
        for (const auto& p : partitions_of(static_cast<int>(w), n, bound)) {
            ++rep.candidates;
            std::vector<int> d(p);
            d.resize(n, 0);
            if (is_degree_sequence(d, k, max_families)) {
                ++rep.realizable;
                continue;
            }
            if (zonotope_membership(d, spec)) rep.holes.push_back(d);
        }
    }
    return rep;
}

}  // namespace hyperdeg
