#pragma once

#include <map>
#include <set>

#include "hyperdeg/family.hpp"

namespace hyperdeg {

enum class CellDomain {
    vertex,    // C([n-1],k-1) x [1,n]
    subfacet,  // C([n],k-1) x [k,n]
};

// A finite set of integer points in Z^k, tagged with the box domain it lives
// in.  Cells are raw k-tuples; the triangulation maps are clearest on
// coordinates and the sets are small (k|K|).
struct CellSet {
    int n = 0, k = 0;
    CellDomain domain = CellDomain::subfacet;
    std::set<std::vector<int>> cells;

    bool in_domain(const std::vector<int>& x) const {
        if (static_cast<int>(x.size()) != k) return false;
        int prefix_max = domain == CellDomain::vertex ? n - 1 : n;
        for (int i = 0; i + 1 < k; ++i) {
            if (x[i] < 1 || x[i] > prefix_max) return false;
            if (i > 0 && x[i - 1] >= x[i]) return false;
        }
        int lo = domain == CellDomain::vertex ? 1 : k;
        return x[k - 1] >= lo && x[k - 1] <= n;
    }
};

namespace detail {

// f_j deletes the j-th coordinate and appends it at the end.
inline std::vector<int> f_j(const Subset& s, int j) {
    std::vector<int> out;
    out.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i)
        if (static_cast<int>(i) != j - 1) out.push_back(s[i]);
    out.push_back(s[j - 1]);
    return out;
}

inline std::vector<int> f_vert(const Subset& s, int j) {
    int k = static_cast<int>(s.size());
    std::vector<int> x = f_j(s, j);
    for (int p = j; p <= k - 1; ++p) --x[p - 1];  // positions j..k-1
    return x;
}

inline std::vector<int> f_subf(const Subset& s, int j) {
    int k = static_cast<int>(s.size());
    std::vector<int> x = f_j(s, j);
    x[k - 1] += k - j;
    return x;
}

// Sector of a subfacet-domain cell: the unique j with x in σ_j^subf.
inline int subf_sector(const std::vector<int>& x) {
    int k = static_cast<int>(x.size());
    int found = 0;
    for (int j = k; j >= 1; --j) {
        bool ok;
        if (j == k) {
            ok = k == 1 || x[k - 2] < x[k - 1];
        } else {
            int z = x[k - 1] - (k - j);
            int below = (j >= 2) ? x[j - 2] : 0;
            ok = below < z && z < x[j - 1];
        }
        if (ok) {
            if (found) throw InternalCheckError("subfacet cell lies in two sectors");
            found = j;
        }
    }
    if (!found) throw InternalCheckError("subfacet cell lies in no sector");
    return found;
}

inline Subset subf_invert(const std::vector<int>& x, int j) {
    int k = static_cast<int>(x.size());
    Subset s;
    s.reserve(k);
    for (int i = 0; i < j - 1; ++i) s.push_back(x[i]);
    s.push_back(x[k - 1] - (k - j));
    for (int i = j - 1; i < k - 1; ++i) s.push_back(x[i]);
    return s;
}

}  // namespace detail

// π^vert(K): disjoint union of the k prism-triangulation images of K in
// C([n-1],k-1) x [1,n].
inline CellSet vertex_decomposition(const KFamily& K) {
    CellSet c;
    c.n = K.n();
    c.k = K.k();
    c.domain = CellDomain::vertex;
    K.for_each_member_rank([&](std::uint64_t r) {
        Subset s = K.codec().unrank(r);
        for (int j = 1; j <= K.k(); ++j) {
            auto x = detail::f_vert(s, j);
            if (!c.in_domain(x))
                throw InternalCheckError("vertex decomposition left its box domain");
            if (!c.cells.insert(x).second)
                throw InternalCheckError("vertex decomposition images collide");
        }
    });
    return c;
}

// π^subf(K): disjoint union of the k images in C([n],k-1) x [k,n].
inline CellSet subfacet_decomposition(const KFamily& K) {
    CellSet c;
    c.n = K.n();
    c.k = K.k();
    c.domain = CellDomain::subfacet;
    K.for_each_member_rank([&](std::uint64_t r) {
        Subset s = K.codec().unrank(r);
        for (int j = 1; j <= K.k(); ++j) {
            auto x = detail::f_subf(s, j);
            if (!c.in_domain(x))
                throw InternalCheckError("subfacet decomposition left its box domain");
            if (!c.cells.insert(x).second)
                throw InternalCheckError("subfacet decomposition images collide");
        }
    });
    return c;
}

// Lowering any coordinate of any cell by one, when the result stays in the
// box domain, must land in the set.
inline bool is_componentwise_ideal(const CellSet& c) {
    for (const auto& x : c.cells) {
        for (int i = 0; i < c.k; ++i) {
            std::vector<int> y = x;
            --y[i];
            if (c.in_domain(y) && !c.cells.count(y)) return false;
        }
    }
    return true;
}

// Pushes cells down in the last coordinate: each (k-1)-set fiber keeps its
// cardinality but its last coordinates become an initial segment of [k,n].
inline CellSet pushdown(const CellSet& c) {
    if (c.domain != CellDomain::subfacet)
        throw DomainError("pushdown: subfacet-domain cell sets only");
    std::map<std::vector<int>, int> fiber_size;
    for (const auto& x : c.cells)
        ++fiber_size[std::vector<int>(x.begin(), x.end() - 1)];
    CellSet out;
    out.n = c.n;
    out.k = c.k;
    out.domain = CellDomain::subfacet;
    for (const auto& [prefix, cnt] : fiber_size) {
        for (int t = 0; t < cnt; ++t) {
            std::vector<int> x = prefix;
            x.push_back(c.k + t);
            if (!out.in_domain(x))
                throw InternalCheckError("pushdown produced a cell outside the domain");
            out.cells.insert(x);
        }
    }
    return out;
}

// α_j := (f_j^subf)^{-1}(λ ∩ σ_j^subf) for λ the pushed-down subfacet
// decomposition; one k-family per sector.
inline std::vector<KFamily> sector_families(const KFamily& K) {
    CellSet lambda = pushdown(subfacet_decomposition(K));
    std::vector<KFamily> alphas(K.k(), KFamily(K.n(), K.k()));
    for (const auto& x : lambda.cells) {
        int j = detail::subf_sector(x);
        Subset s = detail::subf_invert(x, j);
        if (!K.codec().valid_subset(s))
            throw InternalCheckError("sector pullback is not a k-subset");
        alphas[j - 1].add(s);
    }
    return alphas;
}

struct GeometryReport {
    bool shifted = false;
    bool subfacet_ideal = false;
    bool vertex_ideal = false;
    bool sectors_match = false;          // all α_j equal K
    std::vector<int> mismatched_sectors;  // the j with α_j != K
};

// The four equivalent conditions; their agreement is asserted.
inline GeometryReport shifted_equivalence_check(const KFamily& K) {
    GeometryReport rep;
    rep.shifted = is_shifted(K);
    rep.subfacet_ideal = is_componentwise_ideal(subfacet_decomposition(K));
    rep.vertex_ideal = is_componentwise_ideal(vertex_decomposition(K));
    auto alphas = sector_families(K);
    for (int j = 1; j <= K.k(); ++j)
        if (!(alphas[j - 1] == K)) rep.mismatched_sectors.push_back(j);
    rep.sectors_match = rep.mismatched_sectors.empty();
    if (rep.shifted != rep.subfacet_ideal || rep.shifted != rep.vertex_ideal ||
        rep.shifted != rep.sectors_match)
        throw InternalCheckError("shifted-geometry equivalence violated");
    return rep;
}

// |ρ_1^{-1}(i) ∩ π^vert(K)|: cells with last coordinate i.
inline long long fiber_degree_vertex(const KFamily& K, int i) {
    if (i < 1 || i > K.n()) throw DomainError("fiber_degree_vertex: vertex out of range");
    CellSet c = vertex_decomposition(K);
    long long cnt = 0;
    for (const auto& x : c.cells)
        if (x[c.k - 1] == i) ++cnt;
    return cnt;
}

// |ρ_{k-1}^{-1}(T) ∩ π^subf(K)|: cells whose first k-1 coordinates are T.
inline long long fiber_degree_subfacet(const KFamily& K, const Subset& T) {
    SubsetCodec dom(K.n(), K.k() - 1);
    dom.check_subset(T);
    CellSet c = subfacet_decomposition(K);
    long long cnt = 0;
    for (const auto& x : c.cells)
        if (std::equal(T.begin(), T.end(), x.begin())) ++cnt;
    return cnt;
}

struct IdealDominanceResult {
    bool ok = true;
    std::vector<Subset> violating_ideal;  // members of the first failing ideal
};

// A is dominated by B when, for every componentwise order ideal I of
// C([n],k-1), the subfacet degrees of A summed over I stay below those of B.
inline IdealDominanceResult generalized_weak_majorizes(const KFamily& A, const KFamily& B,
                                                       std::uint64_t max_poset = 20) {
    if (A.n() != B.n() || A.k() != B.k())
        throw DomainError("generalized_weak_majorizes: mismatched families");
    int n = A.n(), k = A.k();
    if (binomial(n, k - 1) > max_poset)
        throw BudgetError("generalized_weak_majorizes: C(n,k-1) exceeds the ideal budget");
    auto da = i_degree_function(A, k - 1);
    auto db = i_degree_function(B, k - 1);
    IdealDominanceResult res;
    for_each_shifted_on(n, k - 1, [&](const KFamily& ideal) {
        if (!res.ok) return;
        long long sa = 0, sb = 0;
        ideal.for_each_member_rank([&](std::uint64_t r) {
            Subset T = ideal.codec().unrank(r);
            sa += da.at(T);
            sb += db.at(T);
        });
        if (sa > sb) {
            res.ok = false;
            res.violating_ideal = ideal.members();
        }
    });
    return res;
}

}  // namespace hyperdeg
