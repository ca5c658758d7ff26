#pragma once

#include <map>

#include "hyperdeg/classify.hpp"
#include "hyperdeg/family.hpp"
#include "hyperdeg/partition.hpp"

namespace hyperdeg {

// Integer combination of wedge basis vectors E_K, indexed by k-families of a
// fixed size m on [n].  The canonical sign convention wedges the members of K
// in colex order.
struct ExteriorVector {
    int n = 0, k = 0, m = 0;
    std::map<KFamily, mpz_class> terms;

    bool zero() const { return terms.empty(); }

    void accumulate(const KFamily& K, const mpz_class& c) {
        auto it = terms.try_emplace(K, 0).first;
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
};

inline ExteriorVector basis_vector(const KFamily& K) {
    ExteriorVector v;
    v.n = K.n();
    v.k = K.k();
    v.m = K.size();
    v.terms[K] = 1;
    return v;
}

// Weight of a single wedge basis vector: the degree sequence of its family.
inline DegreeSequence weight_of(const ExteriorVector& v) {
    if (v.terms.size() != 1)
        throw DomainError("weight_of: not a single basis term");
    return degree_sequence(v.terms.begin()->first);
}

// The raising operator A_{i,j} (i < j) acting through the Leibniz rule.  On a
// basis term E_K it replaces one member S ∋ j, i ∉ S by S' = S \ {j} ∪ {i};
// the term vanishes if S' is already a member.  Sign: (-1)^|S ∩ (i,j)| from
// moving e_i into sorted position inside e_S, times the parity of the number
// of members passed when the modified factor moves to its colex slot.
inline ExteriorVector raising(int i, int j, const ExteriorVector& v) {
    if (!(1 <= i && i < j)) throw DomainError("raising: need 1 <= i < j");
    ExteriorVector out;
    out.n = v.n;
    out.k = v.k;
    out.m = v.m;
    for (const auto& [K, coef] : v.terms) {
        if (j > K.n()) continue;
        std::vector<std::uint64_t> member_ranks;
        K.for_each_member_rank([&](std::uint64_t r) { member_ranks.push_back(r); });
        for (std::uint64_t r : member_ranks) {
            Subset s = K.codec().unrank(r);
            if (!contains_vertex(s, j) || contains_vertex(s, i)) continue;
            Subset repl = with_vertex(without_vertex(s, j), i);
            if (K.has(repl)) continue;
            int between_vertices = 0;
            for (int x : s)
                if (i < x && x < j) ++between_vertices;
            std::uint64_t r2 = K.codec().rank(repl);
            int passed_members = 0;
            for (std::uint64_t t : member_ranks)
                if (r2 < t && t < r) ++passed_members;
            int sign = ((between_vertices + passed_members) % 2 == 0) ? 1 : -1;
            KFamily K2 = K;
            K2.remove_rank(r);
            K2.add_rank(r2);
            out.accumulate(K2, coef * sign);
        }
    }
    return out;
}

// E_K is a highest weight vector exactly when K is shifted; both routes are
// computed and their agreement asserted.
inline bool is_highest_weight(const KFamily& K) {
    ExteriorVector v = basis_vector(K);
    bool vanishes = true;
    for (int i = 1; i < K.n() && vanishes; ++i)
        for (int j = i + 1; j <= K.n(); ++j)
            if (!raising(i, j, v).zero()) {
                vanishes = false;
                break;
            }
    if (vanishes != is_shifted(K))
        throw InternalCheckError("is_highest_weight: disagreement with shiftedness");
    return vanishes;
}

namespace detail {

// Rank of an integer matrix by fraction-free (Bareiss) elimination.
inline int bareiss_rank(std::vector<std::vector<mpz_class>> M) {
    int rows = static_cast<int>(M.size());
    if (rows == 0) return 0;
    int cols = static_cast<int>(M[0].size());
    int rank = 0;
    mpz_class prev = 1;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (M[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(M[rank], M[pivot]);
        for (int r = rank + 1; r < rows; ++r) {
            for (int c = col + 1; c < cols; ++c) {
                M[r][c] = M[r][c] * M[rank][col] - M[r][col] * M[rank][c];
                mpz_divexact(M[r][c].get_mpz_t(), M[r][c].get_mpz_t(), prev.get_mpz_t());
            }
            M[r][col] = 0;
        }
        prev = M[rank][col];
        ++rank;
    }
    return rank;
}

}  // namespace detail

// Multiplicity of the irreducible with highest weight lambda in the double
// wedge: the dimension of the joint kernel of all raising operators on the
// weight-lambda subspace, computed by exact elimination.  Equals the
// plethysm coefficient a_{lambda,k}.
inline long long hw_space_dimension(const Partition& lambda, int k, int n,
                                    std::uint64_t node_budget = 400'000'000ull) {
    if (!is_partition(lambda)) throw DomainError("hw_space_dimension: not a partition");
    if (weight(lambda) % k != 0)
        throw DomainError("hw_space_dimension: weight not divisible by k");
    if (static_cast<int>(lambda.size()) > n)
        throw DomainError("hw_space_dimension: more parts than vertices");
    std::vector<int> d(lambda);
    d.resize(n, 0);
    auto rc = count_realizations(d, k, -1, 1 << 30, node_budget);
    const std::vector<KFamily>& basis = rc.found;
    if (basis.empty()) return 0;

    std::map<KFamily, int> col_of;
    for (std::size_t c = 0; c < basis.size(); ++c) col_of[basis[c]] = static_cast<int>(c);
    int cols = static_cast<int>(basis.size());

    std::vector<std::vector<mpz_class>> rows;
    for (int i = 1; i < n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            std::map<KFamily, std::vector<mpz_class>> target_rows;
            for (int c = 0; c < cols; ++c) {
                ExteriorVector img = raising(i, j, basis_vector(basis[c]));
                for (const auto& [K2, coef] : img.terms) {
                    auto it = target_rows.try_emplace(K2, std::vector<mpz_class>(cols)).first;
                    it->second[c] += coef;
                }
            }
            for (auto& [K2, row] : target_rows) rows.push_back(std::move(row));
        }
    }
    int rank = detail::bareiss_rank(std::move(rows));
    return cols - rank;
}

}  // namespace hyperdeg
