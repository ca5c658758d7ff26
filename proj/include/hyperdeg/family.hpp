#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <tuple>
#include <vector>

#include "hyperdeg/common.hpp"
#include "hyperdeg/subsets.hpp"

namespace hyperdeg {

using DegreeSequence = std::vector<int>;

// A k-family on [n]: a set of distinct k-subsets, stored as a dense
// bit-indexed membership set over colex ranks.
class KFamily {
 public:
    KFamily() = default;
    KFamily(int n, int k) : codec_(n, k), bits_((codec_.count() + 63) / 64, 0) {}

    static KFamily from_members(int n, int k, const std::vector<Subset>& members) {
        KFamily fam(n, k);
        for (const auto& s : members) {
            if (fam.has(s)) throw DomainError("duplicate member in k-family");
            fam.add(s);
        }
        return fam;
    }

    const SubsetCodec& codec() const { return codec_; }
    int n() const { return codec_.n; }
    int k() const { return codec_.k; }
    int size() const { return size_; }
    bool empty() const { return size_ == 0; }

    bool has_rank(std::uint64_t r) const { return (bits_[r >> 6] >> (r & 63)) & 1; }
    bool has(const Subset& s) const { return has_rank(codec_.rank(s)); }

    void add_rank(std::uint64_t r) {
        if (!has_rank(r)) {
            bits_[r >> 6] |= std::uint64_t(1) << (r & 63);
            ++size_;
        }
    }
    void remove_rank(std::uint64_t r) {
        if (has_rank(r)) {
            bits_[r >> 6] &= ~(std::uint64_t(1) << (r & 63));
            --size_;
        }
    }
    void add(const Subset& s) { add_rank(codec_.rank(s)); }
    void remove(const Subset& s) { remove_rank(codec_.rank(s)); }

    // Members in colex (= rank) order.
    std::vector<Subset> members() const {
        std::vector<Subset> out;
        out.reserve(size_);
        for_each_member_rank([&](std::uint64_t r) { out.push_back(codec_.unrank(r)); });
        return out;
    }

    template <typename F>
    void for_each_member_rank(F&& f) const {
        for (std::size_t w = 0; w < bits_.size(); ++w) {
            std::uint64_t word = bits_[w];
            while (word) {
                int b = __builtin_ctzll(word);
                f(std::uint64_t(w * 64 + b));
                word &= word - 1;
            }
        }
    }

    friend bool operator==(const KFamily& a, const KFamily& b) {
        return a.codec_.n == b.codec_.n && a.codec_.k == b.codec_.k && a.bits_ == b.bits_;
    }
    friend bool operator<(const KFamily& a, const KFamily& b) {
        return std::tie(a.codec_.n, a.codec_.k, a.bits_) <
               std::tie(b.codec_.n, b.codec_.k, b.bits_);
    }

 private:
    SubsetCodec codec_;
    std::vector<std::uint64_t> bits_;
    int size_ = 0;
};

inline DegreeSequence degree_sequence(const KFamily& K) {
    DegreeSequence d(K.n(), 0);
    K.for_each_member_rank([&](std::uint64_t r) {
        for (int v : K.codec().unrank(r)) ++d[v - 1];
    });
    return d;
}

// Open neighborhood / link: { S : S ∪ T ∈ K, S ∩ T = ∅ }, in colex order.
inline std::vector<Subset> link(const KFamily& K, const Subset& T) {
    for (std::size_t i = 0; i < T.size(); ++i) {
        if (T[i] < 1 || T[i] > K.n() || (i > 0 && T[i - 1] >= T[i]))
            throw DomainError("link: T is not a subset of [n]");
    }
    if (static_cast<int>(T.size()) > K.k()) throw DomainError("link: |T| exceeds k");
    std::vector<Subset> out;
    K.for_each_member_rank([&](std::uint64_t r) {
        Subset s = K.codec().unrank(r);
        if (is_subset_of(T, s)) out.push_back(subset_minus(s, T));
    });
    std::sort(out.begin(), out.end(), [](const Subset& a, const Subset& b) {
        return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
    });
    return out;
}

// T ↦ |link(K,T)| over all i-subsets T; for i=1 this is the degree sequence.
inline std::map<Subset, long long> i_degree_function(const KFamily& K, int i) {
    if (i < 0 || i > K.k()) throw DomainError("i_degree_function: need 0 <= i <= k");
    std::map<Subset, long long> out;
    SubsetCodec dom(K.n(), i);
    dom.for_each_subset([&](const Subset& T) { out[T] = 0; });
    K.for_each_member_rank([&](std::uint64_t r) {
        Subset s = K.codec().unrank(r);
        SubsetCodec sub(K.k(), i);
        sub.for_each_subset([&](const Subset& idx) {
            Subset T(i);
            for (int t = 0; t < i; ++t) T[t] = s[idx[t] - 1];
            ++out[T];
        });
    });
    return out;
}

namespace detail {
// Neighborhood sets as sorted rank lists over C([n],k-1).
inline std::vector<std::uint64_t> open_neighborhood_ranks(const KFamily& K, int i,
                                                          const SubsetCodec& sub) {
    std::vector<std::uint64_t> out;
    K.for_each_member_rank([&](std::uint64_t r) {
        Subset s = K.codec().unrank(r);
        if (contains_vertex(s, i)) out.push_back(sub.rank(without_vertex(s, i)));
    });
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<std::uint64_t> closed_neighborhood_ranks(const KFamily& K, int i,
                                                            const SubsetCodec& sub) {
    std::set<std::uint64_t> acc;
    K.for_each_member_rank([&](std::uint64_t r) {
        Subset s = K.codec().unrank(r);
        if (contains_vertex(s, i)) acc.insert(sub.rank(without_vertex(s, i)));
        // any subfacet A = S \ {j} with i ∈ A is in the closed neighborhood
        for (int j : s) {
            Subset A = without_vertex(s, j);
            if (contains_vertex(A, i)) acc.insert(sub.rank(A));
        }
    });
    return std::vector<std::uint64_t>(acc.begin(), acc.end());
}
}  // namespace detail

// N_K[i] = N_K(i) ∪ { A ∋ i : A ∪ {j} ∈ K for some j }.
inline std::vector<Subset> closed_neighborhood(const KFamily& K, int i) {
    if (i < 1 || i > K.n()) throw DomainError("closed_neighborhood: vertex out of range");
    SubsetCodec sub(K.n(), K.k() - 1);
    std::set<std::uint64_t> acc;
    K.for_each_member_rank([&](std::uint64_t r) {
        Subset s = K.codec().unrank(r);
        if (contains_vertex(s, i)) acc.insert(sub.rank(without_vertex(s, i)));
        for (int j : s) {
            Subset A = without_vertex(s, j);
            if (contains_vertex(A, i)) acc.insert(sub.rank(A));
        }
    });
    std::vector<Subset> out;
    for (auto r : acc) out.push_back(sub.unrank(r));
    return out;
}

// Reflexive-transitive relation matrix on [n].
struct Preorder {
    int n = 0;
    std::vector<char> rel;  // rel[(i-1)*n + (j-1)] = 1 iff i ≼ j

    bool related(int i, int j) const { return rel[(i - 1) * n + (j - 1)] != 0; }

    bool is_reflexive() const {
        for (int i = 1; i <= n; ++i)
            if (!related(i, i)) return false;
        return true;
    }
    bool is_transitive() const {
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                if (!related(i, j)) continue;
                for (int l = 1; l <= n; ++l)
                    if (related(j, l) && !related(i, l)) return false;
            }
        return true;
    }
};

inline bool is_total(const Preorder& p) {
    for (int i = 1; i <= p.n; ++i)
        for (int j = 1; j <= p.n; ++j)
            if (!p.related(i, j) && !p.related(j, i)) return false;
    return true;
}

// i ≼ j iff N_K[i] ⊇ N_K(j).
inline Preorder vicinal_preorder(const KFamily& K) {
    int n = K.n();
    SubsetCodec sub(n, K.k() - 1);
    std::vector<std::vector<std::uint64_t>> open(n), closed(n);
    for (int i = 1; i <= n; ++i) {
        open[i - 1] = detail::open_neighborhood_ranks(K, i, sub);
        closed[i - 1] = detail::closed_neighborhood_ranks(K, i, sub);
    }
    Preorder p;
    p.n = n;
    p.rel.assign(n * n, 0);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            p.rel[(i - 1) * n + (j - 1)] =
                std::includes(closed[i - 1].begin(), closed[i - 1].end(),
                              open[j - 1].begin(), open[j - 1].end())
                    ? 1
                    : 0;
    return p;
}

namespace detail {
// Ranks of the componentwise lower covers of the subset with rank r
// (lower one coordinate by 1 where the tuple stays strictly increasing).
inline std::vector<std::uint64_t> lower_cover_ranks(const SubsetCodec& codec,
                                                    std::uint64_t r) {
    Subset s = codec.unrank(r);
    std::vector<std::uint64_t> out;
    for (std::size_t p = 0; p < s.size(); ++p) {
        int lo = (p == 0) ? 1 : s[p - 1] + 1;
        if (s[p] - 1 >= lo) {
            Subset t = s;
            --t[p];
            out.push_back(codec.rank(t));
        }
    }
    return out;
}
}  // namespace detail

inline bool is_shifted(const KFamily& K) {
    bool ok = true;
    K.for_each_member_rank([&](std::uint64_t r) {
        if (!ok) return;
        for (auto c : detail::lower_cover_ranks(K.codec(), r))
            if (!K.has_rank(c)) {
                ok = false;
                return;
            }
    });
    return ok;
}

// Smallest shifted family containing the generators (componentwise down-closure).
inline KFamily shifted_generate(int n, int k, const std::vector<Subset>& generators) {
    KFamily fam(n, k);
    std::vector<std::uint64_t> stack;
    for (const auto& g : generators) {
        std::uint64_t r = fam.codec().rank(g);
        if (!fam.has_rank(r)) {
            fam.add_rank(r);
            stack.push_back(r);
        }
    }
    while (!stack.empty()) {
        std::uint64_t r = stack.back();
        stack.pop_back();
        for (auto c : detail::lower_cover_ranks(fam.codec(), r))
            if (!fam.has_rank(c)) {
                fam.add_rank(c);
                stack.push_back(c);
            }
    }
    return fam;
}

// Visits every shifted family on [n] (every componentwise order ideal of
// C([n],k)) exactly once.  Elements are decided in colex order; an element may
// be included only once all its lower covers are in, so each leaf of the
// decision tree is a distinct ideal.
template <typename F>
void for_each_shifted_on(int n, int k, F&& f,
                         std::uint64_t max_families = 100'000'000ull) {
    KFamily fam(n, k);
    std::uint64_t N = fam.codec().count();
    std::vector<std::vector<std::uint64_t>> covers(N);
    for (std::uint64_t r = 0; r < N; ++r)
        covers[r] = detail::lower_cover_ranks(fam.codec(), r);
    std::uint64_t emitted = 0;
    auto rec = [&](auto&& self, std::uint64_t r) -> void {
        if (r == N) {
            if (++emitted > max_families)
                throw BudgetError("shifted-family enumeration exceeded budget");
            f(const_cast<const KFamily&>(fam));
            return;
        }
        bool includable = true;
        for (auto c : covers[r])
            if (!fam.has_rank(c)) {
                includable = false;
                break;
            }
        if (includable) {
            fam.add_rank(r);
            self(self, r + 1);
            fam.remove_rank(r);
        }
        self(self, r + 1);
    };
    rec(rec, 0);
}

// Visits every shifted k-family of size m, on ground set [m+k-1], exactly once
// in a deterministic order.  Every shifted family of size m fits in [m+k-1]:
// a member with largest element v forces {1,..,k-1,w} ∈ K for k <= w <= v.
template <typename F>
void for_each_shifted_sized(int k, int m, F&& f,
                            std::uint64_t max_families = 100'000'000ull) {
    if (k < 1) throw DomainError("for_each_shifted_sized: need k >= 1");
    if (m < 0) throw DomainError("for_each_shifted_sized: need m >= 0");
    int n = m + k - 1;
    KFamily fam(n, k);
    std::uint64_t N = fam.codec().count();
    if (m == 0) {
        f(const_cast<const KFamily&>(fam));
        return;
    }
    std::vector<std::vector<std::uint64_t>> covers(N);
    for (std::uint64_t r = 0; r < N; ++r)
        covers[r] = detail::lower_cover_ranks(fam.codec(), r);
    std::uint64_t emitted = 0;
    auto rec = [&](auto&& self, std::uint64_t r) -> void {
        if (fam.size() == m) {
            // no further element may be added, but ideals are determined by
            // their member set; emit and stop this branch
            if (++emitted > max_families)
                throw BudgetError("shifted-family enumeration exceeded budget");
            f(const_cast<const KFamily&>(fam));
            return;
        }
        if (r == N || fam.size() + (N - r) < static_cast<std::uint64_t>(m)) return;
        bool includable = true;
        for (auto c : covers[r])
            if (!fam.has_rank(c)) {
                includable = false;
                break;
            }
        if (includable) {
            fam.add_rank(r);
            self(self, r + 1);
            fam.remove_rank(r);
        }
        self(self, r + 1);
    };
    rec(rec, 0);
}

inline std::vector<KFamily> enumerate_shifted(int k, int m,
                                              std::uint64_t max_families = 100'000'000ull) {
    std::vector<KFamily> out;
    for_each_shifted_sized(k, m, [&](const KFamily& K) { out.push_back(K); }, max_families);
    return out;
}

// Swing: replace A ∪ {j} by A ∪ {i} for i < j, both outside A.
inline KFamily swing(const KFamily& K, const Subset& A, int i, int j) {
    if (!(i >= 1 && j <= K.n() && i < j)) throw DomainError("swing: need 1 <= i < j <= n");
    if (static_cast<int>(A.size()) != K.k() - 1)
        throw DomainError("swing: A must be a (k-1)-subset");
    if (contains_vertex(A, i) || contains_vertex(A, j))
        throw DomainError("swing: i and j must avoid A");
    Subset out_set = with_vertex(A, j), in_set = with_vertex(A, i);
    if (!K.has(out_set)) throw DomainError("swing: A ∪ {j} is not a member");
    if (K.has(in_set)) throw DomainError("swing: A ∪ {i} is already a member");
    KFamily R = K;
    R.remove(out_set);
    R.add(in_set);
    return R;
}

// First legal swing in scan order, if any.  One exists iff K is not shifted.
inline std::optional<std::tuple<Subset, int, int>> find_swing(const KFamily& K) {
    std::optional<std::tuple<Subset, int, int>> found;
    K.for_each_member_rank([&](std::uint64_t r) {
        if (found) return;
        Subset s = K.codec().unrank(r);
        for (int j : s) {
            Subset A = without_vertex(s, j);
            for (int i = 1; i < j && !found; ++i) {
                if (contains_vertex(A, i)) continue;
                if (!K.has(with_vertex(A, i))) found = {{A, i, j}};
            }
            if (found) return;
        }
    });
    return found;
}

// Relabels vertices in weakly decreasing order of degree (ties by old label).
inline KFamily sort_by_degree(const KFamily& K) {
    DegreeSequence d = degree_sequence(K);
    std::vector<int> order(K.n());
    for (int i = 0; i < K.n(); ++i) order[i] = i + 1;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return d[a - 1] > d[b - 1]; });
    std::vector<int> relabel(K.n() + 1);
    for (int pos = 0; pos < K.n(); ++pos) relabel[order[pos]] = pos + 1;
    KFamily R(K.n(), K.k());
    K.for_each_member_rank([&](std::uint64_t r) {
        Subset s = K.codec().unrank(r);
        for (int& v : s) v = relabel[v];
        std::sort(s.begin(), s.end());
        R.add(s);
    });
    return R;
}

struct RrstViolation {
    Subset A, B;
    int i = 0, j = 0;
};

// All tuples (A,B,i,j) with A∪{j}, B∪{i} ∈ K and A∪{i}, B∪{j} ∉ K.
// Empty list iff the RRST condition holds.
inline std::vector<RrstViolation> rrst_violations(const KFamily& K) {
    std::vector<RrstViolation> out;
    std::vector<Subset> mem = K.members();
    for (const Subset& S : mem) {          // S = A ∪ {j}
        for (const Subset& T : mem) {      // T = B ∪ {i}
            for (int j : S) {
                if (contains_vertex(T, j)) continue;
                Subset A = without_vertex(S, j);
                for (int i : T) {
                    if (i == j || contains_vertex(S, i)) continue;
                    Subset B = without_vertex(T, i);
                    if (contains_vertex(B, j) || contains_vertex(A, i)) continue;
                    if (!K.has(with_vertex(A, i)) && !K.has(with_vertex(B, j)))
                        out.push_back({A, B, i, j});
                }
            }
        }
    }
    return out;
}

// Realizes a majorized degree sequence by reverse swings along a chain of
// single-box dominance moves.
inline KFamily realize_majorized(const KFamily& K, const DegreeSequence& target) {
    DegreeSequence d = degree_sequence(K);
    if (!weakly_decreasing(d)) throw DomainError("realize_majorized: d(K) must be weakly decreasing");
    if (!weakly_decreasing(target))
        throw DomainError("realize_majorized: target must be weakly decreasing");
    int n2 = std::max<int>(K.n(), target.size());
    DegreeSequence cur = d, goal = target;
    cur.resize(n2, 0);
    goal.resize(n2, 0);
    long long pc = 0, pg = 0;
    for (int t = 0; t < n2; ++t) {
        pc += cur[t];
        pg += goal[t];
        if (pc < pg) throw DomainError("realize_majorized: target is not majorized by d(K)");
    }
    if (pc != pg) throw DomainError("realize_majorized: target has a different weight");

    KFamily L(n2, K.k());
    K.for_each_member_rank([&](std::uint64_t r) { L.add(K.codec().unrank(r)); });

    while (cur != goal) {
        int a = 0;
        while (cur[a] == goal[a]) ++a;  // cur[a] > goal[a] by majorization
        int b = a + 1;
        while (cur[b] >= goal[b]) ++b;
        // move a unit from the end of a's value-run to the start of b's
        int a2 = a;
        while (a2 + 1 < n2 && cur[a2 + 1] == cur[a]) ++a2;
        int b2 = b;
        while (b2 - 1 > a2 && cur[b2 - 1] == cur[b]) --b2;
        int vi = a2 + 1, vj = b2 + 1;  // 1-based vertices, vi < vj
        // reverse swing: some A with A∪{vi} ∈ L, A∪{vj} ∉ L exists since
        // cur[a2] >= cur[b2] + 2; take the colex-smallest such A
        bool done = false;
        L.for_each_member_rank([&](std::uint64_t r) {
            if (done) return;
            Subset s = L.codec().unrank(r);
            if (!contains_vertex(s, vi) || contains_vertex(s, vj)) return;
            Subset A = without_vertex(s, vi);
            Subset repl = with_vertex(A, vj);
            if (!L.has(repl)) {
                L.remove(s);
                L.add(repl);
                done = true;
            }
        });
        if (!done)
            throw InternalCheckError("realize_majorized: no eligible (k-1)-set at a cover step");
        --cur[a2];
        ++cur[b2];
    }
    if (degree_sequence(L) != goal)
        throw InternalCheckError("realize_majorized: degree mismatch after swings");
    return L;
}

}  // namespace hyperdeg
