#pragma once

#include <algorithm>
#include <gmpxx.h>

#include <utility>
#include <vector>

#include "hyperdeg/common.hpp"

namespace hyperdeg {

// Weakly decreasing positive parts, no trailing zeros.  The empty vector is
// the empty partition.
using Partition = std::vector<int>;
// Strictly decreasing positive parts.
using StrictPartition = std::vector<int>;

inline Partition normalized_partition(std::vector<int> v) {
    std::sort(v.begin(), v.end(), std::greater<int>());
    while (!v.empty() && v.back() == 0) v.pop_back();
    for (int x : v)
        if (x < 0) throw DomainError("partition parts must be nonnegative");
    return v;
}

inline bool is_partition(const std::vector<int>& v) {
    if (!weakly_decreasing(v)) return false;
    return v.empty() || v.back() >= 1;
}

inline long long weight(const Partition& p) { return vector_sum(p); }

// a majorizes b: equal sums and all prefix-sum inequalities.  Sequences are
// compared in the order given (no sorting), padding the shorter with zeros.
inline bool majorizes(const std::vector<int>& a, const std::vector<int>& b) {
    if (vector_sum(a) != vector_sum(b))
        throw DomainError("majorizes: sequences must have equal sums");
    std::size_t len = std::max(a.size(), b.size());
    long long pa = 0, pb = 0;
    for (std::size_t i = 0; i < len; ++i) {
        pa += i < a.size() ? a[i] : 0;
        pb += i < b.size() ? b[i] : 0;
        if (pa < pb) return false;
    }
    return true;
}

inline bool strictly_majorizes(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> ta = a, tb = b;
    while (!ta.empty() && ta.back() == 0) ta.pop_back();
    while (!tb.empty() && tb.back() == 0) tb.pop_back();
    return ta != tb && majorizes(a, b);
}

// a weakly majorizes b: prefix sums of a dominate those of b (so in
// particular |a| >= |b|); no equality of sums required.
inline bool weakly_majorizes(const std::vector<int>& a, const std::vector<int>& b) {
    std::size_t len = std::max(a.size(), b.size());
    long long pa = 0, pb = 0;
    for (std::size_t i = 0; i < len; ++i) {
        pa += i < a.size() ? a[i] : 0;
        pb += i < b.size() ? b[i] : 0;
        if (pa < pb) return false;
    }
    return true;
}

inline Partition conjugate(const Partition& p) {
    if (p.empty()) return {};
    Partition c(p[0], 0);
    for (std::size_t i = 0; i < p.size(); ++i)
        for (int j = 0; j < p[i]; ++j) ++c[j];
    return c;
}

// Durfee rank: |{ j : p_j >= j }| (1-based).
inline int trace(const Partition& p) {
    int t = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] >= static_cast<int>(i) + 1) ++t;
    return t;
}

// Cuts the Ferrers diagram along the subdiagonal staircase: alpha collects the
// rows of boxes (i,j) with i <= j, beta the columns of boxes with i > j.  Both
// are strict partitions with trace(p) parts; a zero tail part (possible only
// for beta) is trimmed.
inline std::pair<StrictPartition, StrictPartition> alpha_beta(const Partition& p) {
    int t = trace(p);
    Partition pT = conjugate(p);
    StrictPartition alpha, beta;
    for (int i = 1; i <= t; ++i) alpha.push_back(p[i - 1] - (i - 1));
    for (int j = 1; j <= t; ++j) beta.push_back(pT[j - 1] - j);
    while (!beta.empty() && beta.back() == 0) beta.pop_back();
    while (!alpha.empty() && alpha.back() == 0) alpha.pop_back();
    return {alpha, beta};
}

// All partitions reachable by moving one box from row i to a lower row j > i
// (single-step dominance descent), restricted to at most max_parts parts.
inline std::vector<Partition> dominance_down_moves(const Partition& p, int max_parts) {
    std::vector<Partition> out;
    int len = static_cast<int>(p.size());
    int extent = std::min(max_parts, len + 1);
    std::vector<int> v(p);
    v.resize(extent, 0);
    for (int i = 0; i < len; ++i) {
        for (int j = i + 1; j < extent; ++j) {
            std::vector<int> w = v;
            --w[i];
            ++w[j];
            if (weakly_decreasing(w)) {
                while (!w.empty() && w.back() == 0) w.pop_back();
                out.push_back(std::move(w));
            }
        }
    }
    return out;
}

// All partitions reachable by moving one box from row j up to row i < j,
// restricted to parts at most max_part.
inline std::vector<Partition> dominance_up_moves(const Partition& p, int max_part) {
    std::vector<Partition> out;
    int len = static_cast<int>(p.size());
    for (int j = 0; j < len; ++j) {
        for (int i = 0; i < j; ++i) {
            std::vector<int> w(p);
            ++w[i];
            --w[j];
            if (w[i] > max_part) continue;
            if (weakly_decreasing(w)) {
                while (!w.empty() && w.back() == 0) w.pop_back();
                out.push_back(std::move(w));
            }
        }
    }
    return out;
}

// Partitions of w with at most max_parts parts, each at most max_part,
// in descending lexicographic order.
inline std::vector<Partition> partitions_of(int w, int max_parts, int max_part) {
    std::vector<Partition> out;
    if (w < 0) return out;
    if (w == 0) {
        out.push_back({});
        return out;
    }
    Partition cur;
    auto rec = [&](auto&& self, int rem, int cap, int slots) -> void {
        if (rem == 0) {
            out.push_back(cur);
            return;
        }
        if (slots == 0 || static_cast<long long>(cap) * slots < rem) return;
        for (int part = std::min(cap, rem); part >= 1; --part) {
            cur.push_back(part);
            self(self, rem - part, part, slots - 1);
            cur.pop_back();
        }
    };
    rec(rec, w, max_part, max_parts);
    return out;
}

// Number of distinct rearrangements of p padded with zeros to exactly n slots:
// n! / prod over values (multiplicity!).
inline mpz_class rearrangement_count(const Partition& p, int n) {
    if (static_cast<int>(p.size()) > n)
        throw DomainError("rearrangement_count: more parts than slots");
    mpz_class r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    int zeros = n - static_cast<int>(p.size());
    mpz_class div = 1;
    for (int i = 2; i <= zeros; ++i) div *= i;
    std::size_t i = 0;
    while (i < p.size()) {
        std::size_t j = i;
        while (j < p.size() && p[j] == p[i]) ++j;
        for (std::size_t c = 2; c <= j - i; ++c) div *= static_cast<unsigned long>(c);
        i = j;
    }
    return r / div;
}

// Visits the distinct rearrangements of p padded with zeros to `slots` slots.
template <typename F>
void for_each_rearrangement(const Partition& p, int slots, F&& f) {
    std::vector<int> v(p);
    v.resize(slots, 0);
    std::sort(v.begin(), v.end());
    do {
        f(const_cast<const std::vector<int>&>(v));
    } while (std::next_permutation(v.begin(), v.end()));
}

// Descending lexicographic comparison; a total order refining dominance.
inline bool lex_greater(const Partition& a, const Partition& b) {
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace hyperdeg
