#pragma once

#include <algorithm>
#include <functional>
#include <vector>

#include "hyperdeg/common.hpp"

namespace hyperdeg {

// A k-subset of [n] is held as a strictly increasing vector of 1-based vertices.
using Subset = std::vector<int>;

// Bijection between k-subsets of [n] and ranks 0..C(n,k)-1, in colexicographic
// order (compare largest elements first).  Colex is a linear extension of the
// componentwise order on subsets, which the shifted-family code relies on.
struct SubsetCodec {
    int n = 0;
    int k = 0;

    SubsetCodec() = default;
    // k > n is allowed as a degenerate codec with no subsets (count 0); it
    // arises only for the empty family on a ground set smaller than k.
    SubsetCodec(int n_, int k_) : n(n_), k(k_) {
        if (n < 0 || k < 0) throw DomainError("SubsetCodec: need n, k >= 0");
        count_ = binomial(n, k);
    }

    std::uint64_t count() const { return count_; }

    std::uint64_t rank(const Subset& s) const {
        check_subset(s);
        std::uint64_t r = 0;
        for (int i = 0; i < k; ++i) r += binomial(s[i] - 1, i + 1);
        return r;
    }

    Subset unrank(std::uint64_t r) const {
        if (r >= count_) throw DomainError("SubsetCodec::unrank: rank out of range");
        Subset s(k);
        for (int i = k; i >= 1; --i) {
            int e = i - 1;  // smallest value with binomial(e, i) == 0
            while (binomial(e + 1, i) <= r) ++e;
            r -= binomial(e, i);
            s[i - 1] = e + 1;
        }
        return s;
    }

    bool valid_subset(const Subset& s) const {
        if (static_cast<int>(s.size()) != k) return false;
        for (int i = 0; i < k; ++i) {
            if (s[i] < 1 || s[i] > n) return false;
            if (i > 0 && s[i - 1] >= s[i]) return false;
        }
        return true;
    }

    void check_subset(const Subset& s) const {
        if (!valid_subset(s))
            throw DomainError("not a strictly increasing k-subset of [n]");
    }

    // Visits all k-subsets in colex (= rank) order.
    template <typename F>
    void for_each_subset(F&& f) const {
        if (k == 0) {
            f(Subset{});
            return;
        }
        if (count_ == 0) return;
        Subset s(k);
        for (int i = 0; i < k; ++i) s[i] = i + 1;
        while (true) {
            f(s);
            // colex successor: bump the lowest bumpable coordinate, reset below
            int i = 0;
            while (i < k && s[i] + 1 == (i + 1 < k ? s[i + 1] : n + 1)) ++i;
            if (i == k) return;
            ++s[i];
            for (int j = 0; j < i; ++j) s[j] = j + 1;
        }
    }

 private:
    std::uint64_t count_ = 1;
};

inline bool is_subset_of(const Subset& a, const Subset& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline bool contains_vertex(const Subset& s, int v) {
    return std::binary_search(s.begin(), s.end(), v);
}

inline Subset subset_union(Subset a, const Subset& b) {
    Subset out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline Subset subset_minus(const Subset& a, const Subset& b) {
    Subset out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline Subset with_vertex(const Subset& s, int v) {
    Subset out = s;
    out.insert(std::upper_bound(out.begin(), out.end(), v), v);
    return out;
}

inline Subset without_vertex(const Subset& s, int v) {
    Subset out;
    out.reserve(s.size() - 1);
    for (int x : s)
        if (x != v) out.push_back(x);
    return out;
}

// x <= y in the componentwise (Gale) order on equal-size increasing tuples.
inline bool componentwise_leq(const Subset& x, const Subset& y) {
    if (x.size() != y.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] > y[i]) return false;
    return true;
}

}  // namespace hyperdeg
