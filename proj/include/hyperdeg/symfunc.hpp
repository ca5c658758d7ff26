#pragma once

#include <map>
#include <mutex>

#include "hyperdeg/classify.hpp"
#include "hyperdeg/family.hpp"
#include "hyperdeg/partition.hpp"

namespace hyperdeg {

enum class Basis { monomial, schur };

// Integer-coefficient symmetric function with basis-tagged coefficients
// indexed by partitions.  Zero coefficients are never stored.
struct SymPoly {
    Basis basis = Basis::monomial;
    std::map<Partition, mpz_class> coeffs;

    bool zero() const { return coeffs.empty(); }

    void set(const Partition& p, mpz_class c) {
        if (c == 0)
            coeffs.erase(p);
        else
            coeffs[p] = std::move(c);
    }
    void accumulate(const Partition& p, const mpz_class& c) {
        auto it = coeffs.try_emplace(p, 0).first;
        it->second += c;
        if (it->second == 0) coeffs.erase(it);
    }
    mpz_class coeff(const Partition& p) const {
        auto it = coeffs.find(p);
        return it == coeffs.end() ? mpz_class(0) : it->second;
    }

    // homogeneous degree; -1 for the zero polynomial
    long long degree() const {
        long long d = -1;
        for (const auto& [p, c] : coeffs) {
            long long w = weight(p);
            if (d == -1) d = w;
            if (w != d) throw DomainError("SymPoly: not homogeneous");
        }
        return d;
    }

    friend bool operator==(const SymPoly& a, const SymPoly& b) {
        return a.basis == b.basis && a.coeffs == b.coeffs;
    }
};

inline SymPoly sym_add(const SymPoly& a, const SymPoly& b) {
    if (a.basis != b.basis) throw DomainError("sym_add: basis mismatch");
    SymPoly r = a;
    for (const auto& [p, c] : b.coeffs) r.accumulate(p, c);
    return r;
}

inline SymPoly sym_sub(const SymPoly& a, const SymPoly& b) {
    if (a.basis != b.basis) throw DomainError("sym_sub: basis mismatch");
    SymPoly r = a;
    for (const auto& [p, c] : b.coeffs) r.accumulate(p, -c);
    return r;
}

inline SymPoly sym_scale(const SymPoly& a, const mpz_class& s) {
    SymPoly r;
    r.basis = a.basis;
    if (s == 0) return r;
    for (const auto& [p, c] : a.coeffs) r.coeffs[p] = c * s;
    return r;
}

// Kostka number: column-strict tableaux of shape lambda and content mu,
// counted by peeling the largest entry as a horizontal strip.  Memoized.
inline mpz_class kostka(const Partition& lambda, const Partition& mu) {
    if (!is_partition(lambda) || !is_partition(mu)) throw DomainError("kostka: not partitions");
    if (weight(lambda) != weight(mu)) throw DomainError("kostka: weight mismatch");
    static std::map<std::pair<Partition, Partition>, mpz_class> memo;
    static std::mutex mu_lock;

    auto rec = [](auto&& self, const Partition& lam, const Partition& content,
                  std::size_t parts_left) -> mpz_class {
        if (parts_left == 0) return lam.empty() ? 1 : 0;
        int strip = content[parts_left - 1];
        std::pair<Partition, Partition> key(lam,
                                            Partition(content.begin(), content.begin() + parts_left));
        {
            std::lock_guard<std::mutex> g(mu_lock);
            auto it = memo.find(key);
            if (it != memo.end()) return it->second;
        }
        // enumerate nu with nu <= lam, lam/nu a horizontal strip of size `strip`
        mpz_class total = 0;
        Partition nu(lam.size(), 0);
        auto strips = [&](auto&& gen, std::size_t row, int removed) -> void {
            if (row == lam.size()) {
                if (removed != strip) return;
                Partition trimmed = nu;
                while (!trimmed.empty() && trimmed.back() == 0) trimmed.pop_back();
                total += self(self, trimmed, content, parts_left - 1);
                return;
            }
            int below = row + 1 < lam.size() ? lam[row + 1] : 0;
            // nu[row] in [below, lam[row]]: weak subdiagram, strip condition
            for (int v = below; v <= lam[row]; ++v) {
                int r = lam[row] - v;
                if (removed + r > strip) continue;
                if (row > 0 && v > nu[row - 1]) continue;  // nu must be a partition
                nu[row] = v;
                gen(gen, row + 1, removed + r);
            }
            nu[row] = 0;
        };
        strips(strips, 0, 0);
        {
            std::lock_guard<std::mutex> g(mu_lock);
            memo[key] = total;
        }
        return total;
    };
    return rec(rec, lambda, mu, mu.size());
}

// s_lambda = sum_mu K_{lambda,mu} m_mu.
inline SymPoly schur_to_mono(const SymPoly& p) {
    if (p.basis != Basis::schur) throw DomainError("schur_to_mono: expected schur basis");
    SymPoly r;
    r.basis = Basis::monomial;
    for (const auto& [lam, c] : p.coeffs) {
        int d = static_cast<int>(weight(lam));
        for (const auto& mu : partitions_of(d, d, d)) {
            mpz_class k = kostka(lam, mu);
            if (k != 0) r.accumulate(mu, c * k);
        }
    }
    return r;
}

// Unitriangular solve along descending dominance order (descending lex
// refines it): peel the leading monomial coefficient as a Schur coefficient.
inline SymPoly mono_to_schur(const SymPoly& p) {
    if (p.basis != Basis::monomial) throw DomainError("mono_to_schur: expected monomial basis");
    SymPoly r;
    r.basis = Basis::schur;
    if (p.coeffs.empty()) return r;
    long long d = p.degree();
    std::map<Partition, mpz_class> work(p.coeffs.begin(), p.coeffs.end());
    auto all = partitions_of(static_cast<int>(d), static_cast<int>(d), static_cast<int>(d));
    // partitions_of emits in descending lex order already
    for (const auto& lam : all) {
        auto it = work.find(lam);
        if (it == work.end() || it->second == 0) continue;
        mpz_class a = it->second;
        r.set(lam, a);
        for (const auto& mu : all) {
            mpz_class k = kostka(lam, mu);
            if (k != 0) {
                auto jt = work.try_emplace(mu, 0).first;
                jt->second -= a * k;
                if (jt->second == 0) work.erase(jt);
            }
        }
    }
    if (!work.empty())
        throw InternalCheckError("mono_to_schur: residue after unitriangular solve");
    return r;
}

// Product via exponent-vector convolution over distinct padded rearrangements;
// a pair (alpha, beta) contributes to the monomial x^(alpha+beta), which is a
// basis representative exactly when the sum is weakly decreasing.
inline SymPoly multiply(const SymPoly& p, const SymPoly& q,
                        Basis out_basis = Basis::schur) {
    SymPoly pm = p.basis == Basis::monomial ? p : schur_to_mono(p);
    SymPoly qm = q.basis == Basis::monomial ? q : schur_to_mono(q);
    SymPoly prod;
    prod.basis = Basis::monomial;
    for (const auto& [mu, c] : pm.coeffs) {
        for (const auto& [nu, dcoef] : qm.coeffs) {
            int slots = static_cast<int>(mu.size() + nu.size());
            mpz_class cd = c * dcoef;
            for_each_rearrangement(mu, slots, [&](const std::vector<int>& alpha) {
                for_each_rearrangement(nu, slots, [&](const std::vector<int>& beta) {
                    std::vector<int> sum(slots);
                    for (int i = 0; i < slots; ++i) sum[i] = alpha[i] + beta[i];
                    if (!weakly_decreasing(sum)) return;
                    while (!sum.empty() && sum.back() == 0) sum.pop_back();
                    prod.accumulate(sum, cd);
                });
            });
        }
    }
    if (out_basis == Basis::monomial) return prod;
    return mono_to_schur(prod);
}

// c_{mu,k}: labeled k-families realizing the exact degree vector mu.
inline mpz_class count_families_with_degree(const Partition& mu, int k,
                                            std::uint64_t node_budget = 400'000'000ull) {
    if (!is_partition(mu)) throw DomainError("count_families_with_degree: not a partition");
    if (weight(mu) % k != 0)
        throw DomainError("count_families_with_degree: weight not divisible by k");
    auto rc = count_realizations(mu, k, -1, 0, node_budget);
    return mpz_class(static_cast<long>(rc.count));
}

// e_m[e_k] in the Schur basis, assembled from the labeled family counts
// c_{mu,k} over all partitions mu of km and inverted through the Kostka
// matrix.  Nonnegativity of every coefficient is asserted.
inline SymPoly plethysm_em_ek(int m, int k, int max_weight = 12,
                              std::uint64_t node_budget = 400'000'000ull) {
    if (m < 0 || k < 1) throw DomainError("plethysm_em_ek: need m >= 0, k >= 1");
    if (static_cast<long long>(m) * k > max_weight)
        throw BudgetError("plethysm_em_ek: km exceeds the weight budget");
    int d = m * k;
    SymPoly mono;
    mono.basis = Basis::monomial;
    for (const auto& mu : partitions_of(d, d, d)) {
        if (!mu.empty() && mu[0] > m) continue;  // degrees cannot exceed |K|
        mpz_class c = count_families_with_degree(mu, k, node_budget);
        if (c != 0) mono.coeffs[mu] = c;
    }
    SymPoly s = mono_to_schur(mono);
    for (const auto& [lam, c] : s.coeffs)
        if (c < 0) throw InternalCheckError("plethysm_em_ek: negative Schur coefficient");
    return s;
}

// Φ_{k,m}: sum of s_{d(K)} over shifted k-families of size m.
inline SymPoly phi(int k, int m, int max_ground = 12,
                   std::uint64_t max_families = 100'000'000ull) {
    if (m < 0 || k < 1) throw DomainError("phi: need m >= 0, k >= 1");
    if (m + k - 1 > max_ground) throw BudgetError("phi: ground set exceeds budget");
    SymPoly r;
    r.basis = Basis::schur;
    for_each_shifted_sized(k, m, [&](const KFamily& K) {
        Partition d = degree_sequence(K);
        while (!d.empty() && d.back() == 0) d.pop_back();
        r.accumulate(d, 1);
    }, max_families);
    return r;
}

// Υ_{k,m} := e_m[e_k] − Φ_{k,m} − Σ_{i=1}^{m-2} Υ_{k,m-i} Φ_{k,i}, with
// Υ_{k,1} = 0.  Memoized per (k,m).
inline SymPoly upsilon(int k, int m, int max_weight = 12,
                       std::uint64_t node_budget = 400'000'000ull) {
    if (m < 1 || k < 1) throw DomainError("upsilon: need m >= 1, k >= 1");
    if (static_cast<long long>(m) * k > max_weight)
        throw BudgetError("upsilon: km exceeds the weight budget");
    static std::map<std::pair<int, int>, SymPoly> memo;
    static std::mutex mu;
    {
        std::lock_guard<std::mutex> g(mu);
        auto it = memo.find({k, m});
        if (it != memo.end()) return it->second;
    }
    SymPoly r;
    if (m == 1) {
        r.basis = Basis::schur;
    } else {
        r = sym_sub(plethysm_em_ek(m, k, max_weight, node_budget),
                    phi(k, m, m + k - 1));
        for (int i = 1; i <= m - 2; ++i) {
            SymPoly term = multiply(upsilon(k, m - i, max_weight, node_budget),
                                    phi(k, i, m + k - 1), Basis::schur);
            r = sym_sub(r, term);
        }
    }
    std::lock_guard<std::mutex> g(mu);
    memo[{k, m}] = r;
    return r;
}

struct SchurPositivity {
    bool positive = true;
    std::vector<std::pair<Partition, mpz_class>> negative_terms;
};

inline SchurPositivity is_schur_positive(const SymPoly& p) {
    if (p.basis != Basis::schur) throw DomainError("is_schur_positive: expected schur basis");
    SchurPositivity r;
    for (const auto& [lam, c] : p.coeffs)
        if (c < 0) {
            r.positive = false;
            r.negative_terms.emplace_back(lam, c);
        }
    return r;
}

// R \ lambda rotated 180 degrees, for R the rows x cols rectangle.
inline Partition complement_in_rectangle(const Partition& lambda, int rows, int cols) {
    if (static_cast<int>(lambda.size()) > rows || (!lambda.empty() && lambda[0] > cols))
        throw DomainError("complement_in_rectangle: partition does not fit");
    Partition r;
    for (int i = rows - 1; i >= 0; --i) {
        int part = cols - (i < static_cast<int>(lambda.size()) ? lambda[i] : 0);
        if (part > 0) r.push_back(part);
    }
    return r;
}

// ---- finite-variable plethysm tables -------------------------------------

// Schur coefficients of the degree-km slices of Ψ_k and Φ_k in n variables,
// obtained by full enumeration of the 2^C(n,k) families (resp. the shifted
// ones) binned by degree partition.
struct FiniteSliceTable {
    int n = 0, k = 0;
    // index m: partition -> coefficient
    std::vector<std::map<Partition, mpz_class>> family_counts;   // c_{mu,k} on [n]
    std::vector<std::map<Partition, mpz_class>> schur;           // a_{lambda,k} on [n]
    std::vector<std::map<Partition, mpz_class>> shifted_counts;  // a'_{lambda,k} on [n]
};

namespace detail {

// a_lambda = sum over permutations p of the staircase delta of
// sgn(p) * (coefficient of x^(lambda+delta-p)); exact in n variables.
inline std::map<Partition, mpz_class> schur_from_monomial_slice(
    const std::map<Partition, mpz_class>& counts, int n, int slice_weight) {
    std::map<Partition, mpz_class> out;
    if (counts.empty()) return out;
    int maxpart = 0;
    for (const auto& [mu, c] : counts)
        if (!mu.empty()) maxpart = std::max(maxpart, mu[0]);
    std::vector<int> delta(n);
    for (int i = 0; i < n; ++i) delta[i] = n - 1 - i;

    // permutations of delta with signs
    std::vector<std::pair<std::vector<int>, int>> perms;
    {
        std::vector<int> idx(n);
        for (int i = 0; i < n; ++i) idx[i] = i;
        auto rec = [&](auto&& self, std::vector<int>& cur, std::vector<bool>& used,
                       int parity) -> void {
            if (static_cast<int>(cur.size()) == n) {
                std::vector<int> v(n);
                for (int i = 0; i < n; ++i) v[i] = delta[cur[i]];
                perms.push_back({v, parity});
                return;
            }
            for (int i = 0; i < n; ++i) {
                if (used[i]) continue;
                int inversions = 0;
                for (int u : cur)
                    if (u > i) ++inversions;
                used[i] = true;
                cur.push_back(i);
                self(self, cur, used, inversions % 2 == 0 ? parity : -parity);
                cur.pop_back();
                used[i] = false;
            }
        };
        std::vector<int> cur;
        std::vector<bool> used(n, false);
        rec(rec, cur, used, 1);
    }

    for (const auto& lam : partitions_of(slice_weight, n, maxpart)) {
        mpz_class a = 0;
        std::vector<int> padded(lam);
        padded.resize(n, 0);
        std::vector<int> v(n);
        for (const auto& [perm, sign] : perms) {
            bool ok = true;
            for (int i = 0; i < n; ++i) {
                v[i] = padded[i] + delta[i] - perm[i];
                if (v[i] < 0) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            Partition key = normalized_partition(v);
            auto it = counts.find(key);
            if (it == counts.end()) continue;
            if (sign > 0)
                a += it->second;
            else
                a -= it->second;
        }
        if (a != 0) out[lam] = a;
    }
    return out;
}

}  // namespace detail

inline const FiniteSliceTable& finite_slice_table(int n, int k,
                                                  std::uint64_t max_masks = (1ull << 22)) {
    static std::map<std::pair<int, int>, FiniteSliceTable> memo;
    static std::mutex mu;
    {
        std::lock_guard<std::mutex> g(mu);
        auto it = memo.find({n, k});
        if (it != memo.end()) return it->second;
    }
    if (n < 0 || k < 0) throw DomainError("finite_slice_table: need n, k >= 0");
    std::uint64_t total = binomial(n, k);
    if (total >= 63 || (std::uint64_t(1) << total) > max_masks)
        throw BudgetError("finite_slice_table: 2^C(n,k) exceeds the enumeration budget");
    FiniteSliceTable t;
    t.n = n;
    t.k = k;
    t.family_counts.resize(total + 1);
    t.schur.resize(total + 1);
    t.shifted_counts.resize(total + 1);

    SubsetCodec codec(n, k);
    std::vector<std::vector<int>> chi(total, std::vector<int>(n, 0));
    {
        std::uint64_t r = 0;
        codec.for_each_subset([&](const Subset& s) {
            for (int v : s) chi[r][v - 1] = 1;
            ++r;
        });
    }
    // family_counts must be monomial coefficients: the number of families
    // whose degree vector equals the sorted representative exactly, so only
    // weakly decreasing degree vectors are binned
    std::uint64_t nmasks = std::uint64_t(1) << total;
    std::vector<std::vector<int>> degs(nmasks);
    degs[0].assign(n, 0);
    t.family_counts[0][{}] += 1;
    for (std::uint64_t mask = 1; mask < nmasks; ++mask) {
        int bit = __builtin_ctzll(mask);
        degs[mask] = degs[mask & (mask - 1)];
        for (int i = 0; i < n; ++i) degs[mask][i] += chi[bit][i];
        if (!weakly_decreasing(degs[mask])) continue;
        int m = __builtin_popcountll(mask);
        Partition p = degs[mask];
        while (!p.empty() && p.back() == 0) p.pop_back();
        t.family_counts[m][p] += 1;
    }

    for_each_shifted_on(n, k, [&](const KFamily& K) {
        Partition d = normalized_partition(degree_sequence(K));
        t.shifted_counts[K.size()][d] += 1;
    });

    for (std::uint64_t m = 0; m <= total; ++m)
        t.schur[m] = detail::schur_from_monomial_slice(t.family_counts[m], n,
                                                       static_cast<int>(m) * k);
    std::lock_guard<std::mutex> g(mu);
    return memo.emplace(std::make_pair(n, k), std::move(t)).first->second;
}

struct SymmetryReport {
    bool ok = true;
    std::string failure;  // description of the first violation
};

// First symmetry: complementation within C([n],k) pairs the size-m and
// size-(C(n,k)-m) slices through the n x C(n-1,k-1) rectangle, for both the
// plethysm coefficients and the shifted counts.
inline SymmetryReport check_symmetry_one(int k, int n, int mmax = -1) {
    SymmetryReport rep;
    const FiniteSliceTable& t = finite_slice_table(n, k);
    int total = static_cast<int>(binomial(n, k));
    int bound = static_cast<int>(binomial(n - 1, k - 1));
    if (mmax < 0) mmax = total;
    auto check_tables = [&](const std::vector<std::map<Partition, mpz_class>>& tab,
                            const char* name) {
        for (int m = 0; m <= std::min(mmax, total); ++m) {
            for (const auto& [lam, c] : tab[m]) {
                if (!lam.empty() && lam[0] > bound) {
                    rep.ok = false;
                    rep.failure = std::string(name) + ": coefficient above the column bound";
                    return;
                }
                if (static_cast<int>(lam.size()) > n) continue;
                Partition comp = complement_in_rectangle(lam, n, bound);
                mpz_class other = [&]() {
                    auto& slot = tab[total - m];
                    auto it = slot.find(comp);
                    return it == slot.end() ? mpz_class(0) : it->second;
                }();
                if (other != c) {
                    rep.ok = false;
                    rep.failure = std::string(name) + ": complement coefficient mismatch";
                    return;
                }
            }
        }
    };
    check_tables(t.schur, "plethysm");
    if (rep.ok) check_tables(t.shifted_counts, "shifted");
    return rep;
}

// Second symmetry: complementation of members inside [n] relates k to n-k
// through the n x m rectangle: a_{lambda,k} = a_{M\lambda, n-k}, slice by slice.
inline SymmetryReport check_symmetry_two(int k, int n) {
    SymmetryReport rep;
    if (k > n) throw DomainError("check_symmetry_two: need k <= n");
    const FiniteSliceTable& tk = finite_slice_table(n, k);
    const FiniteSliceTable& tnk = finite_slice_table(n, n - k);
    int total = static_cast<int>(binomial(n, k));
    auto check = [&](const std::vector<std::map<Partition, mpz_class>>& a,
                     const std::vector<std::map<Partition, mpz_class>>& b, const char* name) {
        for (int m = 0; m <= total; ++m) {
            for (const auto& [lam, c] : a[m]) {
                if (!lam.empty() && lam[0] > m) {
                    rep.ok = false;
                    rep.failure = std::string(name) + ": coefficient above the size bound";
                    return;
                }
                Partition comp = complement_in_rectangle(lam, n, m);
                auto it = b[m].find(comp);
                mpz_class other = it == b[m].end() ? mpz_class(0) : it->second;
                if (other != c) {
                    rep.ok = false;
                    rep.failure = std::string(name) + ": k vs n-k mismatch";
                    return;
                }
            }
        }
    };
    check(tk.schur, tnk.schur, "plethysm");
    if (rep.ok) check(tk.shifted_counts, tnk.shifted_counts, "shifted");
    return rep;
}

}  // namespace hyperdeg
