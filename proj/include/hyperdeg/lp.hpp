#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "hyperdeg/common.hpp"

namespace hyperdeg {

using Rational = mpq_class;

inline std::string rational_to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Rational rational_from_string(const std::string& s) {
    Rational q(s);
    q.canonicalize();
    return q;
}

namespace lp {

enum class Rel { LE, GE, EQ };

struct Constraint {
    std::vector<Rational> a;
    Rel rel;
    Rational b;
};

// Phase-1 simplex feasibility of { a_i · x (rel_i) b_i, x >= 0 } in exact
// rational arithmetic.  Dantzig pricing with a switch to Bland's rule after a
// fixed number of pivots, so termination is guaranteed.  Returns a feasible
// point or nullopt.
inline std::optional<std::vector<Rational>> feasible_point(
    int nvars, const std::vector<Constraint>& cons) {
    int m = static_cast<int>(cons.size());

    // column layout: x (nvars) | slack/surplus | artificial
    int nslack = 0;
    for (const auto& c : cons)
        if (c.rel != Rel::EQ) ++nslack;

    // rows are normalized to b >= 0; an artificial is needed unless the row's
    // slack can start basic (effective LE after normalization)
    int nart = 0;
    for (const auto& c : cons) {
        Rel eff = c.rel;
        if (c.b < 0) eff = (c.rel == Rel::LE) ? Rel::GE : (c.rel == Rel::GE ? Rel::LE : Rel::EQ);
        if (eff != Rel::LE) ++nart;
    }

    int ncols = nvars + nslack + nart;
    std::vector<std::vector<Rational>> T(m, std::vector<Rational>(ncols));
    std::vector<Rational> rhs(m);
    std::vector<int> basis(m, -1);

    int si = 0, ai = 0;
    for (int i = 0; i < m; ++i) {
        const auto& c = cons[i];
        if (static_cast<int>(c.a.size()) != nvars)
            throw DomainError("lp: constraint arity mismatch");
        bool flip = c.b < 0;
        Rational sign = flip ? -1 : 1;
        for (int j = 0; j < nvars; ++j) T[i][j] = sign * c.a[j];
        rhs[i] = sign * c.b;
        if (c.rel != Rel::EQ) {
            // slack (+1 for LE, -1 for GE), then flipped with the row
            Rational s = (c.rel == Rel::LE) ? 1 : -1;
            T[i][nvars + si] = sign * s;
            ++si;
        }
        Rel eff = c.rel;
        if (flip) eff = (c.rel == Rel::LE) ? Rel::GE : (c.rel == Rel::GE ? Rel::LE : Rel::EQ);
        if (eff == Rel::LE) {
            basis[i] = nvars + si - 1;
        } else {
            T[i][nvars + nslack + ai] = 1;
            basis[i] = nvars + nslack + ai;
            ++ai;
        }
    }

    // phase-1 objective: minimize the sum of artificials
    std::vector<Rational> red(ncols);  // reduced costs
    for (int j = nvars + nslack; j < ncols; ++j) red[j] = 1;
    for (int i = 0; i < m; ++i)
        if (basis[i] >= nvars + nslack)
            for (int j = 0; j < ncols; ++j) red[j] -= T[i][j];

    long iter = 0;
    const long bland_after = 2000 + 4L * (m + ncols);
    while (true) {
        ++iter;
        bool bland = iter > bland_after;
        int enter = -1;
        if (bland) {
            for (int j = 0; j < ncols; ++j)
                if (red[j] < 0) {
                    enter = j;
                    break;
                }
        } else {
            const Rational* best = nullptr;
            for (int j = 0; j < ncols; ++j)
                if (red[j] < 0 && (!best || red[j] < *best)) {
                    best = &red[j];
                    enter = j;
                }
        }
        if (enter < 0) break;

        int leave = -1;
        Rational best_ratio;
        for (int i = 0; i < m; ++i) {
            if (T[i][enter] > 0) {
                Rational ratio = rhs[i] / T[i][enter];
                if (leave < 0 || ratio < best_ratio ||
                    (ratio == best_ratio && basis[i] < basis[leave])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
        }
        if (leave < 0)
            throw InternalCheckError("lp: phase-1 objective unbounded");

        // pivot on (leave, enter)
        Rational piv = T[leave][enter];
        for (int j = 0; j < ncols; ++j) T[leave][j] /= piv;
        rhs[leave] /= piv;
        for (int i = 0; i < m; ++i) {
            if (i == leave) continue;
            if (T[i][enter] == 0) continue;
            Rational f = T[i][enter];
            for (int j = 0; j < ncols; ++j)
                if (T[leave][j] != 0) T[i][j] -= f * T[leave][j];
            rhs[i] -= f * rhs[leave];
        }
        if (red[enter] != 0) {
            Rational f = red[enter];
            for (int j = 0; j < ncols; ++j)
                if (T[leave][j] != 0) red[j] -= f * T[leave][j];
        }
        basis[leave] = enter;
    }

    Rational z = 0;  // optimal sum of artificials
    for (int i = 0; i < m; ++i)
        if (basis[i] >= nvars + nslack) z += rhs[i];
    if (z != 0) return std::nullopt;
    std::vector<Rational> x(nvars, 0);
    for (int i = 0; i < m; ++i)
        if (basis[i] < nvars) x[basis[i]] = rhs[i];
    return x;
}

}  // namespace lp
}  // namespace hyperdeg
