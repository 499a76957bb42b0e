#pragma once

// Test-only oracles, independent of the library's enumeration paths.

#include <cstdint>
#include <map>
#include <vector>

#include "arrmorse/arrangement.hpp"

namespace arrmorse::oracle {

// Feasibility of {x : sign(<n_i,x> - c_i) = signs_i} by Fourier-Motzkin
// elimination with strict inequalities.
inline bool sign_vector_feasible(const Arrangement& arr, const std::vector<int>& signs) {
    // split into equalities and strict inequalities <a,x> > b
    Matrix eqs;
    Vector eq_rhs;
    std::vector<std::pair<Vector, Scalar>> ineqs;
    for (int i = 0; i < arr.size(); ++i) {
        const auto& h = arr.hyperplanes[i];
        if (signs[i] == 0) {
            eqs.push_back(h.normal);
            eq_rhs.push_back(h.offset);
        } else if (signs[i] > 0) {
            ineqs.push_back({h.normal, h.offset});
        } else {
            ineqs.push_back({scale(Scalar(-1), h.normal), -h.offset});
        }
    }
    // substitute the equality solution space: x = p + B t
    Vector p(arr.dim, Scalar(0));
    std::vector<Vector> basis;
    if (!eqs.empty()) {
        auto sol = solve(eqs, eq_rhs);
        if (!sol) return false;
        p = *sol;
        basis = nullspace(eqs);
    } else {
        for (int i = 0; i < arr.dim; ++i) {
            Vector e(arr.dim, Scalar(0));
            e[i] = Scalar(1);
            basis.push_back(e);
        }
    }
    std::vector<std::pair<Vector, Scalar>> sys;  // <a,t> > b
    for (auto& [n, c] : ineqs) {
        Vector a(basis.size());
        for (size_t j = 0; j < basis.size(); ++j) a[j] = dot(n, basis[j]);
        sys.push_back({a, c - dot(n, p)});
    }
    size_t vars = basis.size();
    // eliminate the last variable repeatedly
    while (vars > 0) {
        size_t v = vars - 1;
        std::vector<std::pair<Vector, Scalar>> lower, upper, rest;
        for (auto& [a, b] : sys) {
            int s = a[v].sign();
            Vector red(a.begin(), a.begin() + v);
            if (s == 0) rest.push_back({red, b});
            else {
                // t_v > (b - <red,t>)/a_v  or  t_v < ...
                Scalar inv = Scalar(1) / a[v];
                Vector norm = red;
                for (auto& x : norm) x *= inv;
                Scalar rhs = b * inv;
                if (s > 0) lower.push_back({norm, rhs});  // t_v > rhs - <norm',t>...
                else upper.push_back({norm, rhs});
            }
        }
        std::vector<std::pair<Vector, Scalar>> next = rest;
        // strict: need max(lowers) < min(uppers): pairwise lower < upper
        for (auto& [la, lb] : lower)
            for (auto& [ua, ub] : upper) {
                // lb - <la,t> < ub - <ua,t>  =>  <(la - ua), t> > lb - ub
                Vector a2 = sub(la, ua);
                next.push_back({a2, lb - ub});
            }
        sys = std::move(next);
        vars = v;
    }
    for (auto& [a, b] : sys)
        if (b.sign() >= 0) return false;  // 0 > b fails
    return true;
}

// every feasible sign vector, by exhaustive scan (3^m)
inline std::vector<std::vector<int>> all_faces_bruteforce(const Arrangement& arr) {
    std::vector<std::vector<int>> out;
    int m = arr.size();
    std::vector<int> signs(m, -1);
    long total = 1;
    for (int i = 0; i < m; ++i) total *= 3;
    for (long code = 0; code < total; ++code) {
        long c = code;
        for (int i = 0; i < m; ++i) {
            signs[i] = (int)(c % 3) - 1;
            c /= 3;
        }
        if (sign_vector_feasible(arr, signs)) out.push_back(signs);
    }
    return out;
}

// Möbius values by brute force over subset intersections.
struct BruteFlat {
    uint64_t mask;  // full set of containing hyperplanes
    int dim;
    long mobius;
};

inline std::vector<BruteFlat> mobius_bruteforce(const Arrangement& arr) {
    int m = arr.size();
    std::map<uint64_t, int> flats;  // full mask -> dim
    for (uint64_t sub = 0; sub < (1ull << m); ++sub) {
        Matrix sys;
        Vector rhs;
        for (int i = 0; i < m; ++i)
            if ((sub >> i) & 1) {
                sys.push_back(arr.hyperplanes[i].normal);
                rhs.push_back(arr.hyperplanes[i].offset);
            }
        if (sub == 0) {
            flats[0] = arr.dim;
            continue;
        }
        auto pt = solve(sys, rhs);
        if (!pt) continue;
        auto dirs = nullspace(sys);
        uint64_t full = 0;
        for (int i = 0; i < m; ++i) {
            const auto& h = arr.hyperplanes[i];
            if (!h.eval(*pt).is_zero()) continue;
            bool in = true;
            for (const auto& b : dirs) in &= dot(h.normal, b).is_zero();
            if (in) full |= 1ull << i;
        }
        flats[full] = (int)dirs.size();
    }
    std::vector<BruteFlat> out;
    for (auto& [mask, dim] : flats) out.push_back({mask, dim, 0});
    std::sort(out.begin(), out.end(),
              [](const BruteFlat& a, const BruteFlat& b) { return a.dim > b.dim; });
    for (size_t i = 0; i < out.size(); ++i) {
        long mu = i == 0 ? 1 : 0;
        for (size_t j = 0; j < i; ++j)
            if ((out[j].mask & ~out[i].mask) == 0) mu -= out[j].mobius;
        if (i == 0) mu = 1;
        out[i].mobius = mu;
    }
    return out;
}

inline std::vector<long> betti_bruteforce(const Arrangement& arr) {
    auto flats = mobius_bruteforce(arr);
    std::vector<long> b(arr.dim + 1, 0);
    for (const auto& f : flats) b[arr.dim - f.dim] += std::labs(f.mobius);
    while (b.size() > 1 && b.back() == 0) b.pop_back();
    return b;
}

}  // namespace arrmorse::oracle
