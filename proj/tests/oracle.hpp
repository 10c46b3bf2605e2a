#pragma once

// Brute-force reference computations for the tests. Nothing here calls the
// library's algorithms; only the Move and Matrix containers are shared.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <vector>

#include "toric/intvec.hpp"

namespace oracle {

using toric::Int;
using toric::Matrix;
using toric::Move;

inline Move mul(const Matrix& B, const Move& v) {
    Move r(B.rows(), 0);
    for (std::size_t i = 0; i < B.rows(); ++i)
        for (std::size_t j = 0; j < B.cols(); ++j) r[i] += B.at(i, j) * v[j];
    return r;
}

// every v in N^n with sum(v) <= d
inline void points_up_to(std::size_t n, int d, const std::function<void(const Move&)>& f) {
    Move v(n, 0);
    std::function<void(std::size_t, int)> go = [&](std::size_t i, int left) {
        if (i == n) {
            f(v);
            return;
        }
        for (int x = 0; x <= left; ++x) {
            v[i] = x;
            go(i + 1, left - x);
        }
        v[i] = 0;
    };
    go(0, d);
}

// fibers of B (grouped by B v) among points of degree <= d
inline std::map<Move, std::vector<Move>> fibers(const Matrix& B, int d) {
    std::map<Move, std::vector<Move>> out;
    points_up_to(B.cols(), d, [&](const Move& v) { out[mul(B, v)].push_back(v); });
    return out;
}

// exhaustive fiber for B with an all-ones row combination: points of degree
// exactly deg with B v = b
inline std::vector<Move> fiber(const Matrix& B, const Move& b, int deg) {
    std::vector<Move> out;
    points_up_to(B.cols(), deg, [&](const Move& v) {
        if (mul(B, v) == b) out.push_back(v);
    });
    return out;
}

inline bool connected(const std::vector<Move>& pts, const std::vector<Move>& moves) {
    if (pts.empty()) return true;
    std::set<Move> all(pts.begin(), pts.end()), seen{pts.front()};
    std::queue<Move> q;
    q.push(pts.front());
    while (!q.empty()) {
        Move u = q.front();
        q.pop();
        for (auto& m : moves)
            for (int s : {1, -1}) {
                Move w(u.size());
                for (std::size_t i = 0; i < u.size(); ++i) w[i] = u[i] + s * m[i];
                if (all.count(w) && seen.insert(w).second) q.push(w);
            }
    }
    return seen.size() == all.size();
}

// every fiber of degree <= d connected by +-moves
inline bool markov_up_to(const Matrix& B, const std::vector<Move>& moves, int d) {
    for (auto& [b, pts] : fibers(B, d))
        if (!connected(pts, moves)) return false;
    return true;
}

// nonzero integer vectors in the box [-k, k]^n with B v = 0
inline std::vector<Move> kernel_box(const Matrix& B, int k) {
    std::size_t n = B.cols();
    std::vector<Move> out;
    Move v(n, -k);
    for (;;) {
        bool zero = std::all_of(v.begin(), v.end(), [](Int x) { return x == 0; });
        Move Bv = mul(B, v);
        if (!zero && std::all_of(Bv.begin(), Bv.end(), [](Int x) { return x == 0; })) out.push_back(v);
        std::size_t i = 0;
        while (i < n && ++v[i] > k) v[i++] = -k;
        if (i == n) break;
    }
    return out;
}

inline bool conformal_below(const Move& a, const Move& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        if ((a[i] > 0) != (b[i] > 0) || (a[i] < 0 ? -a[i] : a[i]) > (b[i] < 0 ? -b[i] : b[i])) return false;
    }
    return true;
}

inline Move sign_normal(Move v) {
    for (Int x : v) {
        if (x == 0) continue;
        if (x < 0)
            for (auto& y : v) y = -y;
        break;
    }
    return v;
}

// Graver elements among kernel vectors in the box (exact when the box
// contains the whole Graver basis), first nonzero entry positive
inline std::vector<Move> graver_box(const Matrix& B, int k) {
    auto K = kernel_box(B, k);
    std::set<Move> out;
    for (auto& v : K) {
        bool prim = true;
        for (auto& w : K)
            if (w != v && conformal_below(w, v)) {
                prim = false;
                break;
            }
        if (prim) out.insert(sign_normal(v));
    }
    return {out.begin(), out.end()};
}

inline std::vector<Move> sign_normal_set(std::vector<Move> v) {
    for (auto& m : v) m = sign_normal(m);
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

// integer points y with D y >= c inside the box [-k, k]^n
inline std::vector<Move> ineq_points(const Matrix& D, const Move& c, int k) {
    std::size_t n = D.cols();
    std::vector<Move> out;
    Move v(n, -k);
    for (;;) {
        Move Dv = mul(D, v);
        bool ok = true;
        for (std::size_t i = 0; i < Dv.size(); ++i) ok = ok && Dv[i] >= c[i];
        if (ok) out.push_back(v);
        std::size_t i = 0;
        while (i < n && ++v[i] > k) v[i++] = -k;
        if (i == n) break;
    }
    return out;
}

inline Matrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = d(rng);
    return m;
}

} // namespace oracle
