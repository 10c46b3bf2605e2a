#include "toric/cone.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>

#include "toric/latalg.hpp"

namespace toric {

namespace {

using ZVec = std::vector<mpz_class>;
using Bits = std::vector<std::uint64_t>;

struct Ray {
    ZVec v;
    Bits zeros;
};

void set_bit(Bits& b, std::size_t i) { b[i / 64] |= std::uint64_t(1) << (i % 64); }

std::size_t popcount(const Bits& b) {
    std::size_t c = 0;
    for (auto w : b) c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
}

bool superset(const Bits& a, const Bits& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if ((a[i] & b[i]) != b[i]) return false;
    return true;
}

void make_primitive(ZVec& v) {
    mpz_class g = 0;
    for (auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g > 1)
        for (auto& x : v) x /= g;
}

mpz_class row_dot(const Matrix& A, std::size_t i, const ZVec& v) {
    mpz_class s = 0;
    for (std::size_t j = 0; j < v.size(); ++j)
        if (A.at(i, j)) s += v[j] * static_cast<long>(A.at(i, j));
    return s;
}

Move to_move(const ZVec& v) {
    Move m(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) m[i] = to_int(v[i]);
    return m;
}

} // namespace

std::vector<Move> extreme_rays(const Matrix& A) {
    std::size_t m = A.rows(), k = A.cols();
    if (k == 0) return {};
    // greedy choice of k independent rows
    std::vector<std::size_t> basis_rows;
    std::vector<Move> chosen;
    for (std::size_t i = 0; i < m && chosen.size() < k; ++i) {
        chosen.push_back(A.row(i));
        if (hermite_rows(to_zmat(chosen), k).rows.size() == chosen.size()) basis_rows.push_back(i);
        else chosen.pop_back();
    }
    if (chosen.size() < k) throw std::invalid_argument("extreme_rays: matrix lacks full column rank");

    std::size_t words = (m + 63) / 64;
    std::vector<Ray> rays;
    std::vector<QVec> M;
    for (auto& r : chosen) {
        QVec q;
        for (Int x : r) q.emplace_back(static_cast<long>(x));
        M.push_back(q);
    }
    for (std::size_t j = 0; j < k; ++j) {
        QVec e(k, 0);
        e[j] = 1;
        auto x = solve_rational(M, e);
        mpz_class l = 1;
        for (auto& q : *x) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
        Ray r;
        for (auto& q : *x) r.v.push_back(mpz_class(q * l));
        make_primitive(r.v);
        r.zeros.assign(words, 0);
        for (std::size_t jj = 0; jj < k; ++jj)
            if (jj != j) set_bit(r.zeros, basis_rows[jj]);
        rays.push_back(std::move(r));
    }

    std::vector<bool> processed(m, false);
    for (auto i : basis_rows) processed[i] = true;
    for (std::size_t i = 0; i < m; ++i) {
        if (processed[i]) continue;
        processed[i] = true;
        std::vector<mpz_class> s(rays.size());
        std::vector<std::size_t> pos, neg;
        std::vector<Ray> next;
        for (std::size_t r = 0; r < rays.size(); ++r) {
            s[r] = row_dot(A, i, rays[r].v);
            if (s[r] > 0) pos.push_back(r);
            else if (s[r] < 0) neg.push_back(r);
        }
        for (auto p : pos) next.push_back(rays[p]);
        for (std::size_t r = 0; r < rays.size(); ++r)
            if (s[r] == 0) {
                next.push_back(rays[r]);
                set_bit(next.back().zeros, i);
            }
        for (auto p : pos)
            for (auto q : neg) {
                Bits common(words);
                for (std::size_t w = 0; w < words; ++w) common[w] = rays[p].zeros[w] & rays[q].zeros[w];
                if (popcount(common) + 2 < k) continue;
                bool adjacent = true;
                for (std::size_t r = 0; r < rays.size() && adjacent; ++r)
                    if (r != p && r != q && superset(rays[r].zeros, common)) adjacent = false;
                if (!adjacent) continue;
                Ray nr;
                nr.v.resize(k);
                for (std::size_t j = 0; j < k; ++j) nr.v[j] = s[p] * rays[q].v[j] - s[q] * rays[p].v[j];
                make_primitive(nr.v);
                nr.zeros = common;
                set_bit(nr.zeros, i);
                next.push_back(std::move(nr));
            }
        rays = std::move(next);
    }
    std::vector<Move> out;
    for (auto& r : rays) out.push_back(to_move(r.v));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

ConeDescription cone_facets(const Matrix& G) {
    std::size_t h = G.rows();
    auto span = hermite_rows(to_zmat(G.transpose().row_list()), h);
    std::vector<Move> P;
    for (auto& r : span.rows) {
        Move v;
        for (auto& x : r) v.push_back(to_int(x));
        P.push_back(v);
    }
    ConeDescription d;
    d.equations = Matrix::from_rows(kernel_lattice(G.transpose()).basis(), h);
    if (P.empty()) {
        d.facets = Matrix(0, h);
        return d;
    }
    Matrix A(G.cols(), P.size());
    for (std::size_t i = 0; i < G.cols(); ++i) {
        Move g = G.col(i);
        for (std::size_t j = 0; j < P.size(); ++j) A.at(i, j) = dot(g, P[j]);
    }
    std::vector<Move> facets;
    for (auto& z : extreme_rays(A)) {
        ZVec y(h, 0);
        for (std::size_t j = 0; j < P.size(); ++j)
            for (std::size_t r = 0; r < h; ++r) y[r] += mpz_class(static_cast<long>(z[j])) * static_cast<long>(P[j][r]);
        make_primitive(y);
        facets.push_back(to_move(y));
    }
    std::sort(facets.begin(), facets.end());
    d.facets = Matrix::from_rows(facets, h);
    return d;
}

PolyhedronVRep polyhedron_vertices(const Matrix& A, const Move& c) {
    std::size_t m = A.rows(), k = A.cols();
    if (c.size() != m) throw std::invalid_argument("rhs length mismatch");
    Matrix H(m + 1, k + 1);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < k; ++j) H.at(i, j) = A.at(i, j);
        H.at(i, k) = checked_sub(0, c[i]);
    }
    H.at(m, k) = 1;
    PolyhedronVRep out;
    for (auto& r : extreme_rays(H)) {
        if (r[k] == 0) {
            out.rays.emplace_back(r.begin(), r.begin() + k);
        } else {
            std::vector<mpq_class> v;
            for (std::size_t j = 0; j < k; ++j) v.emplace_back(mpz_class(static_cast<long>(r[j])), mpz_class(static_cast<long>(r[k])));
            for (auto& q : v) q.canonicalize();
            out.vertices.push_back(std::move(v));
        }
    }
    return out;
}

Move max_support_nonneg(const std::vector<Move>& basis, std::size_t n) {
    Move sum(n, 0);
    if (basis.empty()) return sum;
    Matrix Lb = Matrix::from_cols(basis, n);
    for (auto& a : extreme_rays(Lb)) sum = sum + Lb * a;
    return sum;
}

std::optional<Move> positive_grading(const std::vector<Move>& basis, std::size_t n) {
    Move ones(n, 1);
    bool orth = true;
    for (auto& b : basis)
        if (dot(b, ones) != 0) orth = false;
    if (orth) return ones;
    auto perp = kernel_lattice(Matrix::from_rows(basis, n));
    if (perp.rank() == 0) return std::nullopt;
    Matrix K = perp.basis_matrix();
    Move y(n, 0);
    for (auto& z : extreme_rays(K)) y = y + K * z;
    for (Int x : y)
        if (x <= 0) return std::nullopt;
    Int g = 0;
    for (Int x : y) g = std::gcd(g, x);
    for (Int& x : y) x /= g;
    return y;
}

} // namespace toric
