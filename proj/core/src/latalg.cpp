#include "toric/latalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace toric {

namespace {

void row_axpy(std::vector<mpz_class>& dst, const mpz_class& q, const std::vector<mpz_class>& src) {
    for (std::size_t j = 0; j < dst.size(); ++j)
        if (src[j] != 0) dst[j] -= q * src[j];
}

Move to_move(const std::vector<mpz_class>& r) {
    Move m(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) m[i] = to_int(r[i]);
    return m;
}

} // namespace

ZMat to_zmat(const std::vector<Move>& rows) {
    ZMat z;
    for (auto& r : rows) {
        std::vector<mpz_class> zr;
        for (Int x : r) zr.emplace_back(static_cast<long>(x));
        z.push_back(std::move(zr));
    }
    return z;
}

EchelonForm hermite_rows(const ZMat& input, std::size_t cols, bool track) {
    ZMat a = input;
    std::size_t m = a.size();
    ZMat u;
    if (track) {
        u.assign(m, std::vector<mpz_class>(m, 0));
        for (std::size_t i = 0; i < m; ++i) u[i][i] = 1;
    }
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m; ++c) {
        // Euclid on column c among rows r..m-1
        while (true) {
            std::size_t best = m;
            for (std::size_t i = r; i < m; ++i)
                if (a[i][c] != 0 && (best == m || abs(a[i][c]) < abs(a[best][c]))) best = i;
            if (best == m) break;
            std::swap(a[r], a[best]);
            if (track) std::swap(u[r], u[best]);
            bool done = true;
            for (std::size_t i = r + 1; i < m; ++i) {
                if (a[i][c] == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), a[i][c].get_mpz_t(), a[r][c].get_mpz_t());
                row_axpy(a[i], q, a[r]);
                if (track) row_axpy(u[i], q, u[r]);
                if (a[i][c] != 0) done = false;
            }
            if (done) break;
        }
        if (a[r][c] == 0) continue;
        if (a[r][c] < 0) {
            for (auto& x : a[r]) x = -x;
            if (track)
                for (auto& x : u[r]) x = -x;
        }
        for (std::size_t i = 0; i < r; ++i) {
            if (a[i][c] == 0) continue;
            mpz_class q;
            mpz_fdiv_q(q.get_mpz_t(), a[i][c].get_mpz_t(), a[r][c].get_mpz_t());
            row_axpy(a[i], q, a[r]);
            if (track) row_axpy(u[i], q, u[r]);
        }
        pivots.push_back(c);
        ++r;
    }
    EchelonForm e;
    e.rows.assign(a.begin(), a.begin() + r);
    e.pivots = std::move(pivots);
    if (track) e.transform = std::move(u);
    return e;
}

std::size_t rank(const Matrix& m) {
    return hermite_rows(to_zmat(m.row_list()), m.cols()).rows.size();
}

/////////////////////////////////////////////////////////////////////////////

Lattice Lattice::zero(std::size_t n) {
    Lattice l;
    l.n_ = n;
    return l;
}

Lattice Lattice::full(std::size_t n) {
    std::vector<Move> b;
    for (std::size_t i = 0; i < n; ++i) {
        Move e(n, 0);
        e[i] = 1;
        b.push_back(e);
    }
    return from_basis(n, b);
}

Lattice Lattice::from_generators(std::size_t n, const std::vector<Move>& gens) {
    for (auto& g : gens)
        if (g.size() != n) throw std::invalid_argument("generator dimension mismatch");
    auto e = hermite_rows(to_zmat(gens), n);
    Lattice l;
    l.n_ = n;
    for (auto& r : e.rows) l.basis_.push_back(to_move(r));
    l.build_echelon();
    return l;
}

Lattice Lattice::from_basis(std::size_t n, const std::vector<Move>& basis) {
    for (auto& g : basis)
        if (g.size() != n) throw std::invalid_argument("basis dimension mismatch");
    Lattice l;
    l.n_ = n;
    l.basis_ = basis;
    l.build_echelon();
    if (l.hnf_.size() != basis.size()) throw std::invalid_argument("basis vectors are linearly dependent");
    return l;
}

void Lattice::build_echelon() {
    auto e = hermite_rows(to_zmat(basis_), n_, true);
    hnf_.clear();
    transform_.clear();
    for (auto& r : e.rows) hnf_.push_back(to_move(r));
    pivots_ = e.pivots;
    for (std::size_t k = 0; k < e.rows.size(); ++k) transform_.push_back(to_move(e.transform[k]));
}

std::optional<Move> Lattice::solve(const Move& v) const {
    if (v.size() != n_) throw std::invalid_argument("dimension mismatch");
    std::vector<mpz_class> rest(v.begin(), v.end());
    std::vector<mpz_class> c(hnf_.size());
    for (std::size_t k = 0; k < hnf_.size(); ++k) {
        std::size_t p = pivots_[k];
        // columns before p are already zero
        if (rest[p] % hnf_[k][p] != 0) return std::nullopt;
        c[k] = rest[p] / hnf_[k][p];
        for (std::size_t j = p; j < n_; ++j)
            if (hnf_[k][j]) rest[j] -= c[k] * hnf_[k][j];
    }
    for (auto& x : rest)
        if (x != 0) return std::nullopt;
    std::vector<mpz_class> a(basis_.size(), 0);
    for (std::size_t k = 0; k < hnf_.size(); ++k)
        for (std::size_t j = 0; j < basis_.size(); ++j)
            if (transform_[k][j]) a[j] += c[k] * transform_[k][j];
    return to_move(a);
}

bool Lattice::member(const Move& v) const { return solve(v).has_value(); }

Move Lattice::coset_rep(const Move& v) const {
    if (v.size() != n_) throw std::invalid_argument("dimension mismatch");
    std::vector<mpz_class> r(v.begin(), v.end());
    for (std::size_t k = 0; k < hnf_.size(); ++k) {
        std::size_t p = pivots_[k];
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), r[p].get_mpz_t(), mpz_class(static_cast<long>(hnf_[k][p])).get_mpz_t());
        if (q != 0)
            for (std::size_t j = p; j < n_; ++j)
                if (hnf_[k][j]) r[j] -= q * hnf_[k][j];
    }
    return to_move(r);
}

bool Lattice::contains(const Lattice& o) const {
    if (o.n_ != n_) return false;
    for (auto& b : o.basis_)
        if (!member(b)) return false;
    return true;
}

bool Lattice::orthogonal_to(const Move& w) const {
    for (auto& b : basis_) {
        __int128 s = 0;
        for (std::size_t i = 0; i < n_; ++i) s += static_cast<__int128>(b[i]) * w[i];
        if (s != 0) return false;
    }
    return true;
}

/////////////////////////////////////////////////////////////////////////////

Lattice kernel_lattice(const Matrix& B) {
    std::size_t n = B.cols();
    auto e = hermite_rows(to_zmat(B.transpose().row_list()), B.rows(), true);
    std::vector<Move> gens;
    for (std::size_t i = e.rows.size(); i < n; ++i) gens.push_back(to_move(e.transform[i]));
    return Lattice::from_generators(n, gens);
}

// integer relations: all x with sum x_j gens_j = 0
static std::vector<Move> relations(const std::vector<Move>& gens, std::size_t n) {
    auto e = hermite_rows(to_zmat(gens), n, true);
    std::vector<Move> rel;
    for (std::size_t i = e.rows.size(); i < gens.size(); ++i) rel.push_back(to_move(e.transform[i]));
    return rel;
}

Lattice intersect(const Lattice& a, const Lattice& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("ambient dimension mismatch");
    std::size_t n = a.ambient_dim();
    std::vector<Move> gens = a.basis();
    for (auto& v : b.basis()) gens.push_back(-v);
    std::vector<Move> out;
    for (auto& r : relations(gens, n)) {
        Move v(n, 0);
        for (std::size_t j = 0; j < a.rank(); ++j)
            if (r[j]) v = v + r[j] * a.basis()[j];
        out.push_back(v);
    }
    return Lattice::from_generators(n, out);
}

Lattice preimage_lattice(const Matrix& map, const Lattice& target, const Lattice& domain) {
    if (map.cols() != domain.ambient_dim() || map.rows() != target.ambient_dim())
        throw std::invalid_argument("preimage shape mismatch");
    std::size_t t = map.rows();
    std::vector<Move> gens;
    for (auto& d : domain.basis()) gens.push_back(map * d);
    for (auto& v : target.basis()) gens.push_back(-v);
    std::vector<Move> out;
    for (auto& r : relations(gens, t)) {
        Move v(domain.ambient_dim(), 0);
        for (std::size_t j = 0; j < domain.rank(); ++j)
            if (r[j]) v = v + r[j] * domain.basis()[j];
        out.push_back(v);
    }
    return Lattice::from_generators(domain.ambient_dim(), out);
}

Lattice image_lattice(const Matrix& map, const Lattice& domain) {
    std::vector<Move> gens;
    for (auto& d : domain.basis()) gens.push_back(map * d);
    return Lattice::from_generators(map.rows(), gens);
}

std::optional<Move> solve_generators(const std::vector<Move>& gens, const Move& v) {
    std::size_t n = v.size();
    if (gens.empty()) return is_zero(v) ? std::optional<Move>(Move{}) : std::nullopt;
    auto e = hermite_rows(to_zmat(gens), n, true);
    std::vector<mpz_class> rest(v.begin(), v.end());
    std::vector<mpz_class> c(e.rows.size());
    for (std::size_t k = 0; k < e.rows.size(); ++k) {
        std::size_t p = e.pivots[k];
        if (rest[p] % e.rows[k][p] != 0) return std::nullopt;
        c[k] = rest[p] / e.rows[k][p];
        for (std::size_t j = p; j < n; ++j)
            if (e.rows[k][j] != 0) rest[j] -= c[k] * e.rows[k][j];
    }
    for (auto& x : rest)
        if (x != 0) return std::nullopt;
    std::vector<mpz_class> a(gens.size(), 0);
    for (std::size_t k = 0; k < e.rows.size(); ++k)
        for (std::size_t j = 0; j < gens.size(); ++j)
            if (e.transform[k][j] != 0) a[j] += c[k] * e.transform[k][j];
    return to_move(a);
}

/////////////////////////////////////////////////////////////////////////////

QuotientMap quotient_map(const Lattice& L, const Matrix& D) {
    if (D.cols() != L.ambient_dim()) throw std::invalid_argument("D has wrong number of columns");
    QuotientMap q;
    q.source = L;
    q.D = D;
    std::size_t t = L.rank();
    std::vector<Move> dl; // columns of D * Lb, as rows of its transpose
    for (auto& b : L.basis()) dl.push_back(D * b);
    auto e = hermite_rows(to_zmat(dl), D.rows(), true);
    std::size_t s = e.rows.size();
    if (s == t) {
        q.L1 = L.basis();
    } else {
        for (std::size_t k = 0; k < t; ++k) {
            Move v(L.ambient_dim(), 0);
            for (std::size_t j = 0; j < t; ++j)
                if (e.transform[k][j] != 0) v = v + to_int(e.transform[k][j]) * L.basis()[j];
            (k < s ? q.L1 : q.L2).push_back(v);
        }
    }
    std::vector<Move> cols;
    for (auto& v : q.L1) cols.push_back(D * v);
    q.D_reduced = Matrix::from_cols(cols, D.rows());
    return q;
}

std::pair<Move, Move> QuotientMap::forward(const Move& u) const {
    std::vector<Move> all = L1;
    all.insert(all.end(), L2.begin(), L2.end());
    auto c = Lattice::from_basis(source.ambient_dim(), all).solve(u);
    if (!c) throw std::invalid_argument("vector not in the lattice");
    Move a(c->begin(), c->begin() + L1.size());
    Move b(c->begin() + L1.size(), c->end());
    return {a, b};
}

Move QuotientMap::backward(const Move& a, const Move& b) const {
    if (a.size() != L1.size() || b.size() != L2.size()) throw std::invalid_argument("coordinate length mismatch");
    Move v(source.ambient_dim(), 0);
    for (std::size_t j = 0; j < L1.size(); ++j)
        if (a[j]) v = v + a[j] * L1[j];
    for (std::size_t j = 0; j < L2.size(); ++j)
        if (b[j]) v = v + b[j] * L2[j];
    return v;
}

/////////////////////////////////////////////////////////////////////////////

std::optional<QVec> solve_rational(const std::vector<QVec>& A, const QVec& b) {
    std::size_t m = A.size();
    if (b.size() != m) throw std::invalid_argument("rhs length mismatch");
    std::size_t n = m ? A.front().size() : 0;
    std::vector<QVec> a = A;
    QVec rhs = b;
    std::vector<std::size_t> piv;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        std::size_t p = r;
        while (p < m && a[p][c] == 0) ++p;
        if (p == m) continue;
        std::swap(a[p], a[r]);
        std::swap(rhs[p], rhs[r]);
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r || a[i][c] == 0) continue;
            mpq_class f = a[i][c] / a[r][c];
            for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[r][j];
            rhs[i] -= f * rhs[r];
        }
        piv.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < m; ++i)
        if (rhs[i] != 0) return std::nullopt;
    QVec x(n, 0);
    for (std::size_t k = 0; k < r; ++k) x[piv[k]] = rhs[k] / a[k][piv[k]];
    return x;
}

} // namespace toric
