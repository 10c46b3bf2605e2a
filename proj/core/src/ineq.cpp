#include "toric/ineq.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <random>
#include <stdexcept>

#include "toric/cone.hpp"

namespace toric {

InequalitySystem InequalitySystem::over_integers(const Matrix& D) { return {D, Lattice::full(D.cols())}; }

InequalitySystem InequalitySystem::on_lattice(const Matrix& D, const Lattice& L) {
    if (D.cols() != L.ambient_dim()) throw std::invalid_argument("D and L have different ambient dimensions");
    return {D, L};
}

namespace {

// row divided by the gcd of its entries, and that gcd
std::pair<Move, Int> primitive_part(Move r) {
    Int g = 0;
    for (Int x : r) g = std::gcd(g, x < 0 ? -x : x);
    if (g > 1)
        for (auto& x : r) x /= g;
    return {r, g};
}

} // namespace

ReducedSystem reduce_full_rank(const InequalitySystem& sys) {
    ReducedSystem red;
    red.iota = quotient_map(sys.L, sys.D);
    red.kernel_generators = red.iota.L2;
    const Matrix& Dr = red.iota.D_reduced;
    std::vector<Move> rows;
    std::set<Move> seen;
    for (std::size_t i = 0; i < Dr.rows(); ++i) {
        auto [r, g] = primitive_part(Dr.row(i));
        if (g == 0 || !seen.insert(r).second) continue;
        rows.push_back(r);
        red.kept_rows.push_back(i);
    }
    red.D_tilde = Matrix::from_rows(rows, Dr.cols());
    return red;
}

namespace {

// g' in Z D_tilde -> u in L
Move pull_back(const ReducedSystem& red, const Move& image) {
    auto x = solve_generators(red.D_tilde.col_list(), image);
    if (!x) throw std::logic_error("image move outside the column lattice");
    return red.iota.backward(*x, Move(red.iota.L2.size(), 0));
}

Lattice column_lattice(const ReducedSystem& red) {
    return Lattice::from_basis(red.D_tilde.rows(), red.D_tilde.col_list());
}

} // namespace

std::vector<Move> inequality_markov_basis(const InequalitySystem& sys) {
    auto red = reduce_full_rank(sys);
    std::vector<Move> out;
    if (red.D_tilde.cols() > 0)
        for (auto& g : markov_basis(column_lattice(red)).moves) out.push_back(pull_back(red, g));
    for (auto& k : red.kernel_generators) out.push_back(k);
    return canonical_set(out);
}

Preorder induced_preorder(const ReducedSystem& red, const Preorder& p) {
    const Matrix& Dt = red.D_tilde;
    std::size_t s = Dt.cols();
    std::vector<QVec> A;
    for (std::size_t j = 0; j < s; ++j) {
        QVec row;
        for (std::size_t i = 0; i < Dt.rows(); ++i) row.emplace_back(static_cast<long>(Dt.at(i, j)));
        A.push_back(row);
    }
    std::vector<std::vector<mpq_class>> weights;
    for (auto& c : p.weights()) {
        QVec rhs;
        for (auto& l : red.iota.L1) {
            mpq_class acc = 0;
            for (std::size_t i = 0; i < l.size(); ++i) acc += c[i] * static_cast<long>(l[i]);
            rhs.push_back(acc);
        }
        auto y = solve_rational(A, rhs);
        if (!y) throw std::logic_error("induced preorder: system unsolvable");
        weights.push_back(*y);
    }
    return Preorder(weights);
}

std::vector<Move> inequality_groebner_basis(const InequalitySystem& sys, const Preorder& p,
                                            const Preorder* image_order) {
    if (p.trivial() && (!image_order || image_order->trivial())) return inequality_markov_basis(sys);
    auto red = reduce_full_rank(sys);
    if (!red.kernel_generators.empty())
        throw std::invalid_argument("D has a kernel on L; fibers are unbounded and have no minima");
    if (red.D_tilde.cols() == 0) return {};
    Preorder q = image_order ? *image_order : induced_preorder(red, p);
    if (image_order) {
        std::mt19937 rng(7);
        std::uniform_int_distribution<int> coef(-3, 3);
        const auto& basis = sys.L.basis();
        for (int s = 0; s < 200; ++s) {
            Move u(sys.L.ambient_dim(), 0);
            for (auto& b : basis) u = u + coef(rng) * b;
            Move zero(sys.L.ambient_dim(), 0);
            if (p.compare(u, zero) != q.compare(sys.D * u, sys.D * zero))
                throw std::invalid_argument("preorders are not compatible with D on L");
        }
    }
    if (image_order) {
        // fold weights of dropped rows onto their kept (rescaled) duplicates
        const Matrix& Dr = red.iota.D_reduced;
        std::vector<std::vector<mpq_class>> folded;
        for (auto& c : q.weights()) {
            std::vector<mpq_class> f(red.D_tilde.rows(), 0);
            for (std::size_t i = 0; i < Dr.rows(); ++i) {
                auto [r, g] = primitive_part(Dr.row(i));
                for (std::size_t k = 0; k < red.D_tilde.rows(); ++k)
                    if (r == red.D_tilde.row(k)) f[k] += c[i] * static_cast<long>(g);
            }
            folded.push_back(f);
        }
        q = Preorder(folded);
    }
    auto gb = groebner_basis(column_lattice(red), q);
    std::vector<Move> out;
    for (auto& g : gb.moves) out.push_back(pull_back(red, g));
    return canonical_set(out);
}

InequalitySystem sums_system(int t) {
    if (t < 1) throw std::invalid_argument("sums_system needs t >= 1");
    if (t > 8) throw std::invalid_argument("sums_system: t too large");
    std::vector<Move> rows;
    for (unsigned mask = 1; mask < (1u << t); ++mask) {
        Move r(static_cast<std::size_t>(t), 0);
        for (int i = 0; i < t; ++i)
            if (mask & (1u << i)) r[static_cast<std::size_t>(i)] = 1;
        rows.push_back(r);
        rows.push_back(-r);
    }
    return InequalitySystem::over_integers(Matrix::from_rows(rows, static_cast<std::size_t>(t)));
}

Move sums_table_row(const Move& x) {
    Move r = x;
    Int s = 0;
    for (Int v : x) s = checked_add(s, v);
    r.push_back(-s);
    return r;
}

Move sums_symmetry_class(const Move& row) {
    Move a = row, b = -row;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return std::min(a, b);
}

} // namespace toric
