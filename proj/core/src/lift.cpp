#include "toric/lift.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "parallel.hpp"
#include "toric/cone.hpp"
#include "toric/ineq.hpp"
#include "toric/verify.hpp"

namespace toric {

GradedMatrix GradedMatrix::make(Matrix B, std::vector<int> phi, std::size_t t, Matrix A) {
    GradedMatrix g{std::move(B), std::move(phi), t, std::move(A)};
    if (g.phi.size() != g.B.cols()) throw std::invalid_argument("phi needs one entry per column of B");
    std::vector<bool> hit(t, false);
    for (int k : g.phi) {
        if (k < 0 || static_cast<std::size_t>(k) >= t) throw std::invalid_argument("phi index out of range");
        hit[static_cast<std::size_t>(k)] = true;
    }
    for (std::size_t k = 0; k < t; ++k)
        if (!hit[k]) throw std::invalid_argument("phi is not surjective onto [t]");
    if (!g.A.empty()) {
        if (g.A.cols() != t) throw std::invalid_argument("A must have t columns");
        Lattice K = kernel_lattice(g.B);
        for (auto& u : K.basis())
            if (!is_zero(g.A * g.apply(u))) throw std::invalid_argument("phi(ker B) is not contained in ker A");
    }
    return g;
}

Matrix GradedMatrix::phi_matrix() const {
    Matrix P(t, n());
    for (std::size_t i = 0; i < n(); ++i) P.at(static_cast<std::size_t>(phi[i]), i) = 1;
    return P;
}

Move GradedMatrix::apply(const Move& v) const {
    Move y(t, 0);
    for (std::size_t i = 0; i < v.size(); ++i) {
        auto& c = y[static_cast<std::size_t>(phi[i])];
        c = checked_add(c, v[i]);
    }
    return y;
}

Matrix augment(const GradedMatrix& g) { return g.B.vstack(g.phi_matrix()); }

BasisResult kernel_basis(const GradedMatrix& g, const Preorder& p) {
    Lattice K = kernel_lattice(augment(g));
    return p.trivial() ? markov_basis(K) : groebner_basis(K, p);
}

std::size_t codimension(const GradedMatrix& g) {
    std::vector<Move> images;
    Lattice K = kernel_lattice(g.B);
    for (auto& u : K.basis()) images.push_back(g.apply(u));
    if (images.empty()) return 0;
    return rank(Matrix::from_rows(images, g.t));
}

/////////////////////////////////////////////////////////////////////////////

Move ProjectedFiberDescription::representative(const Move& b) const {
    auto x = solve_generators(graded.B.col_list(), b);
    if (!x) throw std::invalid_argument("b is not in the lattice spanned by the columns of B");
    return graded.apply(*x);
}

Move ProjectedFiberDescription::rhs(const Move& b) const { return -(D1 * b); }

std::vector<Move> ProjectedFiberDescription::projected_fiber(const Move& b) const {
    return enumerate_ineq_fiber(L, representative(b), D2, rhs(b));
}

ProjectedFiberDescription pf_description(const GradedMatrix& g, const Matrix* facets, int hole_bound,
                                         bool assume_normal) {
    Matrix Bphi = augment(g);
    std::size_t h = g.B.rows();
    ProjectedFiberDescription desc;
    desc.graded = g;

    Matrix F;
    if (facets) {
        if (facets->cols() != h + g.t) throw std::invalid_argument("facet rows must have h + t entries");
        F = *facets;
        for (std::size_t r = 0; r < F.rows(); ++r)
            for (std::size_t j = 0; j < Bphi.cols(); ++j)
                if (dot(F.row(r), Bphi.col(j)) < 0)
                    throw std::invalid_argument("supplied facet row " + std::to_string(r) + " is negative on column " +
                                                std::to_string(j));
    } else {
        if (h + g.t > 12) throw std::invalid_argument("cone facets must be supplied when h + t exceeds 12");
        F = cone_facets(Bphi).facets;
    }

    // L = {u : (0 ; u) in Z B^phi} = phi(ker B)
    std::vector<Move> images;
    Lattice K = kernel_lattice(g.B);
    for (auto& u : K.basis()) images.push_back(g.apply(u));
    desc.L = Lattice::from_generators(g.t, images);

    // Facets in a fixed order: by the l1 norm of the primitive linear form
    // they induce on L, then lexicographically.
    std::vector<std::pair<Move, std::size_t>> order;
    for (std::size_t r = 0; r < F.rows(); ++r) {
        Move fr = F.row(r);
        Move d2(fr.begin() + static_cast<std::ptrdiff_t>(h), fr.end());
        Move form;
        for (auto& b : desc.L.basis()) form.push_back(dot(d2, b));
        Int c = 0;
        for (Int x : form) c = std::gcd(c, x < 0 ? -x : x);
        if (c > 1)
            for (auto& x : form) x /= c;
        form.insert(form.begin(), l1_norm(form));
        order.push_back({form, r});
    }
    std::stable_sort(order.begin(), order.end());
    {
        std::vector<Move> rows;
        for (auto& [key, r] : order) rows.push_back(F.row(r));
        F = Matrix::from_rows(rows, F.cols());
    }

    desc.D1 = Matrix(F.rows(), h);
    desc.D2 = Matrix(F.rows(), g.t);
    for (std::size_t r = 0; r < F.rows(); ++r) {
        for (std::size_t j = 0; j < h; ++j) desc.D1.at(r, j) = F.at(r, j);
        for (std::size_t j = 0; j < g.t; ++j) desc.D2.at(r, j) = F.at(r, h + j);
    }

    if (assume_normal) {
        desc.caveats.push_back("normality assumed by the caller");
    } else {
        auto H = holes(Bphi, hole_bound, facets ? &F : nullptr);
        if (!H.empty())
            throw holes_found("the semigroup of B^phi has a hole " + to_string(H.front()) + " of degree <= " +
                              std::to_string(hole_bound));
        desc.caveats.push_back("no holes found up to degree " + std::to_string(hole_bound));
    }
    return desc;
}

std::vector<Move> pf_groebner_basis(const ProjectedFiberDescription& desc, const Preorder& p_image) {
    if (desc.L.rank() == 0) return {};
    auto sys = InequalitySystem::on_lattice(desc.D2, desc.L);
    return p_image.trivial() ? inequality_markov_basis(sys) : inequality_groebner_basis(sys, p_image);
}

Preorder pullback_preorder(const GradedMatrix& g, const Preorder& p_image, const Preorder& tiebreak) {
    std::vector<std::vector<mpq_class>> w;
    if (!p_image.trivial()) {
        if (p_image.dim() != g.t) throw std::invalid_argument("image preorder must live on Z^t");
        for (auto& c : p_image.weights()) {
            std::vector<mpq_class> pulled(g.n());
            for (std::size_t i = 0; i < g.n(); ++i) pulled[i] = c[static_cast<std::size_t>(g.phi[i])];
            w.push_back(std::move(pulled));
        }
    }
    Preorder base = w.empty() ? Preorder() : Preorder(std::move(w));
    if (tiebreak.trivial()) return base;
    if (tiebreak.dim() != g.n()) throw std::invalid_argument("tiebreak preorder must live on Z^n");
    return base.trivial() ? tiebreak : base.refined_by(tiebreak);
}

std::vector<Move> lift_move(const GradedMatrix& g, const Move& move_g, const Preorder& p) {
    if (move_g.size() != g.t) throw std::invalid_argument("move_g must have t entries");
    if (is_zero(move_g)) return {};
    Lattice K = kernel_lattice(g.B);
    Matrix Phi = g.phi_matrix();
    {
        std::vector<Move> images;
        for (auto& u : K.basis()) images.push_back(g.apply(u));
        if (!Lattice::from_generators(g.t, images).member(move_g))
            throw std::invalid_argument("move " + to_string(move_g) + " is not in phi(ker B)");
    }
    // L_g = phi^{-1}(Z g) cap ker B; D_g = I_n with rows d_g and -d_g appended
    Lattice Lg = preimage_lattice(Phi, Lattice::from_basis(g.t, {move_g}), K);
    std::size_t n = g.n();
    Move dg(n);
    for (std::size_t i = 0; i < n; ++i) dg[i] = move_g[static_cast<std::size_t>(g.phi[i])];
    Matrix Dg = Matrix::identity(n).vstack(Matrix::from_rows({dg, -dg}, n));
    auto sys = InequalitySystem::on_lattice(Dg, Lg);
    auto Mg = p.trivial() ? inequality_markov_basis(sys) : inequality_groebner_basis(sys, p);
    std::vector<Move> out;
    for (auto& m : Mg) {
        Move y = g.apply(m);
        if (y == move_g) out.push_back(m);
        else if (y == -move_g) out.push_back(-m);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

LiftedBasis lifted_groebner_basis(const GradedMatrix& g, const ProjectedFiberDescription& desc,
                                  const Preorder& p_image, const Preorder& tiebreak, int threads) {
    LiftedBasis r;
    Preorder p = pullback_preorder(g, p_image, tiebreak);
    r.kernel = kernel_basis(g, p).moves;
    r.pf_basis = pf_groebner_basis(desc, p_image);
    r.caveats = desc.caveats;
    r.lifts.resize(r.pf_basis.size());
    detail::parallel_for(r.pf_basis.size(), threads, [&](std::size_t k) { r.lifts[k] = lift_move(g, r.pf_basis[k], p); });
    std::vector<Move> all = r.kernel;
    for (auto& L : r.lifts) all.insert(all.end(), L.begin(), L.end());
    r.basis.moves = canonical_set(all);
    r.basis.kind = p.trivial() ? BasisKind::markov : BasisKind::groebner;
    r.basis.order = p;
    r.basis.source = kernel_lattice(g.B);
    return r;
}

SlowVarying is_slow_varying(const std::vector<Move>& M, const GradedMatrix& g) {
    if (codimension(g) != 1) throw std::invalid_argument("slow-varying is defined for codimension one");
    SlowVarying r;
    r.slow = true;
    r.g = Move(g.t, 0);
    for (auto& m : M) {
        Move y = g.apply(m);
        if (is_zero(y)) continue;
        if (is_zero(r.g)) {
            r.g = canonical_sign(y);
            continue;
        }
        if (y != r.g && y != -r.g) {
            r.slow = false;
            r.g = y;
            return r;
        }
    }
    return r;
}

} // namespace toric
