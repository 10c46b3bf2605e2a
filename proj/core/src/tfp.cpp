#include "toric/tfp.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "parallel.hpp"
#include "toric/ineq.hpp"
#include "toric/verify.hpp"

namespace toric {

std::size_t TfpInstance::column_of(std::size_t i, std::size_t j) const { return index[i * right.n() + j]; }

Move TfpInstance::psi(const Move& u) const {
    Move v(left.n(), 0);
    for (std::size_t c = 0; c < columns.size(); ++c) v[columns[c].first] = checked_add(v[columns[c].first], u[c]);
    return v;
}

Move TfpInstance::psi_prime(const Move& u) const {
    Move v(right.n(), 0);
    for (std::size_t c = 0; c < columns.size(); ++c) v[columns[c].second] = checked_add(v[columns[c].second], u[c]);
    return v;
}

Move TfpInstance::xi_apply(const Move& u) const { return left.apply(psi(u)); }

GradedMatrix TfpInstance::graded() const { return GradedMatrix{product, xi, t(), left.A.empty() ? right.A : left.A}; }

TfpInstance build_tfp(const GradedMatrix& left, const GradedMatrix& right) {
    if (left.t != right.t) throw std::invalid_argument("factors are graded over different index sets");
    if (!left.A.empty() && !right.A.empty() && !(left.A == right.A))
        throw std::invalid_argument("factors are graded by different matrices A");
    TfpInstance t;
    t.left = left;
    t.right = right;
    std::size_t n = left.n(), n2 = right.n();
    t.index.assign(n * n2, SIZE_MAX);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n2; ++j)
            if (left.phi[i] == right.phi[j]) {
                t.index[i * n2 + j] = t.columns.size();
                t.columns.push_back({i, j});
                t.xi.push_back(left.phi[i]);
            }
    std::size_t h = left.B.rows(), h2 = right.B.rows();
    t.product = Matrix(h + h2, t.columns.size());
    for (std::size_t c = 0; c < t.columns.size(); ++c) {
        auto [i, j] = t.columns[c];
        for (std::size_t r = 0; r < h; ++r) t.product.at(r, c) = left.B.at(r, i);
        for (std::size_t r = 0; r < h2; ++r) t.product.at(h + r, c) = right.B.at(r, j);
    }
    return t;
}

TfpInstance assoc_codim_zero(const TfpInstance& t) {
    Matrix I = Matrix::identity(t.t());
    GradedMatrix l{augment(t.left), t.left.phi, t.t(), I};
    GradedMatrix r{augment(t.right), t.right.phi, t.t(), I};
    return build_tfp(l, r);
}

/////////////////////////////////////////////////////////////////////////////

namespace {

using Sparse = std::vector<std::pair<std::size_t, Int>>;

std::vector<std::vector<std::size_t>> classes_of(const GradedMatrix& g) {
    std::vector<std::vector<std::size_t>> cls(g.t);
    for (std::size_t i = 0; i < g.n(); ++i) cls[static_cast<std::size_t>(g.phi[i])].push_back(i);
    return cls;
}

void check_cap(std::size_t count, std::size_t cap) {
    if (count > cap) throw resource_guard("glue enumeration exceeds " + std::to_string(cap) + " candidates");
}

// all e in N^n with phi(e) = target
std::vector<Move> extensions(const std::vector<std::vector<std::size_t>>& cls, std::size_t n, const Move& target,
                             std::size_t cap) {
    std::vector<Move> out{Move(n, 0)};
    for (std::size_t k = 0; k < cls.size(); ++k) {
        Int total = target[k];
        if (total == 0) continue;
        if (cls[k].empty()) return {};
        std::vector<Move> next;
        const auto& idx = cls[k];
        for (auto& base : out) {
            // compositions of total into |idx| parts
            Move cur = base;
            auto rec = [&](auto&& self, std::size_t pos, Int left) -> void {
                if (pos + 1 == idx.size()) {
                    cur[idx[pos]] = base[idx[pos]] + left;
                    next.push_back(cur);
                    check_cap(next.size(), cap);
                    return;
                }
                for (Int a = left; a >= 0; --a) {
                    cur[idx[pos]] = base[idx[pos]] + a;
                    self(self, pos + 1, left - a);
                }
            };
            rec(rec, 0, total);
        }
        out = std::move(next);
    }
    return out;
}

// nonnegative integer matrices with the given row and column sums, as
// sparse vectors on the product columns with coefficient sign
std::vector<Sparse> tables(const std::vector<std::size_t>& rows_idx, const Move& row_sums,
                           const std::vector<std::size_t>& cols_idx, const Move& col_sums, const TfpInstance& t,
                           Int sign, std::size_t cap) {
    std::vector<Sparse> out;
    std::size_t R = rows_idx.size(), C = cols_idx.size();
    Move rs = row_sums, cs = col_sums;
    Sparse cur;
    auto rec = [&](auto&& self, std::size_t r, std::size_t c) -> void {
        if (r == R) {
            out.push_back(cur);
            check_cap(out.size(), cap);
            return;
        }
        if (c + 1 == C) {
            Int a = rs[r];
            if (a > cs[c]) return;
            if (a) cur.push_back({t.column_of(rows_idx[r], cols_idx[c]), sign * a});
            cs[c] -= a;
            rs[r] = 0;
            self(self, r + 1, 0);
            rs[r] = a;
            cs[c] += a;
            if (a) cur.pop_back();
            return;
        }
        Int hi = std::min(rs[r], cs[c]);
        for (Int a = hi; a >= 0; --a) {
            if (a) cur.push_back({t.column_of(rows_idx[r], cols_idx[c]), sign * a});
            rs[r] -= a;
            cs[c] -= a;
            self(self, r, c + 1);
            rs[r] += a;
            cs[c] += a;
            if (a) cur.pop_back();
        }
    };
    rec(rec, 0, 0);
    return out;
}

// units of P (resp. P') restricted to one class, as (indices, counts)
std::pair<std::vector<std::size_t>, Move> restrict(const Move& P, const std::vector<std::size_t>& idx) {
    std::vector<std::size_t> i2;
    Move c;
    for (auto i : idx)
        if (P[i]) {
            i2.push_back(i);
            c.push_back(P[i]);
        }
    return {i2, c};
}

std::vector<Move> glue_core(const Move& m, const Move& m2, const TfpInstance& t, std::size_t cap) {
    const auto& L = t.left;
    const auto& R = t.right;
    if (L.apply(m) != R.apply(m2)) throw std::invalid_argument("glue: phi(m) differs from phi'(m')");
    auto [mp, mm] = pos_neg_parts(m);
    auto [mp2, mm2] = pos_neg_parts(m2);
    Move v = R.apply(mp2) - L.apply(mp);
    auto [vp, vm] = pos_neg_parts(v);
    auto cls = classes_of(L);
    auto cls2 = classes_of(R);
    auto E = extensions(cls, L.n(), vp, cap);
    auto E2 = extensions(cls2, R.n(), vm, cap);
    check_cap(E.size() * E2.size(), cap);
    std::set<Move> out;
    std::size_t N = t.columns.size();
    for (auto& e : E)
        for (auto& e2 : E2) {
            Move P = mp + e, Nn = mm + e, P2 = mp2 + e2, N2 = mm2 + e2;
            // one block of alternatives per (class, sign)
            std::vector<std::vector<Sparse>> blocks;
            std::size_t total = 1;
            for (std::size_t k = 0; k < t.t(); ++k)
                for (int s = 0; s < 2; ++s) {
                    auto [ri, rc] = restrict(s == 0 ? P : Nn, cls[k]);
                    auto [ci, cc] = restrict(s == 0 ? P2 : N2, cls2[k]);
                    if (ri.empty() && ci.empty()) continue;
                    auto alts = tables(ri, rc, ci, cc, t, s == 0 ? 1 : -1, cap);
                    if (alts.empty()) throw std::logic_error("glue: unbalanced class");
                    total *= alts.size();
                    check_cap(total, cap);
                    blocks.push_back(std::move(alts));
                }
            Move cur(N, 0);
            auto rec = [&](auto&& self, std::size_t b) -> void {
                if (b == blocks.size()) {
                    out.insert(cur);
                    check_cap(out.size(), cap);
                    return;
                }
                for (auto& alt : blocks[b]) {
                    for (auto& [c, a] : alt) cur[c] += a;
                    self(self, b + 1);
                    for (auto& [c, a] : alt) cur[c] -= a;
                }
            };
            rec(rec, 0);
        }
    return {out.begin(), out.end()};
}

} // namespace

std::vector<Move> glues(const Move& m, const Move& m_right, const TfpInstance& t, std::size_t cap) {
    if (m.size() != t.left.n() || m_right.size() != t.right.n()) throw std::invalid_argument("glue: wrong move length");
    return glue_core(m, m_right, t, cap);
}

std::vector<Move> lifts_of(const Move& m, const TfpInstance& t, Side side, std::size_t cap) {
    const GradedMatrix& g = side == Side::left ? t.left : t.right;
    if (m.size() != g.n()) throw std::invalid_argument("lifts_of: wrong move length");
    if (!is_zero(g.apply(m))) throw std::invalid_argument("lifts_of: phi(m) is not zero");
    if (side == Side::left) return glue_core(m, Move(t.right.n(), 0), t, cap);
    return glue_core(Move(t.left.n(), 0), m, t, cap);
}

std::vector<Move> quads(const TfpInstance& t) {
    auto cls = classes_of(t.left);
    auto cls2 = classes_of(t.right);
    std::vector<Move> out;
    std::size_t N = t.columns.size();
    for (std::size_t k = 0; k < t.t(); ++k)
        for (std::size_t a = 0; a < cls[k].size(); ++a)
            for (std::size_t b = a + 1; b < cls[k].size(); ++b)
                for (std::size_t c = 0; c < cls2[k].size(); ++c)
                    for (std::size_t d = c + 1; d < cls2[k].size(); ++d) {
                        std::size_t i1 = cls[k][a], i2 = cls[k][b], j1 = cls2[k][c], j2 = cls2[k][d];
                        Move f(N, 0);
                        f[t.column_of(i1, j1)] += 1;
                        f[t.column_of(i2, j2)] += 1;
                        f[t.column_of(i1, j2)] -= 1;
                        f[t.column_of(i2, j1)] -= 1;
                        out.push_back(canonical_sign(f));
                    }
    return out;
}

BasisResult codim_zero_basis(const TfpInstance& t, const std::vector<Move>& M, const std::vector<Move>& M_right,
                             std::size_t cap) {
    std::vector<Move> all = quads(t);
    for (auto& m : M)
        for (auto& x : lifts_of(m, t, Side::left, cap)) all.push_back(x);
    for (auto& m : M_right)
        for (auto& x : lifts_of(m, t, Side::right, cap)) all.push_back(x);
    BasisResult r;
    r.moves = canonical_set(all);
    r.source = kernel_lattice(assoc_codim_zero(t).product);
    return r;
}

Preorder product_preorder(const TfpInstance& t, const Preorder& p_left, const Preorder& p_right) {
    std::vector<std::vector<mpq_class>> w;
    std::size_t N = t.columns.size();
    for (auto& c : p_left.weights()) {
        std::vector<mpq_class> x(N);
        for (std::size_t k = 0; k < N; ++k) x[k] = c[t.columns[k].first];
        w.push_back(std::move(x));
    }
    for (auto& c : p_right.weights()) {
        std::vector<mpq_class> x(N);
        for (std::size_t k = 0; k < N; ++k) x[k] = c[t.columns[k].second];
        w.push_back(std::move(x));
    }
    return w.empty() ? Preorder() : Preorder(std::move(w));
}

/////////////////////////////////////////////////////////////////////////////

PfiDescription pfi_description(const ProjectedFiberDescription& left, const ProjectedFiberDescription& right) {
    if (left.D2.cols() != right.D2.cols()) throw std::invalid_argument("projected fibers live in different spaces");
    return {intersect(left.L, right.L), left.D2.vstack(right.D2)};
}

std::vector<Move> pfi_groebner_basis(const PfiDescription& pfi, const Preorder& p_image) {
    if (pfi.L.rank() == 0) return {};
    auto sys = InequalitySystem::on_lattice(pfi.D, pfi.L);
    return p_image.trivial() ? inequality_markov_basis(sys) : inequality_groebner_basis(sys, p_image);
}

TfpResult tfp_basis(const TfpInstance& t, const std::vector<Move>& kernel_moves, const std::vector<Move>& G,
                    const std::vector<std::vector<Move>>& lifts_left, const std::vector<std::vector<Move>>& lifts_right,
                    std::size_t cap) {
    if (lifts_left.size() != G.size() || lifts_right.size() != G.size())
        throw std::invalid_argument("one lift set per PFI move is required on each side");
    TfpResult r;
    r.codim_zero = canonical_set(kernel_moves);
    r.pfi = G;
    r.lifts_left = lifts_left;
    r.lifts_right = lifts_right;
    r.glued.resize(G.size());
    std::vector<Move> glued_all;
    for (std::size_t k = 0; k < G.size(); ++k) {
        for (auto& m : lifts_left[k])
            for (auto& m2 : lifts_right[k])
                for (auto& x : glues(m, m2, t, cap)) r.glued[k].push_back(x);
        glued_all.insert(glued_all.end(), r.glued[k].begin(), r.glued[k].end());
    }
    auto pruned = remove_conformal_redundant(glued_all);
    std::vector<Move> all = r.codim_zero;
    all.insert(all.end(), pruned.begin(), pruned.end());
    r.basis.moves = canonical_set(all);
    r.basis.source = kernel_lattice(t.product);
    return r;
}

TfpResult tfp_pipeline(const TfpInstance& t, const ProjectedFiberDescription& left,
                       const ProjectedFiberDescription& right, const Preorder& p_image, const Preorder& tiebreak_left,
                       const Preorder& tiebreak_right, int threads, std::size_t cap) {
    Preorder pl = pullback_preorder(t.left, p_image, tiebreak_left);
    Preorder pr = pullback_preorder(t.right, p_image, tiebreak_right);
    auto M = kernel_basis(t.left, pl).moves;
    auto M2 = kernel_basis(t.right, pr).moves;
    auto kernel = codim_zero_basis(t, M, M2, cap).moves;
    auto G = pfi_groebner_basis(pfi_description(left, right), p_image);
    std::vector<std::vector<Move>> ll(G.size()), lr(G.size());
    detail::parallel_for(G.size(), threads, [&](std::size_t k) {
        ll[k] = lift_move(t.left, G[k], pl);
        lr[k] = lift_move(t.right, G[k], pr);
    });
    auto r = tfp_basis(t, kernel, G, ll, lr, cap);
    r.caveats = left.caveats;
    r.caveats.insert(r.caveats.end(), right.caveats.begin(), right.caveats.end());
    Preorder px = product_preorder(t, pl, pr);
    r.basis.order = px;
    r.basis.kind = px.trivial() ? BasisKind::markov : BasisKind::groebner;
    return r;
}

/////////////////////////////////////////////////////////////////////////////

namespace {

struct ImageGraph {
    std::set<Move> vertices;
    std::set<std::pair<Move, Move>> edges;
};

std::vector<ImageGraph> image_graphs(const Matrix& B, const GradedMatrix& g, const std::vector<Move>& M, int bound,
                                     std::vector<Move>& keys) {
    auto fibers = fibers_up_to(FiberFamily::matrix(B), bound);
    std::vector<Move> both;
    for (auto& m : M) {
        both.push_back(m);
        both.push_back(-m);
    }
    std::vector<ImageGraph> out;
    for (auto& f : fibers) {
        ImageGraph G;
        for (auto& v : f.points) {
            Move y = g.apply(v);
            G.vertices.insert(y);
            for (auto& m : both) {
                Move w = v + m;
                if (!nonnegative(w)) continue;
                Move z = g.apply(w);
                if (z == y) continue;
                G.edges.insert(y < z ? std::make_pair(y, z) : std::make_pair(z, y));
            }
        }
        keys.push_back(f.key);
        out.push_back(std::move(G));
    }
    return out;
}

} // namespace

ProjectionReport check_compatible_projection(const std::vector<Move>& M, const std::vector<Move>& M_right,
                                             const TfpInstance& t, int bound) {
    std::vector<Move> k1, k2;
    auto G1 = image_graphs(t.left.B, t.left, M, bound, k1);
    auto G2 = image_graphs(t.right.B, t.right, M_right, bound, k2);
    std::map<Move, std::vector<std::size_t>> at2;
    for (std::size_t b = 0; b < G2.size(); ++b)
        for (auto& u : G2[b].vertices) at2[u].push_back(b);
    ProjectionReport rep;
    for (std::size_t a = 0; a < G1.size(); ++a) {
        std::set<std::size_t> partners;
        for (auto& u : G1[a].vertices) {
            auto it = at2.find(u);
            if (it != at2.end()) partners.insert(it->second.begin(), it->second.end());
        }
        for (auto b : partners) {
            ++rep.pairs_checked;
            std::vector<Move> V;
            for (auto& u : G1[a].vertices)
                if (G2[b].vertices.count(u)) V.push_back(u);
            std::vector<std::size_t> parent(V.size());
            std::iota(parent.begin(), parent.end(), 0);
            auto find = [&](std::size_t x) {
                while (parent[x] != x) x = parent[x] = parent[parent[x]];
                return x;
            };
            auto pos = [&](const Move& u) {
                return static_cast<std::size_t>(std::lower_bound(V.begin(), V.end(), u) - V.begin());
            };
            std::size_t comps = V.size();
            for (auto& e : G1[a].edges) {
                if (!G2[b].edges.count(e)) continue;
                std::size_t x = find(pos(e.first)), y = find(pos(e.second));
                if (x != y) {
                    parent[x] = y;
                    --comps;
                }
            }
            if (comps > 1) {
                rep.pass = false;
                rep.b = k1[a];
                rep.b_right = k2[b];
                rep.message = "intersection graph for margins " + to_string(k1[a]) + " / " + to_string(k2[b]) + " has " +
                              std::to_string(comps) + " components on " + std::to_string(V.size()) + " vertices";
                return rep;
            }
        }
    }
    rep.message = "connected on " + std::to_string(rep.pairs_checked) + " fiber pairs";
    return rep;
}

/////////////////////////////////////////////////////////////////////////////

IteratedTfp iterated_tfp(const std::vector<GradedMatrix>& factors, const std::vector<int>& r) {
    if (!r.empty() && r.size() != factors.size()) throw std::invalid_argument("one multiplicity per factor");
    std::vector<const GradedMatrix*> seq;
    for (std::size_t k = 0; k < factors.size(); ++k)
        for (int c = 0; c < (r.empty() ? 1 : r[k]); ++c) seq.push_back(&factors[k]);
    if (seq.empty()) throw std::invalid_argument("iterated product of no factors");
    IteratedTfp acc;
    acc.graded = *seq[0];
    for (std::size_t i = 0; i < acc.graded.n(); ++i) acc.tuples.push_back({i});
    for (std::size_t s = 1; s < seq.size(); ++s) {
        auto t = build_tfp(acc.graded, *seq[s]);
        std::vector<std::vector<std::size_t>> tuples;
        for (auto [i, j] : t.columns) {
            auto tu = acc.tuples[i];
            tu.push_back(j);
            tuples.push_back(std::move(tu));
        }
        acc.graded = t.graded();
        acc.tuples = std::move(tuples);
    }
    return acc;
}

Int move_degree(const Move& v) {
    auto [p, n] = pos_neg_parts(v);
    return std::max(degree(p), degree(n));
}

Int glue_degree_bound(const Move& g, const std::vector<std::pair<GradedMatrix, Move>>& lifts) {
    auto [gp, gn] = pos_neg_parts(g);
    Move mx(g.size(), 0);
    for (auto& [gr, m] : lifts) {
        if (gr.apply(m) != g) throw std::invalid_argument("glue_degree_bound: a move does not lift g");
        Move d = gr.apply(pos_neg_parts(m).first) - gp;
        for (std::size_t k = 0; k < g.size(); ++k) mx[k] = std::max(mx[k], d[k]);
    }
    return move_degree(g) + move_degree(mx);
}

Int iterated_degree_bound(const std::vector<GradedMatrix>& factors, const std::vector<Move>& G,
                          std::vector<std::string>* notes) {
    Int C = 2;
    for (auto& f : factors)
        for (auto& m : kernel_basis(f).moves) C = std::max(C, move_degree(m));
    if (notes) notes->push_back("kernel and codimension zero part: " + std::to_string(C));
    for (auto& g : G) {
        std::vector<std::pair<GradedMatrix, Move>> all;
        for (auto& f : factors)
            for (auto& m : lift_move(f, g, Preorder())) all.push_back({f, m});
        if (all.empty()) continue;
        Int b = glue_degree_bound(g, all);
        if (notes) notes->push_back("glues over " + to_string(g) + ": " + std::to_string(b));
        C = std::max(C, b);
    }
    return C;
}

} // namespace toric
