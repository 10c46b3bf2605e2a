#include "toric/basis.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "toric/cone.hpp"
#include "toric/verify.hpp"

namespace toric {

namespace {

// Binomial x^a - x^b with x^a the leading term.
struct Bin {
    Move a, b;
    std::uint64_t mask = 0; // support of a on the first 64 variables
};

std::uint64_t support_mask(const Move& a) {
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < a.size() && i < 64; ++i)
        if (a[i]) m |= std::uint64_t(1) << i;
    return m;
}

__int128 wdot(const Move& w, const Move& a) {
    __int128 s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<__int128>(w[i]) * a[i];
    return s;
}

// w-degree, then weight cascade, then reverse lexicographic with the
// variable `last` (if any) treated as the smallest one.
class TermOrder {
public:
    TermOrder(Move w, std::vector<Move> weights, int last) : w_(std::move(w)), weights_(std::move(weights)), last_(last) {}

    int cmp(const Move& a, const Move& b) const {
        __int128 d = wdot(w_, a) - wdot(w_, b);
        if (d != 0) return d > 0 ? 1 : -1;
        for (const auto& c : weights_) {
            __int128 e = wdot(c, a) - wdot(c, b);
            if (e != 0) return e > 0 ? 1 : -1;
        }
        if (last_ >= 0 && a[last_] != b[last_]) return a[last_] < b[last_] ? 1 : -1;
        for (std::size_t i = a.size(); i-- > 0;) {
            if (static_cast<int>(i) == last_) continue;
            if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
        }
        return 0;
    }

    __int128 degree(const Move& a) const { return wdot(w_, a); }

private:
    Move w_;
    std::vector<Move> weights_;
    int last_;
};

bool divides(const Move& a, const Move& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

class Buchberger {
public:
    Buchberger(const TermOrder& ord, std::vector<bool> free, CompletionStats* stats)
        : ord_(ord), free_(std::move(free)), stats_(stats) {}

    // returns false if f reduced to zero
    bool normalize(Bin& f) const {
        for (std::size_t i = 0; i < f.a.size(); ++i)
            if (free_[i]) {
                Int c = std::min(f.a[i], f.b[i]);
                if (c) {
                    f.a[i] -= c;
                    f.b[i] -= c;
                }
            }
        int s = ord_.cmp(f.a, f.b);
        if (s == 0) return false;
        if (s < 0) std::swap(f.a, f.b);
        f.mask = support_mask(f.a);
        return true;
    }

    bool reduce(Bin& f) const {
        if (!normalize(f)) return false;
        while (true) {
            const Bin* g = find_divisor(f.a, f.mask);
            if (!g) return true;
            for (std::size_t i = 0; i < f.a.size(); ++i) f.a[i] = checked_add(f.a[i] - g->a[i], g->b[i]);
            if (stats_) ++stats_->reductions;
            if (!normalize(f)) return false;
        }
    }

    const Bin* find_divisor(const Move& a, std::uint64_t mask, std::size_t skip = SIZE_MAX) const {
        for (std::size_t k = 0; k < G_.size(); ++k) {
            if (k == skip) continue;
            const Bin& g = G_[k];
            if (g.mask & ~mask) continue;
            if (divides(g.a, a)) return &g;
        }
        return nullptr;
    }

    void add(Bin f) {
        std::size_t j = G_.size();
        G_.push_back(std::move(f));
        done_.emplace_back(j + 1, 0);
        for (std::size_t i = 0; i < j; ++i) {
            Move l = lcm(G_[i].a, G_[j].a);
            queue_.insert({ord_.degree(l), j, i});
        }
    }

    void run(const std::vector<Bin>& input) {
        for (auto f : input)
            if (reduce(f)) add(std::move(f));
        while (!queue_.empty()) {
            auto [deg, j, i] = *queue_.begin();
            queue_.erase(queue_.begin());
            mark(i, j);
            if (stats_) ++stats_->pairs;
            const Bin& f = G_[i];
            const Bin& g = G_[j];
            bool coprime = true;
            for (std::size_t v = 0; v < f.a.size() && coprime; ++v)
                if (f.a[v] && g.a[v]) coprime = false;
            if (coprime) continue;
            Move l = lcm(f.a, g.a);
            if (chain_criterion(i, j, l)) continue;
            Bin s;
            s.a.resize(l.size());
            s.b.resize(l.size());
            for (std::size_t v = 0; v < l.size(); ++v) {
                s.a[v] = checked_add(l[v] - f.a[v], f.b[v]);
                s.b[v] = checked_add(l[v] - g.a[v], g.b[v]);
            }
            if (reduce(s)) add(std::move(s));
        }
    }

    // minimal and tail-reduced basis
    std::vector<Bin> reduced() const {
        std::vector<Bin> out;
        for (std::size_t k = 0; k < G_.size(); ++k) {
            bool redundant = false;
            for (std::size_t h = 0; h < G_.size() && !redundant; ++h) {
                if (h == k) continue;
                if (divides(G_[h].a, G_[k].a) && (G_[h].a != G_[k].a || h < k)) redundant = true;
            }
            if (!redundant) out.push_back(G_[k]);
        }
        Buchberger min(ord_, free_, nullptr);
        min.G_ = out;
        for (auto& f : out) {
            while (true) {
                const Bin* g = min.find_divisor(f.b, support_mask(f.b));
                if (!g) break;
                for (std::size_t i = 0; i < f.b.size(); ++i) f.b[i] = checked_add(f.b[i] - g->a[i], g->b[i]);
            }
        }
        std::sort(out.begin(), out.end(), [](const Bin& x, const Bin& y) { return std::tie(x.a, x.b) < std::tie(y.a, y.b); });
        return out;
    }

    const std::vector<Bin>& elements() const { return G_; }

private:
    static Move lcm(const Move& a, const Move& b) {
        Move l(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) l[i] = std::max(a[i], b[i]);
        return l;
    }

    void mark(std::size_t i, std::size_t j) {
        if (i > j) std::swap(i, j);
        done_[j][i] = 1;
    }

    bool is_done(std::size_t i, std::size_t j) const {
        if (i == j) return true;
        if (i > j) std::swap(i, j);
        return done_[j][i] != 0;
    }

    bool chain_criterion(std::size_t i, std::size_t j, const Move& l) const {
        std::uint64_t lm = support_mask(l);
        for (std::size_t k = 0; k < G_.size(); ++k) {
            if (k == i || k == j) continue;
            if (G_[k].mask & ~lm) continue;
            if (!divides(G_[k].a, l)) continue;
            if (is_done(i, k) && is_done(j, k)) return true;
        }
        return false;
    }

    TermOrder ord_;
    std::vector<bool> free_;
    CompletionStats* stats_;
    std::vector<Bin> G_;
    std::vector<std::vector<char>> done_;
    std::set<std::tuple<__int128, std::size_t, std::size_t>> queue_;
};

Bin bin_of(const Move& u) {
    auto [p, n] = pos_neg_parts(u);
    return Bin{p, n, 0};
}

std::vector<Move> orient_moves(const std::vector<Bin>& bins) {
    std::vector<Move> out;
    for (auto& f : bins) out.push_back(f.a - f.b);
    return out;
}

// order-preserving canonical dedupe
std::vector<Move> canonical_unique(const std::vector<Move>& ms) {
    std::vector<Move> out;
    std::set<Move> seen;
    for (auto& m : ms) {
        if (is_zero(m)) continue;
        Move c = canonical_sign(m);
        if (seen.insert(c).second) out.push_back(c);
    }
    return out;
}

} // namespace

/////////////////////////////////////////////////////////////////////////////

std::vector<Move> lattice_ideal_generators(const Lattice& L, const Move& w, CompletionStats* stats) {
    std::size_t n = L.ambient_dim();
    std::vector<Bin> gens;
    for (auto& u : L.basis()) gens.push_back(bin_of(u));
    std::vector<bool> free(n, false);
    std::vector<bool> appears(n, false);
    for (auto& u : L.basis())
        for (std::size_t i = 0; i < n; ++i)
            if (u[i]) appears[i] = true;
    // Saturating the first coordinate last leaves a Groebner basis for the
    // order w-degree, total degree, revlex with x_0 smallest.
    std::vector<Move> tiebreak{Move(n, 1)};
    for (std::size_t i = n; i-- > 0;) {
        if (!appears[i]) {
            free[i] = true;
            continue;
        }
        TermOrder ord(w, tiebreak, static_cast<int>(i));
        Buchberger bb(ord, free, stats);
        bb.run(gens);
        gens = bb.reduced();
        for (auto& g : gens) {
            Int c = std::min(g.a[i], g.b[i]);
            g.a[i] -= c;
            g.b[i] -= c;
        }
        free[i] = true;
        // drop common factors in the saturated variables
        std::vector<Bin> next;
        std::set<std::pair<Move, Move>> seen;
        for (auto& g : gens) {
            for (std::size_t v = 0; v < n; ++v) {
                Int c = std::min(g.a[v], g.b[v]);
                g.a[v] -= c;
                g.b[v] -= c;
            }
            if (g.a == g.b) continue;
            if (seen.insert({g.a, g.b}).second) next.push_back(g);
        }
        gens = std::move(next);
    }
    return orient_moves(gens);
}

std::vector<Move> reduced_groebner(const Lattice& L, const Move& w, const Preorder& p,
                                   const std::vector<Move>& generators, CompletionStats* stats) {
    std::size_t n = L.ambient_dim();
    if (!p.trivial() && p.dim() != n) throw std::invalid_argument("preorder dimension mismatch");
    TermOrder ord(w, p.integer_weights(), -1);
    Buchberger bb(ord, std::vector<bool>(n, true), stats);
    std::vector<Bin> in;
    for (auto& u : generators) in.push_back(bin_of(u));
    bb.run(in);
    return orient_moves(bb.reduced());
}

/////////////////////////////////////////////////////////////////////////////

bool connected_by(const Move& from, const Move& to, const std::vector<Move>& moves, std::size_t guard) {
    if (from == to) return true;
    std::set<Move> seen{from};
    std::deque<Move> q{from};
    std::vector<Move> both;
    for (auto& m : moves) {
        both.push_back(m);
        both.push_back(-m);
    }
    while (!q.empty()) {
        Move v = std::move(q.front());
        q.pop_front();
        for (auto& m : both) {
            bool ok = true;
            for (std::size_t i = 0; i < v.size() && ok; ++i)
                if (v[i] + m[i] < 0) ok = false;
            if (!ok) continue;
            Move u = v + m;
            if (u == to) return true;
            if (seen.insert(u).second) {
                if (seen.size() > guard) throw std::length_error("fiber component exceeds the size guard");
                q.push_back(std::move(u));
            }
        }
    }
    return false;
}

std::vector<Move> minimal_subset(const std::vector<Move>& ordered, const Move& w) {
    std::vector<std::pair<__int128, Move>> items;
    for (auto& m : ordered) {
        if (is_zero(m)) continue;
        auto [p, n] = pos_neg_parts(m);
        items.push_back({wdot(w, p), m});
    }
    std::stable_sort(items.begin(), items.end(), [](auto& x, auto& y) { return x.first < y.first; });
    std::vector<Move> kept;
    for (auto& [d, m] : items) {
        auto [p, n] = pos_neg_parts(m);
        if (!connected_by(p, n, kept)) kept.push_back(m);
    }
    return kept;
}

/////////////////////////////////////////////////////////////////////////////

BasisResult markov_basis(const Lattice& L) {
    BasisResult r;
    r.kind = BasisKind::markov;
    r.source = L;
    std::size_t n = L.ambient_dim();
    if (L.rank() == 0) return r;
    if (auto w = positive_grading(L.basis(), n)) {
        auto gens = lattice_ideal_generators(L, *w);
        r.moves = canonical_set(minimal_subset(gens, *w));
        return r;
    }
    // L meets the nonnegative orthant: split off the coordinates of the
    // maximal nonnegative support S and recurse on the projection.
    Move p = max_support_nonneg(L.basis(), n);
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < n; ++i)
        if (p[i] == 0) keep.push_back(i);
    Matrix pi(keep.size(), n);
    for (std::size_t k = 0; k < keep.size(); ++k) pi.at(k, keep[k]) = 1;
    std::vector<Move> projected;
    for (auto& b : L.basis()) projected.push_back(pi * b);
    std::vector<Move> out;
    Lattice piL = Lattice::from_generators(keep.size(), projected);
    for (auto& m : markov_basis(piL).moves) {
        auto a = solve_generators(projected, m);
        Move v(n, 0);
        for (std::size_t j = 0; j < a->size(); ++j)
            if ((*a)[j]) v = v + (*a)[j] * L.basis()[j];
        out.push_back(v);
    }
    Lattice LS = preimage_lattice(pi, Lattice::zero(keep.size()), L);
    for (auto& b : LS.basis()) out.push_back(b);
    out.push_back(p);
    r.moves = canonical_set(out);
    return r;
}

BasisResult groebner_basis(const Lattice& L, const Preorder& p) {
    if (p.trivial()) {
        BasisResult r = markov_basis(L);
        r.kind = BasisKind::groebner;
        return r;
    }
    if (p.dim() != L.ambient_dim()) throw std::invalid_argument("preorder dimension mismatch");
    BasisResult r;
    r.kind = BasisKind::groebner;
    r.order = p;
    r.source = L;
    if (L.rank() == 0) return r;
    auto w = positive_grading(L.basis(), L.ambient_dim());
    if (!w) throw std::invalid_argument("lattice contains a nonnegative vector; fibers are infinite and no Groebner basis exists for this preorder");
    auto gens = lattice_ideal_generators(L, *w);
    r.moves = canonical_set(reduced_groebner(L, *w, p, gens));
    return r;
}

BasisResult graver_basis(const Lattice& L) {
    BasisResult r;
    r.kind = BasisKind::graver;
    r.source = L;
    std::size_t n = L.ambient_dim();
    if (L.rank() == 0) return r;
    std::vector<Move> lb;
    for (auto& u : L.basis()) {
        Move v(2 * n);
        for (std::size_t i = 0; i < n; ++i) {
            v[i] = u[i];
            v[n + i] = -u[i];
        }
        lb.push_back(v);
    }
    Lattice lawrence = Lattice::from_basis(2 * n, lb);
    Move ones(2 * n, 1);
    auto gens = lattice_ideal_generators(lawrence, ones);
    std::vector<Move> out;
    for (auto& m : reduced_groebner(lawrence, ones, Preorder(), gens)) out.emplace_back(m.begin(), m.begin() + n);
    r.moves = canonical_set(out);
    return r;
}

/////////////////////////////////////////////////////////////////////////////

std::vector<Move> remove_conformal_redundant(std::vector<Move> G) {
    G = canonical_set(std::move(G));
    bool changed = true;
    while (changed) {
        changed = false;
        std::stable_sort(G.begin(), G.end(), [](const Move& a, const Move& b) { return l1_norm(a) > l1_norm(b); });
        for (std::size_t k = 0; k < G.size(); ++k) {
            std::set<Move> others;
            for (std::size_t h = 0; h < G.size(); ++h)
                if (h != k) {
                    others.insert(G[h]);
                    others.insert(-G[h]);
                }
            const Move& v = G[k];
            bool redundant = false;
            for (auto& a : others) {
                if (a == v || !conformally_below(a, v)) continue;
                if (others.count(v - a)) {
                    redundant = true;
                    break;
                }
            }
            if (redundant) {
                G.erase(G.begin() + static_cast<std::ptrdiff_t>(k));
                changed = true;
                break;
            }
        }
    }
    std::sort(G.begin(), G.end());
    return G;
}

BasisResult remove_conformal_redundant(const BasisResult& G) {
    BasisResult r = G;
    r.moves = remove_conformal_redundant(G.moves);
    return r;
}

BasisResult minimize_markov(const Lattice& L, const BasisResult& M, int bound) {
    if (bound > 0) {
        auto verdict = markov_oracle(FiberFamily::lattice(L), M.moves, bound);
        if (!verdict.pass) throw std::invalid_argument("input move set fails the connectivity oracle: " + verdict.message);
    }
    BasisResult r = M;
    auto ordered = canonical_unique(M.moves);
    if (auto w = positive_grading(L.basis(), L.ambient_dim())) {
        r.moves = minimal_subset(ordered, *w);
        return r;
    }
    if (bound <= 0) throw std::invalid_argument("minimize_markov on a lattice without positive grading needs a bound");
    // greedy removal validated by the oracle
    std::vector<Move> cur = ordered;
    for (std::size_t k = cur.size(); k-- > 0;) {
        std::vector<Move> trial = cur;
        trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(k));
        if (markov_oracle(FiberFamily::lattice(L), trial, bound).pass) cur = std::move(trial);
    }
    r.moves = cur;
    return r;
}

} // namespace toric
