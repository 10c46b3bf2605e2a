#include "toric/hier.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "toric/cone.hpp"
#include "toric/verify.hpp"

namespace toric {

namespace {

bool subset_of(const std::vector<int>& a, const std::vector<int>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<std::vector<int>> maximal_faces(std::vector<std::vector<int>> faces) {
    for (auto& f : faces) {
        std::sort(f.begin(), f.end());
        f.erase(std::unique(f.begin(), f.end()), f.end());
    }
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    std::vector<std::vector<int>> out;
    for (std::size_t i = 0; i < faces.size(); ++i) {
        bool covered = false;
        for (std::size_t j = 0; j < faces.size() && !covered; ++j)
            covered = j != i && faces[j].size() > faces[i].size() && subset_of(faces[i], faces[j]);
        if (!covered) out.push_back(faces[i]);
    }
    return out;
}

std::vector<int> sorted_unique(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

std::vector<int> pick(const std::vector<int>& values, const std::vector<int>& positions) {
    std::vector<int> out;
    for (int p : positions) out.push_back(values[static_cast<std::size_t>(p)]);
    return out;
}

// position of each element of sub inside super (both ascending)
std::vector<int> positions_in(const std::vector<int>& sub, const std::vector<int>& super) {
    std::vector<int> pos;
    for (int v : sub) {
        auto it = std::lower_bound(super.begin(), super.end(), v);
        if (it == super.end() || *it != v) throw std::logic_error("vertex not in superset");
        pos.push_back(static_cast<int>(it - super.begin()));
    }
    return pos;
}

} // namespace

HierModel::HierModel(std::vector<std::vector<int>> facets, std::vector<int> levels) : levels_(std::move(levels)) {
    for (int d : levels_)
        if (d < 2) throw std::invalid_argument("level counts must be at least 2");
    const int k = static_cast<int>(levels_.size());
    std::vector<bool> seen(levels_.size(), false);
    for (auto& f : facets)
        for (int v : f) {
            if (v < 0 || v >= k) throw std::invalid_argument("facet vertex out of range");
            seen[static_cast<std::size_t>(v)] = true;
        }
    for (int v = 0; v < k; ++v)
        if (!seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("vertex " + std::to_string(v + 1) + " lies in no facet");
    if (facets.empty()) facets.push_back({});
    facets_ = maximal_faces(std::move(facets));
}

HierModel HierModel::parse(const std::string& complex, std::vector<int> levels) {
    std::vector<std::vector<int>> facets;
    std::size_t i = 0;
    auto skip_space = [&] {
        while (i < complex.size() && std::isspace(static_cast<unsigned char>(complex[i]))) ++i;
    };
    skip_space();
    if (i == complex.size()) throw parse_error("empty complex");
    while (i < complex.size()) {
        if (complex[i] != '[') throw parse_error("expected '[' in complex \"" + complex + "\"");
        auto close = complex.find(']', i);
        if (close == std::string::npos) throw parse_error("unterminated facet in \"" + complex + "\"");
        std::string body = complex.substr(i + 1, close - i - 1);
        std::vector<int> f;
        if (body.find(',') != std::string::npos) {
            std::stringstream ss(body);
            std::string tok;
            while (std::getline(ss, tok, ',')) {
                try {
                    std::size_t used = 0;
                    int v = std::stoi(tok, &used);
                    f.push_back(v - 1);
                } catch (const std::exception&) {
                    throw parse_error("bad vertex \"" + tok + "\"");
                }
            }
        } else {
            for (char c : body) {
                if (std::isspace(static_cast<unsigned char>(c))) continue;
                if (!std::isdigit(static_cast<unsigned char>(c)) || c == '0')
                    throw parse_error(std::string("bad vertex '") + c + "'");
                f.push_back(c - '1');
            }
        }
        facets.push_back(std::move(f));
        i = close + 1;
        skip_space();
    }
    for (auto& f : facets)
        for (int v : f)
            if (v < 0 || v >= static_cast<int>(levels.size()))
                throw parse_error("vertex " + std::to_string(v + 1) + " has no level count");
    return HierModel(std::move(facets), std::move(levels));
}

HierModel HierModel::restrict_to(const std::vector<int>& S) const {
    std::vector<int> pos(levels_.size(), -1);
    std::vector<int> lv;
    for (std::size_t k = 0; k < S.size(); ++k) {
        auto v = static_cast<std::size_t>(S[k]);
        if (v >= levels_.size()) throw std::invalid_argument("vertex out of range");
        pos[v] = static_cast<int>(k);
        lv.push_back(levels_[v]);
    }
    std::vector<std::vector<int>> faces;
    for (auto& f : facets_) {
        std::vector<int> g;
        for (int v : f)
            if (pos[static_cast<std::size_t>(v)] >= 0) g.push_back(pos[static_cast<std::size_t>(v)]);
        faces.push_back(std::move(g));
    }
    return HierModel(std::move(faces), std::move(lv));
}

HierModel HierModel::with_face(const std::vector<int>& S) const {
    auto faces = facets_;
    faces.push_back(S);
    return HierModel(std::move(faces), levels_);
}

std::string HierModel::to_string() const {
    bool wide = levels_.size() > 9;
    std::string s;
    for (auto& f : facets_) {
        s += '[';
        for (std::size_t k = 0; k < f.size(); ++k) {
            if (wide && k) s += ',';
            s += std::to_string(f[k] + 1);
        }
        s += ']';
    }
    return s;
}

Matrix design_matrix(const HierModel& m) {
    Shape V = m.shape();
    std::size_t rows = 0;
    std::vector<Shape> margins;
    for (auto& f : m.facets()) {
        margins.emplace_back(pick(m.levels(), f));
        rows += margins.back().size();
    }
    Matrix B(rows, V.size());
    for (std::size_t c = 0; c < V.size(); ++c) {
        auto idx = V.index(c);
        std::size_t off = 0;
        for (std::size_t k = 0; k < m.facets().size(); ++k) {
            B.at(off + margins[k].flat(pick(idx, m.facets()[k])), c) = 1;
            off += margins[k].size();
        }
    }
    return B;
}

/////////////////////////////////////////////////////////////////////////////

std::size_t HierSplit::n() const { return static_cast<std::size_t>(std::max(V1.back(), V2.back())) + 1; }

std::vector<std::size_t> HierSplit::product_columns(const TfpInstance& t) const {
    std::vector<int> levels(n());
    for (std::size_t k = 0; k < V1.size(); ++k) levels[static_cast<std::size_t>(V1[k])] = left_model.levels()[k];
    for (std::size_t k = 0; k < V2.size(); ++k) levels[static_cast<std::size_t>(V2[k])] = right_model.levels()[k];
    Shape V(levels), L(left_model.levels()), R(right_model.levels());
    std::vector<std::size_t> out;
    for (auto [i, j] : t.columns) {
        auto a = L.index(i), b = R.index(j);
        std::vector<int> idx(levels.size());
        for (std::size_t k = 0; k < V1.size(); ++k) idx[static_cast<std::size_t>(V1[k])] = a[k];
        for (std::size_t k = 0; k < V2.size(); ++k) idx[static_cast<std::size_t>(V2[k])] = b[k];
        out.push_back(V.flat(idx));
    }
    return out;
}

HierSplit split(const HierModel& m, std::vector<int> V1, std::vector<int> V2) {
    HierSplit s;
    s.V1 = sorted_unique(std::move(V1));
    s.V2 = sorted_unique(std::move(V2));
    if (s.V1.empty() || s.V2.empty()) throw std::invalid_argument("both parts of a split must be nonempty");
    std::vector<int> all;
    std::set_union(s.V1.begin(), s.V1.end(), s.V2.begin(), s.V2.end(), std::back_inserter(all));
    if (all.size() != m.vertices() || all.front() != 0 || all.back() != static_cast<int>(m.vertices()) - 1)
        throw std::invalid_argument("V1 and V2 must cover the vertex set");
    std::set_intersection(s.V1.begin(), s.V1.end(), s.V2.begin(), s.V2.end(), std::back_inserter(s.S));
    for (auto& f : m.facets())
        if (!subset_of(f, s.V1) && !subset_of(f, s.V2))
            throw std::invalid_argument("a facet of " + m.to_string() + " lies in neither part");

    s.left_model = m.restrict_to(s.V1);
    s.right_model = m.restrict_to(s.V2);
    s.base_model = m.restrict_to(s.S);
    s.A = design_matrix(s.base_model);
    std::size_t t = s.base_model.shape().size();

    auto graded = [&](const HierModel& part, const std::vector<int>& Vk) {
        auto pos = positions_in(s.S, Vk);
        Shape P = part.shape(), T = s.base_model.shape();
        std::vector<int> phi(P.size());
        for (std::size_t i = 0; i < P.size(); ++i) phi[i] = static_cast<int>(T.flat(pick(P.index(i), pos)));
        return GradedMatrix::make(design_matrix(part), std::move(phi), t, s.A);
    };
    s.left = graded(s.left_model, s.V1);
    s.right = graded(s.right_model, s.V2);
    return s;
}

/////////////////////////////////////////////////////////////////////////////

std::vector<Move> triangle_graver(int p, int r) {
    if (p < 1 || r < 1) throw std::invalid_argument("p and r must be positive");
    Shape sh({p, 2, r});
    std::set<Move> out;
    std::vector<int> is, js;
    std::vector<bool> used_i(static_cast<std::size_t>(p)), used_j(static_cast<std::size_t>(r));
    auto emit = [&] {
        Move f(sh.size(), 0);
        std::size_t k = is.size();
        for (std::size_t t = 0; t < k; ++t) {
            int i = is[t], j = js[t], jn = js[(t + 1) % k];
            f[sh.flat({i, 0, j})] += 1;
            f[sh.flat({i, 1, j})] -= 1;
            f[sh.flat({i, 1, jn})] += 1;
            f[sh.flat({i, 0, jn})] -= 1;
        }
        out.insert(canonical_sign(f));
    };
    // sequences of pairwise distinct i's and j's of equal length k >= 2
    std::function<void()> grow = [&] {
        if (is.size() >= 2) emit();
        if (static_cast<int>(is.size()) == std::min(p, r)) return;
        for (int i = 0; i < p; ++i) {
            if (used_i[static_cast<std::size_t>(i)]) continue;
            for (int j = 0; j < r; ++j) {
                if (used_j[static_cast<std::size_t>(j)]) continue;
                used_i[static_cast<std::size_t>(i)] = used_j[static_cast<std::size_t>(j)] = true;
                is.push_back(i);
                js.push_back(j);
                grow();
                is.pop_back();
                js.pop_back();
                used_i[static_cast<std::size_t>(i)] = used_j[static_cast<std::size_t>(j)] = false;
            }
        }
    };
    grow();
    return {out.begin(), out.end()};
}

bool c3_normality(int d1, int d2, int d3) {
    std::vector<int> d{d1, d2, d3};
    std::sort(d.begin(), d.end());
    if (d[0] <= 2) return true;
    if (d[0] == 3 && d[1] == 3) return true;
    return d == std::vector<int>{3, 4, 4} || d == std::vector<int>{3, 4, 5} || d == std::vector<int>{3, 5, 5};
}

/////////////////////////////////////////////////////////////////////////////

Matrix C3Facets::facets() const {
    std::vector<Move> keep;
    for (std::size_t r = 0; r < rows.rows(); ++r)
        if (irredundant[r]) keep.push_back(rows.row(r));
    return Matrix::from_rows(keep, rows.cols());
}

C3Facets c3_facets(int p, int r) {
    if (p < 1 || r < 1) throw std::invalid_argument("p and r must be positive");
    if (p + r > 20) throw std::invalid_argument("p + r too large for the subset families");
    HierModel tri({{0, 1}, {0, 2}, {1, 2}}, {p, 2, r});
    Matrix B = design_matrix(tri);
    const std::size_t R = B.rows();
    const auto P = static_cast<std::size_t>(p), Rr = static_cast<std::size_t>(r);
    auto y12 = [&](std::size_t i, std::size_t j) { return i * 2 + j; };
    auto y13 = [&](std::size_t i, std::size_t k) { return 2 * P + i * Rr + k; };
    auto y23 = [&](std::size_t j, std::size_t k) { return 2 * P + P * Rr + j * Rr + k; };
    auto unit = [&](std::size_t c) {
        Move v(R, 0);
        v[c] = 1;
        return v;
    };
    auto sum = [&](auto&& pred) {
        Move v(R, 0);
        for (std::size_t c = 0; c < R; ++c)
            if (pred(c)) v[c] = 1;
        return v;
    };
    // lower margins expressed through the two-way margins
    auto y1 = [&](std::size_t i) { return sum([&](std::size_t c) { return c == y12(i, 0) || c == y12(i, 1); }); };
    auto y2 = [&](std::size_t j) { return sum([&](std::size_t c) { return c < 2 * P && c % 2 == j; }); };
    auto y3 = [&](std::size_t k) {
        return sum([&](std::size_t c) { return c >= 2 * P && c < 2 * P + P * Rr && (c - 2 * P) % Rr == k; });
    };
    Move y0 = sum([&](std::size_t c) { return c < 2 * P; });

    std::vector<Move> gen;
    for (std::size_t i = 0; i < P; ++i)
        for (std::size_t j = 0; j < 2; ++j) gen.push_back(unit(y12(i, j)));
    for (std::size_t i = 0; i < P; ++i)
        for (std::size_t k = 0; k < Rr; ++k) gen.push_back(unit(y13(i, k)));
    for (std::size_t j = 0; j < 2; ++j)
        for (std::size_t k = 0; k < Rr; ++k) gen.push_back(unit(y23(j, k)));
    for (std::size_t i = 0; i < P; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            gen.push_back(y1(i) - unit(y12(i, j)));
            gen.push_back(y2(j) - unit(y12(i, j)));
            gen.push_back(y0 - y1(i) - y2(j) + unit(y12(i, j)));
        }
    for (std::size_t j = 0; j < 2; ++j)
        for (std::size_t k = 0; k < Rr; ++k) {
            gen.push_back(y2(j) - unit(y23(j, k)));
            gen.push_back(y3(k) - unit(y23(j, k)));
            gen.push_back(y0 - y2(j) - y3(k) + unit(y23(j, k)));
        }
    for (std::size_t i = 0; i < P; ++i)
        for (std::size_t k = 0; k < Rr; ++k) {
            gen.push_back(y3(k) - unit(y13(i, k)));
            gen.push_back(y1(i) - unit(y13(i, k)));
            gen.push_back(y0 - y1(i) - y3(k) + unit(y13(i, k)));
        }
    for (std::size_t A = 0; A < (std::size_t{1} << P); ++A)
        for (std::size_t Bs = 0; Bs < (std::size_t{1} << Rr); ++Bs) {
            Move s13(R, 0), s12(R, 0), s1(R, 0), s23(R, 0), s3(R, 0);
            for (std::size_t i = 0; i < P; ++i) {
                if (!(A >> i & 1)) continue;
                s12 = s12 + unit(y12(i, 1));
                s1 = s1 + y1(i);
                for (std::size_t k = 0; k < Rr; ++k)
                    if (Bs >> k & 1) s13 = s13 + unit(y13(i, k));
            }
            for (std::size_t k = 0; k < Rr; ++k) {
                if (!(Bs >> k & 1)) continue;
                s23 = s23 + unit(y23(1, k));
                s3 = s3 + y3(k);
            }
            Move t2 = y2(1);
            gen.push_back(s13 + (s12 - s1) + (s23 - s3) - t2 + y0);
            gen.push_back(s13 - (s12 + s1) - (s23 + s3) + t2);
            gen.push_back(-s13 + (s12 - s1) - (s23 - s3) - t2);
            gen.push_back(-s13 - (s12 - s1) + (s23 - s3) - t2);
        }

    C3Facets out;
    std::size_t full = rank(B);
    std::set<Move> seen;
    std::vector<Move> rows;
    auto cols = B.col_list();
    for (auto& g : gen) {
        Move val(cols.size());
        bool neg = false;
        for (std::size_t c = 0; c < cols.size(); ++c) {
            val[c] = dot(g, cols[c]);
            neg = neg || val[c] < 0;
        }
        if (neg || is_zero(val)) {
            ++out.invalid;
            continue;
        }
        if (!seen.insert(val).second) {
            ++out.repeated;
            continue;
        }
        std::vector<std::size_t> tight;
        for (std::size_t c = 0; c < cols.size(); ++c)
            if (val[c] == 0) tight.push_back(c);
        out.irredundant.push_back(!tight.empty() && rank(B.select_cols(tight)) + 1 == full);
        rows.push_back(g);
    }
    out.rows = Matrix::from_rows(rows, R);
    return out;
}

/////////////////////////////////////////////////////////////////////////////

namespace {

using Multigraph = std::vector<std::vector<int>>; // edge multiplicities

bool acyclic(const Multigraph& g) {
    std::size_t r = g.size();
    std::vector<int> indeg(r, 0);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            if (g[i][j]) ++indeg[j];
    std::vector<std::size_t> ready;
    for (std::size_t i = 0; i < r; ++i)
        if (!indeg[i]) ready.push_back(i);
    std::size_t done = 0;
    while (!ready.empty()) {
        auto i = ready.back();
        ready.pop_back();
        ++done;
        for (std::size_t j = 0; j < r; ++j)
            if (g[i][j] && --indeg[j] == 0) ready.push_back(j);
    }
    return done == r;
}

std::set<Multigraph> acyclic_multigraphs(const Move& bp) {
    std::size_t r = bp.size();
    Int total = 0;
    for (Int x : bp) total += x;
    if (total != 0) throw std::invalid_argument("b' must sum to zero");
    std::vector<std::size_t> sources, sinks;
    for (std::size_t i = 0; i < r; ++i) {
        for (Int k = 0; k < bp[i]; ++k) sources.push_back(i);
        for (Int k = 0; k < -bp[i]; ++k) sinks.push_back(i);
    }
    if (sources.size() > 8) throw resource_guard("too many path ends in b'");

    // simple paths between every ordered pair
    std::map<std::pair<std::size_t, std::size_t>, std::vector<std::vector<std::size_t>>> paths;
    std::vector<std::size_t> cur;
    std::vector<bool> on(r, false);
    std::function<void(std::size_t)> walk = [&](std::size_t v) {
        if (cur.size() > 1) paths[{cur.front(), v}].push_back(cur);
        for (std::size_t w = 0; w < r; ++w) {
            if (on[w]) continue;
            on[w] = true;
            cur.push_back(w);
            walk(w);
            cur.pop_back();
            on[w] = false;
        }
    };
    for (std::size_t s = 0; s < r; ++s) {
        on[s] = true;
        cur = {s};
        walk(s);
        on[s] = false;
    }

    std::set<Multigraph> out;
    Multigraph g(r, std::vector<int>(r, 0));
    std::vector<bool> sink_used(sinks.size(), false);
    std::function<void(std::size_t)> place = [&](std::size_t u) {
        if (u == sources.size()) {
            if (acyclic(g)) out.insert(g);
            return;
        }
        for (std::size_t k = 0; k < sinks.size(); ++k) {
            if (sink_used[k] || (k > 0 && sinks[k] == sinks[k - 1] && !sink_used[k - 1])) continue;
            sink_used[k] = true;
            for (auto& path : paths[{sources[u], sinks[k]}]) {
                for (std::size_t e = 0; e + 1 < path.size(); ++e) ++g[path[e]][path[e + 1]];
                place(u + 1);
                for (std::size_t e = 0; e + 1 < path.size(); ++e) --g[path[e]][path[e + 1]];
            }
            sink_used[k] = false;
        }
    };
    place(0);
    return out;
}

} // namespace

std::size_t acyclic_multigraph_count(const Move& b_first_row) { return acyclic_multigraphs(b_first_row).size(); }

std::vector<Move> acyclic_multigraph_lifts(const Move& b, int p) {
    if (b.size() % 2 || b.empty()) throw std::invalid_argument("b must be a 2 x r table");
    const int r = static_cast<int>(b.size() / 2);
    Move bp(b.begin(), b.begin() + r);
    for (int k = 0; k < r; ++k)
        if (b[static_cast<std::size_t>(r + k)] != -bp[static_cast<std::size_t>(k)])
            throw std::invalid_argument("b must have zero column sums");
    Shape sh({p, 2, r});
    std::set<Move> out;
    for (auto& g : acyclic_multigraphs(bp)) {
        std::vector<std::pair<int, int>> edges; // one entry per unit of multiplicity
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j)
                for (int c = 0; c < g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; ++c)
                    edges.push_back({i, j});
        std::vector<int> label(edges.size(), 0);
        Move m(sh.size(), 0);
        // labels nondecreasing along parallel copies of an edge
        std::function<void(std::size_t)> assign = [&](std::size_t e) {
            if (e == edges.size()) {
                out.insert(m);
                return;
            }
            int lo = (e > 0 && edges[e] == edges[e - 1]) ? label[e - 1] : 0;
            auto [i, j] = edges[e];
            for (int a = lo; a < p; ++a) {
                label[e] = a;
                std::size_t c[4] = {sh.flat({a, 0, i}), sh.flat({a, 1, j}), sh.flat({a, 0, j}), sh.flat({a, 1, i})};
                ++m[c[0]], ++m[c[1]], --m[c[2]], --m[c[3]];
                assign(e + 1);
                --m[c[0]], --m[c[1]], ++m[c[2]], ++m[c[3]];
            }
        };
        assign(0);
    }
    return {out.begin(), out.end()};
}

/////////////////////////////////////////////////////////////////////////////

std::vector<Move> instantiate(const TableauFamily& f, const Shape& shape, const std::vector<FamilyDomain>& domains,
                              bool zero_based, std::size_t cap) {
    const std::size_t k = shape.levels().size();
    struct Entry {
        int literal = -1;
        std::size_t var = 0;
    };
    std::vector<std::string> names;
    std::vector<int> sizes;
    auto parse_row = [&](const std::string& row) {
        std::stringstream ss(row);
        std::string tok;
        std::vector<Entry> out;
        while (ss >> tok) {
            Entry e;
            if (std::isdigit(static_cast<unsigned char>(tok[0]))) {
                e.literal = std::stoi(tok) - (zero_based ? 0 : 1);
            } else {
                auto it = std::find(names.begin(), names.end(), tok);
                if (it == names.end()) {
                    auto d = std::find_if(domains.begin(), domains.end(),
                                          [&](const FamilyDomain& fd) { return fd.letter == tok[0]; });
                    if (d == domains.end()) throw std::invalid_argument("no domain for variable " + tok);
                    names.push_back(tok);
                    sizes.push_back(d->size);
                    it = names.end() - 1;
                }
                e.var = static_cast<std::size_t>(it - names.begin());
            }
            out.push_back(e);
        }
        if (out.size() != k) throw std::invalid_argument("tableau row \"" + row + "\" has the wrong length");
        return out;
    };
    // binary rows may be written without spaces, e.g. "0ab0"
    auto expand = [&](const std::string& row) {
        if (row.find(' ') == std::string::npos && row.size() == k && k > 1) {
            std::string spaced;
            for (char c : row) (spaced += c) += ' ';
            return spaced;
        }
        return row;
    };
    std::vector<std::vector<Entry>> plus, minus;
    for (auto& row : f.plus) plus.push_back(parse_row(expand(row)));
    for (auto& row : f.minus) minus.push_back(parse_row(expand(row)));

    double combos = 1;
    for (int s : sizes) combos *= s;
    if (combos > static_cast<double>(cap))
        throw resource_guard("family has " + std::to_string(static_cast<long long>(combos)) + " instances");

    std::set<Move> out;
    std::vector<int> val(names.size(), 0);
    std::vector<int> idx(k);
    for (;;) {
        Move m(shape.size(), 0);
        bool ok = true;
        auto add = [&](const std::vector<std::vector<Entry>>& rows, Int sign) {
            for (auto& row : rows) {
                for (std::size_t v = 0; v < k; ++v) {
                    idx[v] = row[v].literal >= 0 ? row[v].literal : val[row[v].var];
                    if (idx[v] < 0 || idx[v] >= shape.levels()[v]) ok = false;
                }
                if (!ok) return;
                m[shape.flat(idx)] += sign;
            }
        };
        add(plus, 1);
        if (ok) add(minus, -1);
        if (ok && !is_zero(m)) out.insert(canonical_sign(m));
        std::size_t pos = 0;
        while (pos < val.size() && ++val[pos] == sizes[pos]) val[pos++] = 0;
        if (pos == val.size()) break;
    }
    return {out.begin(), out.end()};
}

std::vector<TableauFamily> c4_families() {
    return {
        {{"a1 b c e1", "a2 b c e2"}, {"a1 b c e2", "a2 b c e1"}},
        {{"a1 1 c1 e1", "a2 2 c1 e2", "a2 1 c2 e3", "a1 2 c2 e4"},
         {"a2 1 c1 e1", "a1 2 c1 e2", "a1 1 c2 e3", "a2 2 c2 e4"}},
        {{"a1 1 c1 e1", "a2 2 c1 e2", "a3 1 c2 e2", "a4 2 c2 e1"},
         {"a1 1 c1 e2", "a2 2 c1 e1", "a3 1 c2 e1", "a4 2 c2 e2"}},
        {{"a1 1 1 e1", "a2 1 2 e2", "a3 1 3 e3", "a2 2 1 e4", "a3 2 2 e5", "a1 2 3 e6"},
         {"a2 1 1 e1", "a3 1 2 e2", "a1 1 3 e3", "a1 2 1 e4", "a2 2 2 e5", "a3 2 3 e6"}},
        {{"a1 1 1 e1", "a2 1 2 e2", "a3 1 3 e3", "a4 2 1 e2", "a5 2 2 e3", "a6 2 3 e1"},
         {"a1 1 1 e2", "a2 1 2 e3", "a3 1 3 e1", "a4 2 1 e1", "a5 2 2 e2", "a6 2 3 e3"}},
        // glue moves
        {{"a 1 c1 e", "a 2 c2 e"}, {"a 1 c2 e", "a 2 c1 e"}},
        {{"a1 1 c1 e1", "a1 2 c2 e2", "a2 1 c2 e3", "a2 2 c3 e1"},
         {"a1 1 c2 e3", "a1 2 c1 e1", "a2 1 c3 e1", "a2 2 c2 e2"}},
        {{"a1 1 c1 e1", "a2 2 c2 e1", "a3 1 c2 e2", "a1 2 c3 e2"},
         {"a3 1 c2 e1", "a1 2 c1 e1", "a1 1 c3 e2", "a2 2 c2 e2"}},
    };
}

HierModel c4_model(int p, int q) { return HierModel({{0, 1}, {0, 2}, {1, 3}, {2, 3}}, {p, 2, 3, q}); }

BasisResult c4_basis(int p, int q) {
    if (p < 2 || q < 2) throw std::invalid_argument("p and q must be at least 2");
    HierModel model = c4_model(p, q);
    Shape sh = model.shape();
    std::vector<FamilyDomain> dom{{'a', p}, {'b', 2}, {'c', 3}, {'e', q}};
    std::vector<Move> all;
    for (auto& f : c4_families()) {
        auto ms = instantiate(f, sh, dom, false);
        all.insert(all.end(), ms.begin(), ms.end());
    }
    Matrix B = design_matrix(model);
    for (auto& m : all)
        if (!is_zero(B * m)) throw std::logic_error("generated move " + format_move(m, model) + " changes a margin");
    BasisResult r;
    r.moves = canonical_set(all);
    r.kind = BasisKind::markov;
    r.source = kernel_lattice(B);
    return r;
}

std::size_t c4_symmetry_types(int p, int q) {
    HierModel model = c4_model(std::max(p, 6), std::max(q, 6));
    Shape sh = model.shape();
    std::set<Move> types;
    for (auto& f : c4_families()) {
        // label variables a* and e* by restricted growth strings
        std::vector<std::string> vars;
        auto collect = [&](const std::vector<std::string>& rows) {
            for (auto& row : rows) {
                std::stringstream ss(row);
                std::string tok;
                while (ss >> tok)
                    if ((tok[0] == 'a' || tok[0] == 'e') && std::find(vars.begin(), vars.end(), tok) == vars.end())
                        vars.push_back(tok);
            }
        };
        collect(f.plus);
        collect(f.minus);
        std::vector<int> lab(vars.size(), 0);
        std::function<void(std::size_t, int, int)> go = [&](std::size_t v, int na, int ne) {
            if (v == vars.size()) {
                auto subst = [&](const std::vector<std::string>& rows) {
                    std::vector<std::string> out;
                    for (auto& row : rows) {
                        std::stringstream ss(row);
                        std::string tok, res;
                        while (ss >> tok) {
                            auto it = std::find(vars.begin(), vars.end(), tok);
                            res += (it == vars.end() ? tok : std::to_string(lab[static_cast<std::size_t>(it - vars.begin())] + 1)) + " ";
                        }
                        out.push_back(res);
                    }
                    return out;
                };
                TableauFamily g{subst(f.plus), subst(f.minus)};
                for (auto& m : instantiate(g, sh, {{'b', 2}, {'c', 3}}, false)) types.insert(m);
                return;
            }
            bool is_a = vars[v][0] == 'a';
            int used = is_a ? na : ne, limit = is_a ? p : q;
            for (int l = 0; l <= used && l < limit; ++l) {
                lab[v] = l;
                int grown = l == used ? used + 1 : used;
                go(v + 1, is_a ? grown : na, is_a ? ne : grown);
            }
        };
        go(0, 0, 0);
    }
    return types.size();
}

/////////////////////////////////////////////////////////////////////////////

std::string format_move(const Move& m, const HierModel& model) {
    bool binary = std::all_of(model.levels().begin(), model.levels().end(), [](int d) { return d == 2; });
    return format_tableau(tableau_of(m, model.shape()), binary);
}

K4eReport k4e_workflow(int hole_bound, int projection_bound) {
    K4eReport rep;
    rep.hole_bound = hole_bound;
    rep.oracle_bound = projection_bound;
    rep.k4 = HierModel({{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}, {2, 2, 2, 2});
    rep.c4_tilde = HierModel({{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}}, {2, 2, 2, 2});
    Matrix K = design_matrix(rep.k4);
    Matrix C = design_matrix(rep.c4_tilde);
    Shape sh = rep.c4_tilde.shape();

    rep.holes = holes(K, hole_bound);

    // all pair margins equal to one
    Move ones(C.rows(), 1);
    rep.hole_fiber = enumerate_fiber(C, ones);

    // grading by the [14] margin
    Shape S({2, 2});
    std::vector<int> phi(sh.size());
    for (std::size_t i = 0; i < sh.size(); ++i) {
        auto idx = sh.index(i);
        phi[i] = static_cast<int>(S.flat({idx[0], idx[3]}));
    }
    Matrix A = design_matrix(HierModel({{0}, {1}}, {2, 2}));
    GradedMatrix g = GradedMatrix::make(C, phi, 4, A);
    std::set<Move> proj;
    for (auto& v : rep.hole_fiber) proj.insert(g.apply(v));
    rep.projected.assign(proj.begin(), proj.end());

    // phi(ker B) = Z g; the hole fiber needs the difference of its two images
    std::vector<Move> images;
    Lattice kerC = kernel_lattice(C);
    for (auto& u : kerC.basis()) images.push_back(g.apply(u));
    Lattice Lg = Lattice::from_generators(4, images);
    std::set<Move> pfi;
    for (auto& b : Lg.basis()) pfi.insert(canonical_sign(b));
    for (auto& u : rep.projected)
        for (auto& w : rep.projected)
            if (u != w) pfi.insert(canonical_sign(u - w));
    rep.pfi.assign(pfi.begin(), pfi.end());
    std::sort(rep.pfi.begin(), rep.pfi.end(), [](const Move& x, const Move& y) {
        return l1_norm(x) != l1_norm(y) ? l1_norm(x) < l1_norm(y) : x < y;
    });

    Shape K4s = rep.k4.shape();
    Move v(K4s.size(), 0);
    for (auto idx : {std::vector<int>{0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}, {1, 1, 1, 1}})
        v[K4s.flat(idx)] = 1;
    rep.v_fills = K * v == Move(K.rows(), 1) + K.col(0);

    std::vector<FamilyDomain> bin{{'a', 2}, {'b', 2}, {'c', 2}, {'d', 2}};
    std::vector<TableauFamily> m1{
        {{"0ab0", "1ab1"}, {"0ab1", "1ab0"}},
        {{"000a", "011b", "101c", "110d"}, {"100a", "111b", "001c", "010d"}},
        {{"a000", "b110", "c011", "d101"}, {"a001", "b111", "c010", "d100"}},
    };
    TableauFamily sums{{"0ab0", "1ab1", "0cd0", "1cd1"}, {"0ab1", "1ab0", "0cd1", "1cd0"}};
    for (auto& f : m1) {
        auto ms = instantiate(f, sh, bin, true);
        rep.m1.insert(rep.m1.end(), ms.begin(), ms.end());
    }
    rep.m1 = canonical_set(rep.m1);
    rep.m = rep.m1;
    auto extra = instantiate(sums, sh, bin, true);
    rep.m.insert(rep.m.end(), extra.begin(), extra.end());
    rep.m = canonical_set(rep.m);

    rep.m_is_markov = markov_oracle(FiberFamily::matrix(C), rep.m, projection_bound).pass;
    TfpInstance t = build_tfp(g, g);
    rep.projection_m = check_compatible_projection(rep.m, rep.m, t, projection_bound);
    rep.projection_m1 = check_compatible_projection(rep.m1, rep.m1, t, projection_bound);
    return rep;
}

} // namespace toric
