#include <numeric>
#include <set>

#include "doctest.h"
#include "oracle.hpp"
#include "toric/cone.hpp"
#include "toric/hier.hpp"
#include "toric/verify.hpp"

using namespace toric;

namespace {
HierModel triangle(int p, int q, int r) { return HierModel({{0, 1}, {0, 2}, {1, 2}}, {p, q, r}); }

// a binary table given by its rows, as a move on 2^k cells
Move binary_table(const std::vector<std::string>& rows) {
    Move v(std::size_t{1} << rows.front().size(), 0);
    for (auto& r : rows) v[std::stoul(r, nullptr, 2)] += 1;
    return v;
}

bool is_permutation_of_range(std::vector<std::size_t> v) {
    std::sort(v.begin(), v.end());
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != i) return false;
    return true;
}
} // namespace

TEST_CASE("parsing and printing complexes") {
    auto m = HierModel::parse("[12][13][23]", {2, 3, 4});
    CHECK(m.facets() == std::vector<std::vector<int>>{{0, 1}, {0, 2}, {1, 2}});
    CHECK(m.to_string() == "[12][13][23]");
    auto big = HierModel::parse("[1,10][2,3,4,5,6,7,8,9]", std::vector<int>(10, 2));
    CHECK(big.facets().front() == std::vector<int>{0, 9});
    // non-maximal faces are dropped
    CHECK(HierModel::parse("[12][1][123]", {2, 2, 2}).to_string() == "[123]");
    CHECK_THROWS(HierModel::parse("[12]", {2, 2, 2}));
    CHECK_THROWS(HierModel::parse("[12][3", {2, 2, 2}));
    CHECK_THROWS(HierModel::parse("[12][13]", {2, 1, 2}));
}

TEST_CASE("design matrices") {
    CHECK(design_matrix(HierModel::parse("[1]", {2})) == Matrix::identity(2));
    Matrix B = design_matrix(triangle(2, 2, 2));
    CHECK(B.rows() == 12);
    CHECK(B.cols() == 8);
    CHECK(kernel_lattice(B).rank() == 1);
    // frozen from oracle::graver_box(B, 1)
    const std::vector<Move> graver{{1, -1, -1, 1, -1, 1, 1, -1}};
    CHECK(oracle::graver_box(B, 1) == graver);
    CHECK(graver_basis(kernel_lattice(B)).moves == graver);
    // each column has one 1 per facet
    for (std::size_t j = 0; j < B.cols(); ++j) {
        Int s = 0;
        for (std::size_t i = 0; i < B.rows(); ++i) s += B.at(i, j);
        CHECK(s == 3);
    }
}

TEST_CASE("binary K4 has 60 minimal Markov moves") {
    auto k4 = HierModel::parse("[12][13][14][23][24][34]", {2, 2, 2, 2});
    CHECK(markov_basis(kernel_lattice(design_matrix(k4))).moves.size() == 60);
}

TEST_CASE("restriction and adding faces") {
    auto c4 = c4_model(2, 3);
    CHECK(c4.to_string() == "[12][13][24][34]");
    CHECK(c4.restrict_to({0, 1, 2}).to_string() == "[12][13]");
    CHECK(c4.restrict_to({1, 2}).to_string() == "[1][2]");
    CHECK(c4.with_face({1, 2}).to_string() == "[12][13][23][24][34]");
}

TEST_CASE("splitting a model is a toric fiber product") {
    for (auto [p, q] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}}) {
        auto c4 = c4_model(p, q);
        auto sp = split(c4, {0, 1, 2}, {1, 2, 3});
        CHECK(sp.S == std::vector<int>{1, 2});
        auto t = build_tfp(sp.left, sp.right);
        auto cols = sp.product_columns(t);
        CHECK(is_permutation_of_range(cols));
        Matrix D = design_matrix(c4).select_cols(cols);
        CHECK(kernel_lattice(D) == kernel_lattice(t.product));
        // adding the separator face gives the codimension zero product
        auto a = assoc_codim_zero(t);
        Matrix Dt = design_matrix(c4.with_face(sp.S)).select_cols(cols);
        CHECK(kernel_lattice(Dt) == kernel_lattice(a.product));
    }
}

TEST_CASE("two copies glued along a missing edge") {
    // copies on {1,2,3,4} and {1,5,6,4}, each without the edge [14]
    auto glued = HierModel::parse("[12][13][23][24][34][15][16][56][45][46]", std::vector<int>(6, 2));
    auto sp = split(glued, {0, 1, 2, 3}, {0, 3, 4, 5});
    CHECK(sp.left_model.to_string() == "[12][13][23][24][34]");
    CHECK(sp.base_model.to_string() == "[1][2]");
    auto t = build_tfp(sp.left, sp.right);
    Matrix D = design_matrix(glued).select_cols(sp.product_columns(t));
    CHECK(kernel_lattice(D) == kernel_lattice(t.product));
    CHECK(codimension(sp.left) == 1);
}

TEST_CASE("invalid splits") {
    auto c4 = c4_model(2, 2);
    CHECK_THROWS(split(c4, {0, 1, 2, 3}, {}));
    CHECK_THROWS(split(c4, {0, 1}, {2, 3}));
    CHECK_THROWS(split(c4, {0, 1, 2}, {1, 2}));
}

TEST_CASE("triangle Graver bases") {
    for (auto [p, r] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}, {3, 3}}) {
        auto G = graver_basis(kernel_lattice(design_matrix(triangle(p, 2, r)))).moves;
        CAPTURE(p);
        CAPTURE(r);
        CHECK(triangle_graver(p, r) == G);
    }
    CHECK(triangle_graver(2, 2) == oracle::graver_box(design_matrix(triangle(2, 2, 2)), 1));
    CHECK(triangle_graver(1, 3).empty());
    CHECK(triangle_graver(3, 3).size() == 15);
}

TEST_CASE("normality of the triangle") {
    CHECK(c3_normality(2, 7, 11));
    CHECK_FALSE(c3_normality(4, 4, 4));
    CHECK(c3_normality(5, 3, 5));
    CHECK(c3_normality(3, 3, 9));
    CHECK(c3_normality(4, 3, 4));
    CHECK_FALSE(c3_normality(3, 6, 6));
    // agrees with a hole scan where that is cheap
    CHECK(holes(design_matrix(triangle(2, 2, 3)), 4).empty() == c3_normality(2, 2, 3));
}

TEST_CASE("triangle facets") {
    for (auto [p, r] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}}) {
        auto cf = c3_facets(p, r);
        Matrix B = design_matrix(triangle(p, 2, r));
        for (std::size_t j = 0; j < B.cols(); ++j) CHECK(nonnegative(cf.rows * B.col(j)));
        auto dd = cone_facets(B);
        CHECK(cf.facets().rows() == dd.facets.rows());
    }
    CHECK(c3_facets(2, 2).facets().rows() == 16);
}

TEST_CASE("lifts from acyclic multigraphs") {
    Move b{1, -1, 0, -1, 1, 0};
    CHECK(acyclic_multigraph_count({1, -1, 0}) == 2);
    CHECK(acyclic_multigraph_count({0, 0, 0}) == 1);
    CHECK(acyclic_multigraph_count({2, -1, -1}) == 3);
    auto fam = acyclic_multigraph_lifts(b, 2);
    // one single-edge graph and one two-edge path, two labels each
    CHECK(fam.size() == 4);
    auto sp = split(c4_model(2, 2), {0, 1, 2}, {1, 2, 3});
    CHECK(sp.left.apply(fam.front()) == b);
    for (auto& m : fam) {
        CHECK(is_zero(sp.left.B * m));
        CHECK(sp.left.apply(m) == b);
    }
    CHECK(lift_move(sp.left, b) == fam);
    CHECK(remove_conformal_redundant(fam).size() == fam.size());
    auto zero = acyclic_multigraph_lifts(Move(6, 0), 2);
    CHECK((zero.empty() || (zero.size() == 1 && is_zero(zero.front()))));
}

TEST_CASE("instantiating tableau families") {
    Shape s({2, 2});
    TableauFamily f{{"a b", "c d"}, {"a d", "c b"}};
    auto v = instantiate(f, s, {{'a', 2}, {'b', 2}, {'c', 2}, {'d', 2}}, false);
    CHECK(v == std::vector<Move>{{1, -1, -1, 1}});
    TableauFamily lit{{"1 1", "2 2"}, {"1 2", "2 1"}};
    CHECK(instantiate(lit, s, {}, false) == v);
    CHECK(instantiate(TableauFamily{{"0a"}, {"1a"}}, Shape({2, 2}), {{'a', 2}}, true).size() == 2);
}

TEST_CASE("4-cycle generators") {
    auto M = c4_basis(2, 2);
    Matrix B = design_matrix(c4_model(2, 2));
    for (auto& m : M.moves) CHECK(is_zero(B * m));
    CHECK(M.moves.size() == 288);
    CHECK(markov_oracle(FiberFamily::matrix(B), M.moves, 4, 2).pass);
    auto M3 = c4_basis(3, 2);
    Matrix B3 = design_matrix(c4_model(3, 2));
    for (auto& m : M3.moves) CHECK(is_zero(B3 * m));
    CHECK(M3.moves.size() > M.moves.size());
    CHECK(c4_families().size() == 8);
}

TEST_CASE("binary tableaux are printed with 0/1 symbols") {
    auto m = HierModel::parse("[12][13][23]", {2, 2, 2});
    Move g{1, -1, -1, 1, -1, 1, 1, -1};
    CHECK(format_move(g, m) == "[0 0 0;0 1 1;1 0 1;1 1 0] - [0 0 1;0 1 0;1 0 0;1 1 1]");
}

TEST_CASE("gluing binary K4 minus an edge") {
    auto rep = k4e_workflow(4, 4);
    CHECK(rep.holes == std::vector<Move>{Move(24, 1)});
    std::vector<Move> tables{binary_table({"0000", "1011", "1101", "0110"}),
                             binary_table({"0001", "1010", "1100", "0111"}),
                             binary_table({"1000", "0011", "0101", "1110"}),
                             binary_table({"1001", "0010", "0100", "1111"})};
    std::sort(tables.begin(), tables.end());
    auto fiber = rep.hole_fiber;
    std::sort(fiber.begin(), fiber.end());
    CHECK(fiber == tables);
    CHECK(rep.projected == std::vector<Move>{{0, 2, 2, 0}, {2, 0, 0, 2}});
    CHECK(rep.pfi == std::vector<Move>{{1, -1, -1, 1}, {2, -2, -2, 2}});
    CHECK(rep.v_fills);
    CHECK(rep.m_is_markov);
    CHECK(rep.projection_m.pass);
    CHECK_FALSE(rep.projection_m1.pass);
    CHECK(rep.projection_m1.b_right == Move(20, 1));
    CHECK(rep.m1.size() < rep.m.size());
}
