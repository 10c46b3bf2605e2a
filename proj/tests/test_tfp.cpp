#include <set>

#include "doctest.h"
#include "oracle.hpp"
#include "toric/tfp.hpp"
#include "toric/verify.hpp"

using namespace toric;

namespace {
Matrix small_B() { return Matrix::from_rows({{1, 1, 1, 1}, {0, 0, 1, 2}}); }
GradedMatrix left_g() { return GradedMatrix::make(small_B(), {0, 1, 1, 2}, 3); }
GradedMatrix right_g() { return GradedMatrix::make(small_B(), {1, 0, 0, 2}, 3); }

std::set<Move> column_set(const Matrix& m) {
    auto c = m.col_list();
    return {c.begin(), c.end()};
}
} // namespace

TEST_CASE("product of two gradings of the same matrix") {
    auto t = build_tfp(left_g(), right_g());
    Matrix expected = Matrix::from_rows({{1, 1, 1, 1, 1}, {0, 0, 0, 1, 2}, {1, 1, 1, 1, 1}, {0, 1, 0, 0, 2}});
    CHECK(t.product == expected);
    CHECK(t.columns.size() == 5);
    for (std::size_t c = 0; c < t.columns.size(); ++c) {
        auto [i, j] = t.columns[c];
        CHECK(t.left.phi[i] == t.right.phi[j]);
        CHECK(t.xi[c] == t.left.phi[i]);
        CHECK(t.column_of(i, j) == c);
    }
}

TEST_CASE("the example glues") {
    auto t = build_tfp(left_g(), right_g());
    Move m1{0, -1, 2, -1}, m2{1, -1, 0, 0}, m3{1, -2, 2, -1};
    CHECK(glues(m1, m3, t) == std::vector<Move>{{-2, 2, -1, 2, -1}});
    CHECK(glues(m2, -m2, t) == std::vector<Move>{{1, 0, -1, 0, 0}});
    CHECK(glues(m3, m1, t) == std::vector<Move>{{-1, 2, -2, 2, -1}});
    CHECK(glues(Move(4, 0), Move(4, 0), t) == std::vector<Move>{Move(5, 0)});
    CHECK_THROWS(glues(m1, m2, t));
}

TEST_CASE("the example pipeline") {
    auto t = build_tfp(left_g(), right_g());
    auto r = tfp_pipeline(t, pf_description(left_g()), pf_description(right_g()));
    CHECK(r.pfi == std::vector<Move>{{0, 1, -1}, {1, -1, 0}, {1, 0, -1}});
    CHECK(r.codim_zero.empty());
    auto fam = FiberFamily::matrix(t.product);
    Move mh1{-2, 2, -1, 2, -1}, mh2{1, 0, -1, 0, 0}, mh4{3, -2, 0, -2, 1};
    CHECK(markov_oracle(fam, r.basis.moves, 6).pass);
    CHECK(compare_bases(fam, r.basis.moves, {mh2, mh4}, 6).pass);
    CHECK(markov_oracle(fam, {mh1, mh2}, 6).pass);
    CHECK_FALSE(markov_oracle(fam, {mh1}, 6).pass);
    CHECK(glue_degree_bound({0, 1, -1}, {{left_g(), {0, -1, 2, -1}}, {right_g(), {1, -2, 2, -1}}}) == 4);
    CHECK(move_degree(mh1) == 4);
}

TEST_CASE("glue properties (property)") {
    auto t = build_tfp(left_g(), right_g());
    auto r = tfp_pipeline(t, pf_description(left_g()), pf_description(right_g()));
    for (std::size_t k = 0; k < r.pfi.size(); ++k)
        for (auto& m : r.lifts_left[k])
            for (auto& mr : r.lifts_right[k]) {
                Int bound = glue_degree_bound(r.pfi[k], {{left_g(), m}, {right_g(), mr}});
                for (auto& gl : glues(m, mr, t)) {
                    CHECK(t.psi(gl) == m);
                    CHECK(t.psi_prime(gl) == mr);
                    CHECK(is_zero(t.product * gl));
                    CHECK(move_degree(gl) <= bound);
                }
            }
}

TEST_CASE("some glue applies wherever both factors do") {
    auto t = build_tfp(left_g(), right_g());
    Move m1{0, -1, 2, -1}, m3{1, -2, 2, -1};
    auto G = glues(m1, m3, t);
    oracle::points_up_to(5, 5, [&](const Move& w) {
        auto [mp, mm] = pos_neg_parts(m1);
        auto [rp, rm] = pos_neg_parts(m3);
        Move a = t.psi(w), b = t.psi_prime(w);
        if (!nonnegative(a - mm) || !nonnegative(b - rm)) return;
        bool some = false;
        for (auto& g : G) some = some || nonnegative(w + g);
        CHECK(some);
    });
}

TEST_CASE("quads") {
    auto t = build_tfp(left_g(), right_g());
    // fibers of phi: {0},{1,2},{3}; of phi': {1,2},{0},{3}
    CHECK(quads(t).empty());
    Matrix B = Matrix::from_rows({{1, 1, 1, 1}});
    auto g = GradedMatrix::make(B, {0, 0, 1, 1}, 2);
    auto t2 = build_tfp(g, g);
    CHECK(quads(t2).size() == 2);
    auto g3 = GradedMatrix::make(Matrix::from_rows({{1, 1, 1, 1, 1}}), {0, 0, 0, 1, 1}, 2);
    auto t3 = build_tfp(g3, g);
    // sum over blocks of C(a_k, 2) C(a'_k, 2) = 3 * 1 + 1 * 1
    CHECK(quads(t3).size() == 4);
    for (auto& q : quads(t3)) {
        CHECK(is_zero(t3.product * q));
        CHECK(is_zero(t3.psi(q)));
        CHECK(is_zero(t3.psi_prime(q)));
    }
}

TEST_CASE("lifts to the codimension zero product") {
    Matrix B = Matrix::from_rows({{1, 1, 1, 1}});
    auto g = GradedMatrix::make(B, {0, 0, 1, 1}, 2);
    auto single = GradedMatrix::make(Matrix::from_rows({{1, 1}}), {0, 1}, 2);
    auto t = build_tfp(g, single);
    CHECK(lifts_of({1, -1, 0, 0}, t, Side::left).size() == 1);
    auto t2 = build_tfp(g, g);
    auto L = lifts_of({1, -1, 0, 0}, t2, Side::left);
    CHECK(L.size() == 2);
    for (auto& m : L) CHECK(t2.psi(m) == Move{1, -1, 0, 0});
    CHECK_THROWS(lifts_of({1, 0, -1, 0}, t2, Side::left));
}

TEST_CASE("codimension zero products") {
    // phi(ker B) = 0
    Matrix B = Matrix::from_rows({{1, 1, 0, 0}, {0, 0, 1, 1}, {0, 1, 0, 1}});
    auto g = GradedMatrix::make(B, {0, 0, 1, 1}, 2, Matrix::identity(2));
    auto t = build_tfp(g, g);
    auto a = assoc_codim_zero(t);
    // ker of the codimension zero product equals ker xi cap ker product
    Lattice K = kernel_lattice(a.product);
    Lattice expected = kernel_lattice(t.product.vstack(t.graded().phi_matrix()));
    CHECK(K == expected);
    auto M = kernel_basis(g).moves;
    auto cz = codim_zero_basis(t, M, M);
    CHECK(markov_oracle(FiberFamily::matrix(t.product), cz.moves, 5).pass);
    auto r = tfp_pipeline(t, pf_description(g), pf_description(g));
    CHECK(r.pfi.empty());
    CHECK(r.basis.moves == cz.moves);
}

TEST_CASE("projections of product fibers are intersections (property)") {
    auto t = build_tfp(left_g(), right_g());
    for (auto& [bb, pts] : oracle::fibers(t.product, 5)) {
        Move b(bb.begin(), bb.begin() + 2), br(bb.begin() + 2, bb.end());
        std::set<Move> lhs, L, R, rhs;
        for (auto& v : pts) lhs.insert(t.xi_apply(v));
        for (auto& v : enumerate_fiber(small_B(), b)) L.insert(left_g().apply(v));
        for (auto& v : enumerate_fiber(small_B(), br)) R.insert(right_g().apply(v));
        std::set_intersection(L.begin(), L.end(), R.begin(), R.end(), std::inserter(rhs, rhs.end()));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("PFI description and basis") {
    auto pfi = pfi_description(pf_description(left_g()), pf_description(right_g()));
    CHECK(pfi.D.cols() == 3);
    CHECK(pfi_groebner_basis(pfi) == std::vector<Move>{{0, 1, -1}, {1, -1, 0}, {1, 0, -1}});
}

TEST_CASE("compatible projection") {
    auto t = build_tfp(left_g(), right_g());
    std::vector<Move> M{{0, -1, 2, -1}, {1, -1, 0, 0}, {1, -2, 2, -1}};
    CHECK(check_compatible_projection(M, M, t, 4).pass);
    CHECK_FALSE(check_compatible_projection({}, {}, t, 4).pass);
    // slow-varying sets in codimension one
    auto g = GradedMatrix::make(Matrix::from_rows({{1, 1, 1}}), {0, 0, 1}, 2);
    auto t1 = build_tfp(g, g);
    CHECK(check_compatible_projection({{1, -1, 0}, {1, 0, -1}}, {{1, -1, 0}, {0, 1, -1}}, t1, 4).pass);
}

TEST_CASE("iterated products") {
    auto g = GradedMatrix::make(Matrix::from_rows({{1, 1, 1}}), {0, 0, 1}, 2);
    auto two = iterated_tfp({g}, {2});
    CHECK(two.graded.B == build_tfp(g, g).product);
    auto three = iterated_tfp({g, g, g});
    auto left_assoc = build_tfp(build_tfp(g, g).graded(), g);
    auto right_assoc = build_tfp(g, build_tfp(g, g).graded());
    CHECK(three.graded.B.cols() == left_assoc.product.cols());
    // same columns in both bracketings, up to reindexing
    CHECK(column_set(three.graded.B) == column_set(left_assoc.product));
    CHECK(column_set(right_assoc.product) == column_set(left_assoc.product));
    for (auto& tup : three.tuples) CHECK(tup.size() == 3);
}

TEST_CASE("iterated glues are associative") {
    auto g = GradedMatrix::make(Matrix::from_rows({{1, 1, 1}}), {0, 0, 1}, 2);
    auto t12 = build_tfp(g, g);
    auto tl = build_tfp(t12.graded(), g);
    auto t23 = build_tfp(g, g);
    auto tr = build_tfp(g, t23.graded());
    Move f{1, 0, -1}, h{0, 1, -1};
    std::set<Move> left, right;
    for (auto& fg : glues(f, h, t12))
        for (auto& x : glues(fg, f, tl)) left.insert(x);
    for (auto& gh : glues(h, f, t23))
        for (auto& x : glues(f, gh, tr)) right.insert(x);
    // compare through the factor projections
    auto proj_left = [&](const Move& x) {
        Move a = tl.psi(x);
        return std::vector<Move>{t12.psi(a), t12.psi_prime(a), tl.psi_prime(x)};
    };
    auto proj_right = [&](const Move& x) {
        Move b = tr.psi_prime(x);
        return std::vector<Move>{tr.psi(x), t23.psi(b), t23.psi_prime(b)};
    };
    std::set<std::vector<Move>> pl, pr;
    for (auto& x : left) pl.insert(proj_left(x));
    for (auto& x : right) pr.insert(proj_right(x));
    CHECK(pl == pr);
    CHECK_FALSE(pl.empty());
}

TEST_CASE("degree bound over iterated products") {
    auto g = GradedMatrix::make(Matrix::from_rows({{1, 1, 1}}), {0, 0, 1}, 2);
    Int b = iterated_degree_bound({g}, {{1, -1}});
    CHECK(b >= 2);
    // every glue of the three-fold product respects it
    auto three = iterated_tfp({g}, {3});
    auto M = markov_basis(kernel_lattice(three.graded.B));
    for (auto& m : M.moves) CHECK(move_degree(m) <= b);
}
