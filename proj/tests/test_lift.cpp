#include <set>

#include "doctest.h"
#include "oracle.hpp"
#include "toric/lift.hpp"
#include "toric/verify.hpp"

using namespace toric;

namespace {
Matrix small_B() { return Matrix::from_rows({{1, 1, 1, 1}, {0, 0, 1, 2}}); }
GradedMatrix small_g() { return GradedMatrix::make(small_B(), {0, 1, 1, 2}, 3); }

std::set<Move> projected(const GradedMatrix& g, const Move& b) {
    std::set<Move> out;
    for (auto& v : enumerate_fiber(g.B, b)) out.insert(g.apply(v));
    return out;
}
} // namespace

TEST_CASE("augmented matrix") {
    Matrix expected = Matrix::from_rows(
        {{1, 1, 1, 1}, {0, 0, 1, 2}, {1, 0, 0, 0}, {0, 1, 1, 0}, {0, 0, 0, 1}});
    CHECK(augment(small_g()) == expected);
    auto id = GradedMatrix::make(small_B(), {0, 1, 2, 3}, 4);
    CHECK(augment(id) == small_B().vstack(Matrix::identity(4)));
    auto bare = GradedMatrix::make(Matrix(0, 3), {0, 0, 1}, 2);
    CHECK(augment(bare) == Matrix::from_rows({{1, 1, 0}, {0, 0, 1}}));
}

TEST_CASE("grading validation") {
    CHECK_THROWS(GradedMatrix::make(small_B(), {0, 0, 0, 2}, 3));
    // phi(ker B) must lie in ker A
    CHECK_THROWS(GradedMatrix::make(small_B(), {0, 1, 1, 2}, 3, Matrix::from_rows({{1, 0, 0}})));
    CHECK_NOTHROW(GradedMatrix::make(small_B(), {0, 1, 1, 2}, 3, Matrix::from_rows({{1, 1, 1}})));
}

TEST_CASE("kernel bases and codimension") {
    CHECK(kernel_basis(small_g()).moves.empty());
    // phi(ker B) is spanned by (1,-1,0) and (1,-2,1)
    CHECK(codimension(small_g()) == 2);
    auto collapse = GradedMatrix::make(Matrix(1, 3), {0, 0, 1}, 2);
    CHECK(kernel_basis(collapse).moves == std::vector<Move>{{1, -1, 0}});
    auto id = GradedMatrix::make(small_B(), {0, 1, 2, 3}, 4);
    CHECK(kernel_basis(id).moves.empty());
    CHECK(codimension(id) == 2);
    CHECK(codimension(GradedMatrix::make(Matrix::identity(2), {0, 1}, 2)) == 0);
}

TEST_CASE("projected fiber description") {
    auto d = pf_description(small_g());
    CHECK(d.D2.cols() == 3);
    CHECK(d.L.rank() == 2);
    // equality y1 + y2 + y3 = b1 is carried by L and the representative
    for (auto& [b, pts] : oracle::fibers(small_B(), 6)) {
        auto P = d.projected_fiber(b);
        CHECK(std::set<Move>(P.begin(), P.end()) == projected(small_g(), b));
    }
}

TEST_CASE("projected fibers match enumeration on random gradings (property)") {
    std::mt19937 rng(12);
    for (int trial = 0; trial < 8; ++trial) {
        Matrix B = Matrix::from_rows({Move(4, 1)}).vstack(oracle::random_matrix(rng, 1, 4, 0, 2));
        std::vector<int> phi{0, 1, 1, 2};
        std::shuffle(phi.begin(), phi.end(), rng);
        auto g = GradedMatrix::make(B, phi, 3);
        ProjectedFiberDescription d;
        try {
            d = pf_description(g, nullptr, 6);
        } catch (const holes_found&) {
            continue;
        }
        for (auto& [b, pts] : oracle::fibers(B, 5)) {
            auto P = d.projected_fiber(b);
            CHECK(std::set<Move>(P.begin(), P.end()) == projected(g, b));
        }
    }
}

TEST_CASE("a semigroup with holes is refused") {
    // columns (1,0),(1,1),(1,3): (1,2) is missing
    auto g = GradedMatrix::make(Matrix::from_rows({{1, 1, 1}, {0, 1, 3}}), {0, 0, 0}, 1);
    CHECK_THROWS_AS(pf_description(g), holes_found);
    auto d = pf_description(g, nullptr, default_hole_bound, true);
    CHECK_FALSE(d.caveats.empty());
}

TEST_CASE("PF basis and lifts of the small example") {
    auto d = pf_description(small_g());
    auto G = pf_groebner_basis(d);
    CHECK(G == std::vector<Move>{{1, -2, 1}, {1, -1, 0}});
    CHECK(lift_move(small_g(), {1, -1, 0}) == std::vector<Move>{{1, -1, 0, 0}});
    CHECK(lift_move(small_g(), {1, -2, 1}) == std::vector<Move>{{1, 0, -2, 1}});
    CHECK_THROWS(lift_move(small_g(), {1, 0, 0}));
    auto lb = lifted_groebner_basis(small_g(), d);
    CHECK(lb.basis.moves == std::vector<Move>{{1, -1, 0, 0}, {1, 0, -2, 1}});
    CHECK(lb.kernel.empty());
    CHECK(markov_oracle(FiberFamily::matrix(small_B()), lb.basis.moves, 6).pass);
}

TEST_CASE("codimension one PF basis is plus or minus the generator") {
    // phi(ker B) = Z (1,-1)
    auto g = GradedMatrix::make(Matrix::from_rows({{1, 1, 1}}), {0, 0, 1}, 2);
    auto d = pf_description(g);
    CHECK(codimension(g) == 1);
    CHECK(pf_groebner_basis(d) == std::vector<Move>{{1, -1}});
    CHECK(pf_groebner_basis(pf_description(GradedMatrix::make(Matrix::identity(2), {0, 1}, 2))).empty());
}

TEST_CASE("lifts satisfy the lift contract") {
    auto g = small_g();
    for (Move gm : {Move{1, -1, 0}, Move{1, -2, 1}}) {
        auto lifts = lift_move(g, gm);
        for (auto& m : lifts) {
            CHECK(g.apply(m) == gm);
            CHECK(is_zero(g.B * m));
        }
        CHECK(lift_oracle(lifts, gm, g.B, g.phi, g.t, {}, Preorder(), 6).pass);
    }
}

TEST_CASE("lifted Groebner basis with a nontrivial preorder") {
    // two rows of the same block make a nontrivial kernel
    Matrix B = Matrix::from_rows({{1, 1, 1, 1, 1}, {0, 1, 1, 2, 3}});
    auto g = GradedMatrix::make(B, {0, 1, 1, 2, 2}, 3);
    auto d = pf_description(g);
    Preorder img = Preorder::from_integer({{0, 0, 1}});
    Preorder tie = Preorder::from_integer({{0, 0, 0, 0, 1}, {0, 1, 0, 0, 0}});
    auto lb = lifted_groebner_basis(g, d, img, tie);
    CHECK_FALSE(lb.kernel.empty());
    CHECK(markov_oracle(FiberFamily::matrix(B), lb.basis.moves, 6).pass);
    CHECK(groebner_oracle(FiberFamily::matrix(B), lb.basis.moves, lb.basis.order, 6).pass);
    for (std::size_t k = 0; k < lb.pf_basis.size(); ++k)
        CHECK(lift_oracle(lb.lifts[k], lb.pf_basis[k], B, g.phi, g.t, lb.kernel, lb.basis.order, 6).pass);
}

TEST_CASE("lifting is independent of the thread count") {
    Matrix B = Matrix::from_rows({{1, 1, 1, 1, 1}, {0, 1, 1, 2, 3}});
    auto g = GradedMatrix::make(B, {0, 1, 1, 2, 2}, 3);
    auto d = pf_description(g);
    CHECK(lifted_groebner_basis(g, d, Preorder(), Preorder(), 1).basis.moves ==
          lifted_groebner_basis(g, d, Preorder(), Preorder(), 4).basis.moves);
}

TEST_CASE("slow-varying sets") {
    auto g = GradedMatrix::make(Matrix::from_rows({{1, 1, 1}}), {0, 0, 1}, 2);
    CHECK(is_slow_varying({{1, -1, 0}}, g).slow);
    auto s = is_slow_varying({{1, 0, -1}}, g);
    CHECK(s.slow);
    CHECK(s.g == Move{1, -1});
    CHECK(is_slow_varying({{1, 0, -1}, {-1, 1, 0}, {0, -1, 1}}, g).slow);
    CHECK_FALSE(is_slow_varying({{1, 0, -1}, {2, 0, -2}}, g).slow);
    CHECK_THROWS(is_slow_varying({}, small_g()));
}

TEST_CASE("codimension never exceeds the base kernel (property)") {
    std::mt19937 rng(21);
    Matrix A = Matrix::from_rows({{1, 1, 1}});
    for (int trial = 0; trial < 20; ++trial) {
        Matrix B = Matrix::from_rows({Move(5, 1)}).vstack(oracle::random_matrix(rng, 1, 5, 0, 3));
        std::vector<int> phi{0, 1, 2, 0, 1};
        std::shuffle(phi.begin(), phi.end(), rng);
        auto g = GradedMatrix::make(B, phi, 3, A);
        CHECK(codimension(g) <= 2);
    }
}
