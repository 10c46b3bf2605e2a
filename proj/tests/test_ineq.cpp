#include <set>

#include "doctest.h"
#include "oracle.hpp"
#include "toric/ineq.hpp"
#include "toric/verify.hpp"

using namespace toric;

namespace {
Matrix quad_D() { return Matrix::from_rows({{1, 0}, {-1, -1}, {1, 1}, {-2, -1}}); }

// first row of a 2 x r table, padded with zeros to width w
Move padded(Move row, std::size_t w) {
    row.resize(w, 0);
    return row;
}

std::set<Move> table_classes(std::size_t t) {
    // new moves per table width r = t + 1, first rows only
    const std::vector<std::pair<std::size_t, Move>> rows{
        {2, {1, -1}}, {4, {1, 1, -1, -1}}, {5, {2, 1, -1, -1, -1}}};
    std::set<Move> out;
    for (auto& [r, row] : rows)
        if (r <= t + 1) out.insert(sums_symmetry_class(padded(row, t + 1)));
    return out;
}
} // namespace

TEST_CASE("inequality Markov basis of a planar quadrilateral family") {
    auto M = inequality_markov_basis(InequalitySystem::over_integers(quad_D()));
    CHECK(M == std::vector<Move>{{1, -2}, {1, -1}});
}

TEST_CASE("the same family written on a plane in Z^3") {
    Matrix D = Matrix::from_rows({{1, 0, 0}, {0, 0, 1}, {1, 1, 0}, {-1, 0, 1}});
    Lattice L = Lattice::from_basis(3, {{1, 0, -1}, {0, 1, -1}});
    auto M = inequality_markov_basis(InequalitySystem::on_lattice(D, L));
    CHECK(M == std::vector<Move>{{1, -2, 1}, {1, -1, 0}});
    auto red = reduce_full_rank(InequalitySystem::on_lattice(D, L));
    CHECK(red.kernel_generators.empty());
    CHECK(red.D_tilde.rows() == 4);
    CHECK(red.D_tilde.cols() == 2);
}

TEST_CASE("degenerate systems") {
    CHECK(inequality_markov_basis(InequalitySystem::over_integers(Matrix::identity(1))) == std::vector<Move>{{1}});
    Lattice L = Lattice::from_basis(3, {{1, -1, 0}, {0, 1, -1}});
    auto red = reduce_full_rank(InequalitySystem::on_lattice(Matrix(2, 3), L));
    CHECK(red.D_tilde.rows() == 0);
    CHECK(Lattice::from_generators(3, red.kernel_generators) == L);
    auto id = reduce_full_rank(InequalitySystem::over_integers(quad_D()));
    CHECK(id.kernel_generators.empty());
}

TEST_CASE("inequality Markov basis connects every bounded fiber (property)") {
    auto M = inequality_markov_basis(InequalitySystem::over_integers(quad_D()));
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> d(-6, 6);
    int nonempty = 0;
    for (int trial = 0; trial < 300; ++trial) {
        Move c{d(rng), d(rng), d(rng), d(rng)};
        // y1 >= c1 and y1 + y2 >= c3 with the two upper bounds keep points in the box
        auto pts = oracle::ineq_points(quad_D(), c, 20);
        if (!pts.empty()) ++nonempty;
        CHECK(oracle::connected(pts, M));
    }
    CHECK(nonempty > 50);
}

TEST_CASE("the affine bijection onto lattice fibers") {
    // u -> D u - c maps the inequality fiber onto N^r cap (Z D - c)
    Matrix D = quad_D();
    Move c{0, -5, 3, -6};
    auto pts = oracle::ineq_points(D, c, 10);
    std::set<Move> image;
    for (auto& u : pts) {
        Move w = D * u - c;
        CHECK(nonnegative(w));
        image.insert(w);
    }
    CHECK(image.size() == pts.size());
    Lattice ZD = Lattice::from_generators(4, D.col_list());
    auto lat = enumerate_lattice_fiber(ZD, *image.begin());
    CHECK(std::set<Move>(lat.begin(), lat.end()) == image);
}

TEST_CASE("inequality Groebner basis has unique sinks") {
    Preorder p = Preorder::from_integer({{1, 0}});
    auto G = inequality_groebner_basis(InequalitySystem::over_integers(quad_D()), p);
    std::mt19937 rng(8);
    std::uniform_int_distribution<int> d(-6, 6);
    for (int trial = 0; trial < 200; ++trial) {
        Move c{d(rng), d(rng), d(rng), d(rng)};
        auto pts = oracle::ineq_points(quad_D(), c, 20);
        if (pts.empty()) continue;
        auto s = sink_classes(fiber_graph(pts, G, p), p);
        CHECK(s.sinks == 1);
        CHECK(s.sinks_are_minima);
    }
    CHECK(inequality_groebner_basis(InequalitySystem::over_integers(quad_D()), Preorder()) ==
          inequality_markov_basis(InequalitySystem::over_integers(quad_D())));
}

TEST_CASE("an incompatible image preorder is rejected") {
    Preorder p = Preorder::from_integer({{1, 0}});
    Preorder bad = Preorder::from_integer({{0, 0, 0, 1}});
    CHECK_THROWS_AS(inequality_groebner_basis(InequalitySystem::over_integers(quad_D()), p, &bad),
                    std::invalid_argument);
}

TEST_CASE("subset sum families up to symmetry") {
    for (int t = 1; t <= 4; ++t) {
        auto M = inequality_markov_basis(sums_system(t));
        std::set<Move> classes;
        for (auto& m : M) classes.insert(sums_symmetry_class(sums_table_row(m)));
        CAPTURE(t);
        CHECK(classes == table_classes(static_cast<std::size_t>(t)));
    }
    CHECK(inequality_markov_basis(sums_system(1)) == std::vector<Move>{{1}});
    CHECK(inequality_markov_basis(sums_system(2)).size() == 3);
}

TEST_CASE("moves stay in the lattice (property)") {
    Lattice L = Lattice::from_basis(3, {{1, 0, -1}, {0, 1, -1}});
    std::mt19937 rng(4);
    for (int trial = 0; trial < 10; ++trial) {
        Matrix D = oracle::random_matrix(rng, 4, 3, -2, 2);
        auto M = inequality_markov_basis(InequalitySystem::on_lattice(D, L));
        for (auto& m : M) CHECK(L.member(m));
    }
}
