#include "doctest.h"
#include "oracle.hpp"
#include "toric/basis.hpp"
#include "toric/lift.hpp"
#include "toric/verify.hpp"

using namespace toric;

TEST_CASE("small fiber") {
    auto F = enumerate_fiber(Matrix::from_rows({{1, 1}}), {2});
    CHECK(F == std::vector<Move>{{0, 2}, {1, 1}, {2, 0}});
}

TEST_CASE("fiber enumeration agrees with brute force (property)") {
    std::mt19937 rng(2);
    for (int trial = 0; trial < 10; ++trial) {
        Matrix B = Matrix::from_rows({Move(4, 1)}).vstack(oracle::random_matrix(rng, 1, 4, 0, 3));
        for (auto& [b, pts] : oracle::fibers(B, 4)) {
            auto F = enumerate_fiber(B, b);
            CHECK(F == pts);
        }
    }
}

TEST_CASE("unbounded fibers are detected") {
    CHECK_THROWS_AS(enumerate_fiber(Matrix::from_rows({{1, -1}}), {0}), unbounded_fiber);
}

TEST_CASE("cardinality guard") {
    CHECK_THROWS_AS(enumerate_fiber(Matrix::from_rows({Move(6, 1)}), {20}, 100), resource_guard);
}

TEST_CASE("bounded inequality fiber") {
    Matrix D = Matrix::from_rows({{1, 0}, {-1, -1}, {1, 1}, {-2, -1}});
    Move c{0, -5, 3, -6};
    auto pts = enumerate_ineq_fiber(Lattice::full(2), {0, 0}, D, c);
    // frozen from the box oracle
    CHECK(pts.size() == 9);
    auto brute = oracle::ineq_points(D, c, 10);
    std::sort(brute.begin(), brute.end());
    CHECK(pts == brute);
}

TEST_CASE("connectivity and sinks") {
    auto g = fiber_graph({{1, 0}}, {});
    CHECK(is_connected(g));
    auto s = sink_classes(g, Preorder());
    CHECK(s.sinks == 1);
    CHECK(s.sinks_are_minima);
    CHECK_FALSE(is_connected(fiber_graph({{1, 0}, {0, 1}}, {{2, -2}})));
}

TEST_CASE("bidirected connectivity equals undirected connectivity (property)") {
    std::mt19937 rng(9);
    Matrix B = Matrix::from_rows({{1, 1, 1, 1}, {0, 1, 2, 3}});
    std::vector<Move> pool{{1, -2, 1, 0}, {0, 1, -2, 1}, {1, -1, -1, 1}, {1, 0, -3, 2}};
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Move> M;
        for (auto& m : pool)
            if (rng() % 2) M.push_back(m);
        for (auto& [b, pts] : oracle::fibers(B, 4))
            CHECK(is_connected(fiber_graph(pts, M)) == oracle::connected(pts, M));
    }
}

TEST_CASE("Markov oracle") {
    Matrix B = Matrix::from_rows({{1, 1, 1, 1}, {0, 0, 1, 2}});
    CHECK(markov_oracle(FiberFamily::matrix(B), {{1, -1, 0, 0}, {1, 0, -2, 1}}, 6).pass);
    auto v = markov_oracle(FiberFamily::matrix(B), {}, 6);
    CHECK_FALSE(v.pass);
    CHECK_FALSE(v.witness_fiber.empty());
    // adding kernel elements never changes a verdict
    CHECK(markov_oracle(FiberFamily::matrix(B), {{1, -1, 0, 0}, {1, 0, -2, 1}, {0, 1, -2, 1}}, 6).pass);
    CHECK_FALSE(markov_oracle(FiberFamily::matrix(B), {{1, -1, 0, 0}, {2, 0, -4, 2}}, 6).pass);
}

TEST_CASE("Graver oracle") {
    Lattice L = Lattice::from_generators(2, {{1, 1}});
    CHECK(graver_oracle(L, {{1, 1}}, 6).pass);
    CHECK_FALSE(graver_oracle(L, {{1, 1}, {2, 2}}, 6).pass);
    Lattice K = kernel_lattice(Matrix::from_rows({{1, 1, 1}}));
    CHECK_FALSE(graver_oracle(K, {{1, -1, 0}, {0, 1, -1}}, 6).pass);
    CHECK(graver_oracle(K, {{1, -1, 0}, {0, 1, -1}, {1, 0, -1}}, 6).pass);
}

TEST_CASE("holes") {
    CHECK(holes(Matrix::identity(3), 4).empty());
    // B^phi of the projected fiber example is normal
    Matrix Bphi = Matrix::from_rows({{1, 1, 1, 1}, {0, 0, 1, 2}, {1, 0, 0, 0}, {0, 1, 1, 0}, {0, 0, 0, 1}});
    CHECK(holes(Bphi, 6).empty());
    // degree-graded semigroup on 0, 1, 3: (1,2), (2,5), (3,8) are missing
    Matrix G = Matrix::from_rows({{1, 1, 1}, {0, 1, 3}});
    auto H = holes(G, 3);
    std::sort(H.begin(), H.end());
    CHECK(H == std::vector<Move>{{1, 2}, {2, 5}, {3, 8}});
}

TEST_CASE("lift oracle") {
    Matrix B = Matrix::from_rows({{1, 1, 1, 1}, {0, 0, 1, 2}});
    std::vector<int> phi{0, 1, 1, 2};
    CHECK(lift_oracle({{1, -2, 1, 0}}, {1, -2, 1}, B, phi, 3, {}, Preorder(), 6).pass == false);
    CHECK(lift_oracle({{1, 0, -2, 1}}, {1, -2, 1}, B, phi, 3, {}, Preorder(), 6).pass);
    CHECK(lift_oracle({}, {0, 0, 0}, B, phi, 3, {}, Preorder(), 6).pass);
}

TEST_CASE("basis comparison") {
    Matrix B = Matrix::from_rows({{1, 1, 1, 1}, {0, 1, 2, 3}});
    auto fam = FiberFamily::matrix(B);
    std::vector<Move> M = markov_basis(kernel_lattice(B)).moves;
    auto bigger = M;
    bigger.push_back({1, 0, -3, 2});
    CHECK(compare_bases(fam, M, bigger, 5).pass);
    auto smaller = std::vector<Move>(M.begin() + 1, M.end());
    CHECK_FALSE(compare_bases(fam, M, smaller, 5).pass);
}
