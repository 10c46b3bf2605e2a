#pragma once

#include <optional>
#include <vector>

#include "toric/intvec.hpp"

namespace toric {

// Extreme rays of the pointed cone {z : A z >= 0}; A must have full column
// rank. Rays are primitive integer vectors, returned sorted.
std::vector<Move> extreme_rays(const Matrix& A);

struct ConeDescription {
    Matrix facets;    // rows y with y.x >= 0 on the cone, y in the linear span
    Matrix equations; // basis of the orthogonal complement of the span
};

// Facets of the cone generated by the columns of G (double description).
ConeDescription cone_facets(const Matrix& G);

// Vertices and recession rays of {w : A w >= c}. A must have full column rank.
struct PolyhedronVRep {
    std::vector<std::vector<mpq_class>> vertices;
    std::vector<Move> rays;
};
PolyhedronVRep polyhedron_vertices(const Matrix& A, const Move& c);

// Nonnegative vector of L (given by basis columns) with maximal support, or 0.
Move max_support_nonneg(const std::vector<Move>& basis, std::size_t n);

// Strictly positive integer w orthogonal to every basis vector, if one exists.
std::optional<Move> positive_grading(const std::vector<Move>& basis, std::size_t n);

} // namespace toric
