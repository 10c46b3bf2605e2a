#pragma once

#include <optional>
#include <vector>

#include "toric/intvec.hpp"

namespace toric {

using ZMat = std::vector<std::vector<mpz_class>>;
using QVec = std::vector<mpq_class>;

struct EchelonForm {
    ZMat rows;                       // nonzero rows of the Hermite form
    std::vector<std::size_t> pivots; // pivot column of each nonzero row
    ZMat transform;                  // U with U * input = [rows; 0]
};

// Row Hermite normal form: pivots positive, entries above a pivot reduced
// into [0, pivot). With track set the full unimodular transform is kept.
EchelonForm hermite_rows(const ZMat& input, std::size_t cols, bool track = false);

ZMat to_zmat(const std::vector<Move>& rows);
std::size_t rank(const Matrix& m);

// Sublattice of Z^n. The stored basis is either the canonical Hermite
// basis or, for from_basis, the caller's independent generators.
class Lattice {
public:
    Lattice() = default;
    static Lattice zero(std::size_t n);
    static Lattice full(std::size_t n);
    static Lattice from_generators(std::size_t n, const std::vector<Move>& gens);
    static Lattice from_basis(std::size_t n, const std::vector<Move>& basis);
    static Lattice from_basis_matrix(const Matrix& cols) { return from_basis(cols.rows(), cols.col_list()); }

    std::size_t ambient_dim() const { return n_; }
    std::size_t rank() const { return basis_.size(); }
    const std::vector<Move>& basis() const { return basis_; }
    Matrix basis_matrix() const { return Matrix::from_cols(basis_, n_); }

    bool member(const Move& v) const;
    std::optional<Move> solve(const Move& v) const;
    // canonical representative of the coset v + L
    Move coset_rep(const Move& v) const;
    bool contains(const Lattice& o) const;
    bool operator==(const Lattice& o) const { return contains(o) && o.contains(*this); }
    // column span orthogonal to every basis vector, i.e. 1 . u = 0 on L
    bool orthogonal_to(const Move& w) const;

private:
    void build_echelon();
    std::size_t n_ = 0;
    std::vector<Move> basis_;
    std::vector<Move> hnf_;
    std::vector<std::size_t> pivots_;
    std::vector<Move> transform_; // hnf_[k] = sum_j transform_[k][j] basis_[j]
};

Lattice kernel_lattice(const Matrix& B);
Lattice intersect(const Lattice& a, const Lattice& b);
// {v in domain : map v in target}
Lattice preimage_lattice(const Matrix& map, const Lattice& target, const Lattice& domain);
Lattice image_lattice(const Matrix& map, const Lattice& domain);

// integer coefficients x with sum x_j gens_j = v, if any
std::optional<Move> solve_generators(const std::vector<Move>& gens, const Move& v);

// Splitting of L along K = L cap ker D. The new basis of L is
// [L1 | L2] with L2 a basis of K and D L1 of full column rank.
struct QuotientMap {
    Lattice source;
    Matrix D;
    std::vector<Move> L1;
    std::vector<Move> L2;
    Matrix D_reduced; // D * L1, the induced matrix D' on L' = Z^s

    // iota: u -> (a, b) with u = L1 a + L2 b
    std::pair<Move, Move> forward(const Move& u) const;
    Move backward(const Move& a, const Move& b) const;
};

QuotientMap quotient_map(const Lattice& L, const Matrix& D);

// exact rational solve of A x = b, any solution
std::optional<QVec> solve_rational(const std::vector<QVec>& A, const QVec& b);

} // namespace toric
