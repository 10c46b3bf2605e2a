#pragma once

#include <optional>
#include <vector>

#include "toric/intvec.hpp"
#include "toric/latalg.hpp"

namespace toric {

enum class BasisKind { markov, groebner, graver };

struct BasisResult {
    std::vector<Move> moves; // canonical signs, sorted
    BasisKind kind = BasisKind::markov;
    Preorder order;
    Lattice source;
};

struct CompletionStats {
    std::size_t pairs = 0;
    std::size_t reductions = 0;
};

// Generators of the lattice ideal I_L as moves u (binomials x^u+ - x^u-),
// obtained by saturating the ideal of a lattice basis one coordinate at a
// time. Requires a strictly positive w orthogonal to L.
std::vector<Move> lattice_ideal_generators(const Lattice& L, const Move& w, CompletionStats* stats = nullptr);

// Reduced Groebner basis of I_L for the term order: w-degree, then the
// weights of p, then graded reverse lexicographic. Moves are oriented
// leading term first (m+ is the larger monomial).
std::vector<Move> reduced_groebner(const Lattice& L, const Move& w, const Preorder& p,
                                   const std::vector<Move>& generators, CompletionStats* stats = nullptr);

BasisResult markov_basis(const Lattice& L);
BasisResult groebner_basis(const Lattice& L, const Preorder& p);
BasisResult graver_basis(const Lattice& L);

BasisResult remove_conformal_redundant(const BasisResult& G);
std::vector<Move> remove_conformal_redundant(std::vector<Move> G);

// Smallest subset connecting every fiber that the input connects. For
// positively graded L the selection is exact (degree by degree with fiber
// component searches); bound > 0 additionally runs the connectivity oracle
// on the input first and throws if it fails.
BasisResult minimize_markov(const Lattice& L, const BasisResult& M, int bound = 0);
std::vector<Move> minimal_subset(const std::vector<Move>& ordered, const Move& w);

// is u+ connected to u- using +-moves (graded lattices only)
bool connected_by(const Move& from, const Move& to, const std::vector<Move>& moves, std::size_t guard = 1000000);

} // namespace toric
