#pragma once

#include <vector>

#include "toric/basis.hpp"
#include "toric/intvec.hpp"
#include "toric/latalg.hpp"

namespace toric {

// Fibers {u in L + v : D u >= c}. L defaults to Z^n.
struct InequalitySystem {
    Matrix D;
    Lattice L;

    static InequalitySystem over_integers(const Matrix& D);
    static InequalitySystem on_lattice(const Matrix& D, const Lattice& L);
};

struct ReducedSystem {
    QuotientMap iota;                    // L = L1 (+) L2, L2 = L cap ker D
    Matrix D_tilde;                      // rows of D L1 made primitive; zero and repeated rows dropped
    std::vector<std::size_t> kept_rows;  // row of D behind each row of D_tilde
    std::vector<Move> kernel_generators; // basis of L cap ker D
};

ReducedSystem reduce_full_rank(const InequalitySystem& sys);

// Markov basis of Z D_tilde pulled back through D, plus the kernel generators.
std::vector<Move> inequality_markov_basis(const InequalitySystem& sys);

// Weights c' on Z^r with c'.(D u) = c.u on L, one per weight of p.
Preorder induced_preorder(const ReducedSystem& red, const Preorder& p);

// (L, D, p)-Groebner basis. The preorder on the image side is induced from
// p unless given; a supplied one is checked for compatibility on random
// lattice pairs and std::invalid_argument is thrown on a mismatch.
std::vector<Move> inequality_groebner_basis(const InequalitySystem& sys, const Preorder& p,
                                            const Preorder* image_order = nullptr);

// l_A <= sum_{i in A} x_i <= u_A for all nonempty A in [t]: rows +1_A, -1_A
// for A in increasing bitmask order.
InequalitySystem sums_system(int t);

// x in Z^t as the first row (x, -sum x) of a 2 x (t+1) table
Move sums_table_row(const Move& x);
// smallest element of the orbit of a table row under column permutations
// and global sign
Move sums_symmetry_class(const Move& row);

} // namespace toric
