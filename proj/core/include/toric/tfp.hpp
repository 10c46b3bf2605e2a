#pragma once

#include <string>
#include <utility>
#include <vector>

#include "toric/basis.hpp"
#include "toric/intvec.hpp"
#include "toric/lift.hpp"

namespace toric {

inline constexpr std::size_t default_glue_cap = 100000;

// B x_A B' with columns (b_i ; b'_j) for phi(i) = phi'(j), ordered
// lexicographically in (i, j).
struct TfpInstance {
    GradedMatrix left;
    GradedMatrix right;
    Matrix product;
    std::vector<std::pair<std::size_t, std::size_t>> columns;
    std::vector<int> xi;
    std::vector<std::size_t> index; // i * n' + j -> column, or SIZE_MAX

    std::size_t t() const { return left.t; }
    std::size_t column_of(std::size_t i, std::size_t j) const;
    Move psi(const Move& u) const;       // to Z^n
    Move psi_prime(const Move& u) const; // to Z^n'
    Move xi_apply(const Move& u) const;
    // the product as an A-graded matrix (graded by xi)
    GradedMatrix graded() const;
};

TfpInstance build_tfp(const GradedMatrix& left, const GradedMatrix& right);

// B^phi x_I (B')^phi' on the same column set
TfpInstance assoc_codim_zero(const TfpInstance& t);

enum class Side { left, right };

// All lifts of m in ker B^phi (Side::left) or ker B'^phi' to the
// codimension zero product.
std::vector<Move> lifts_of(const Move& m, const TfpInstance& t, Side side, std::size_t cap = default_glue_cap);

std::vector<Move> quads(const TfpInstance& t);

BasisResult codim_zero_basis(const TfpInstance& t, const std::vector<Move>& M, const std::vector<Move>& M_right,
                             std::size_t cap = default_glue_cap);

// Glues(m, m') for phi(m) = phi'(m'); throws resource_guard beyond cap.
std::vector<Move> glues(const Move& m, const Move& m_right, const TfpInstance& t, std::size_t cap = default_glue_cap);

// psi-lexicographic, then psi'
Preorder product_preorder(const TfpInstance& t, const Preorder& p_left, const Preorder& p_right);

// Projected fiber intersections {u in (L cap L') + w : D2 u >= c, D2' u >= c'}.
struct PfiDescription {
    Lattice L;
    Matrix D;
};
PfiDescription pfi_description(const ProjectedFiberDescription& left, const ProjectedFiberDescription& right);
std::vector<Move> pfi_groebner_basis(const PfiDescription& pfi, const Preorder& p_image = Preorder());

struct TfpResult {
    BasisResult basis;
    std::vector<Move> codim_zero;           // kernel part
    std::vector<Move> pfi;                  // G
    std::vector<std::vector<Move>> lifts_left, lifts_right, glued; // per element of G
    std::vector<std::string> caveats;
};

// Kernel moves together with Glues(lifts_left[k], lifts_right[k]) for all k,
// the glues pruned by conformal redundancy.
TfpResult tfp_basis(const TfpInstance& t, const std::vector<Move>& kernel_moves, const std::vector<Move>& G,
                    const std::vector<std::vector<Move>>& lifts_left, const std::vector<std::vector<Move>>& lifts_right,
                    std::size_t cap = default_glue_cap);

// Full pipeline: kernel bases of B^phi and B'^phi', codimension zero basis,
// PFI basis, lifts along phi and phi', glues.
TfpResult tfp_pipeline(const TfpInstance& t, const ProjectedFiberDescription& left,
                       const ProjectedFiberDescription& right, const Preorder& p_image = Preorder(),
                       const Preorder& tiebreak_left = Preorder(), const Preorder& tiebreak_right = Preorder(),
                       int threads = 1, std::size_t cap = default_glue_cap);

struct ProjectionReport {
    bool pass = true;
    std::size_t pairs_checked = 0;
    Move b, b_right; // first failing pair of margins
    std::string message;
};

// phi(F(B,b)_M) cap phi'(F(B',b')_M') connected for every pair of fibers of
// degree <= bound.
ProjectionReport check_compatible_projection(const std::vector<Move>& M, const std::vector<Move>& M_right,
                                             const TfpInstance& t, int bound);

struct IteratedTfp {
    GradedMatrix graded;
    std::vector<std::vector<std::size_t>> tuples; // factor column per product column
};

// factors[k] repeated r[k] times (r empty: once each), multiplied left to right
IteratedTfp iterated_tfp(const std::vector<GradedMatrix>& factors, const std::vector<int>& r = {});

// max(|v+|, |v-|)
Int move_degree(const Move& v);

// deg(g) + deg(max_i (phi_i(m_i+) - g+)) for lifts m_i of g along factors[i]
Int glue_degree_bound(const Move& g, const std::vector<std::pair<GradedMatrix, Move>>& lifts);

// Bound on the Markov degree of every iterated product of the given
// factors: max(2, degree of the kernel bases of B_i^phi_i, glue bounds over
// all lifts of the PFI basis G).
Int iterated_degree_bound(const std::vector<GradedMatrix>& factors, const std::vector<Move>& G,
                          std::vector<std::string>* notes = nullptr);

} // namespace toric
