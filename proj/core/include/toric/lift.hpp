#pragma once

#include <string>
#include <vector>

#include "toric/basis.hpp"
#include "toric/intvec.hpp"
#include "toric/latalg.hpp"

namespace toric {

// B together with an index map phi : [n] -> [t] (0-based) and an optional
// base matrix A (s x t). With A empty no grading condition is checked.
struct GradedMatrix {
    Matrix B;
    std::vector<int> phi;
    std::size_t t = 0;
    Matrix A;

    // validates surjectivity of phi and phi(ker B) in ker A
    static GradedMatrix make(Matrix B, std::vector<int> phi, std::size_t t, Matrix A = Matrix());

    std::size_t n() const { return B.cols(); }
    Matrix phi_matrix() const;
    Move apply(const Move& v) const;
};

// columns (b_i ; e_phi(i))
Matrix augment(const GradedMatrix& g);

// Groebner basis of ker B cap ker phi (trivial p: minimal Markov basis)
BasisResult kernel_basis(const GradedMatrix& g, const Preorder& p = Preorder());

// dim phi(ker B)
std::size_t codimension(const GradedMatrix& g);

// phi(F(B,b)) = {u in L + v(b) : D2 u >= -D1 b} when N B^phi is normal.
struct ProjectedFiberDescription {
    Lattice L;
    Matrix D1;
    Matrix D2;
    GradedMatrix graded;
    std::vector<std::string> caveats;

    // some v with (b ; v) in Z B^phi; throws if b is not in ZB
    Move representative(const Move& b) const;
    Move rhs(const Move& b) const;
    // enumerated {u in L + v : D2 u >= -D1 b}
    std::vector<Move> projected_fiber(const Move& b) const;
};

inline constexpr int default_hole_bound = 4;

class holes_found : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Facets of the cone over B^phi are computed (rows + t <= 12) unless given
// as rows on R^{h+t}. The semigroup is scanned for holes up to hole_bound
// unless assume_normal is set; a hole throws holes_found.
ProjectedFiberDescription pf_description(const GradedMatrix& g, const Matrix* facets = nullptr,
                                         int hole_bound = default_hole_bound, bool assume_normal = false);

// (L, D2)-Groebner basis for the preorder p_image on Z^t
std::vector<Move> pf_groebner_basis(const ProjectedFiberDescription& desc, const Preorder& p_image = Preorder());

// Weights of p_image pulled back along phi, followed by the tiebreak weights.
Preorder pullback_preorder(const GradedMatrix& g, const Preorder& p_image, const Preorder& tiebreak = Preorder());

// Moves m in ker B with phi(m) = move_g lifting {move_g}, computed as an
// inequality Groebner basis of (L_g, D_g) for p.
std::vector<Move> lift_move(const GradedMatrix& g, const Move& move_g, const Preorder& p = Preorder());

struct LiftedBasis {
    BasisResult basis;            // M0 cup M1
    std::vector<Move> kernel;     // M0
    std::vector<Move> pf_basis;   // G
    std::vector<std::vector<Move>> lifts; // M_g per element of G
    std::vector<std::string> caveats;
};

// p_image on Z^t; the preorder on Z^n is its pullback refined by tiebreak.
// Lifts of distinct g run on up to `threads` workers.
LiftedBasis lifted_groebner_basis(const GradedMatrix& g, const ProjectedFiberDescription& desc,
                                  const Preorder& p_image = Preorder(), const Preorder& tiebreak = Preorder(),
                                  int threads = 1);

struct SlowVarying {
    bool slow = false;
    Move g; // the common image up to sign (zero if M lies in ker phi)
};

// requires codimension one
SlowVarying is_slow_varying(const std::vector<Move>& M, const GradedMatrix& g);

} // namespace toric
