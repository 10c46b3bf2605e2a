#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "toric/intvec.hpp"
#include "toric/latalg.hpp"

namespace toric {

// Thrown when an enumeration exceeds its cardinality guard.
class resource_guard : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class unbounded_fiber : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::size_t default_guard = 1000000;
inline constexpr int default_bound = 6;

// Matrix fibers F(B,b) or lattice fibers F^lat(L,u), indexed by a key
// (B v, or the canonical coset representative of v).
class FiberFamily {
public:
    static FiberFamily matrix(const Matrix& B);
    static FiberFamily lattice(const Lattice& L);

    bool is_matrix() const { return is_matrix_; }
    const Matrix& B() const { return B_; }
    const Lattice& L() const { return L_; }
    std::size_t dim() const { return n_; }
    Move key(const Move& v) const;
    // every fiber is contained in one level set of sum(v)
    bool degree_homogeneous() const { return homogeneous_; }

private:
    bool is_matrix_ = true;
    Matrix B_;
    Lattice L_;
    std::size_t n_ = 0;
    bool homogeneous_ = false;
};

struct Fiber {
    Move key;
    std::vector<Move> points; // sorted
};

// All fibers meeting {v in N^n : |v| <= bound}, each enumerated completely,
// sorted by key.
std::vector<Fiber> fibers_up_to(const FiberFamily& fam, int bound, std::size_t guard = default_guard);

// integer points z with A z >= c (A of full column rank, polytope bounded)
std::vector<Move> enumerate_polytope(const Matrix& A, const Move& c, std::size_t guard = default_guard);

std::vector<Move> enumerate_fiber(const Matrix& B, const Move& b, std::size_t guard = default_guard);
std::vector<Move> enumerate_lattice_fiber(const Lattice& L, const Move& u, std::size_t guard = default_guard);
std::vector<Move> enumerate_ineq_fiber(const Lattice& L, const Move& v, const Matrix& D, const Move& c,
                                       std::size_t guard = default_guard);
bool in_semigroup(const Matrix& B, const Move& b);

struct FiberGraph {
    std::vector<Move> vertices;
    std::vector<std::vector<std::size_t>> out; // u -> v iff v - u in +-M and u >= v
};

FiberGraph fiber_graph(const std::vector<Move>& points, const std::vector<Move>& moves, const Preorder& p = Preorder());
bool is_connected(const FiberGraph& g);

struct SinkReport {
    std::size_t sinks = 0;
    bool sinks_are_minima = true;
};
SinkReport sink_classes(const FiberGraph& g, const Preorder& p);

struct Verdict {
    bool pass = true;
    std::size_t fibers_checked = 0;
    std::string message;
    Move witness;                    // key of the first failing fiber
    std::vector<Move> witness_fiber; // its points
};

Verdict markov_oracle(const FiberFamily& fam, const std::vector<Move>& moves, int bound, int threads = 1);
Verdict groebner_oracle(const FiberFamily& fam, const std::vector<Move>& moves, const Preorder& p, int bound,
                        int threads = 1);

// Inequality fibers sampled on a window: c_i in [-window, window], v = 0.
Verdict ineq_oracle(const Lattice& L, const Matrix& D, const std::vector<Move>& moves, int samples, int window,
                    unsigned seed, const Preorder* p = nullptr);

// Def. of a lift along the index map phi : [n] -> [t] (0-based). Lifts are
// used with both signs. If kernel_moves is nonempty the intermediate point
// must be reachable from v by a non-increasing walk with those moves.
Verdict lift_oracle(const std::vector<Move>& lifts, const Move& g, const Matrix& B, const std::vector<int>& phi,
                    std::size_t t, const std::vector<Move>& kernel_moves, const Preorder& p, int bound);

// nonzero lattice vectors with l1 norm <= bound
std::vector<Move> lattice_vectors_up_to(const Lattice& L, int norm_bound, std::size_t guard = 10 * default_guard);
std::vector<Move> primitive_vectors_up_to(const Lattice& L, int norm_bound);
Verdict graver_oracle(const Lattice& L, const std::vector<Move>& candidate, int norm_bound);

// Points x of ZG inside the cone of G with grading degree <= bound that are
// not in NG. G must be homogeneous (some rational y with yG = 1). Facets are
// computed when not supplied and rank(G) <= 12.
std::vector<Move> holes(const Matrix& G, int degree_bound, const Matrix* facets = nullptr);

Verdict compare_bases(const FiberFamily& fam, const std::vector<Move>& m1, const std::vector<Move>& m2, int bound);

} // namespace toric
