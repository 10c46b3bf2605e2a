#pragma once

#include <string>
#include <vector>

#include "toric/basis.hpp"
#include "toric/intvec.hpp"
#include "toric/lift.hpp"
#include "toric/tfp.hpp"

namespace toric {

// Simplicial complex on vertices 0..k-1 given by its facets, with level
// counts d. Facets are kept sorted; each facet's vertices ascending.
class HierModel {
public:
    HierModel() = default;
    HierModel(std::vector<std::vector<int>> facets, std::vector<int> levels);

    // "[12][13][23]" with one-based vertex digits, or "[1,10][2,3]"
    static HierModel parse(const std::string& complex, std::vector<int> levels);

    const std::vector<std::vector<int>>& facets() const { return facets_; }
    const std::vector<int>& levels() const { return levels_; }
    std::size_t vertices() const { return levels_.size(); }
    Shape shape() const { return Shape(levels_); }

    // Gamma|_S on the vertices of S (renumbered in the order given)
    HierModel restrict_to(const std::vector<int>& S) const;
    // Gamma cup 2^S
    HierModel with_face(const std::vector<int>& S) const;

    std::string to_string() const; // bracket notation, one-based

private:
    std::vector<std::vector<int>> facets_;
    std::vector<int> levels_;
};

// Rows (facet, margin cell), facet-major; columns D_V lexicographic.
Matrix design_matrix(const HierModel& m);

struct HierSplit {
    HierModel left_model, right_model, base_model; // on V1, V2, S
    std::vector<int> V1, V2, S;                    // ascending
    GradedMatrix left, right;                      // graded by the S-marginal
    Matrix A;                                      // design_matrix(base_model)

    // D_V index of each column of the product of left and right
    std::vector<std::size_t> product_columns(const TfpInstance& t) const;
    std::size_t n() const; // number of vertices
};

// Vertex sets zero-based; every facet must lie in V1 or in V2.
HierSplit split(const HierModel& m, std::vector<int> V1, std::vector<int> V2);

// Graver basis of the triangle [12][13][23] with levels (p, 2, r).
std::vector<Move> triangle_graver(int p, int r);

bool c3_normality(int d1, int d2, int d3);

struct C3Facets {
    Matrix rows;                 // valid inequalities on the rows of design_matrix([12][13][23])
    std::vector<bool> irredundant; // row defines a facet
    std::size_t invalid = 0;     // generated rows negative on some column
    std::size_t repeated = 0;    // same values on all columns as an earlier row
    Matrix facets() const;       // irredundant rows only
};

// Inequality system for the cone of the triangle with levels (p, 2, r).
C3Facets c3_facets(int p, int r);

// Lifts of the 2 x r table (b'; -b') to (p, 2, r) arrays, one per acyclic
// multigraph on [r] with outdeg - indeg = b' and labelling of its edges
// by [p]. Each returned move maps to b; sorted, without repeats.
std::vector<Move> acyclic_multigraph_lifts(const Move& b, int p);
// number of distinct acyclic multigraphs for b'
std::size_t acyclic_multigraph_count(const Move& b_first_row);

// A family of moves written as tableaux with symbolic entries. Each row
// is a whitespace-free token string per vertex separated by spaces, e.g.
// "a1 1 c2 e". Tokens are a literal level or a variable; a variable's
// domain is looked up by its first letter.
struct TableauFamily {
    std::vector<std::string> plus, minus;
};

struct FamilyDomain {
    char letter;
    int size;
};

// All nonzero instances of the family on `shape`, canonical and deduplicated.
std::vector<Move> instantiate(const TableauFamily& f, const Shape& shape, const std::vector<FamilyDomain>& domains,
                              bool zero_based, std::size_t cap = 10000000);

// Families of the Groebner basis of the 4-cycle [12][13][24][34] with
// levels (p, 2, 3, q): five from the codimension zero product, then three
// glue families.
std::vector<TableauFamily> c4_families();
HierModel c4_model(int p, int q);
BasisResult c4_basis(int p, int q);
// distinct moves obtained by instantiating each family with labels
// numbered in order of first appearance (a proxy for symmetry types)
std::size_t c4_symmetry_types(int p, int q);

struct K4eReport {
    HierModel k4, c4_tilde;
    std::vector<Move> holes;         // of the K4 binary semigroup
    int hole_bound = 0;
    std::vector<Move> hole_fiber;    // F(B_{C4~}, 1)
    std::vector<Move> projected;     // its [14]-marginals
    std::vector<Move> pfi;           // {g, 2g}
    bool v_fills = false;            // B_K4 v = 1 + first column
    std::vector<Move> m1, m;         // M1 and M1 with the degree four sums
    bool m_is_markov = false;        // M passes the oracle at oracle_bound
    ProjectionReport projection_m, projection_m1;
    int oracle_bound = 0;
};

// The gluing of binary K4 minus an edge along the missing edge [14].
K4eReport k4e_workflow(int hole_bound = 4, int projection_bound = 4);

// tableau text for a move on the given model (0/1 symbols when binary)
std::string format_move(const Move& m, const HierModel& model);

} // namespace toric
