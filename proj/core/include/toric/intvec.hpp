#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace toric {

// Moves are stored with 64-bit entries; every arithmetic step that could
// leave that range goes through the checked helpers below and throws.
using Int = std::int64_t;
using Move = std::vector<Int>;

class overflow_error : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);
Int to_int(const mpz_class& z);

std::pair<Move, Move> pos_neg_parts(const Move& m);
Int l1_norm(const Move& m);
Int degree(const Move& m);
bool is_zero(const Move& m);

Move operator+(const Move& a, const Move& b);
Move operator-(const Move& a, const Move& b);
Move operator-(const Move& a);
Move operator*(Int k, const Move& a);
Int dot(const Move& a, const Move& b);

// first nonzero entry made positive
Move canonical_sign(Move m);
// canonical signs, zeros dropped, sorted, duplicates removed
std::vector<Move> canonical_set(std::vector<Move> ms);
// a is conformal to b and |a_i| <= |b_i| everywhere
bool conformally_below(const Move& a, const Move& b);
bool nonnegative(const Move& m);

std::string to_string(const Move& m);

struct MoveHash {
    std::size_t operator()(const Move& m) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (Int x : m) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
        return h;
    }
};

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, Int fill = 0);

    static Matrix from_rows(const std::vector<Move>& rows, std::size_t cols = 0);
    static Matrix from_cols(const std::vector<Move>& cols, std::size_t rows = 0);
    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Int& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    Int at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Move row(std::size_t i) const;
    Move col(std::size_t j) const;
    std::vector<Move> row_list() const;
    std::vector<Move> col_list() const;

    Matrix transpose() const;
    Move operator*(const Move& v) const;
    Matrix operator*(const Matrix& o) const;
    bool operator==(const Matrix& o) const = default;

    // stack below / to the right
    Matrix vstack(const Matrix& below) const;
    Matrix hstack(const Matrix& right) const;
    Matrix select_cols(const std::vector<std::size_t>& idx) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> data_;
};

// Weight cascade c_1, ..., c_r with rational entries. The empty cascade is
// the trivial preorder.
class Preorder {
public:
    Preorder() = default;
    explicit Preorder(std::vector<std::vector<mpq_class>> weights);
    static Preorder from_integer(const std::vector<Move>& weights);

    std::weak_ordering compare(const Move& u, const Move& v) const;
    bool trivial() const { return weights_.empty(); }
    std::size_t levels() const { return weights_.size(); }
    std::size_t dim() const;
    const std::vector<std::vector<mpq_class>>& weights() const { return weights_; }
    // each weight scaled to a primitive integer vector (same order)
    const std::vector<Move>& integer_weights() const { return scaled_; }

    // additional weights appended after the existing ones
    Preorder refined_by(const Preorder& tiebreak) const;

private:
    std::vector<std::vector<mpq_class>> weights_;
    std::vector<Move> scaled_;
};

// Product index set D_V = [d_1] x ... x [d_k], lexicographic with the first
// factor slowest. Indices are 0-based.
class Shape {
public:
    Shape() = default;
    explicit Shape(std::vector<int> levels);
    const std::vector<int>& levels() const { return levels_; }
    std::size_t size() const { return size_; }
    std::vector<int> index(std::size_t flat) const;
    std::size_t flat(const std::vector<int>& idx) const;

private:
    std::vector<int> levels_;
    std::size_t size_ = 1;
};

struct Tableau {
    std::vector<std::vector<int>> plus_rows;
    std::vector<std::vector<int>> minus_rows;
    bool operator==(const Tableau&) const = default;
};

Tableau tableau_of(const Move& m, const Shape& shape);
Move move_of(const Tableau& t, const Shape& shape);
// one-based symbols unless zero_based, e.g. "[111;111;222] - [112;121;211]"
std::string format_tableau(const Tableau& t, bool zero_based = false);

// Text format: "R C" on the first line followed by R rows of C integers.
Matrix read_matrix(std::istream& in);
Matrix read_matrix_file(const std::string& path);
void write_matrix(std::ostream& out, const Matrix& m);
std::vector<Move> read_moves(std::istream& in);
void write_moves(std::ostream& out, const std::vector<Move>& moves, std::size_t n);

class parse_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace toric
