#include "toric/intvec.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

namespace toric {

Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw overflow_error("integer overflow in addition");
    return r;
}

Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw overflow_error("integer overflow in subtraction");
    return r;
}

Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw overflow_error("integer overflow in multiplication");
    return r;
}

Int to_int(const mpz_class& z) {
    if (!z.fits_slong_p()) throw overflow_error("entry exceeds 64-bit range: " + z.get_str());
    return z.get_si();
}

std::pair<Move, Move> pos_neg_parts(const Move& m) {
    Move p(m.size(), 0), n(m.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] > 0) p[i] = m[i];
        else if (m[i] < 0) n[i] = -m[i];
    }
    return {p, n};
}

Int l1_norm(const Move& m) {
    Int s = 0;
    for (Int x : m) s = checked_add(s, x < 0 ? -x : x);
    return s;
}

Int degree(const Move& m) {
    Int p = 0, n = 0;
    for (Int x : m) {
        if (x > 0) p = checked_add(p, x);
        else n = checked_sub(n, x);
    }
    return std::max(p, n);
}

bool is_zero(const Move& m) {
    return std::all_of(m.begin(), m.end(), [](Int x) { return x == 0; });
}

static void same_dim(const Move& a, const Move& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dimension mismatch");
}

Move operator+(const Move& a, const Move& b) {
    same_dim(a, b);
    Move r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_add(a[i], b[i]);
    return r;
}

Move operator-(const Move& a, const Move& b) {
    same_dim(a, b);
    Move r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_sub(a[i], b[i]);
    return r;
}

Move operator-(const Move& a) {
    Move r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_sub(0, a[i]);
    return r;
}

Move operator*(Int k, const Move& a) {
    Move r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_mul(k, a[i]);
    return r;
}

Int dot(const Move& a, const Move& b) {
    same_dim(a, b);
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s = checked_add(s, checked_mul(a[i], b[i]));
    return s;
}

Move canonical_sign(Move m) {
    for (Int x : m) {
        if (x == 0) continue;
        if (x < 0)
            for (Int& y : m) y = -y;
        break;
    }
    return m;
}

std::vector<Move> canonical_set(std::vector<Move> ms) {
    std::vector<Move> out;
    out.reserve(ms.size());
    for (auto& m : ms)
        if (!is_zero(m)) out.push_back(canonical_sign(std::move(m)));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool conformally_below(const Move& a, const Move& b) {
    same_dim(a, b);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        if (a[i] > 0 ? (b[i] < a[i]) : (b[i] > a[i])) return false;
    }
    return true;
}

bool nonnegative(const Move& m) {
    return std::all_of(m.begin(), m.end(), [](Int x) { return x >= 0; });
}

std::string to_string(const Move& m) {
    std::string s = "(";
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(m[i]);
    }
    return s + ")";
}

/////////////////////////////////////////////////////////////////////////////

Matrix::Matrix(std::size_t rows, std::size_t cols, Int fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

Matrix Matrix::from_rows(const std::vector<Move>& rows, std::size_t cols) {
    if (!rows.empty()) cols = rows.front().size();
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw std::invalid_argument("ragged rows");
        std::copy(rows[i].begin(), rows[i].end(), m.data_.begin() + i * cols);
    }
    return m;
}

Matrix Matrix::from_cols(const std::vector<Move>& cols, std::size_t rows) {
    if (!cols.empty()) rows = cols.front().size();
    Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows) throw std::invalid_argument("ragged columns");
        for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
    }
    return m;
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Move Matrix::row(std::size_t i) const {
    return Move(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

Move Matrix::col(std::size_t j) const {
    Move c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
    return c;
}

std::vector<Move> Matrix::row_list() const {
    std::vector<Move> r;
    for (std::size_t i = 0; i < rows_; ++i) r.push_back(row(i));
    return r;
}

std::vector<Move> Matrix::col_list() const {
    std::vector<Move> c;
    for (std::size_t j = 0; j < cols_; ++j) c.push_back(col(j));
    return c;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

Move Matrix::operator*(const Move& v) const {
    if (v.size() != cols_) throw std::invalid_argument("matrix-vector dimension mismatch");
    Move r(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i) {
        Int s = 0;
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) && v[j]) s = checked_add(s, checked_mul(at(i, j), v[j]));
        r[i] = s;
    }
    return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product dimension mismatch");
    Matrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            Int a = at(i, k);
            if (!a) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                if (o.at(k, j)) r.at(i, j) = checked_add(r.at(i, j), checked_mul(a, o.at(k, j)));
        }
    return r;
}

Matrix Matrix::vstack(const Matrix& below) const {
    if (rows_ == 0) return below;
    if (below.rows_ == 0) return *this;
    if (cols_ != below.cols_) throw std::invalid_argument("vstack column mismatch");
    Matrix r(rows_ + below.rows_, cols_);
    std::copy(data_.begin(), data_.end(), r.data_.begin());
    std::copy(below.data_.begin(), below.data_.end(), r.data_.begin() + data_.size());
    return r;
}

Matrix Matrix::hstack(const Matrix& right) const {
    if (rows_ != right.rows_) throw std::invalid_argument("hstack row mismatch");
    Matrix r(rows_, cols_ + right.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
        for (std::size_t j = 0; j < right.cols_; ++j) r.at(i, cols_ + j) = right.at(i, j);
    }
    return r;
}

Matrix Matrix::select_cols(const std::vector<std::size_t>& idx) const {
    Matrix r(rows_, idx.size());
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < idx.size(); ++j) r.at(i, j) = at(i, idx[j]);
    return r;
}

/////////////////////////////////////////////////////////////////////////////

Preorder::Preorder(std::vector<std::vector<mpq_class>> weights) : weights_(std::move(weights)) {
    for (auto& w : weights_) {
        if (!weights_.empty() && w.size() != weights_.front().size())
            throw std::invalid_argument("preorder weights of different length");
        mpz_class l = 1;
        for (auto& q : w) {
            q.canonicalize();
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
        }
        std::vector<mpz_class> num(w.size());
        mpz_class g = 0;
        for (std::size_t i = 0; i < w.size(); ++i) {
            num[i] = w[i].get_num() * (l / w[i].get_den());
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num[i].get_mpz_t());
        }
        Move s(w.size(), 0);
        for (std::size_t i = 0; i < w.size(); ++i) s[i] = to_int(g == 0 ? num[i] : mpz_class(num[i] / g));
        scaled_.push_back(std::move(s));
    }
}

Preorder Preorder::from_integer(const std::vector<Move>& weights) {
    std::vector<std::vector<mpq_class>> w;
    for (auto& c : weights) {
        std::vector<mpq_class> q;
        for (Int x : c) q.emplace_back(static_cast<long>(x));
        w.push_back(std::move(q));
    }
    return Preorder(std::move(w));
}

std::size_t Preorder::dim() const { return weights_.empty() ? 0 : weights_.front().size(); }

std::weak_ordering Preorder::compare(const Move& u, const Move& v) const {
    if (u.size() != v.size()) throw std::invalid_argument("dimension mismatch");
    for (const auto& c : scaled_) {
        if (c.size() != u.size()) throw std::invalid_argument("dimension mismatch");
        __int128 s = 0;
        for (std::size_t i = 0; i < u.size(); ++i) s += static_cast<__int128>(c[i]) * (static_cast<__int128>(u[i]) - v[i]);
        if (s > 0) return std::weak_ordering::greater;
        if (s < 0) return std::weak_ordering::less;
    }
    return std::weak_ordering::equivalent;
}

Preorder Preorder::refined_by(const Preorder& tiebreak) const {
    auto w = weights_;
    for (auto& c : tiebreak.weights_) w.push_back(c);
    return Preorder(std::move(w));
}

/////////////////////////////////////////////////////////////////////////////

Shape::Shape(std::vector<int> levels) : levels_(std::move(levels)) {
    size_ = 1;
    for (int d : levels_) {
        if (d < 1) throw std::invalid_argument("level counts must be positive");
        size_ *= static_cast<std::size_t>(d);
    }
}

std::vector<int> Shape::index(std::size_t flat) const {
    std::vector<int> idx(levels_.size());
    for (std::size_t k = levels_.size(); k-- > 0;) {
        idx[k] = static_cast<int>(flat % levels_[k]);
        flat /= levels_[k];
    }
    return idx;
}

std::size_t Shape::flat(const std::vector<int>& idx) const {
    if (idx.size() != levels_.size()) throw std::invalid_argument("index length mismatch");
    std::size_t f = 0;
    for (std::size_t k = 0; k < idx.size(); ++k) {
        if (idx[k] < 0 || idx[k] >= levels_[k]) throw std::out_of_range("index out of range");
        f = f * levels_[k] + idx[k];
    }
    return f;
}

Tableau tableau_of(const Move& m, const Shape& shape) {
    if (m.size() != shape.size()) throw std::invalid_argument("tableau shape mismatch");
    Tableau t;
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (Int k = 0; k < m[i]; ++k) t.plus_rows.push_back(shape.index(i));
        for (Int k = 0; k < -m[i]; ++k) t.minus_rows.push_back(shape.index(i));
    }
    return t;
}

Move move_of(const Tableau& t, const Shape& shape) {
    Move m(shape.size(), 0);
    for (auto& r : t.plus_rows) m[shape.flat(r)] += 1;
    for (auto& r : t.minus_rows) m[shape.flat(r)] -= 1;
    return m;
}

std::string format_tableau(const Tableau& t, bool zero_based) {
    auto side = [&](std::vector<std::vector<int>> rows) {
        std::sort(rows.begin(), rows.end());
        std::string s = "[";
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r) s += ";";
            for (std::size_t k = 0; k < rows[r].size(); ++k) {
                if (k) s += " ";
                s += std::to_string(rows[r][k] + (zero_based ? 0 : 1));
            }
        }
        return s + "]";
    };
    return side(t.plus_rows) + " - " + side(t.minus_rows);
}

/////////////////////////////////////////////////////////////////////////////

Matrix read_matrix(std::istream& in) {
    long long r, c;
    if (!(in >> r >> c) || r < 0 || c < 0) throw parse_error("matrix header must be \"R C\"");
    Matrix m(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
    for (long long i = 0; i < r; ++i)
        for (long long j = 0; j < c; ++j) {
            long long x;
            if (!(in >> x)) throw parse_error("matrix body too short or not an integer");
            m.at(i, j) = x;
        }
    std::string rest;
    if (in >> rest) throw parse_error("trailing data after matrix body");
    return m;
}

Matrix read_matrix_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw parse_error("cannot open " + path);
    return read_matrix(f);
}

void write_matrix(std::ostream& out, const Matrix& m) {
    out << m.rows() << ' ' << m.cols() << '\n';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out << ' ';
            out << m.at(i, j);
        }
        out << '\n';
    }
}

std::vector<Move> read_moves(std::istream& in) { return read_matrix(in).row_list(); }

void write_moves(std::ostream& out, const std::vector<Move>& moves, std::size_t n) {
    write_matrix(out, Matrix::from_rows(moves, n));
}

} // namespace toric
