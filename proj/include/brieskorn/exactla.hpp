#pragma once

#include <brieskorn/errors.hpp>
#include <brieskorn/rational.hpp>

#include <algorithm>
#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace brieskorn {

/// Dense row-major matrix.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  /// Columns given as vectors of equal length `rows`.
  static Matrix from_columns(std::size_t rows, const std::vector<std::vector<T>>& columns) {
    Matrix m(rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (columns[j].size() != rows) throw ShapeError("column length mismatch");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  std::vector<T> column(std::size_t j) const {
    std::vector<T> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  std::vector<T> operator*(std::span<const T> v) const {
    if (v.size() != cols_) throw ShapeError("matrix-vector size mismatch");
    std::vector<T> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RationalMatrix = Matrix<Rational>;
using IntegerMatrix = Matrix<Integer>;

/// [A | B]
template <class T>
Matrix<T> hconcat(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows()) throw ShapeError("hconcat: row count mismatch");
  Matrix<T> m(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) m(i, a.cols() + j) = b(i, j);
  }
  return m;
}

/// Plain-text rational grid, one row per line.
template <class T>
std::ostream& operator<<(std::ostream& os, const Matrix<T>& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j);
    os << '\n';
  }
  return os;
}

template <class T>
std::string debug_dump(const Matrix<T>& m) {
  std::ostringstream os;
  os << m.rows() << 'x' << m.cols() << '\n' << m;
  return os.str();
}

struct SolveOutcome {
  bool solvable = false;
  std::optional<std::vector<Rational>> particular;
  std::size_t rank = 0;
  std::size_t kernel_dim = 0;
};

namespace detail {

/// Row echelon form of an integer matrix produced by fraction-free
/// elimination. Pivots are searched only in columns < pivot_limit.
struct Echelon {
  IntegerMatrix m;
  std::vector<std::size_t> pivot_cols;  // pivot column of echelon row r
};

/// Scales every row by the lcm of its denominators; rank and solution set
/// are unchanged.
inline IntegerMatrix clear_denominators(const RationalMatrix& a) {
  IntegerMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Integer l = 1;
    for (const auto& q : a.row(i)) l = lcm(l, q.get_den());
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Rational& q = a(i, j);
      out(i, j) = q.get_num() * (l / q.get_den());
    }
  }
  return out;
}

/// Bareiss elimination. Columns are scanned left to right, so the pivot
/// columns are the lexicographically first independent set regardless of
/// which row supplies the pivot. Among candidate rows the entry of smallest
/// bit length wins (first row on ties).
inline Echelon fraction_free_echelon(IntegerMatrix m, std::size_t pivot_limit) {
  const std::size_t rows = m.rows(), cols = m.cols();
  Echelon e;
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < pivot_limit && r < rows; ++c) {
    std::size_t best = rows;
    std::size_t best_bits = 0;
    for (std::size_t i = r; i < rows; ++i) {
      if (m(i, c) == 0) continue;
      std::size_t bits = bit_length(m(i, c));
      if (best == rows || bits < best_bits) {
        best = i;
        best_bits = bits;
      }
    }
    if (best == rows) continue;
    m.swap_rows(r, best);
    const Integer pivot = m(r, c);
    std::vector<std::size_t> support;
    for (std::size_t j = c + 1; j < cols; ++j)
      if (m(r, j) != 0) support.push_back(j);
    for (std::size_t i = r + 1; i < rows; ++i) {
      const Integer lead = m(i, c);
      // m(i, j) <- (pivot m(i, j) - lead m(r, j)) / prev, in place
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_ptr x = m(i, j).get_mpz_t();
        if (mpz_sgn(x) == 0) continue;
        mpz_mul(x, x, pivot.get_mpz_t());
      }
      if (lead != 0)
        for (std::size_t j : support) mpz_submul(m(i, j).get_mpz_t(), lead.get_mpz_t(), m(r, j).get_mpz_t());
      if (prev != 1)
        for (std::size_t j = c + 1; j < cols; ++j) {
          mpz_ptr x = m(i, j).get_mpz_t();
          if (mpz_sgn(x) != 0) mpz_divexact(x, x, prev.get_mpz_t());
        }
      m(i, c) = 0;
    }
    // Rows above r are untouched by this step, so rows < r keep their scale
    // and entries left of c in rows > r are already zero.
    prev = pivot;
    e.pivot_cols.push_back(c);
    ++r;
  }
  e.m = std::move(m);
  return e;
}

}  // namespace detail

/// Exact rank over Q.
inline std::size_t rank(const RationalMatrix& a) {
  if (a.rows() == 0 || a.cols() == 0) return 0;
  return detail::fraction_free_echelon(detail::clear_denominators(a), a.cols()).pivot_cols.size();
}

/// Decides A x = b. When solvable, `particular` has every free (non-pivot)
/// variable set to zero, pivots taken left to right.
inline SolveOutcome solve(const RationalMatrix& a, std::span<const Rational> b) {
  if (b.size() != a.rows()) throw ShapeError("solve: right-hand side length does not match row count");
  RationalMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  auto e = detail::fraction_free_echelon(detail::clear_denominators(aug), a.cols());
  const std::size_t rk = e.pivot_cols.size();
  const std::size_t last = a.cols();

  SolveOutcome out;
  out.rank = rk;
  out.kernel_dim = a.cols() - rk;
  for (std::size_t i = rk; i < a.rows(); ++i)
    if (e.m(i, last) != 0) return out;

  std::vector<Rational> x(a.cols());
  for (std::size_t r = rk; r-- > 0;) {
    const std::size_t pc = e.pivot_cols[r];
    Rational acc(e.m(r, last));
    for (std::size_t k = r + 1; k < rk; ++k) {
      const std::size_t col = e.pivot_cols[k];
      if (e.m(r, col) != 0) acc -= Rational(e.m(r, col)) * x[col];
    }
    x[pc] = acc / Rational(e.m(r, pc));
    x[pc].canonicalize();
  }
  out.solvable = true;
  out.particular = std::move(x);
  return out;
}

inline bool in_column_space(const RationalMatrix& a, std::span<const Rational> b) { return solve(a, b).solvable; }

/// colspace(A) == colspace(B), via rank(A) = rank(B) = rank([A|B]).
inline bool column_spaces_equal(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != b.rows()) throw ShapeError("column_spaces_equal: row count mismatch");
  if (a.rows() == 0) return true;
  auto ab = hconcat(a, b);
  if (ab.cols() == 0) return true;
  auto e = detail::fraction_free_echelon(detail::clear_denominators(ab), ab.cols());
  const auto ra = static_cast<std::size_t>(
      std::count_if(e.pivot_cols.begin(), e.pivot_cols.end(), [&](std::size_t c) { return c < a.cols(); }));
  return ra == e.pivot_cols.size() && rank(b) == ra;
}

/// dim { v : M v in colspace(W) } = cols(M) - rank([W|M]) + rank(W). One
/// elimination of [W|M] gives both ranks: pivots among the first cols(W)
/// columns span colspace(W).
inline std::size_t preimage_dim(const RationalMatrix& m, const RationalMatrix& w) {
  if (m.rows() != w.rows()) throw ShapeError("preimage_dim: row count mismatch");
  if (m.rows() == 0) return m.cols();
  auto wm = hconcat(w, m);
  if (wm.cols() == 0) return 0;
  auto e = detail::fraction_free_echelon(detail::clear_denominators(wm), wm.cols());
  const auto rank_w = static_cast<std::size_t>(
      std::count_if(e.pivot_cols.begin(), e.pivot_cols.end(), [&](std::size_t c) { return c < w.cols(); }));
  return m.cols() - e.pivot_cols.size() + rank_w;
}

}  // namespace brieskorn
