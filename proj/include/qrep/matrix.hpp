// Dense exact matrices and Gauss-Jordan elimination.
#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qrep/field.hpp"

namespace qrep {

using Vector = std::vector<Scalar>;

inline Vector zero_vector(const Field& field, std::size_t n) { return Vector(n, Scalar::zero(field)); }

class Matrix {
 public:
  Matrix() : Matrix(Field::rationals(), 0, 0) {}
  Matrix(const Field& field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, Scalar::zero(field)) {}

  static Matrix identity(const Field& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(field);
    return m;
  }

  static Matrix from_rows(const Field& field, const std::vector<std::vector<long long>>& rows) {
    std::size_t cols = rows.empty() ? 0 : rows.front().size();
    Matrix m(field, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw std::invalid_argument("ragged matrix rows");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = Scalar(field, rows[i][j]);
    }
    return m;
  }

  static Matrix from_columns(const Field& field, std::size_t rows, const std::vector<Vector>& columns) {
    Matrix m(field, rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (columns[j].size() != rows) throw std::invalid_argument("column length mismatch");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
    }
    return m;
  }

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  Vector column(std::size_t j) const {
    Vector v;
    v.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
    return v;
  }

  bool is_zero() const {
    for (const auto& s : entries_) {
      if (!s.is_zero()) return false;
    }
    return true;
  }

  bool is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) {
        if (i == j ? !(*this)(i, j).is_one() : !(*this)(i, j).is_zero()) return false;
      }
    }
    return true;
  }

  Matrix transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    }
    return t;
  }

  Vector apply(const Vector& v) const {
    if (v.size() != cols_) throw std::invalid_argument("matrix-vector shape mismatch");
    Vector out = zero_vector(field_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) {
        if (!v[j].is_zero() && !(*this)(i, j).is_zero()) out[i] += (*this)(i, j) * v[j];
      }
    }
    return out;
  }

  // [this | other]
  Matrix hstack(const Matrix& other) const {
    if (rows_ != other.rows_) throw std::invalid_argument("hstack row mismatch");
    Matrix m(field_, rows_, cols_ + other.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
      for (std::size_t j = 0; j < other.cols_; ++j) m(i, cols_ + j) = other(i, j);
    }
    return m;
  }

  Matrix vstack(const Matrix& other) const {
    if (cols_ != other.cols_) throw std::invalid_argument("vstack column mismatch");
    Matrix m(field_, rows_ + other.rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
    }
    for (std::size_t i = 0; i < other.rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) m(rows_ + i, j) = other(i, j);
    }
    return m;
  }

  Matrix block(std::size_t row0, std::size_t col0, std::size_t rows, std::size_t cols) const {
    if (row0 + rows > rows_ || col0 + cols > cols_) throw std::out_of_range("matrix block out of range");
    Matrix m(field_, rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = (*this)(row0 + i, col0 + j);
    }
    return m;
  }

  void set_block(std::size_t row0, std::size_t col0, const Matrix& b) {
    if (row0 + b.rows_ > rows_ || col0 + b.cols_ > cols_) throw std::out_of_range("matrix block out of range");
    for (std::size_t i = 0; i < b.rows_; ++i) {
      for (std::size_t j = 0; j < b.cols_; ++j) (*this)(row0 + i, col0 + j) = b(i, j);
    }
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) {
      throw std::invalid_argument("matrix product shape mismatch: " + a.shape() + " * " + b.shape());
    }
    if (a.field_ != b.field_) throw std::invalid_argument("matrix field mismatch");
    Matrix c(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Scalar& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          if (!b(k, j).is_zero()) c(i, j) += aik * b(k, j);
        }
      }
    }
    return c;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) {
    a.check_same_shape(b);
    for (std::size_t k = 0; k < a.entries_.size(); ++k) a.entries_[k] += b.entries_[k];
    return a;
  }

  friend Matrix operator-(Matrix a, const Matrix& b) {
    a.check_same_shape(b);
    for (std::size_t k = 0; k < a.entries_.size(); ++k) a.entries_[k] -= b.entries_[k];
    return a;
  }

  Matrix scaled(const Scalar& s) const {
    Matrix m = *this;
    for (auto& e : m.entries_) e *= s;
    return m;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

  std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

 private:
  void check_same_shape(const Matrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) throw std::invalid_argument("matrix shape mismatch");
    if (field_ != b.field_) throw std::invalid_argument("matrix field mismatch");
  }

  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> entries_;
};

/// Reduced row echelon form. Pivots are taken leftmost-first; the pivot row
/// for a column is the first row at or below the current one with a nonzero
/// entry, so the result depends only on the input.
struct RowEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;  // pivot column of row k
};

inline RowEchelon row_echelon(Matrix m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot_row = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (!m(i, c).is_zero()) {
        pivot_row = i;
        break;
      }
    }
    if (pivot_row == rows) continue;
    if (pivot_row != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(r, j), m(pivot_row, j));
    }
    Scalar inv = m(r, c).inverse();
    for (std::size_t j = c; j < cols; ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      Scalar factor = m(i, c);
      for (std::size_t j = c; j < cols; ++j) {
        if (!m(r, j).is_zero()) m(i, j) -= factor * m(r, j);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

inline std::size_t rank(const Matrix& m) { return row_echelon(m).pivots.size(); }

/// Kernel basis read off the reduced echelon form: one vector per free
/// column, with a 1 in that column.
inline std::vector<Vector> nullspace_basis(const Matrix& m) {
  auto [reduced, pivots] = row_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v = zero_vector(m.field(), m.cols());
    v[free] = Scalar::one(m.field());
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -reduced(k, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Some x with m x = b, free variables set to zero; nullopt when inconsistent.
inline std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows()) {
    throw std::invalid_argument("solve: right-hand side has length " + std::to_string(b.size()) + ", expected " +
                                std::to_string(m.rows()));
  }
  Matrix augmented = m.hstack(Matrix::from_columns(m.field(), m.rows(), {b}));
  auto [reduced, pivots] = row_echelon(std::move(augmented));
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  Vector x = zero_vector(m.field(), m.cols());
  for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = reduced(k, m.cols());
  return x;
}

inline std::optional<Matrix> invert(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  auto [reduced, pivots] = row_echelon(m.hstack(Matrix::identity(m.field(), n)));
  if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) return std::nullopt;
  return reduced.block(0, n, n, n);
}

/// Indices of a maximal independent set of columns (the pivot columns).
inline std::vector<std::size_t> independent_columns(const Matrix& m) { return row_echelon(m).pivots; }

/// Columns of m that form a basis of its column space.
inline Matrix column_space(const Matrix& m) {
  auto cols = independent_columns(m);
  std::vector<Vector> basis;
  basis.reserve(cols.size());
  for (auto c : cols) basis.push_back(m.column(c));
  return Matrix::from_columns(m.field(), m.rows(), basis);
}

/// Extends the columns of `span` (assumed independent) to a basis of the
/// ambient space using standard basis vectors, returning only the added ones
/// as the columns of a matrix.
inline Matrix complement_basis(const Matrix& span) {
  const std::size_t n = span.rows();
  Matrix with_units = span.hstack(Matrix::identity(span.field(), n));
  std::vector<Vector> added;
  for (auto c : independent_columns(with_units)) {
    if (c >= span.cols()) added.push_back(with_units.column(c));
  }
  return Matrix::from_columns(span.field(), n, added);
}

}  // namespace qrep
