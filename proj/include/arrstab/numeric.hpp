#pragma once

// Exact integer/rational scalars and a small dense matrix with the
// elimination routines the rest of the library is built on.

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace arrstab {

using Integer = mpz_class;
using Rational = mpq_class;

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    const std::size_t c = rows.empty() ? 0 : rows.front().size();
    Matrix m(rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != c) throw DimensionError("ragged matrix rows");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }

  std::vector<T> col(std::size_t j) const {
    std::vector<T> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
    return out;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }

  void append_row(const std::vector<T>& r) {
    if (rows_ == 0 && cols_ == 0) cols_ = r.size();
    if (r.size() != cols_) throw DimensionError("row length mismatch");
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix operator*(const Matrix& rhs) const {
    if (cols_ != rhs.rows_) throw DimensionError("matrix product shape mismatch");
    Matrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const T& a = (*this)(i, k);
        if (a == 0) continue;
        for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
      }
    return out;
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }
  bool operator<(const Matrix& o) const {
    if (rows_ != o.rows_) return rows_ < o.rows_;
    if (cols_ != o.cols_) return cols_ < o.cols_;
    return data_ < o.data_;
  }

  const std::vector<T>& data() const { return data_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

RatMatrix to_rational(const IntMatrix& m);

// In-place reduced row echelon form. Returns the pivot column of each
// nonzero row, in row order; rows past the rank are zero afterwards.
std::vector<std::size_t> rref(RatMatrix& m);

std::size_t rank(RatMatrix m);
std::size_t rank(const IntMatrix& m);

// Columns form a basis of the right kernel {x : m x = 0}.
RatMatrix kernel_basis(const RatMatrix& m);

// Fraction-free determinant.
Integer determinant(const IntMatrix& m);

// Coordinates with respect to a fixed basis of a subspace. The basis is the
// column set of a full-column-rank matrix.
class SubspaceCoordinates {
 public:
  explicit SubspaceCoordinates(const RatMatrix& basis);

  std::size_t dimension() const { return dim_; }

  // Coordinates of v, assuming v lies in the span (checked when verify is set).
  std::vector<Rational> coordinates(const std::vector<Rational>& v, bool verify = false) const;

 private:
  RatMatrix basis_;
  std::size_t dim_ = 0;
  std::vector<std::size_t> pivot_rows_;
  RatMatrix inverse_;  // inverse of the square submatrix on pivot_rows_
};

// Reduction of vectors modulo a row space held in reduced echelon form.
class RowSpaceReducer {
 public:
  RowSpaceReducer() = default;
  explicit RowSpaceReducer(RatMatrix rows);

  std::size_t ambient_dimension() const { return cols_; }
  std::size_t rank() const { return pivots_.size(); }
  bool is_pivot(std::size_t col) const { return pivot_mask_[col]; }
  // Non-pivot columns: a monomial basis of the quotient.
  const std::vector<std::size_t>& quotient_basis() const { return free_cols_; }

  void reduce(std::vector<Rational>& v) const;

 private:
  std::size_t cols_ = 0;
  RatMatrix rows_;
  std::vector<std::size_t> pivots_;
  std::vector<bool> pivot_mask_;
  std::vector<std::size_t> free_cols_;
};

// Canonical residue of r modulo 1, in [0, 1).
Rational mod_one(const Rational& r);

std::string to_string(const Integer& z);
std::string to_string(const Rational& q);

}  // namespace arrstab
