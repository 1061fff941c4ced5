#include "arrstab/numeric.hpp"

namespace arrstab {

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Rational(m(i, j));
  return out;
}

std::vector<std::size_t> rref(RatMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(r, p);
    const Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Rational f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (m(r, j) != 0) m(i, j) -= f * m(r, j);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(RatMatrix m) { return rref(m).size(); }

std::size_t rank(const IntMatrix& m) { return rank(to_rational(m)); }

RatMatrix kernel_basis(const RatMatrix& m) {
  RatMatrix r = m;
  const auto pivots = rref(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free.push_back(c);
  RatMatrix k(m.cols(), free.size());
  for (std::size_t f = 0; f < free.size(); ++f) {
    k(free[f], f) = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) k(pivots[i], f) = -r(i, free[f]);
  }
  return k;
}

Integer determinant(const IntMatrix& in) {
  if (in.rows() != in.cols()) throw DimensionError("determinant of non-square matrix");
  const std::size_t n = in.rows();
  if (n == 0) return 1;
  IntMatrix m = in;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = t;
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

SubspaceCoordinates::SubspaceCoordinates(const RatMatrix& basis) : basis_(basis), dim_(basis.cols()) {
  RatMatrix t = basis.transpose();
  pivot_rows_ = rref(t);
  if (pivot_rows_.size() != dim_) throw DimensionError("subspace basis is not linearly independent");
  RatMatrix square(dim_, 2 * dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) square(i, j) = basis(pivot_rows_[i], j);
    square(i, dim_ + i) = 1;
  }
  rref(square);
  inverse_ = RatMatrix(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) inverse_(i, j) = square(i, dim_ + j);
}

std::vector<Rational> SubspaceCoordinates::coordinates(const std::vector<Rational>& v, bool verify) const {
  if (v.size() != basis_.rows()) throw DimensionError("vector length does not match subspace ambient");
  std::vector<Rational> c(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) {
      const Rational& x = v[pivot_rows_[j]];
      if (x != 0) c[i] += inverse_(i, j) * x;
    }
  if (verify) {
    for (std::size_t r = 0; r < basis_.rows(); ++r) {
      Rational s = 0;
      for (std::size_t j = 0; j < dim_; ++j) s += basis_(r, j) * c[j];
      if (s != v[r]) throw DimensionError("vector is not in the subspace");
    }
  }
  return c;
}

RowSpaceReducer::RowSpaceReducer(RatMatrix rows) : cols_(rows.cols()), rows_(std::move(rows)) {
  pivots_ = rref(rows_);
  pivot_mask_.assign(cols_, false);
  for (auto p : pivots_) pivot_mask_[p] = true;
  for (std::size_t c = 0; c < cols_; ++c)
    if (!pivot_mask_[c]) free_cols_.push_back(c);
}

void RowSpaceReducer::reduce(std::vector<Rational>& v) const {
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const Rational f = v[pivots_[i]];
    if (f == 0) continue;
    for (std::size_t j = 0; j < cols_; ++j)
      if (rows_(i, j) != 0) v[j] -= f * rows_(i, j);
  }
}

Rational mod_one(const Rational& r) {
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  Rational out = r - Rational(fl);
  out.canonicalize();
  return out;
}

std::string to_string(const Integer& z) { return z.get_str(); }
std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace arrstab
