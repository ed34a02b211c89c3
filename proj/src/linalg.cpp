#include "hodgespec/linalg.hpp"

#include <utility>

#include "hodgespec/error.hpp"

namespace hodgespec {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<RationalVector>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  RationalMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) fail(ErrorKind::DimensionMismatch, "ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

RationalVector RationalMatrix::row(std::size_t r) const {
  return RationalVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                        data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

RationalVector RationalMatrix::column(std::size_t c) const {
  RationalVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& rhs) const {
  if (cols_ != rhs.rows_) fail(ErrorKind::DimensionMismatch, "matrix product shape mismatch");
  RationalMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  return out;
}

RationalVector RationalMatrix::operator*(const RationalVector& v) const {
  if (cols_ != v.size()) fail(ErrorKind::DimensionMismatch, "matrix-vector shape mismatch");
  RationalVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) out[i] += (*this)(i, k) * v[k];
  return out;
}

RationalMatrix RationalMatrix::scaled(const Rational& s) const {
  RationalMatrix out = *this;
  for (auto& x : out.data_) x *= s;
  return out;
}

namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(RationalMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && m(sel, col) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(sel, c), m(row, c));
    Rational inv = 1 / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      Rational f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) {
        if (m(row, c) != 0) m(r, c) -= f * m(row, c);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

Rational determinant(const RationalMatrix& input) {
  if (!input.is_square()) fail(ErrorKind::DimensionMismatch, "determinant of a non-square matrix");
  RationalMatrix m = input;
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = col;
    while (sel < n && m(sel, col) == 0) ++sel;
    if (sel == n) return 0;
    if (sel != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(m(sel, c), m(col, c));
      det = -det;
    }
    det *= m(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m(r, col) == 0) continue;
      Rational f = m(r, col) / m(col, col);
      for (std::size_t c = col; c < n; ++c) m(r, c) -= f * m(col, c);
    }
  }
  return det;
}

RationalMatrix inverse(const RationalMatrix& m) {
  if (!m.is_square()) fail(ErrorKind::DimensionMismatch, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  RationalMatrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  auto pivots = rref(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) fail(ErrorKind::SingularBasis, "matrix is singular");
  RationalMatrix out(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out(r, c) = aug(r, n + c);
  return out;
}

std::size_t rank(RationalMatrix m) { return rref(m).size(); }

std::vector<RationalVector> nullspace(RationalMatrix m) {
  auto pivots = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

LdltFactors ldlt(const RationalMatrix& g) {
  if (!g.is_square()) fail(ErrorKind::DimensionMismatch, "LDL^T of a non-square matrix");
  const std::size_t n = g.rows();
  LdltFactors f{RationalMatrix::identity(n), RationalVector(n)};
  for (std::size_t j = 0; j < n; ++j) {
    Rational d = g(j, j);
    for (std::size_t k = 0; k < j; ++k) d -= f.lower(j, k) * f.lower(j, k) * f.diag[k];
    if (d <= 0) fail(ErrorKind::NotPositiveDefinite, "Gram matrix is not positive definite");
    f.diag[j] = d;
    for (std::size_t i = j + 1; i < n; ++i) {
      Rational s = g(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= f.lower(i, k) * f.lower(j, k) * f.diag[k];
      f.lower(i, j) = s / d;
    }
  }
  return f;
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) fail(ErrorKind::DimensionMismatch, "dot product length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace hodgespec
