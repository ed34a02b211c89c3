#pragma once

#include <cstddef>
#include <vector>

#include "hodgespec/rational.hpp"

namespace hodgespec {

using RationalVector = std::vector<Rational>;

/// Dense row-major matrix over the rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix from_rows(const std::vector<RationalVector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RationalVector row(std::size_t r) const;
  RationalVector column(std::size_t c) const;

  RationalMatrix transpose() const;
  RationalMatrix operator*(const RationalMatrix& rhs) const;
  RationalVector operator*(const RationalVector& v) const;
  RationalMatrix scaled(const Rational& s) const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Rational determinant(const RationalMatrix& m);

/// Gauss-Jordan inverse; raises SingularBasis when the matrix is singular.
RationalMatrix inverse(const RationalMatrix& m);

std::size_t rank(RationalMatrix m);

/// Basis of {x : m x = 0}, one vector per free column of the reduced
/// row echelon form.
std::vector<RationalVector> nullspace(RationalMatrix m);

/// G = L D L^T with L unit lower triangular.
struct LdltFactors {
  RationalMatrix lower;
  RationalVector diag;
};

/// Raises NotPositiveDefinite unless every pivot is strictly positive.
LdltFactors ldlt(const RationalMatrix& g);

Rational dot(const RationalVector& a, const RationalVector& b);

}  // namespace hodgespec
