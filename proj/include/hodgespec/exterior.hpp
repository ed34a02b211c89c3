#pragma once

#include <map>
#include <vector>

#include "hodgespec/linalg.hpp"
#include "hodgespec/polynomial.hpp"

namespace hodgespec {

/// Strictly increasing, zero-based indices {i_1 < ... < i_p}; the basis
/// form e^{i_1} ^ ... ^ e^{i_p}.
using MultiIndex = std::vector<std::size_t>;

/// All p-subsets of {0, ..., dim-1} in lexicographic order.
std::vector<MultiIndex> multi_indices(std::size_t dim, std::size_t degree);

/// A p-form on R^N whose coefficients are polynomials in x_0..x_{N-1}.
/// Orientation: e^0 ^ ... ^ e^{N-1} is positive.
class PolyForm {
 public:
  using Coefficients = std::map<MultiIndex, Polynomial>;

  PolyForm(std::size_t dim, std::size_t degree);

  /// c * e^{indices}; indices need not be sorted (the sign is applied).
  static PolyForm basis(std::size_t dim, const std::vector<std::size_t>& indices,
                        const Rational& c = 1);
  /// The constant 1-form sum_i xi_i e^i.
  static PolyForm covector(const RationalVector& xi);
  static PolyForm function(const Polynomial& f);

  std::size_t dim() const { return dim_; }
  std::size_t degree() const { return degree_; }
  const Coefficients& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  /// Coefficient of e^I (zero polynomial if absent).
  Polynomial coefficient(const MultiIndex& index) const;

  void add(const MultiIndex& index, const Polynomial& p);

  PolyForm& operator+=(const PolyForm& rhs);
  PolyForm& operator-=(const PolyForm& rhs);
  PolyForm& operator*=(const Rational& c);
  friend PolyForm operator+(PolyForm a, const PolyForm& b) { return a += b; }
  friend PolyForm operator-(PolyForm a, const PolyForm& b) { return a -= b; }
  friend PolyForm operator*(PolyForm a, const Rational& c) { return a *= c; }
  friend PolyForm operator*(const Rational& c, PolyForm a) { return a *= c; }

  /// Multiplies every coefficient by a polynomial.
  PolyForm times(const Polynomial& f) const;

  friend bool operator==(const PolyForm&, const PolyForm&) = default;

 private:
  std::size_t dim_;
  std::size_t degree_;
  Coefficients coeffs_;
};

PolyForm wedge(const PolyForm& a, const PolyForm& b);

/// Insertion in the first slot: (v -| w)(.) = w(v, ., ..., .).
PolyForm contract(const RationalVector& v, const PolyForm& w);
/// Insertion of a polynomial vector field (e.g. the position field x).
PolyForm contract(const std::vector<Polynomial>& v, const PolyForm& w);

/// The position vector field x = sum_i x_i e_i on R^N.
std::vector<Polynomial> position_field(std::size_t dim);

/// Flat exterior derivative.
PolyForm d_flat(const PolyForm& w);

/// Flat codifferential, coordinate formula
///   delta w = - sum_I sum_k (-1)^{k-1} d_{i_k} w_I e^{I \ i_k}.
/// Raises DegreeZero on functions.
PolyForm delta_flat(const PolyForm& w);

/// Euclidean Hodge star: *(e^I) = sign(I, I^c) e^{I^c}.
PolyForm hodge_star(const PolyForm& w);
/// Inverse star, (-1)^{p(N-p)} * on p-forms.
PolyForm hodge_star_inverse(const PolyForm& w);

/// (alpha d delta + beta delta d) w on R^N.
PolyForm f_operator_flat(const Rational& alpha, const Rational& beta, const PolyForm& w);

struct CovectorAction {
  RationalVector xi;
  Rational alpha;
  Rational beta;
};

/// -beta |xi|^2 w - (alpha - beta) xi ^ (xi -| w), for constant-coefficient w.
PolyForm principal_symbol(const CovectorAction& cv, const PolyForm& w);

/// -(1/(beta |xi|^2)) w + ((alpha - beta)/(alpha beta |xi|^4)) xi ^ (xi -| w).
/// Raises ZeroCovector for xi = 0.
PolyForm principal_symbol_inverse(const CovectorAction& cv, const PolyForm& w);

}  // namespace hodgespec
