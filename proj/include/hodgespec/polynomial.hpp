#pragma once

#include <map>
#include <vector>

#include "hodgespec/rational.hpp"

namespace hodgespec {

/// Exponent vector of a monomial x_0^{e_0} ... x_{N-1}^{e_{N-1}}.
using Monomial = std::vector<unsigned>;

/// Sparse multivariate polynomial with rational coefficients in a fixed
/// number of variables. Zero coefficients are never stored.
class Polynomial {
 public:
  using Terms = std::map<Monomial, Rational>;

  explicit Polynomial(std::size_t variables = 0) : variables_(variables) {}

  static Polynomial constant(std::size_t variables, const Rational& c);
  static Polynomial variable(std::size_t variables, std::size_t index);
  static Polynomial monomial(const Monomial& exponents, const Rational& c = 1);

  std::size_t variables() const { return variables_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Adds c * x^exponents in place.
  void add_term(const Monomial& exponents, const Rational& c);

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }

  Polynomial derivative(std::size_t index) const;
  Polynomial laplacian() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::size_t variables_;
  Terms terms_;
};

/// All exponent vectors of total degree `degree` in `variables` variables,
/// in lexicographic order.
std::vector<Monomial> monomials_of_degree(std::size_t variables, unsigned degree);

}  // namespace hodgespec
