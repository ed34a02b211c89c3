#include "hodgespec/polynomial.hpp"

#include "hodgespec/error.hpp"

namespace hodgespec {

Polynomial Polynomial::constant(std::size_t variables, const Rational& c) {
  Polynomial p(variables);
  p.add_term(Monomial(variables, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t variables, std::size_t index) {
  Monomial e(variables, 0);
  e.at(index) = 1;
  return monomial(e);
}

Polynomial Polynomial::monomial(const Monomial& exponents, const Rational& c) {
  Polynomial p(exponents.size());
  p.add_term(exponents, c);
  return p;
}

void Polynomial::add_term(const Monomial& exponents, const Rational& c) {
  if (exponents.size() != variables_) fail(ErrorKind::DimensionMismatch, "monomial arity mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponents, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.variables_ != variables_) fail(ErrorKind::DimensionMismatch, "polynomial arity mismatch");
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.variables_ != variables_) fail(ErrorKind::DimensionMismatch, "polynomial arity mismatch");
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.variables_ != b.variables_) fail(ErrorKind::DimensionMismatch, "polynomial arity mismatch");
  Polynomial out(a.variables_);
  Monomial e(a.variables_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

Polynomial Polynomial::derivative(std::size_t index) const {
  if (index >= variables_) fail(ErrorKind::DimensionMismatch, "derivative index out of range");
  Polynomial out(variables_);
  for (const auto& [e, c] : terms_) {
    if (e[index] == 0) continue;
    Monomial d = e;
    d[index] -= 1;
    out.add_term(d, c * e[index]);
  }
  return out;
}

Polynomial Polynomial::laplacian() const {
  Polynomial out(variables_);
  for (std::size_t i = 0; i < variables_; ++i) out += derivative(i).derivative(i);
  return out;
}

std::vector<Monomial> monomials_of_degree(std::size_t variables, unsigned degree) {
  std::vector<Monomial> out;
  if (variables == 0) {
    if (degree == 0) out.emplace_back();
    return out;
  }
  Monomial e(variables, 0);
  auto rec = [&](auto&& self, std::size_t pos, unsigned remaining) -> void {
    if (pos + 1 == variables) {
      e[pos] = remaining;
      out.push_back(e);
      return;
    }
    for (unsigned v = 0; v <= remaining; ++v) {
      e[pos] = v;
      self(self, pos + 1, remaining - v);
    }
  };
  rec(rec, 0, degree);
  return out;
}

}  // namespace hodgespec
