#include "hodgespec/exterior.hpp"

#include <algorithm>

#include "hodgespec/error.hpp"

namespace hodgespec {

namespace {

// Sorts `idx` in place and returns the permutation sign, or 0 on a repeat.
int sort_with_sign(std::vector<std::size_t>& idx) {
  int sign = 1;
  for (std::size_t i = 1; i < idx.size(); ++i) {
    for (std::size_t j = i; j > 0 && idx[j - 1] >= idx[j]; --j) {
      if (idx[j - 1] == idx[j]) return 0;
      std::swap(idx[j - 1], idx[j]);
      sign = -sign;
    }
  }
  return sign;
}

void require_same_dim(const PolyForm& a, const PolyForm& b) {
  if (a.dim() != b.dim()) fail(ErrorKind::DimensionMismatch, "forms live on spaces of different dimension");
}

MultiIndex without(const MultiIndex& idx, std::size_t pos) {
  MultiIndex out;
  out.reserve(idx.size() - 1);
  for (std::size_t k = 0; k < idx.size(); ++k)
    if (k != pos) out.push_back(idx[k]);
  return out;
}

}  // namespace

std::vector<MultiIndex> multi_indices(std::size_t dim, std::size_t degree) {
  std::vector<MultiIndex> out;
  if (degree > dim) return out;
  MultiIndex cur(degree);
  auto rec = [&](auto&& self, std::size_t pos, std::size_t start) -> void {
    if (pos == degree) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i + (degree - pos) <= dim; ++i) {
      cur[pos] = i;
      self(self, pos + 1, i + 1);
    }
  };
  rec(rec, 0, 0);
  return out;
}

PolyForm::PolyForm(std::size_t dim, std::size_t degree) : dim_(dim), degree_(degree) {}

PolyForm PolyForm::basis(std::size_t dim, const std::vector<std::size_t>& indices, const Rational& c) {
  PolyForm w(dim, indices.size());
  MultiIndex idx = indices;
  for (auto i : idx)
    if (i >= dim) fail(ErrorKind::DimensionMismatch, "basis index out of range");
  int sign = sort_with_sign(idx);
  if (sign != 0) w.add(idx, Polynomial::constant(dim, c * sign));
  return w;
}

PolyForm PolyForm::covector(const RationalVector& xi) {
  PolyForm w(xi.size(), 1);
  for (std::size_t i = 0; i < xi.size(); ++i) w.add({i}, Polynomial::constant(xi.size(), xi[i]));
  return w;
}

PolyForm PolyForm::function(const Polynomial& f) {
  PolyForm w(f.variables(), 0);
  w.add({}, f);
  return w;
}

Polynomial PolyForm::coefficient(const MultiIndex& index) const {
  auto it = coeffs_.find(index);
  return it == coeffs_.end() ? Polynomial(dim_) : it->second;
}

void PolyForm::add(const MultiIndex& index, const Polynomial& p) {
  if (index.size() != degree_) fail(ErrorKind::DimensionMismatch, "multi-index length differs from form degree");
  if (p.variables() != dim_) fail(ErrorKind::DimensionMismatch, "coefficient arity differs from form dimension");
  if (p.is_zero()) return;
  auto [it, inserted] = coeffs_.try_emplace(index, p);
  if (!inserted) {
    it->second += p;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

PolyForm& PolyForm::operator+=(const PolyForm& rhs) {
  require_same_dim(*this, rhs);
  if (rhs.degree_ != degree_) fail(ErrorKind::DimensionMismatch, "adding forms of different degree");
  for (const auto& [idx, p] : rhs.coeffs_) add(idx, p);
  return *this;
}

PolyForm& PolyForm::operator-=(const PolyForm& rhs) {
  require_same_dim(*this, rhs);
  if (rhs.degree_ != degree_) fail(ErrorKind::DimensionMismatch, "subtracting forms of different degree");
  for (const auto& [idx, p] : rhs.coeffs_) add(idx, -p);
  return *this;
}

PolyForm& PolyForm::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [idx, p] : coeffs_) p *= c;
  return *this;
}

PolyForm PolyForm::times(const Polynomial& f) const {
  PolyForm out(dim_, degree_);
  for (const auto& [idx, p] : coeffs_) out.add(idx, p * f);
  return out;
}

PolyForm wedge(const PolyForm& a, const PolyForm& b) {
  require_same_dim(a, b);
  PolyForm out(a.dim(), a.degree() + b.degree());
  for (const auto& [ia, pa] : a.coefficients()) {
    for (const auto& [ib, pb] : b.coefficients()) {
      MultiIndex idx = ia;
      idx.insert(idx.end(), ib.begin(), ib.end());
      int sign = sort_with_sign(idx);
      if (sign == 0) continue;
      Polynomial prod = pa * pb;
      if (sign < 0) prod = -prod;
      out.add(idx, prod);
    }
  }
  return out;
}

PolyForm contract(const std::vector<Polynomial>& v, const PolyForm& w) {
  if (v.size() != w.dim()) fail(ErrorKind::DimensionMismatch, "vector length differs from form dimension");
  if (w.degree() == 0) fail(ErrorKind::DegreeZero, "contraction of a function");
  PolyForm out(w.dim(), w.degree() - 1);
  for (const auto& [idx, p] : w.coefficients()) {
    for (std::size_t k = 0; k < idx.size(); ++k) {
      const Polynomial& vk = v[idx[k]];
      if (vk.is_zero()) continue;
      Polynomial term = vk * p;
      if (k % 2 == 1) term = -term;
      out.add(without(idx, k), term);
    }
  }
  return out;
}

PolyForm contract(const RationalVector& v, const PolyForm& w) {
  std::vector<Polynomial> field;
  field.reserve(v.size());
  for (const auto& c : v) field.push_back(Polynomial::constant(v.size(), c));
  return contract(field, w);
}

std::vector<Polynomial> position_field(std::size_t dim) {
  std::vector<Polynomial> x;
  x.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) x.push_back(Polynomial::variable(dim, i));
  return x;
}

PolyForm d_flat(const PolyForm& w) {
  PolyForm out(w.dim(), w.degree() + 1);
  for (const auto& [idx, p] : w.coefficients()) {
    for (std::size_t i = 0; i < w.dim(); ++i) {
      if (std::binary_search(idx.begin(), idx.end(), i)) continue;
      Polynomial dp = p.derivative(i);
      if (dp.is_zero()) continue;
      auto pos = static_cast<std::size_t>(std::lower_bound(idx.begin(), idx.end(), i) - idx.begin());
      MultiIndex target = idx;
      target.insert(target.begin() + static_cast<std::ptrdiff_t>(pos), i);
      if (pos % 2 == 1) dp = -dp;
      out.add(target, dp);
    }
  }
  return out;
}

PolyForm delta_flat(const PolyForm& w) {
  if (w.degree() == 0) fail(ErrorKind::DegreeZero, "codifferential of a function");
  PolyForm out(w.dim(), w.degree() - 1);
  for (const auto& [idx, p] : w.coefficients()) {
    for (std::size_t k = 0; k < idx.size(); ++k) {
      Polynomial dp = p.derivative(idx[k]);
      if (dp.is_zero()) continue;
      // -(-1)^{k-1} with one-based k equals -(-1)^k with zero-based k.
      if (k % 2 == 0) dp = -dp;
      out.add(without(idx, k), dp);
    }
  }
  return out;
}

PolyForm hodge_star(const PolyForm& w) {
  const std::size_t n = w.dim();
  if (w.degree() > n) return PolyForm(n, 0);
  PolyForm out(n, n - w.degree());
  for (const auto& [idx, p] : w.coefficients()) {
    MultiIndex complement;
    for (std::size_t i = 0; i < n; ++i)
      if (!std::binary_search(idx.begin(), idx.end(), i)) complement.push_back(i);
    std::size_t inversions = 0;
    for (auto a : idx)
      for (auto b : complement)
        if (a > b) ++inversions;
    out.add(complement, inversions % 2 == 0 ? p : -p);
  }
  return out;
}

PolyForm hodge_star_inverse(const PolyForm& w) {
  // w has degree N - p; its preimage has degree p.
  const std::size_t q = w.degree();
  const std::size_t p = w.dim() - q;
  PolyForm out = hodge_star(w);
  if ((p * q) % 2 == 1) out *= Rational(-1);
  return out;
}

PolyForm f_operator_flat(const Rational& alpha, const Rational& beta, const PolyForm& w) {
  PolyForm out = delta_flat(d_flat(w)) * beta;
  if (w.degree() > 0) out += d_flat(delta_flat(w)) * alpha;
  return out;
}

namespace {

Rational norm_sq(const RationalVector& xi) { return dot(xi, xi); }

void require_constant(const PolyForm& w) {
  for (const auto& [idx, p] : w.coefficients())
    for (const auto& [e, c] : p.terms())
      for (auto exp : e)
        if (exp != 0) fail(ErrorKind::InvalidArgument, "principal symbol expects constant coefficients");
}

PolyForm xi_wedge_xi_contract(const CovectorAction& cv, const PolyForm& w) {
  if (cv.xi.size() != w.dim()) fail(ErrorKind::DimensionMismatch, "covector length differs from form dimension");
  if (w.degree() == 0) return PolyForm(w.dim(), 0);
  return wedge(PolyForm::covector(cv.xi), contract(cv.xi, w));
}

}  // namespace

PolyForm principal_symbol(const CovectorAction& cv, const PolyForm& w) {
  require_constant(w);
  PolyForm out = w * Rational(-cv.beta * norm_sq(cv.xi));
  out -= xi_wedge_xi_contract(cv, w) * Rational(cv.alpha - cv.beta);
  return out;
}

PolyForm principal_symbol_inverse(const CovectorAction& cv, const PolyForm& w) {
  require_constant(w);
  Rational n2 = norm_sq(cv.xi);
  if (n2 == 0) fail(ErrorKind::ZeroCovector, "principal symbol is not invertible at xi = 0");
  PolyForm out = w * Rational(-1 / (cv.beta * n2));
  out += xi_wedge_xi_contract(cv, w) * Rational((cv.alpha - cv.beta) / (cv.alpha * cv.beta * n2 * n2));
  return out;
}

}  // namespace hodgespec
