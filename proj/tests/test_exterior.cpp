#include <doctest.h>

#include <random>

#include "hodgespec/exterior.hpp"
#include "test_util.hpp"

using namespace hodgespec;

namespace {

Polynomial x(std::size_t dim, std::size_t i) { return Polynomial::variable(dim, i); }

Polynomial random_polynomial(std::mt19937_64& rng, std::size_t dim, unsigned max_degree) {
  std::uniform_int_distribution<int> terms(0, 4), deg(0, static_cast<int>(max_degree)), coef(-4, 4);
  Polynomial f(dim);
  for (int t = terms(rng); t > 0; --t) {
    auto monos = monomials_of_degree(dim, static_cast<unsigned>(deg(rng)));
    std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
    f.add_term(monos[pick(rng)], ratio(coef(rng), 1 + (t % 3)));
  }
  return f;
}

PolyForm random_form(std::mt19937_64& rng, std::size_t dim, std::size_t degree, unsigned max_degree = 3) {
  PolyForm w(dim, degree);
  for (const auto& idx : multi_indices(dim, degree)) w.add(idx, random_polynomial(rng, dim, max_degree));
  return w;
}

PolyForm constant_form(std::mt19937_64& rng, std::size_t dim, std::size_t degree) {
  return random_form(rng, dim, degree, 0);
}

RationalVector random_vector(std::mt19937_64& rng, std::size_t dim) {
  std::uniform_int_distribution<int> c(-3, 3);
  RationalVector v(dim);
  for (auto& e : v) e = ratio(c(rng), 1 + (c(rng) + 3) % 2);
  for (auto& e : v) e.canonicalize();
  return v;
}

// Componentwise -(sum of second derivatives).
PolyForm minus_coordinate_laplacian(const PolyForm& w) {
  PolyForm out(w.dim(), w.degree());
  for (const auto& [idx, f] : w.coefficients()) out.add(idx, -f.laplacian());
  return out;
}

int sign_pow(std::size_t e) { return e % 2 == 0 ? 1 : -1; }

}  // namespace

TEST_CASE("wedge and contraction basics") {
  const auto e1 = PolyForm::basis(2, {0}), e2 = PolyForm::basis(2, {1});
  CHECK(wedge(e1, e2) == wedge(e2, e1) * Rational(-1));
  CHECK(PolyForm::basis(2, {1, 0}) == PolyForm::basis(2, {0, 1}) * Rational(-1));
  CHECK(contract(RationalVector{1, 0}, PolyForm::basis(2, {0, 1})) == e2);
  CHECK(contract(RationalVector{0, 1}, PolyForm::basis(2, {0, 1})) == e1 * Rational(-1));
  CHECK(wedge(e1, e1).is_zero());
  CHECK(kind_of([&] { wedge(e1, PolyForm::basis(3, {0})); }) == ErrorKind::DimensionMismatch);
  CHECK(kind_of([&] { contract(RationalVector{1, 0, 0}, e1); }) == ErrorKind::DimensionMismatch);
}

TEST_CASE("contraction is an anti-derivation and wedge is graded commutative") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t dim = 2 + trial % 3;
    const std::size_t p = trial % (dim + 1), q = (trial / 3) % (dim + 1);
    const auto a = random_form(rng, dim, p, 1), b = random_form(rng, dim, q, 1);
    CHECK(wedge(a, b) == wedge(b, a) * Rational(sign_pow(p * q)));

    const auto v = random_vector(rng, dim), xi = random_vector(rng, dim);
    const auto xi_form = PolyForm::covector(xi);
    PolyForm lhs = contract(v, wedge(xi_form, a));
    PolyForm rhs = a * dot(xi, v);
    if (p > 0) rhs -= wedge(xi_form, contract(v, a));
    CHECK(lhs == rhs);

    if (p > 0) {
      PolyForm leibniz = wedge(contract(v, a), b);
      if (q > 0) leibniz += wedge(a, contract(v, b)) * Rational(sign_pow(p));
      if (p + q <= dim) CHECK(contract(v, wedge(a, b)) == leibniz);
    }
  }
}

TEST_CASE("exterior derivative examples") {
  CHECK(d_flat(PolyForm::function(x(2, 0))) == PolyForm::basis(2, {0}));
  CHECK(d_flat(PolyForm::basis(2, {0}).times(x(2, 1))) == PolyForm::basis(2, {0, 1}) * Rational(-1));
  CHECK(d_flat(PolyForm::basis(2, {0, 1}).times(x(2, 0))).is_zero());
}

TEST_CASE("codifferential examples") {
  CHECK(delta_flat(PolyForm::basis(2, {0}).times(x(2, 0))) == PolyForm::function(Polynomial::constant(2, -1)));
  CHECK(delta_flat(PolyForm::basis(2, {0}, 7)).is_zero());
  CHECK(kind_of([] { delta_flat(PolyForm::function(Polynomial::constant(2, 1))); }) == ErrorKind::DegreeZero);
  // delta(x_1 e^1 ^ e^2) = -e^2 from the coordinate formula.
  CHECK(delta_flat(PolyForm::basis(2, {0, 1}).times(x(2, 0))) == PolyForm::basis(2, {1}) * Rational(-1));
}

TEST_CASE("d d = 0, delta delta = 0, and d delta + delta d is minus the coordinate Laplacian") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t dim = 2 + trial % 3;
    const std::size_t p = trial % (dim + 1);
    const auto w = random_form(rng, dim, p);
    CHECK(d_flat(d_flat(w)).is_zero());
    if (p >= 2) CHECK(delta_flat(delta_flat(w)).is_zero());
    PolyForm hodge_laplacian = p > 0 ? d_flat(delta_flat(w)) : PolyForm(dim, 0);
    hodge_laplacian += delta_flat(d_flat(w));
    CHECK(hodge_laplacian == minus_coordinate_laplacian(w));
    CHECK(f_operator_flat(1, 1, w) == hodge_laplacian);
  }
}

TEST_CASE("Hodge star") {
  CHECK(hodge_star(PolyForm::basis(2, {0})) == PolyForm::basis(2, {1}));
  CHECK(hodge_star(PolyForm::basis(2, {1})) == PolyForm::basis(2, {0}) * Rational(-1));
  CHECK(hodge_star(PolyForm::function(Polynomial::constant(3, 1))) == PolyForm::basis(3, {0, 1, 2}));
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t dim = 1 + trial % 4;
    const std::size_t p = trial % (dim + 1);
    const auto w = random_form(rng, dim, p, 2);
    CHECK(hodge_star(hodge_star(w)) == w * Rational(sign_pow(p * (dim - p))));
    CHECK(hodge_star_inverse(hodge_star(w)) == w);
    CHECK(hodge_star(hodge_star_inverse(w)) == w);
  }
}

TEST_CASE("codifferential agrees with the star formula") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t dim = 2 + trial % 3;
    const std::size_t deg = 1 + trial % dim;
    const auto w = random_form(rng, dim, deg);
    // On forms of degree dim - p: delta = (-1)^{p+1} * d *^{-1}.
    const std::size_t p = dim - deg;
    CHECK(delta_flat(w) == hodge_star(d_flat(hodge_star_inverse(w))) * Rational(sign_pow(p + 1)));
    // Equivalently, on degree-deg forms: delta = (-1)^deg *^{-1} d *.
    CHECK(delta_flat(w) == hodge_star_inverse(d_flat(hodge_star(w))) * Rational(sign_pow(deg)));
  }
}

TEST_CASE("star conjugation swaps alpha and beta") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t dim = 2 + trial % 3;
    const std::size_t p = trial % (dim + 1);
    const Rational alpha = ratio(1 + trial % 4, 2), beta = ratio(3 + trial % 5, 1 + trial % 2);
    const auto eta = random_form(rng, dim, dim - p, 3);
    CHECK(hodge_star(f_operator_flat(alpha, beta, hodge_star_inverse(eta))) == f_operator_flat(beta, alpha, eta));
  }
}

TEST_CASE("principal symbol") {
  const Rational alpha(3), beta(5);
  const CovectorAction cv{{1, 0}, alpha, beta};
  CHECK(principal_symbol(cv, PolyForm::basis(2, {0})) == PolyForm::basis(2, {0}) * -alpha);
  CHECK(principal_symbol(cv, PolyForm::basis(2, {1})) == PolyForm::basis(2, {1}) * -beta);
  CHECK(kind_of([] { principal_symbol_inverse({{0, 0}, 1, 2}, PolyForm::basis(2, {0})); }) ==
        ErrorKind::ZeroCovector);
  CHECK(kind_of([&] { principal_symbol(cv, PolyForm::basis(2, {0}).times(x(2, 1))); }) ==
        ErrorKind::InvalidArgument);

  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t dim = 1 + trial % 4;
    const std::size_t p = trial % (dim + 1);
    RationalVector xi = random_vector(rng, dim);
    xi[trial % dim] += 5;  // never zero
    const Rational a = ratio(1 + trial % 7, 1 + trial % 3), b = ratio(2 + trial % 5, 1 + trial % 4);
    const auto w = constant_form(rng, dim, p);
    const Rational xi2 = dot(xi, xi);
    CHECK(principal_symbol({xi, a, a}, w) == w * (-a * xi2));
    CHECK(principal_symbol_inverse({xi, a, b}, principal_symbol({xi, a, b}, w)) == w);
    CHECK(principal_symbol({xi, a, b}, principal_symbol_inverse({xi, a, b}, w)) == w);
  }
}

TEST_CASE("symbol eigenspaces have dimensions C(n-1,p-1) and C(n-1,p)") {
  for (std::size_t dim = 1; dim <= 4; ++dim) {
    for (std::size_t p = 0; p <= dim; ++p) {
      const RationalVector xi = [&] {
        RationalVector v(dim);
        for (std::size_t i = 0; i < dim; ++i) v[i] = ratio(static_cast<long>(i) + 1, 2);
        return v;
      }();
      const Rational a(2), b(7), xi2 = dot(xi, xi);
      const auto basis = multi_indices(dim, p);
      RationalMatrix shifted_a(basis.size(), basis.size()), shifted_b(basis.size(), basis.size());
      for (std::size_t c = 0; c < basis.size(); ++c) {
        const auto img = principal_symbol({xi, a, b}, PolyForm::basis(dim, basis[c]));
        for (std::size_t r = 0; r < basis.size(); ++r) {
          Rational v = 0;
          if (auto f = img.coefficient(basis[r]); !f.is_zero()) v = f.terms().begin()->second;
          shifted_a(r, c) = v + (r == c ? a * xi2 : Rational(0));
          shifted_b(r, c) = v + (r == c ? b * xi2 : Rational(0));
        }
      }
      const auto nullity = [&](const RationalMatrix& m) { return basis.size() - rank(m); };
      CHECK(nullity(shifted_a) == binomial(static_cast<long>(dim) - 1, static_cast<long>(p) - 1));
      CHECK(nullity(shifted_b) == binomial(static_cast<long>(dim) - 1, static_cast<long>(p)));
      CHECK((shifted_a * shifted_b) == RationalMatrix(basis.size(), basis.size()));
    }
  }
}
