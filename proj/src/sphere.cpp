#include "hodgespec/sphere.hpp"

#include <map>

#include "hodgespec/error.hpp"

namespace hodgespec {

namespace {

void validate(const SphereOperator& op) {
  if (op.n < 1) fail(ErrorKind::DegreeOutOfRange, "sphere dimension must be at least 1");
  if (op.p > op.n) fail(ErrorKind::DegreeOutOfRange, "form degree exceeds sphere dimension");
  if (op.alpha <= 0 || op.beta <= 0) fail(ErrorKind::NonpositiveScalar, "alpha and beta must be positive");
  if (op.r_sq <= 0) fail(ErrorKind::NonpositiveScalar, "squared radius must be positive");
}

void require_interior(std::size_t n, std::size_t p) {
  if (p < 1 || p + 1 > n) {
    fail(ErrorKind::DegreeOutOfRange, "closed-form series need 1 <= p <= n-1 (n=" + std::to_string(n) +
                                          ", p=" + std::to_string(p) + ")");
  }
}

Integer factorial(std::uint64_t m) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), m);
  return f;
}

Integer exact_quotient(const Integer& num, const Integer& den) {
  if (den == 0 || num % den != 0) fail(ErrorKind::InvalidArgument, "multiplicity formula is not integral");
  return num / den;
}

// Function-Laplacian eigenvalue k(k+n-1) scaled by the relevant coefficient:
// beta on functions, alpha on top forms.
Rational function_value(const SphereOperator& op, std::uint64_t k) {
  const Rational& coeff = op.p == 0 ? op.beta : op.alpha;
  return coeff * Rational(Integer(k) * Integer(k + op.n - 1)) / op.r_sq;
}

}  // namespace

Rational lambda_k(const SphereOperator& op, std::uint64_t k) {
  validate(op);
  require_interior(op.n, op.p);
  if (k < 1) fail(ErrorKind::DegreeOutOfRange, "lambda series starts at k = 1");
  return op.beta * Rational(Integer(k + op.p) * Integer(k + op.n - op.p - 1)) / op.r_sq;
}

Rational mu_k(const SphereOperator& op, std::uint64_t k) {
  validate(op);
  require_interior(op.n, op.p);
  return op.alpha * Rational(Integer(k + op.p) * Integer(k + op.n - op.p + 1)) / op.r_sq;
}

std::uint64_t dim_V(std::size_t n, std::size_t p, std::uint64_t k) {
  require_interior(n, p);
  if (k == 0) return 0;
  Integer num = factorial(n + k - 1) * Integer(n + 2 * k - 1);
  Integer den = factorial(p) * factorial(k - 1) * factorial(n - p - 1) * Integer(n + k - p - 1) * Integer(k + p);
  return to_u64(exact_quotient(num, den));
}

std::uint64_t dim_W(std::size_t n, std::size_t p, std::uint64_t k) {
  require_interior(n, p);
  Integer num = factorial(n + k) * Integer(n + 2 * k + 1);
  Integer den = factorial(p - 1) * factorial(k) * factorial(n - p) * Integer(n + k - p + 1) * Integer(k + p);
  return to_u64(exact_quotient(num, den));
}

std::uint64_t harmonic_polynomial_dim(std::size_t n, std::uint64_t k) {
  const long nk = static_cast<long>(n + k);
  const long kk = static_cast<long>(k);
  return binomial(nk, kk) - binomial(nk - 2, kk - 2);
}

bool is_extension_degree(const SphereOperator& op) { return op.p == 0 || op.p == op.n; }

std::uint64_t SphereEigenvalue::multiplicity() const {
  std::uint64_t m = 0;
  for (const auto& part : parts) m += part.dim;
  return m;
}

std::vector<SphereEigenvalue> eigenvalues(const SphereOperator& op, const Rational& cutoff, ParameterMode mode) {
  validate(op);
  if (cutoff < 0) fail(ErrorKind::InvalidArgument, "cutoff must be nonnegative");
  std::vector<SphereEigenvalue> out;
  if (is_extension_degree(op)) {
    for (std::uint64_t k = 0;; ++k) {
      Rational v = function_value(op, k);
      if (v > cutoff) break;
      out.push_back({v, {{SphereSeries::Function, k, harmonic_polynomial_dim(op.n, k)}}});
    }
    return out;
  }

  std::vector<SphereEigenvalue> lambdas;
  for (std::uint64_t k = 1;; ++k) {
    Rational v = lambda_k(op, k);
    if (v > cutoff) break;
    lambdas.push_back({v, {{SphereSeries::Lambda, k, dim_V(op.n, op.p, k)}}});
  }
  std::vector<SphereEigenvalue> mus;
  for (std::uint64_t k = 0;; ++k) {
    Rational v = mu_k(op, k);
    if (v > cutoff) break;
    mus.push_back({v, {{SphereSeries::Mu, k, dim_W(op.n, op.p, k)}}});
  }

  // Both series are strictly increasing; merge them.
  std::size_t i = 0, j = 0;
  while (i < lambdas.size() || j < mus.size()) {
    if (j == mus.size() || (i < lambdas.size() && lambdas[i].value < mus[j].value)) {
      out.push_back(std::move(lambdas[i++]));
    } else if (i == lambdas.size() || mus[j].value < lambdas[i].value) {
      out.push_back(std::move(mus[j++]));
    } else if (mode == ParameterMode::Generic) {
      out.push_back(std::move(lambdas[i++]));
      out.push_back(std::move(mus[j++]));
    } else {
      SphereEigenvalue merged = std::move(lambdas[i++]);
      merged.parts.push_back(mus[j++].parts.front());
      out.push_back(std::move(merged));
    }
  }
  return out;
}

WeightedSpectrum spectrum(const SphereOperator& op, const Rational& cutoff) {
  WeightedSpectrum::Entries entries;
  for (const auto& ev : eigenvalues(op, cutoff)) entries[ev.value] += ev.multiplicity();
  return WeightedSpectrum(SpectrumUnit::Plain, cutoff, std::move(entries));
}

std::pair<WeightedSpectrum, WeightedSpectrum> spectrum_generic(const SphereOperator& op, const Rational& cutoff) {
  WeightedSpectrum::Entries first, second;
  for (const auto& ev : eigenvalues(op, cutoff, ParameterMode::Generic)) {
    for (const auto& part : ev.parts) {
      (part.series == SphereSeries::Mu ? second : first)[ev.value] += part.dim;
    }
  }
  return {WeightedSpectrum(SpectrumUnit::Plain, cutoff, std::move(first)),
          WeightedSpectrum(SpectrumUnit::Plain, cutoff, std::move(second))};
}

WeightedSpectrum spectrum_by_circumference(const SphereOperator& op, const Rational& cutoff) {
  // On the radius sqrt(c)/2pi sphere every eigenvalue equals 4 pi^2 times the
  // eigenvalue of the radius^2 = c sphere.
  WeightedSpectrum plain = spectrum(op, cutoff);
  return WeightedSpectrum(SpectrumUnit::FourPiSquared, cutoff, plain.entries());
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> coincidences(const SphereOperator& op, const Rational& cutoff,
                                                                  ParameterMode mode) {
  validate(op);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  if (mode == ParameterMode::Generic || is_extension_degree(op)) return out;
  std::uint64_t l = 0;
  for (std::uint64_t k = 1;; ++k) {
    Rational lam = lambda_k(op, k);
    if (lam > cutoff) break;
    while (mu_k(op, l) < lam) ++l;
    if (mu_k(op, l) == lam) out.emplace_back(k, l);
  }
  return out;
}

}  // namespace hodgespec
