#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hodgespec/multiset.hpp"
#include "hodgespec/torus.hpp"

namespace hodgespec {

/// alpha d delta + beta delta d on p-forms of the round sphere S^n with
/// squared radius r_sq.
struct SphereOperator {
  std::size_t n;
  std::size_t p;
  Rational alpha;
  Rational beta;
  Rational r_sq = 1;
};

/// beta (k+p)(k+n-p-1) / r^2: co-closed series, k >= 1, 1 <= p <= n-1.
Rational lambda_k(const SphereOperator& op, std::uint64_t k);
/// alpha (k+p)(k+n-p+1) / r^2: exact series, k >= 0, 1 <= p <= n-1.
Rational mu_k(const SphereOperator& op, std::uint64_t k);

/// Multiplicity of the co-closed series; dim_V(n, p, 0) = 0.
std::uint64_t dim_V(std::size_t n, std::size_t p, std::uint64_t k);
/// Multiplicity of the exact series.
std::uint64_t dim_W(std::size_t n, std::size_t p, std::uint64_t k);

/// dim of harmonic homogeneous degree-k polynomials in n+1 variables,
/// C(n+k, k) - C(n+k-2, k-2).
std::uint64_t harmonic_polynomial_dim(std::size_t n, std::uint64_t k);

/// True for p in {0, n}, whose spectra come from the function Laplacian
/// through Hodge duality rather than the interior-degree formulas.
bool is_extension_degree(const SphereOperator& op);

enum class SphereSeries { Lambda, Mu, Function };

struct SpherePart {
  SphereSeries series;
  std::uint64_t k;
  std::uint64_t dim;
  friend bool operator==(const SpherePart&, const SpherePart&) = default;
};

struct SphereEigenvalue {
  Rational value;
  std::vector<SpherePart> parts;
  std::uint64_t multiplicity() const;
};

/// Eigenvalues up to cutoff with their eigenspace decomposition, ascending.
/// In Generic mode coinciding Lambda/Mu values are listed separately.
std::vector<SphereEigenvalue> eigenvalues(const SphereOperator& op, const Rational& cutoff,
                                          ParameterMode mode = ParameterMode::Merged);

/// Merged spectrum (Plain unit), complete up to cutoff.
WeightedSpectrum spectrum(const SphereOperator& op, const Rational& cutoff);

/// Lambda and Mu series kept apart. For p in {0, n} the single function
/// series is returned as `first`, `second` empty.
std::pair<WeightedSpectrum, WeightedSpectrum> spectrum_generic(const SphereOperator& op, const Rational& cutoff);

/// Spectrum of the sphere with circumference^2 = op.r_sq, i.e. radius
/// sqrt(op.r_sq) / 2 pi, expressed in FourPiSquared units so it can be
/// compared with torus spectra.
WeightedSpectrum spectrum_by_circumference(const SphereOperator& op, const Rational& cutoff);

/// Pairs (k, l) with lambda_k = mu_l <= cutoff. Empty in Generic mode and
/// for p in {0, n}.
std::vector<std::pair<std::uint64_t, std::uint64_t>> coincidences(const SphereOperator& op, const Rational& cutoff,
                                                                  ParameterMode mode = ParameterMode::Merged);

struct HarmonicFormDims {
  std::uint64_t dim_H;       // dim H_k^p
  std::uint64_t dim_ker_nu;  // dim {w in H_k^p : x -| w = 0}
  std::uint64_t dim_dH;      // dim d(H_{k+1}^{p-1})
};

struct OracleBudget {
  std::size_t max_ambient_dim = 5;  // n + 1
  std::uint64_t max_degree = 4;
};

/// Brute-force dimensions of the spaces behind dim_V / dim_W, computed by
/// exact kernels on polynomial-coefficient forms in R^{n+1}.
/// Raises BudgetExceeded outside the budget.
HarmonicFormDims harmonic_form_dims_oracle(std::size_t n, std::size_t p, std::uint64_t k,
                                           const OracleBudget& budget = {});

/// dim H^0_k by a kernel computation of the Laplacian on the monomial basis
/// of degree k in n+1 variables.
std::uint64_t harmonic_polynomial_dim_oracle(std::size_t n, std::uint64_t k, const OracleBudget& budget = {});

}  // namespace hodgespec
