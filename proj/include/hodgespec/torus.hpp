#pragma once

#include "hodgespec/lattice.hpp"
#include "hodgespec/multiset.hpp"

namespace hodgespec {

/// Merged: alpha, beta are exact rationals and coinciding eigenvalues of the
/// two series are summed. Generic: the ratio alpha/beta is treated as
/// irrational, so the two series are reported separately and never merged.
enum class ParameterMode { Merged, Generic };

/// alpha d delta + beta delta d acting on p-forms of the flat torus R^n / L.
/// p = 0 is accepted as an extension (the operator is then beta * Laplacian).
struct TorusOperator {
  Lattice lattice;
  std::size_t p;
  Rational alpha;
  Rational beta;

  std::size_t n() const { return lattice.dimension(); }
};

/// Spectrum of the function Laplacian, key |l|^2 for l in the dual lattice,
/// in 4 pi^2 units, complete up to `cutoff`.
WeightedSpectrum laplace0_spectrum(const Lattice& lattice, const Rational& cutoff,
                                   const EnumerationOptions& options = {});

/// alpha Spec(Delta_0) ^{C(n-1,p-1)}U^{C(n-1,p)} beta Spec(Delta_0), truncated.
WeightedSpectrum f_spectrum(const TorusOperator& op, const Rational& cutoff,
                            const EnumerationOptions& options = {});

/// Same composition from an already known Delta_0 spectrum. The result is
/// complete up to min(cutoff, alpha * A.cutoff, beta * A.cutoff).
WeightedSpectrum f_spectrum_from_laplace(const WeightedSpectrum& laplace, std::size_t n, std::size_t p,
                                         const Rational& alpha, const Rational& beta);

/// The two series kept apart: alpha_part carries weight C(n-1,p-1) per dual
/// vector, beta_part C(n-1,p).
struct SplitSpectrum {
  WeightedSpectrum alpha_part;
  WeightedSpectrum beta_part;
};

SplitSpectrum f_spectrum_generic(const TorusOperator& op, const Rational& cutoff,
                                 const EnumerationOptions& options = {});

enum class EigenBranch { Alpha, Beta };

/// Dimension of the eigenspace for alpha*q (Alpha) or beta*q (Beta), where q
/// is a represented squared dual norm. In Generic mode the cross term from
/// the other series is dropped. Raises UnrepresentedNorm if A(sqrt q) = 0.
std::uint64_t eigenvalue_multiplicity(const TorusOperator& op, const Rational& q, EigenBranch branch,
                                      ParameterMode mode = ParameterMode::Merged,
                                      const EnumerationOptions& options = {});

/// Dimension of the kernel: the parallel p-forms, C(n, p).
std::uint64_t parallel_kernel_dim(std::size_t n, std::size_t p);

}  // namespace hodgespec
