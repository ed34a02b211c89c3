#include "hodgespec/torus.hpp"

#include <algorithm>

#include "hodgespec/error.hpp"

namespace hodgespec {

namespace {

void validate(const TorusOperator& op) {
  if (op.p > op.n()) fail(ErrorKind::DegreeOutOfRange, "form degree exceeds torus dimension");
  if (op.alpha <= 0 || op.beta <= 0) fail(ErrorKind::NonpositiveScalar, "alpha and beta must be positive");
}

std::uint64_t alpha_weight(std::size_t n, std::size_t p) {
  return binomial(static_cast<long>(n) - 1, static_cast<long>(p) - 1);
}

std::uint64_t beta_weight(std::size_t n, std::size_t p) {
  return binomial(static_cast<long>(n) - 1, static_cast<long>(p));
}

}  // namespace

WeightedSpectrum laplace0_spectrum(const Lattice& lattice, const Rational& cutoff,
                                   const EnumerationOptions& options) {
  if (cutoff < 0) fail(ErrorKind::InvalidArgument, "cutoff must be nonnegative");
  NormTable table = enumerate_norms(dual(lattice), cutoff, options);
  WeightedSpectrum::Entries entries(table.counts.begin(), table.counts.end());
  return WeightedSpectrum(SpectrumUnit::FourPiSquared, cutoff, std::move(entries));
}

WeightedSpectrum f_spectrum_from_laplace(const WeightedSpectrum& laplace, std::size_t n, std::size_t p,
                                         const Rational& alpha, const Rational& beta) {
  if (p > n) fail(ErrorKind::DegreeOutOfRange, "form degree exceeds torus dimension");
  return repeated_union(scale(alpha, laplace), alpha_weight(n, p), scale(beta, laplace), beta_weight(n, p));
}

WeightedSpectrum f_spectrum(const TorusOperator& op, const Rational& cutoff, const EnumerationOptions& options) {
  validate(op);
  if (cutoff < 0) fail(ErrorKind::InvalidArgument, "cutoff must be nonnegative");
  WeightedSpectrum laplace = laplace0_spectrum(op.lattice, cutoff / std::min(op.alpha, op.beta), options);
  return truncate(f_spectrum_from_laplace(laplace, op.n(), op.p, op.alpha, op.beta), cutoff);
}

SplitSpectrum f_spectrum_generic(const TorusOperator& op, const Rational& cutoff,
                                 const EnumerationOptions& options) {
  validate(op);
  if (cutoff < 0) fail(ErrorKind::InvalidArgument, "cutoff must be nonnegative");
  WeightedSpectrum laplace = laplace0_spectrum(op.lattice, cutoff / std::min(op.alpha, op.beta), options);
  const WeightedSpectrum none(SpectrumUnit::FourPiSquared, cutoff);
  auto part = [&](const Rational& factor, std::uint64_t weight) {
    if (weight == 0) return none;
    return truncate(repeated_union(scale(factor, laplace), weight, none, 0), cutoff);
  };
  return SplitSpectrum{part(op.alpha, alpha_weight(op.n(), op.p)), part(op.beta, beta_weight(op.n(), op.p))};
}

std::uint64_t eigenvalue_multiplicity(const TorusOperator& op, const Rational& q, EigenBranch branch,
                                      ParameterMode mode, const EnumerationOptions& options) {
  validate(op);
  if (q <= 0) fail(ErrorKind::UnrepresentedNorm, "branch multiplicities are defined for positive norms");
  const Rational ratio = branch == EigenBranch::Alpha ? Rational(op.alpha / op.beta) : Rational(op.beta / op.alpha);
  const Rational partner = ratio * q;
  DualData d = dual(op.lattice);
  NormTable table = enumerate_norms(d, std::max(q, partner), options);
  const std::uint64_t own = table.count(q);
  if (own == 0) fail(ErrorKind::UnrepresentedNorm, "norm " + format_rational(q) + " is not represented");
  const std::uint64_t cross = mode == ParameterMode::Generic ? 0 : table.count(partner);
  const std::uint64_t a = alpha_weight(op.n(), op.p);
  const std::uint64_t b = beta_weight(op.n(), op.p);
  return branch == EigenBranch::Alpha ? a * own + b * cross : b * own + a * cross;
}

std::uint64_t parallel_kernel_dim(std::size_t n, std::size_t p) {
  if (p > n) fail(ErrorKind::DegreeOutOfRange, "form degree exceeds dimension");
  return binomial(static_cast<long>(n), static_cast<long>(p));
}

}  // namespace hodgespec
