#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string_view>
#include <utility>

#include "hodgespec/rational.hpp"

namespace hodgespec {

/// FourPiSquared: the eigenvalue is 4*pi^2 times the key (tori).
/// Plain: the key is the eigenvalue (spheres).
enum class SpectrumUnit { FourPiSquared, Plain };

std::string_view to_string(SpectrumUnit unit);

using Multiplicity = std::uint64_t;

/// A truncated weighted set: eigenvalue -> multiplicity, exact for every
/// eigenvalue up to and including the cutoff.
///
/// Stored multiplicities are always positive and every key is <= cutoff.
/// Values are immutable once built; all operations return new spectra.
class WeightedSpectrum {
 public:
  using Entries = std::map<Rational, Multiplicity>;

  WeightedSpectrum(SpectrumUnit unit, Rational cutoff);

  /// Validates the invariants; zero multiplicities are dropped, keys above the
  /// cutoff raise CutoffExceeded.
  WeightedSpectrum(SpectrumUnit unit, Rational cutoff, Entries entries);

  SpectrumUnit unit() const { return unit_; }
  const Rational& cutoff() const { return cutoff_; }
  const Entries& entries() const { return entries_; }

  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  Multiplicity total_multiplicity() const;

  /// Multiplicity of an eigenvalue; raises CutoffExceeded above the cutoff.
  Multiplicity multiplicity(const Rational& value) const;

  friend bool operator==(const WeightedSpectrum&, const WeightedSpectrum&) = default;

 private:
  SpectrumUnit unit_;
  Rational cutoff_;
  Entries entries_;
};

/// Pointwise sum of multiplicities; cutoff is the smaller of the two.
WeightedSpectrum weighted_union(const WeightedSpectrum& a, const WeightedSpectrum& b);

/// m copies of a united with m2 copies of b.
WeightedSpectrum repeated_union(const WeightedSpectrum& a, Multiplicity m,
                                const WeightedSpectrum& b, Multiplicity m2);

/// Pointwise max(a - b, 0).
WeightedSpectrum difference(const WeightedSpectrum& a, const WeightedSpectrum& b);

/// (r W)(x) = W(x / r), r > 0.
WeightedSpectrum scale(const Rational& r, const WeightedSpectrum& w);

/// Smallest eigenvalue with its multiplicity; EmptySpectrum on an empty set.
std::pair<Rational, Multiplicity> min_entry(const WeightedSpectrum& w);

/// Keeps eigenvalues <= limit. CutoffExceeded if limit passes the cutoff.
WeightedSpectrum truncate(const WeightedSpectrum& w, const Rational& limit);

/// Agreement of the multiplicity functions on [0, limit].
bool equal_upto(const WeightedSpectrum& a, const WeightedSpectrum& b, const Rational& limit);

/// Smallest eigenvalue <= limit where the multiplicities differ, if any.
std::optional<Rational> first_divergence(const WeightedSpectrum& a, const WeightedSpectrum& b,
                                         const Rational& limit);

}  // namespace hodgespec
