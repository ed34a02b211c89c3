#include "hodgespec/multiset.hpp"

#include <algorithm>

#include "hodgespec/error.hpp"

namespace hodgespec {

std::string_view to_string(SpectrumUnit unit) {
  return unit == SpectrumUnit::FourPiSquared ? "four_pi_squared" : "plain";
}

WeightedSpectrum::WeightedSpectrum(SpectrumUnit unit, Rational cutoff)
    : unit_(unit), cutoff_(std::move(cutoff)) {}

WeightedSpectrum::WeightedSpectrum(SpectrumUnit unit, Rational cutoff, Entries entries)
    : unit_(unit), cutoff_(std::move(cutoff)) {
  for (auto& [key, mult] : entries) {
    if (mult == 0) continue;
    if (key > cutoff_) {
      fail(ErrorKind::CutoffExceeded,
           "eigenvalue " + format_rational(key) + " lies above cutoff " + format_rational(cutoff_));
    }
    entries_.emplace(key, mult);
  }
}

Multiplicity WeightedSpectrum::total_multiplicity() const {
  Multiplicity total = 0;
  for (const auto& [key, mult] : entries_) total += mult;
  return total;
}

Multiplicity WeightedSpectrum::multiplicity(const Rational& value) const {
  if (value > cutoff_) {
    fail(ErrorKind::CutoffExceeded,
         "query " + format_rational(value) + " above cutoff " + format_rational(cutoff_));
  }
  auto it = entries_.find(value);
  return it == entries_.end() ? 0 : it->second;
}

namespace {

void require_same_unit(const WeightedSpectrum& a, const WeightedSpectrum& b) {
  if (a.unit() != b.unit()) {
    fail(ErrorKind::UnitMismatch, "cannot combine spectra in units " + std::string(to_string(a.unit())) +
                                      " and " + std::string(to_string(b.unit())));
  }
}

}  // namespace

WeightedSpectrum weighted_union(const WeightedSpectrum& a, const WeightedSpectrum& b) {
  return repeated_union(a, 1, b, 1);
}

WeightedSpectrum repeated_union(const WeightedSpectrum& a, Multiplicity m,
                                const WeightedSpectrum& b, Multiplicity m2) {
  require_same_unit(a, b);
  if (m + m2 == 0) fail(ErrorKind::InvalidArgument, "repeated union needs m + m2 >= 1");
  Rational cutoff = std::min(a.cutoff(), b.cutoff());
  WeightedSpectrum::Entries out;
  for (const auto& [key, mult] : a.entries()) {
    if (key <= cutoff) out[key] += m * mult;
  }
  for (const auto& [key, mult] : b.entries()) {
    if (key <= cutoff) out[key] += m2 * mult;
  }
  return WeightedSpectrum(a.unit(), cutoff, std::move(out));
}

WeightedSpectrum difference(const WeightedSpectrum& a, const WeightedSpectrum& b) {
  require_same_unit(a, b);
  Rational cutoff = std::min(a.cutoff(), b.cutoff());
  WeightedSpectrum::Entries out;
  for (const auto& [key, mult] : a.entries()) {
    if (key > cutoff) break;
    auto it = b.entries().find(key);
    Multiplicity other = it == b.entries().end() ? 0 : it->second;
    if (mult > other) out.emplace(key, mult - other);
  }
  return WeightedSpectrum(a.unit(), cutoff, std::move(out));
}

WeightedSpectrum scale(const Rational& r, const WeightedSpectrum& w) {
  if (r <= 0) fail(ErrorKind::NonpositiveScalar, "scale factor must be positive, got " + format_rational(r));
  WeightedSpectrum::Entries out;
  for (const auto& [key, mult] : w.entries()) out.emplace_hint(out.end(), r * key, mult);
  return WeightedSpectrum(w.unit(), r * w.cutoff(), std::move(out));
}

std::pair<Rational, Multiplicity> min_entry(const WeightedSpectrum& w) {
  if (w.empty()) fail(ErrorKind::EmptySpectrum, "minimum of an empty weighted set");
  return *w.entries().begin();
}

WeightedSpectrum truncate(const WeightedSpectrum& w, const Rational& limit) {
  if (limit > w.cutoff()) {
    fail(ErrorKind::CutoffExceeded,
         "truncation " + format_rational(limit) + " beyond cutoff " + format_rational(w.cutoff()));
  }
  WeightedSpectrum::Entries out;
  for (const auto& [key, mult] : w.entries()) {
    if (key > limit) break;
    out.emplace_hint(out.end(), key, mult);
  }
  return WeightedSpectrum(w.unit(), limit, std::move(out));
}

std::optional<Rational> first_divergence(const WeightedSpectrum& a, const WeightedSpectrum& b,
                                         const Rational& limit) {
  require_same_unit(a, b);
  if (limit > a.cutoff() || limit > b.cutoff()) {
    fail(ErrorKind::CutoffExceeded, "comparison bound " + format_rational(limit) +
                                        " exceeds a guaranteed cutoff");
  }
  auto ia = a.entries().begin();
  auto ib = b.entries().begin();
  while (true) {
    bool a_live = ia != a.entries().end() && ia->first <= limit;
    bool b_live = ib != b.entries().end() && ib->first <= limit;
    if (!a_live && !b_live) return std::nullopt;
    if (!b_live) return ia->first;
    if (!a_live) return ib->first;
    if (ia->first != ib->first) return std::min(ia->first, ib->first);
    if (ia->second != ib->second) return ia->first;
    ++ia;
    ++ib;
  }
}

bool equal_upto(const WeightedSpectrum& a, const WeightedSpectrum& b, const Rational& limit) {
  return !first_divergence(a, b, limit).has_value();
}

}  // namespace hodgespec
