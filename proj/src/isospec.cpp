#include "hodgespec/isospec.hpp"

#include <algorithm>

#include "hodgespec/error.hpp"

namespace hodgespec {

namespace {

void require_positive(const Rational& v, const char* name) {
  if (v <= 0) fail(ErrorKind::NonpositiveScalar, std::string(name) + " must be positive, got " + format_rational(v));
}

void require_unit(const WeightedSpectrum& w, SpectrumUnit unit, const char* what) {
  if (w.unit() != unit) {
    fail(ErrorKind::UnitMismatch, std::string(what) + " must use unit " + std::string(to_string(unit)));
  }
}

WeightedSpectrum copies(const WeightedSpectrum& w, Multiplicity count) {
  WeightedSpectrum::Entries out;
  for (const auto& [key, mult] : w.entries()) out[key] = mult * count;
  return WeightedSpectrum(w.unit(), w.cutoff(), std::move(out));
}

WeightedSpectrum without_zero(const WeightedSpectrum& w) {
  auto entries = w.entries();
  entries.erase(Rational(0));
  return WeightedSpectrum(w.unit(), w.cutoff(), std::move(entries));
}

// Key of the smallest entry left after removing `series`; CutoffTooSmall if
// nothing is left below the common cutoff.
Rational smallest_after_removing(const WeightedSpectrum& m_spec, const WeightedSpectrum& series) {
  WeightedSpectrum rest = difference(m_spec, series);
  if (rest.empty()) {
    fail(ErrorKind::CutoffTooSmall, "spectrum ends before the second parameter shows up (cutoff " +
                                        format_rational(rest.cutoff()) + ")");
  }
  return min_entry(rest).first;
}

void check_reproduces(const WeightedSpectrum& given, const WeightedSpectrum& rebuilt) {
  const Rational limit = std::min(given.cutoff(), rebuilt.cutoff());
  if (auto key = first_divergence(given, rebuilt, limit)) {
    fail(ErrorKind::NotInImage, "recovered parameters do not reproduce the spectrum at " + format_rational(*key));
  }
}

RecoveryResult make_result(std::size_t n, std::size_t p, const Rational& alpha, const Rational& beta,
                           std::vector<RecoveryBranch> trace) {
  if (n == 2 * p) return {UnorderedParams{std::min(alpha, beta), std::max(alpha, beta)}, std::move(trace)};
  return {OrderedParams{alpha, beta}, std::move(trace)};
}

}  // namespace

bool is_isospectral_upto(const WeightedSpectrum& a, const WeightedSpectrum& b, const Rational& limit) {
  return equal_upto(a, b, limit);
}

std::optional<Rational> first_divergent_eigenvalue(const WeightedSpectrum& a, const WeightedSpectrum& b,
                                                   const Rational& limit) {
  return first_divergence(a, b, limit);
}

WeightedSpectrum reconstruct_base(const WeightedSpectrum& m_spec, const Rational& alpha, const Rational& beta,
                                  Multiplicity l, Multiplicity m) {
  require_positive(alpha, "alpha");
  require_positive(beta, "beta");
  if (l + m == 0) fail(ErrorKind::InvalidArgument, "l and m cannot both be zero");
  if (m_spec.empty()) fail(ErrorKind::EmptyInput, "cannot reconstruct from an empty spectrum");

  struct Series {
    Rational scale;
    Multiplicity weight;
  };
  std::vector<Series> series;
  if (l > 0) series.push_back({alpha, l});
  if (m > 0) series.push_back({beta, m});
  if (series.size() == 2 && alpha == beta) series = {{alpha, l + m}};
  std::sort(series.begin(), series.end(), [](const Series& a, const Series& b) { return a.scale < b.scale; });

  const Series& low = series.front();
  const Series& high = series.back();
  const Rational cutoff = m_spec.cutoff() / high.scale;

  auto rest = m_spec.entries();
  WeightedSpectrum::Entries base;
  while (!rest.empty()) {
    const auto [key, mult] = *rest.begin();
    const Rational lambda = key / low.scale;
    if (lambda > cutoff) break;
    const Multiplicity weight = key == 0 ? l + m : low.weight;
    if (mult % weight != 0) {
      fail(ErrorKind::NotInImage, "multiplicity " + std::to_string(mult) + " at " + format_rational(key) +
                                      " is not a multiple of " + std::to_string(weight));
    }
    const Multiplicity count = mult / weight;
    base[lambda] = count;
    rest.erase(rest.begin());
    if (key == 0 || series.size() == 1) continue;

    const Rational partner = high.scale * lambda;
    const Multiplicity need = high.weight * count;
    auto it = rest.find(partner);
    if (it == rest.end() || it->second < need) {
      fail(ErrorKind::NotInImage, "missing multiplicity at " + format_rational(partner));
    }
    it->second -= need;
    if (it->second == 0) rest.erase(it);
  }
  return WeightedSpectrum(m_spec.unit(), cutoff, std::move(base));
}

WeightedSpectrum laplace_spectrum_from_torus_spectrum(const WeightedSpectrum& f_spec, std::size_t n, std::size_t p,
                                                      const Rational& alpha, const Rational& beta) {
  require_unit(f_spec, SpectrumUnit::FourPiSquared, "torus spectrum");
  if (p > n) fail(ErrorKind::DegreeOutOfRange, "p must not exceed n");
  return reconstruct_base(f_spec, alpha, beta, binomial(static_cast<long>(n) - 1, static_cast<long>(p) - 1),
                          binomial(static_cast<long>(n) - 1, static_cast<long>(p)));
}

std::string_view to_string(RecoveryBranch branch) {
  switch (branch) {
    case RecoveryBranch::KernelStripped: return "kernel_stripped";
    case RecoveryBranch::AlphaMinimum: return "alpha_minimum";
    case RecoveryBranch::BetaMinimum: return "beta_minimum";
    case RecoveryBranch::JointMinimum: return "joint_minimum";
    case RecoveryBranch::LambdaMinimum: return "lambda_minimum";
    case RecoveryBranch::MuMinimum: return "mu_minimum";
    case RecoveryBranch::SecondFromRemainder: return "second_from_remainder";
    case RecoveryBranch::UnorderedDistinct: return "unordered_distinct";
    case RecoveryBranch::UnorderedEqual: return "unordered_equal";
  }
  return "unknown";
}

bool RecoveryResult::matches(const Rational& alpha, const Rational& beta) const {
  if (const auto* o = std::get_if<OrderedParams>(&kind)) return o->alpha == alpha && o->beta == beta;
  const auto& u = std::get<UnorderedParams>(kind);
  return u.low == std::min(alpha, beta) && u.high == std::max(alpha, beta);
}

RecoveryResult recover_torus_params(const WeightedSpectrum& m_spec, const WeightedSpectrum& laplace, std::size_t n,
                                    std::size_t p) {
  require_unit(m_spec, SpectrumUnit::FourPiSquared, "torus spectrum");
  require_unit(laplace, SpectrumUnit::FourPiSquared, "Laplace spectrum");
  if (p > n) fail(ErrorKind::DegreeOutOfRange, "p must not exceed n");
  if (p == 0 || p == n) {
    fail(ErrorKind::ParameterUnidentifiable, "for p = 0 or p = n one parameter does not enter the spectrum");
  }
  const auto l = binomial(static_cast<long>(n) - 1, static_cast<long>(p) - 1);
  const auto mm = binomial(static_cast<long>(n) - 1, static_cast<long>(p));

  std::vector<RecoveryBranch> trace;
  if (m_spec.cutoff() < 0 || m_spec.multiplicity(0) != l + mm) {
    fail(ErrorKind::NotInImage, "kernel multiplicity must be C(n,p) = " + std::to_string(l + mm));
  }
  trace.push_back(RecoveryBranch::KernelStripped);
  const WeightedSpectrum rest = without_zero(m_spec);
  if (rest.empty()) fail(ErrorKind::CutoffTooSmall, "no positive eigenvalue below the cutoff");

  const WeightedSpectrum a_pos = without_zero(laplace);
  if (a_pos.empty()) fail(ErrorKind::CutoffTooSmall, "Laplace spectrum has no positive eigenvalue");
  const auto [lambda1, a1] = min_entry(a_pos);
  const auto [m_min, mult] = min_entry(rest);
  const Rational first = m_min / lambda1;

  auto second = [&](const Rational& known, Multiplicity weight) -> Rational {
    return smallest_after_removing(rest, copies(scale(known, a_pos), weight)) / lambda1;
  };

  Rational alpha, beta;
  if (n == 2 * p) {
    if (mult == l * a1) {
      trace.push_back(RecoveryBranch::UnorderedDistinct);
      alpha = first;
      beta = second(first, l);
      trace.push_back(RecoveryBranch::SecondFromRemainder);
    } else if (mult == 2 * l * a1) {
      trace.push_back(RecoveryBranch::UnorderedEqual);
      alpha = beta = first;
    } else {
      fail(ErrorKind::BranchAmbiguous, "multiplicity " + std::to_string(mult) + " of the smallest eigenvalue fits no case");
    }
  } else if (mult == l * a1) {
    trace.push_back(RecoveryBranch::AlphaMinimum);
    alpha = first;
    beta = second(first, l);
    trace.push_back(RecoveryBranch::SecondFromRemainder);
  } else if (mult == mm * a1) {
    trace.push_back(RecoveryBranch::BetaMinimum);
    beta = first;
    alpha = second(first, mm);
    trace.push_back(RecoveryBranch::SecondFromRemainder);
  } else if (mult == (l + mm) * a1) {
    trace.push_back(RecoveryBranch::JointMinimum);
    alpha = beta = first;
  } else {
    fail(ErrorKind::BranchAmbiguous, "multiplicity " + std::to_string(mult) + " of the smallest eigenvalue fits no case");
  }

  check_reproduces(m_spec, f_spectrum_from_laplace(laplace, n, p, alpha, beta));
  return make_result(n, p, alpha, beta, std::move(trace));
}

RecoveryResult recover_torus_params_for_lattice(const WeightedSpectrum& m_spec, const Lattice& lattice, std::size_t p,
                                                const EnumerationOptions& options) {
  require_unit(m_spec, SpectrumUnit::FourPiSquared, "torus spectrum");
  const WeightedSpectrum rest = without_zero(m_spec);
  if (rest.empty()) fail(ErrorKind::CutoffTooSmall, "no positive eigenvalue below the cutoff");
  const Rational lambda1 = shortest_dual_norm(dual(lattice), options).first;
  // The smallest positive eigenvalue is min(alpha, beta) * lambda1.
  const Rational depth = std::max(lambda1, Rational(m_spec.cutoff() * lambda1 / min_entry(rest).first));
  return recover_torus_params(m_spec, laplace0_spectrum(lattice, depth, options), lattice.dimension(), p);
}

RecoveryResult recover_sphere_params(const WeightedSpectrum& m_spec, std::size_t n, std::size_t p,
                                     const Rational& r_sq) {
  require_unit(m_spec, SpectrumUnit::Plain, "sphere spectrum");
  require_positive(r_sq, "r^2");
  if (p < 1 || p + 1 > n) fail(ErrorKind::DegreeOutOfRange, "sphere recovery needs 1 <= p <= n-1");
  if (m_spec.empty()) fail(ErrorKind::CutoffTooSmall, "empty sphere spectrum");
  const auto [m_min, mult] = min_entry(m_spec);
  if (m_min <= 0) fail(ErrorKind::NotInImage, "sphere spectra in interior degrees are positive");

  const Rational c_lambda = Rational((p + 1) * (n - p));
  const Rational c_mu = Rational(p * (n - p + 1));
  const auto dv = dim_V(n, p, 1);
  const auto dw = dim_W(n, p, 0);
  const Rational& cutoff = m_spec.cutoff();
  auto lambda_series = [&](const Rational& delta) {
    return spectrum_generic(SphereOperator{n, p, 1, delta, r_sq}, cutoff).first;
  };
  auto mu_series = [&](const Rational& gamma) {
    return spectrum_generic(SphereOperator{n, p, gamma, 1, r_sq}, cutoff).second;
  };
  auto ambiguous = [&] {
    fail(ErrorKind::BranchAmbiguous, "multiplicity " + std::to_string(mult) + " of the smallest eigenvalue fits no case");
  };

  std::vector<RecoveryBranch> trace;
  Rational gamma, delta;
  if (n == 2 * p) {
    if (mult == dw) {
      trace.push_back(RecoveryBranch::UnorderedDistinct);
      gamma = r_sq * m_min / c_mu;
      delta = r_sq * smallest_after_removing(m_spec, mu_series(gamma)) / c_lambda;
      trace.push_back(RecoveryBranch::SecondFromRemainder);
    } else if (mult == dv + dw) {
      trace.push_back(RecoveryBranch::UnorderedEqual);
      gamma = delta = r_sq * m_min / c_mu;
    } else {
      ambiguous();
    }
  } else if (mult == dv) {
    trace.push_back(RecoveryBranch::LambdaMinimum);
    delta = r_sq * m_min / c_lambda;
    gamma = r_sq * smallest_after_removing(m_spec, lambda_series(delta)) / c_mu;
    trace.push_back(RecoveryBranch::SecondFromRemainder);
  } else if (mult == dw) {
    trace.push_back(RecoveryBranch::MuMinimum);
    gamma = r_sq * m_min / c_mu;
    delta = r_sq * smallest_after_removing(m_spec, mu_series(gamma)) / c_lambda;
    trace.push_back(RecoveryBranch::SecondFromRemainder);
  } else if (mult == dv + dw) {
    trace.push_back(RecoveryBranch::JointMinimum);
    gamma = r_sq * m_min / c_mu;
    delta = r_sq * m_min / c_lambda;
  } else {
    ambiguous();
  }

  check_reproduces(m_spec, spectrum(SphereOperator{n, p, gamma, delta, r_sq}, cutoff));
  return make_result(n, p, gamma, delta, std::move(trace));
}

RadiusRecovery recover_radius_traced(const Rational& alpha, const Rational& beta, std::size_t n, std::size_t p,
                                     const Rational& min_eigenvalue) {
  require_positive(alpha, "alpha");
  require_positive(beta, "beta");
  if (p < 1 || p + 1 > n) fail(ErrorKind::DegreeOutOfRange, "radius recovery needs 1 <= p <= n-1");
  if (min_eigenvalue <= 0) {
    fail(ErrorKind::NonpositiveMin, "smallest eigenvalue must be positive, got " + format_rational(min_eigenvalue));
  }
  const Rational c_lambda = Rational((p + 1) * (n - p));
  const Rational c_mu = Rational(p * (n - p + 1));
  if (alpha / beta >= c_lambda / c_mu) return {beta * c_lambda / min_eigenvalue, RecoveryBranch::LambdaMinimum};
  return {alpha * c_mu / min_eigenvalue, RecoveryBranch::MuMinimum};
}

Rational recover_radius(const Rational& alpha, const Rational& beta, std::size_t n, std::size_t p,
                        const Rational& min_eigenvalue) {
  return recover_radius_traced(alpha, beta, n, p, min_eigenvalue).r_sq;
}

Rational recover_radius(const Rational& alpha, const Rational& beta, std::size_t n, std::size_t p,
                        const WeightedSpectrum& spectrum) {
  require_unit(spectrum, SpectrumUnit::Plain, "sphere spectrum");
  return recover_radius(alpha, beta, n, p, min_entry(spectrum).first);
}

std::pair<Rational, Rational> scaling_transfer(const Rational& alpha, const Rational& beta, const Rational& c) {
  require_positive(c, "c");
  const Rational c2 = c * c;
  return {c2 * alpha, c2 * beta};
}

}  // namespace hodgespec
