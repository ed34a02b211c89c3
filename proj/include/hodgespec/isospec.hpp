#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "hodgespec/lattice.hpp"
#include "hodgespec/multiset.hpp"
#include "hodgespec/sphere.hpp"
#include "hodgespec/torus.hpp"

namespace hodgespec {

/// Agreement of the multiplicity functions on [0, limit].
bool is_isospectral_upto(const WeightedSpectrum& a, const WeightedSpectrum& b, const Rational& limit);

/// Smallest eigenvalue <= limit with different multiplicities, if any.
std::optional<Rational> first_divergent_eigenvalue(const WeightedSpectrum& a, const WeightedSpectrum& b,
                                                   const Rational& limit);

/// Inverts M = alpha C ^l U^m beta C by repeatedly peeling off the smallest
/// eigenvalue. The result is complete up to M.cutoff / max(alpha, beta).
/// l = 0 or m = 0 (but not both) is accepted and reduces to a single scale.
WeightedSpectrum reconstruct_base(const WeightedSpectrum& m_spec, const Rational& alpha, const Rational& beta,
                                  Multiplicity l, Multiplicity m);

/// Recovers Spec(Delta_0) of a torus from Spec(F_{alpha beta, p}).
WeightedSpectrum laplace_spectrum_from_torus_spectrum(const WeightedSpectrum& f_spec, std::size_t n, std::size_t p,
                                                      const Rational& alpha, const Rational& beta);

/// Case decisions taken by the recovery procedures.
enum class RecoveryBranch {
  KernelStripped,       // torus: removed (0, C(n,p))
  AlphaMinimum,         // torus: smallest key only in the alpha series
  BetaMinimum,          // torus: smallest key only in the beta series
  JointMinimum,         // smallest key shared by both series
  LambdaMinimum,        // sphere / radius: smallest key is lambda_1
  MuMinimum,            // sphere / radius: smallest key is mu_0
  SecondFromRemainder,  // other parameter read off after removing a series
  UnorderedDistinct,    // n = 2p, two different parameters
  UnorderedEqual,       // n = 2p, both parameters equal
};

std::string_view to_string(RecoveryBranch branch);

struct OrderedParams {
  Rational alpha;
  Rational beta;
  friend bool operator==(const OrderedParams&, const OrderedParams&) = default;
};

/// {low, high} with low <= high.
struct UnorderedParams {
  Rational low;
  Rational high;
  friend bool operator==(const UnorderedParams&, const UnorderedParams&) = default;
};

struct RecoveryResult {
  std::variant<OrderedParams, UnorderedParams> kind;
  std::vector<RecoveryBranch> branch_trace;

  bool ordered() const { return std::holds_alternative<OrderedParams>(kind); }
  /// True if the recovered data describes (alpha, beta); unordered results
  /// accept either order.
  bool matches(const Rational& alpha, const Rational& beta) const;
};

/// Parameters of a torus operator from its spectrum and the function
/// Laplacian spectrum of the same lattice. M must reach
/// max(alpha, beta) * lambda_1 and A must reach M.cutoff / min(alpha, beta);
/// otherwise CutoffTooSmall.
RecoveryResult recover_torus_params(const WeightedSpectrum& m_spec, const WeightedSpectrum& laplace, std::size_t n,
                                    std::size_t p);

/// As above, enumerating the Laplace spectrum of `lattice` as deep as needed.
RecoveryResult recover_torus_params_for_lattice(const WeightedSpectrum& m_spec, const Lattice& lattice, std::size_t p,
                                                const EnumerationOptions& options = {});

/// Parameters of a sphere operator on S^n with squared radius r_sq.
RecoveryResult recover_sphere_params(const WeightedSpectrum& m_spec, std::size_t n, std::size_t p,
                                     const Rational& r_sq);

struct RadiusRecovery {
  Rational r_sq;
  RecoveryBranch branch;  // LambdaMinimum or MuMinimum
};

/// r^2 from the smallest eigenvalue, given alpha, beta.
RadiusRecovery recover_radius_traced(const Rational& alpha, const Rational& beta, std::size_t n, std::size_t p,
                                     const Rational& min_eigenvalue);
Rational recover_radius(const Rational& alpha, const Rational& beta, std::size_t n, std::size_t p,
                        const Rational& min_eigenvalue);
/// Same, reading the minimum off a spectrum.
Rational recover_radius(const Rational& alpha, const Rational& beta, std::size_t n, std::size_t p,
                        const WeightedSpectrum& spectrum);

/// (c^2 alpha, c^2 beta): the parameters on c * Lambda (or radius c r)
/// giving the same spectrum.
std::pair<Rational, Rational> scaling_transfer(const Rational& alpha, const Rational& beta, const Rational& c);

}  // namespace hodgespec
