#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "hodgespec/linalg.hpp"

namespace hodgespec {

/// Full-rank lattice Z b_1 + ... + Z b_n in R^n; the basis vectors are the
/// columns of the basis matrix.
class Lattice {
 public:
  /// Raises SingularBasis when det(basis) = 0.
  explicit Lattice(RationalMatrix basis);

  static Lattice integer(std::size_t n);
  /// Builds from basis vectors given as rows.
  static Lattice from_basis_vectors(const std::vector<RationalVector>& vectors);

  std::size_t dimension() const { return basis_.rows(); }
  const RationalMatrix& basis() const { return basis_; }

  /// The lattice c * Lambda.
  Lattice scaled(const Rational& c) const;

 private:
  RationalMatrix basis_;
};

struct DualData {
  /// Columns b^i with <b^i, b_j> = delta_ij, i.e. the inverse transpose.
  RationalMatrix dual_basis;
  /// dual_basis^T dual_basis.
  RationalMatrix dual_gram;
  /// Certificate of positive definiteness: dual_gram = L D L^T, D > 0.
  LdltFactors ldl;
};

DualData dual(const Lattice& lattice);

/// The dual lattice itself, Lambda^*.
Lattice dual_lattice(const Lattice& lattice);

/// Counts #{l in Lambda^* : |l|^2 = q} for every q up to the bound.
struct NormTable {
  Rational bound;
  std::map<Rational, std::uint64_t> counts;

  /// Count for q; 0 when q is unrepresented. Raises CutoffExceeded if q > bound.
  std::uint64_t count(const Rational& q) const;
  std::uint64_t total() const;
  friend bool operator==(const NormTable&, const NormTable&) = default;
};

struct EnumerationOptions {
  /// Maximum number of search-tree nodes before BudgetExceeded.
  std::uint64_t node_budget = 50'000'000;
  /// 0 selects std::thread::hardware_concurrency().
  unsigned threads = 0;
};

/// Exact Fincke-Pohst enumeration over the LDL^T layers of the dual Gram
/// matrix. Coordinate ranges are rounded outward and every candidate is
/// checked with exact arithmetic, so points with norm exactly equal to the
/// bound are never lost.
NormTable enumerate_norms(const DualData& dual, const Rational& bound,
                          const EnumerationOptions& options = {});

/// A(sqrt(q)) = #{l in Lambda^* : |l|^2 = q}.
std::uint64_t count_norm(const DualData& dual, const Rational& q,
                         const EnumerationOptions& options = {});

/// Reference implementation: scans the box |x_i| <= sqrt(Q (G^{-1})_{ii}),
/// which contains the whole ellipsoid x^T G x <= Q. Raises BoxTooLarge when
/// the box holds more than max_box_points integer points.
NormTable brute_force_enumerate(const DualData& dual, const Rational& bound,
                                std::uint64_t max_box_points = 20'000'000);

/// Smallest positive squared norm of Lambda^* together with its count.
std::pair<Rational, std::uint64_t> shortest_dual_norm(const DualData& dual,
                                                      const EnumerationOptions& options = {});

}  // namespace hodgespec
