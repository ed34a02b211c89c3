#include <map>
#include <tuple>

#include "hodgespec/error.hpp"
#include "hodgespec/exterior.hpp"
#include "hodgespec/sphere.hpp"

namespace hodgespec {

namespace {

struct FormBasisElement {
  MultiIndex index;
  Monomial monomial;
};

std::vector<FormBasisElement> form_basis(std::size_t dim, std::size_t degree, unsigned poly_degree) {
  std::vector<FormBasisElement> out;
  auto monos = monomials_of_degree(dim, poly_degree);
  for (const auto& idx : multi_indices(dim, degree))
    for (const auto& m : monos) out.push_back({idx, m});
  return out;
}

PolyForm form_from_coords(std::size_t dim, std::size_t degree, const std::vector<FormBasisElement>& basis,
                          const RationalVector& coords) {
  PolyForm w(dim, degree);
  for (std::size_t j = 0; j < basis.size(); ++j) {
    if (coords[j] != 0) w.add(basis[j].index, Polynomial::monomial(basis[j].monomial, coords[j]));
  }
  return w;
}

// Accumulates the images of a family of forms as matrix columns. Row keys
// are (block, multi-index, monomial) so several constraints can share one
// matrix.
class ColumnCollector {
 public:
  explicit ColumnCollector(std::size_t columns) : columns_(columns) {}

  void add(std::size_t column, int block, const PolyForm& image) {
    for (const auto& [idx, poly] : image.coefficients())
      for (const auto& [mono, c] : poly.terms()) {
        auto key = std::make_tuple(block, idx, mono);
        auto [it, inserted] = rows_.try_emplace(key, rows_.size());
        entries_.push_back({it->second, column, c});
      }
  }

  RationalMatrix matrix() const {
    RationalMatrix m(rows_.size(), columns_);
    for (const auto& e : entries_) m(e.row, e.col) += e.value;
    return m;
  }

 private:
  struct Entry {
    std::size_t row;
    std::size_t col;
    Rational value;
  };
  std::size_t columns_;
  std::map<std::tuple<int, MultiIndex, Monomial>, std::size_t> rows_;
  std::vector<Entry> entries_;
};

// Basis (as coordinate vectors over form_basis) of the co-closed forms with
// harmonic homogeneous coefficients.
std::vector<RationalVector> harmonic_forms(std::size_t dim, std::size_t degree,
                                           const std::vector<FormBasisElement>& basis) {
  ColumnCollector constraints(basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    PolyForm e(dim, degree);
    e.add(basis[j].index, Polynomial::monomial(basis[j].monomial));
    PolyForm lap(dim, degree);
    for (const auto& [idx, poly] : e.coefficients()) lap.add(idx, poly.laplacian());
    constraints.add(j, 0, lap);
    if (degree > 0) constraints.add(j, 1, delta_flat(e));
  }
  RationalMatrix m = constraints.matrix();
  if (m.rows() == 0) {
    std::vector<RationalVector> all;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      RationalVector v(basis.size());
      v[j] = 1;
      all.push_back(std::move(v));
    }
    return all;
  }
  return nullspace(std::move(m));
}

void check_budget(std::size_t ambient, std::uint64_t k, const OracleBudget& budget) {
  if (ambient > budget.max_ambient_dim || k > budget.max_degree) {
    fail(ErrorKind::BudgetExceeded, "harmonic form oracle limited to n+1 <= " +
                                        std::to_string(budget.max_ambient_dim) + ", k <= " +
                                        std::to_string(budget.max_degree));
  }
}

}  // namespace

HarmonicFormDims harmonic_form_dims_oracle(std::size_t n, std::size_t p, std::uint64_t k,
                                           const OracleBudget& budget) {
  const std::size_t ambient = n + 1;
  check_budget(ambient, k, budget);
  if (p < 1 || p > n) fail(ErrorKind::DegreeOutOfRange, "oracle needs 1 <= p <= n");
  const auto kd = static_cast<unsigned>(k);

  auto basis = form_basis(ambient, p, kd);
  auto h = harmonic_forms(ambient, p, basis);

  const auto x = position_field(ambient);
  ColumnCollector radial(h.size());
  for (std::size_t j = 0; j < h.size(); ++j) radial.add(j, 0, contract(x, form_from_coords(ambient, p, basis, h[j])));
  RationalMatrix rm = radial.matrix();
  const std::size_t radial_rank = rm.rows() == 0 ? 0 : rank(std::move(rm));

  auto lower_basis = form_basis(ambient, p - 1, kd + 1);
  auto h_lower = harmonic_forms(ambient, p - 1, lower_basis);
  ColumnCollector exact(h_lower.size());
  for (std::size_t j = 0; j < h_lower.size(); ++j)
    exact.add(j, 0, d_flat(form_from_coords(ambient, p - 1, lower_basis, h_lower[j])));
  RationalMatrix em = exact.matrix();
  const std::size_t exact_rank = em.rows() == 0 ? 0 : rank(std::move(em));

  return HarmonicFormDims{h.size(), h.size() - radial_rank, exact_rank};
}

std::uint64_t harmonic_polynomial_dim_oracle(std::size_t n, std::uint64_t k, const OracleBudget& budget) {
  const std::size_t ambient = n + 1;
  check_budget(ambient, k, budget);
  auto basis = form_basis(ambient, 0, static_cast<unsigned>(k));
  return harmonic_forms(ambient, 0, basis).size();
}

}  // namespace hodgespec
