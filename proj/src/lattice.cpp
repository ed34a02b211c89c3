#include "hodgespec/lattice.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

#include "hodgespec/error.hpp"

namespace hodgespec {

Lattice::Lattice(RationalMatrix basis) : basis_(std::move(basis)) {
  if (!basis_.is_square() || basis_.rows() == 0) {
    fail(ErrorKind::DimensionMismatch, "lattice basis must be a non-empty square matrix");
  }
  if (determinant(basis_) == 0) fail(ErrorKind::SingularBasis, "lattice basis is singular");
}

Lattice Lattice::integer(std::size_t n) { return Lattice(RationalMatrix::identity(n)); }

Lattice Lattice::from_basis_vectors(const std::vector<RationalVector>& vectors) {
  return Lattice(RationalMatrix::from_rows(vectors).transpose());
}

Lattice Lattice::scaled(const Rational& c) const {
  if (c == 0) fail(ErrorKind::SingularBasis, "scaling a lattice by zero");
  return Lattice(basis_.scaled(c));
}

DualData dual(const Lattice& lattice) {
  RationalMatrix dual_basis = inverse(lattice.basis()).transpose();
  RationalMatrix gram = dual_basis.transpose() * dual_basis;
  LdltFactors ldl = hodgespec::ldlt(gram);
  return DualData{std::move(dual_basis), std::move(gram), std::move(ldl)};
}

Lattice dual_lattice(const Lattice& lattice) { return Lattice(inverse(lattice.basis()).transpose()); }

std::uint64_t NormTable::count(const Rational& q) const {
  if (q > bound) {
    fail(ErrorKind::CutoffExceeded,
         "norm " + format_rational(q) + " above enumeration bound " + format_rational(bound));
  }
  auto it = counts.find(q);
  return it == counts.end() ? 0 : it->second;
}

std::uint64_t NormTable::total() const {
  std::uint64_t t = 0;
  for (const auto& [q, c] : counts) t += c;
  return t;
}

namespace {

using Counts = std::map<Rational, std::uint64_t>;

// Integer candidates x with (x - c)^2 <= t, widened by one on each side;
// callers filter exactly.
std::pair<Integer, Integer> candidate_range(const Rational& center, const Rational& t) {
  Integer r = isqrt(floor_of(t));
  return {floor_of(center) - r - 1, ceil_of(center) + r + 1};
}

class FinckePohst {
 public:
  FinckePohst(const DualData& dual, const Rational& bound, std::atomic<std::uint64_t>& nodes,
              std::uint64_t budget)
      : lower_(dual.ldl.lower),
        diag_(dual.ldl.diag),
        bound_(bound),
        n_(dual.dual_gram.rows()),
        x_(n_),
        nodes_(nodes),
        budget_(budget),
        batch_(std::min<std::uint64_t>(4096, budget + 1)) {}

  // Candidates for the outermost coordinate.
  std::vector<Integer> top_candidates() const {
    std::vector<Integer> out;
    auto [lo, hi] = candidate_range(Rational(0), bound_ / diag_[n_ - 1]);
    for (Integer v = lo; v <= hi; ++v) {
      if (diag_[n_ - 1] * Rational(v) * Rational(v) <= bound_) out.push_back(v);
    }
    return out;
  }

  void run_with_top(const Integer& top, Counts& counts) {
    const std::size_t i = n_ - 1;
    x_[i] = top;
    Rational partial = diag_[i] * Rational(top) * Rational(top);
    descend(i, partial, counts);
  }

  // Node counts are shared in batches to keep the atomic off the hot path;
  // call once more after the last subtree.
  void flush() {
    auto total = nodes_.fetch_add(local_ticks_) + local_ticks_;
    local_ticks_ = 0;
    if (total > budget_) {
      fail(ErrorKind::BudgetExceeded, "lattice enumeration exceeded its node budget of " + std::to_string(budget_));
    }
  }

 private:
  void descend(std::size_t level, const Rational& partial, Counts& counts) {
    tick();
    if (level == 0) {
      ++counts[partial];
      return;
    }
    const std::size_t i = level - 1;
    Rational center = 0;
    for (std::size_t j = i + 1; j < n_; ++j) center -= lower_(j, i) * Rational(x_[j]);
    Rational room = (bound_ - partial) / diag_[i];
    auto [lo, hi] = candidate_range(center, room);
    Rational y;
    Rational next;
    for (Integer v = lo; v <= hi; ++v) {
      y = Rational(v) - center;
      next = partial + diag_[i] * y * y;
      if (next > bound_) continue;
      x_[i] = v;
      descend(i, next, counts);
    }
  }

  void tick() {
    if (++local_ticks_ == batch_) flush();
  }


  const RationalMatrix& lower_;
  const RationalVector& diag_;
  Rational bound_;
  std::size_t n_;
  std::vector<Integer> x_;
  std::atomic<std::uint64_t>& nodes_;
  std::uint64_t budget_;
  std::uint64_t batch_;
  std::uint64_t local_ticks_ = 0;
};

}  // namespace

NormTable enumerate_norms(const DualData& dual, const Rational& bound, const EnumerationOptions& options) {
  if (bound < 0) fail(ErrorKind::InvalidArgument, "enumeration bound must be nonnegative");
  NormTable table{bound, {}};
  std::atomic<std::uint64_t> nodes{0};
  FinckePohst probe(dual, bound, nodes, options.node_budget);
  std::vector<Integer> tops = probe.top_candidates();

  unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, tops.size()));
  if (threads <= 1) {
    for (const auto& t : tops) probe.run_with_top(t, table.counts);
    probe.flush();
    return table;
  }

  std::vector<Counts> partial(threads);
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned w = 0; w < threads; ++w) {
    pool.emplace_back([&, w] {
      try {
        FinckePohst worker(dual, bound, nodes, options.node_budget);
        for (std::size_t k = w; k < tops.size(); k += threads) worker.run_with_top(tops[k], partial[w]);
        worker.flush();
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  for (const auto& part : partial)
    for (const auto& [q, c] : part) table.counts[q] += c;
  return table;
}

std::uint64_t count_norm(const DualData& dual, const Rational& q, const EnumerationOptions& options) {
  if (q < 0) fail(ErrorKind::InvalidArgument, "squared norm must be nonnegative");
  return enumerate_norms(dual, q, options).count(q);
}

NormTable brute_force_enumerate(const DualData& dual, const Rational& bound, std::uint64_t max_box_points) {
  if (bound < 0) fail(ErrorKind::InvalidArgument, "enumeration bound must be nonnegative");
  const std::size_t n = dual.dual_gram.rows();
  RationalMatrix ginv = inverse(dual.dual_gram);
  std::vector<Integer> half(n);
  Integer box = 1;
  for (std::size_t i = 0; i < n; ++i) {
    half[i] = isqrt(floor_of(bound * ginv(i, i)));
    box *= 2 * half[i] + 1;
    if (box > Integer(std::to_string(max_box_points))) {
      fail(ErrorKind::BoxTooLarge, "brute-force box exceeds " + std::to_string(max_box_points) + " points");
    }
  }
  NormTable table{bound, {}};
  std::vector<Integer> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = -half[i];
  while (true) {
    Rational q = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (x[j] == 0) continue;
        q += dual.dual_gram(i, j) * Rational(x[i] * x[j]);
      }
    }
    if (q <= bound) ++table.counts[q];
    std::size_t k = 0;
    while (k < n) {
      if (x[k] < half[k]) {
        ++x[k];
        break;
      }
      x[k] = -half[k];
      ++k;
    }
    if (k == n) break;
  }
  return table;
}

std::pair<Rational, std::uint64_t> shortest_dual_norm(const DualData& dual, const EnumerationOptions& options) {
  // The smallest diagonal Gram entry is the norm of a dual basis vector, so
  // the shortest nonzero vector lies within that bound.
  Rational bound = dual.dual_gram(0, 0);
  for (std::size_t i = 1; i < dual.dual_gram.rows(); ++i) bound = std::min(bound, dual.dual_gram(i, i));
  NormTable t = enumerate_norms(dual, bound, options);
  auto it = t.counts.upper_bound(Rational(0));
  return *it;
}

}  // namespace hodgespec
