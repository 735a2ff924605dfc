#include "wonderful/hilbert_basis.hpp"

#include <algorithm>
#include <set>

#include "wonderful/dynkin.hpp"
#include "wonderful/error.hpp"
#include "wonderful/feasibility.hpp"

namespace wonderful {

namespace {

bool dominates(const Eigen::VectorXi& x, const Eigen::VectorXi& b) { return (x.array() >= b.array()).all(); }

/// Some x ≥ 0 with A x = 0 has x_j ≥ 1.
bool usable(const Eigen::MatrixXi& a, int j) {
  Eigen::MatrixXi both(2 * a.rows(), a.cols());
  both << a, -a;
  std::vector<bool> strict(a.cols(), false);
  strict[j] = true;
  return feasible_nonneg(both, strict).has_value();
}

/// Completion search proper, on columns that all appear in some solution.
std::vector<Eigen::VectorXi> complete(const Eigen::MatrixXi& cols, int k, const HilbertBasisOptions& options) {
  std::vector<Eigen::VectorXi> basis;
  std::set<Eigen::VectorXi, WeightLess> frontier;
  for (int i = 0; i < k; ++i) frontier.insert(Eigen::VectorXi::Unit(k, i));
  std::size_t explored = 0;
  while (!frontier.empty()) {
    explored += frontier.size();
    if (explored > options.max_states) throw BudgetExceeded("hilbert basis search exceeded state budget");
    std::vector<Eigen::VectorXi> solved;
    std::vector<Eigen::VectorXi> open;
    for (const Eigen::VectorXi& p : frontier) ((cols * p).isZero() ? solved : open).push_back(p);
    basis.insert(basis.end(), solved.begin(), solved.end());
    std::set<Eigen::VectorXi, WeightLess> next;
    for (const Eigen::VectorXi& p : open) {
      const Eigen::VectorXi ap = cols * p;
      for (int i = 0; i < k; ++i) {
        if (ap.dot(cols.col(i)) >= 0) continue;
        Eigen::VectorXi q = p;
        q[i] += 1;
        const bool covered = std::any_of(basis.begin(), basis.end(), [&](const auto& b) { return dominates(q, b); });
        if (!covered) next.insert(q);
      }
    }
    frontier = std::move(next);
  }
  return basis;
}

}  // namespace

std::vector<Eigen::VectorXi> hilbert_basis(const Eigen::MatrixXi& a, int k, const HilbertBasisOptions& options) {
  if (a.cols() != k && a.rows() > 0) throw PreconditionError("constraint matrix width differs from k");
  std::vector<Eigen::VectorXi> basis;
  if (k == 0) return basis;
  // A zero column j makes e_j a generator and no other minimal solution uses j; a column
  // outside the support of every solution can be dropped. Only the rest is searched.
  std::vector<int> kept;
  for (int j = 0; j < k; ++j) {
    if (a.rows() == 0 || a.col(j).isZero()) basis.push_back(Eigen::VectorXi::Unit(k, j));
    else if (usable(a, j)) kept.push_back(j);
  }
  if (!kept.empty()) {
    Eigen::MatrixXi sub(a.rows(), static_cast<Eigen::Index>(kept.size()));
    for (std::size_t c = 0; c < kept.size(); ++c) sub.col(static_cast<Eigen::Index>(c)) = a.col(kept[c]);
    for (const Eigen::VectorXi& x : complete(sub, static_cast<int>(kept.size()), options)) {
      Eigen::VectorXi full = Eigen::VectorXi::Zero(k);
      for (std::size_t c = 0; c < kept.size(); ++c) full[kept[c]] = x[static_cast<Eigen::Index>(c)];
      basis.push_back(full);
    }
  }
  std::sort(basis.begin(), basis.end(), WeightLess{});
  return basis;
}

}  // namespace wonderful
