#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Core>

namespace wonderful {

struct HilbertBasisOptions {
  /// Hard cap on explored frontier states; exceeding it raises BudgetExceeded.
  std::size_t max_states = 1'000'000;
};

/// Minimal generators of the monoid {x ∈ Z≥0^k : A x = 0} (A has k columns, possibly zero rows),
/// by Contejean–Devie completion. Sorted lexicographically.
std::vector<Eigen::VectorXi> hilbert_basis(const Eigen::MatrixXi& a, int k, const HilbertBasisOptions& options = {});

}  // namespace wonderful
