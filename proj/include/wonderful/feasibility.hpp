#pragma once

#include <optional>
#include <vector>

#include <Eigen/Core>

#include "wonderful/rational.hpp"

namespace wonderful {

template <class Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Finds x with M x >= 0, x_j >= 1 on strict columns and x_j >= 0 elsewhere.
///
/// Exact phase-one simplex with Bland's rule over an exact Scalar (no tolerance anywhere).
/// Returns a witness or nothing when the region is empty.
template <class Scalar>
std::optional<DenseVector<Scalar>> feasible_nonneg(const DenseMatrix<Scalar>& m, const std::vector<bool>& strict) {
  const Eigen::Index rows = m.rows();
  const Eigen::Index n = m.cols();
  DenseVector<Scalar> lower = DenseVector<Scalar>::Zero(n);
  for (Eigen::Index j = 0; j < n; ++j)
    if (j < static_cast<Eigen::Index>(strict.size()) && strict[j]) lower[j] = Scalar(1);
  if (rows == 0) return lower;

  // Columns: y (shifted x), surplus s, artificial a; last column is the right-hand side.
  const Eigen::Index total = n + 2 * rows;
  DenseMatrix<Scalar> t = DenseMatrix<Scalar>::Zero(rows + 1, total + 1);
  const DenseVector<Scalar> rhs = -(m * lower);
  std::vector<Eigen::Index> basis(rows);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const Scalar sign = rhs[r] < Scalar(0) ? Scalar(-1) : Scalar(1);
    t.row(r).head(n) = sign * m.row(r);
    t(r, n + r) = -sign;
    t(r, n + rows + r) = Scalar(1);
    t(r, total) = sign * rhs[r];
    basis[r] = n + rows + r;
  }
  // Objective row holds reduced costs of the artificial sum; its rhs is minus the objective.
  for (Eigen::Index r = 0; r < rows; ++r) {
    t.row(rows).head(n + rows) -= t.row(r).head(n + rows);
    t(rows, total) -= t(r, total);
  }

  while (true) {
    Eigen::Index enter = -1;
    for (Eigen::Index j = 0; j < n + rows; ++j)
      if (t(rows, j) < Scalar(0)) {
        enter = j;
        break;
      }
    if (enter < 0) break;
    Eigen::Index leave = -1;
    Scalar best(0);
    for (Eigen::Index r = 0; r < rows; ++r) {
      if (!(t(r, enter) > Scalar(0))) continue;
      const Scalar ratio = t(r, total) / t(r, enter);
      if (leave < 0 || ratio < best || (ratio == best && basis[r] < basis[leave])) {
        leave = r;
        best = ratio;
      }
    }
    if (leave < 0) break;  // unreachable: the artificial objective is bounded below
    t.row(leave) /= Scalar(t(leave, enter));
    for (Eigen::Index r = 0; r <= rows; ++r) {
      if (r == leave || t(r, enter) == Scalar(0)) continue;
      const Scalar f = t(r, enter);
      t.row(r) -= f * t.row(leave);
    }
    basis[leave] = enter;
  }
  if (t(rows, total) != Scalar(0)) return std::nullopt;
  DenseVector<Scalar> x = lower;
  for (Eigen::Index r = 0; r < rows; ++r)
    if (basis[r] < n) x[basis[r]] += t(r, total);
  return x;
}

/// Integer-matrix convenience over the exact rationals.
inline std::optional<DenseVector<Rational>> feasible_nonneg(const Eigen::MatrixXi& m, const std::vector<bool>& strict) {
  return feasible_nonneg<Rational>(m.cast<Rational>(), strict);
}

}  // namespace wonderful
