#pragma once

#include <utility>

#include <Eigen/Core>

#include "wonderful/rational.hpp"

namespace wonderful {

/// Rank by exact Gaussian elimination; Scalar must have exact arithmetic.
template <class Scalar, int R, int C>
int exact_rank(Eigen::Matrix<Scalar, R, C> m) {
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  int rank = 0;
  for (Eigen::Index col = 0; col < cols && rank < rows; ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = rank; r < rows; ++r)
      if (m(r, col) != Scalar(0)) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    m.row(pivot).swap(m.row(rank));
    for (Eigen::Index r = rank + 1; r < rows; ++r) {
      if (m(r, col) == Scalar(0)) continue;
      const Scalar f = m(r, col) / m(rank, col);
      m.row(r) -= f * m.row(rank);
    }
    ++rank;
  }
  return rank;
}

/// Rank of an integer matrix over the rationals.
inline int rational_rank(const Eigen::MatrixXi& m) {
  return exact_rank(Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>(m.cast<Rational>()));
}

}  // namespace wonderful
