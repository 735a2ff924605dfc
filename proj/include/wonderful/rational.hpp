#pragma once

#include <cstdint>
#include <limits>

#include <Eigen/Core>
#include <boost/rational.hpp>

namespace wonderful {

/// Exact scalar used by the feasibility kernel and rank computations.
using Rational = boost::rational<std::int64_t>;

}  // namespace wonderful

namespace Eigen {

template <>
struct NumTraits<wonderful::Rational> : GenericNumTraits<wonderful::Rational> {
  using Real = wonderful::Rational;
  using NonInteger = wonderful::Rational;
  using Literal = wonderful::Rational;
  using Nested = wonderful::Rational;
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 4,
    MulCost = 8
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline Real highest() { return Real(std::numeric_limits<std::int64_t>::max()); }
  static inline Real lowest() { return Real(std::numeric_limits<std::int64_t>::min() + 1); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
