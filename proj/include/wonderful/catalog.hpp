#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "wonderful/spherical_system.hpp"

namespace wonderful {

/// One summand of a root written in input-component coordinates.
struct Term {
  int component = 0;
  int index = 1;
  int coeff = 1;
};
using RootPattern = std::vector<Term>;

/// A spherical system written against a list of (possibly non-canonical) components.
struct SystemPattern {
  std::vector<Component> components;
  /// (component, Bourbaki index) pairs.
  std::vector<std::pair<int, int>> sp;
  std::vector<RootPattern> sigma;
};

using Params = std::vector<int>;

/// A parameterized family of primitive spherical systems.
struct FamilyDatum {
  /// Position in the primitive list, 1-based.
  int ordinal = 0;
  /// Label with parameter names, e.g. "ac∗(p)+b′(q)".
  std::string label;
  std::vector<std::string> params;
  /// Human-readable parameter constraints.
  std::string constraints;
  std::function<bool(const Params&)> admissible;
  std::function<SystemPattern(const Params&)> build;
  /// Expected outcome of is_strict at admissible parameters.
  std::function<bool(const Params&)> strict;

  /// Label with parameter values substituted, e.g. "ac∗(2)+b′(3)".
  std::string instance_label(const Params& values) const;
};

const std::vector<FamilyDatum>& family_catalog();
/// Accepts ASCII spellings ('*' for ∗, '\'' for ′); throws ParameterError.
const FamilyDatum& family(std::string_view label);

SphericalSystem realize(const SystemPattern& pattern);
/// Throws ParameterError on inadmissible or mis-sized parameters.
SphericalSystem instantiate(const FamilyDatum& family, const Params& values);
SphericalSystem instantiate(std::string_view label, const Params& values);

struct FamilyInstance {
  const FamilyDatum* family = nullptr;
  Params params;
  std::string label() const { return family->instance_label(params); }
  SphericalSystem system() const { return instantiate(*family, params); }
};

/// Every admissible instantiation of total rank at most max_rank, in catalog order.
std::vector<FamilyInstance> catalog_instances(int max_rank);
/// The admissible instantiations living on exactly the diagram d.
std::vector<FamilyInstance> catalog_instances_on(const DynkinDiagram& d);

}  // namespace wonderful
