#pragma once

#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "wonderful/catalog.hpp"
#include "wonderful/spherical_system.hpp"

namespace wonderful {

/// One case of Cartan's list of involutions, given by its restricted basis Δ̃.
struct SymmetricDatum {
  /// Cartan label, e.g. "A III"; group cases G1×G1 use "A×A", "B×B", ...
  std::string cartan_label;
  /// Distinguishes sub-cases of one label, e.g. "q≥2"; empty when there is one case.
  std::string case_label;
  std::vector<std::string> params;
  std::string constraints;
  std::function<bool(const Params&)> admissible;
  /// Δ̃ written against the listed components.
  std::function<SystemPattern(const Params&)> basis;
  /// Restricted root system type, e.g. "BC_{p+1}" (data only).
  std::string restricted_type;
  /// Fixed-point subalgebra (data only).
  std::string fixed_subalgebra;
  /// Primitive family of the selfnormalising symmetric subgroup and its parameters.
  std::string family_label;
  std::function<Params(const Params&)> family_params;
  /// Smallest admissible parameters.
  Params minimal;
};

const std::vector<SymmetricDatum>& symmetric_table();
/// The row of `label` whose constraints admit `values`; throws ParameterError.
const SymmetricDatum& symmetric_row(std::string_view label, const Params& values);

/// Σ = Δ̃ with the unique S^p making the couple a valid system.
/// Throws ParameterError on inadmissible parameters and PreconditionError when zero or
/// several S^p validate.
SphericalSystem symmetric_system(std::string_view label, const Params& values);

/// The non-selfnormalising companion G^σ for B II and C II with q=2: every element of Δ̃
/// equal to twice a non-simple root is halved, and S^p is searched again.
SphericalSystem halved_symmetric_system(std::string_view label, const Params& values);

/// Characteristic: α_i(h) per global node, each in {0,1,2}.
using Characteristic = std::vector<int>;

/// dim g(i) for every i with g(i) ≠ 0; throws ParameterError on a bad characteristic.
std::map<int, int> grading_dims(const DynkinDiagram& d, const Characteristic& h);
/// Largest i with g(i) ≠ 0; 0 for the zero characteristic.
int height(const DynkinDiagram& d, const Characteristic& h);
/// Height 2 or 3.
bool is_spherical_orbit(const DynkinDiagram& d, const Characteristic& h);

struct OrbitDims {
  /// dim g(0) + dim g(1).
  int dim_h = 0;
  /// dim g(1) + dim g(2).
  int dim_hu = 0;
  /// dim g − dim H.
  int dim_orbit = 0;
  friend bool operator==(const OrbitDims&, const OrbitDims&) = default;
};
OrbitDims orbit_dims(const DynkinDiagram& d, const Characteristic& h);

/// One row of the classification of spherical nilpotent orbits of height 3 in simple 𝔤.
struct OrbitDatum {
  /// Group with its rank formula, e.g. "B_{2r+s+1}".
  std::string group;
  char family = 'B';
  std::vector<std::string> params;
  std::string constraints;
  std::function<bool(const Params&)> admissible;
  std::function<int(const Params&)> rank;
  std::function<Characteristic(const Params&)> characteristic;
  /// Jordan block sizes for classical groups; empty otherwise (data only).
  std::function<std::vector<int>(const Params&)> partition;
  /// 𝔨 and the 𝔨-module 𝔫1/𝔫 (data only).
  std::string k;
  std::string module;
  Params minimal;

  DynkinDiagram diagram(const Params& values) const;
};

const std::vector<OrbitDatum>& height3_table();

/// The model wonderful variety of one simple type (and parity or isogeny).
struct ModelDatum {
  char family = 'A';
  /// "even", "odd" or "any" in the rank.
  std::string parity;
  /// "simply connected" or "adjoint".
  std::string isogeny;
  /// The generic stabiliser (data only).
  std::string subgroup;
  /// Primitive family of the model variety and its parameters at rank n.
  std::string family_label;
  std::function<Params(int)> family_params;
  int min_rank = 1;
  /// Exact rank for exceptional types; 0 when any admissible rank is allowed.
  int max_rank = 0;

  bool admits(int n) const;
};

const std::vector<ModelDatum>& model_table();

}  // namespace wonderful
