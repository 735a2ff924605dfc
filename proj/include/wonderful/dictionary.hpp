#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "wonderful/hilbert_basis.hpp"
#include "wonderful/spherical_system.hpp"

namespace wonderful {

struct QuotientResult {
  ColourSubset delta_prime;
  NodeSet sp_out;
  std::vector<Weight> sigma_out;
  /// Coordinates of each element of sigma_out in the basis Σ.
  std::vector<Eigen::VectorXi> coordinates;
  bool is_valid_system = false;
  bool smooth = false;
  bool homogeneous = false;
};

/// A system on an induced subdiagram, with the ambient node of each of its nodes.
struct Localization {
  SphericalSystem system;
  std::vector<int> ambient_node;
};

Localization localize_with_map(const SphericalSystem& sys, NodeSet nodes);
/// (S^p ∩ S′, {γ ∈ Σ : Supp γ ⊆ S′}) on the subdiagram induced by S′.
SphericalSystem localize(const SphericalSystem& sys, NodeSet nodes);

struct DecompositionOptions {
  /// Also require dim X = dim X1 + dim X2 − dim X3 for the three quotients, where
  /// dim = dim G/P_{S^p} + |Σ|. The fiber product of the quotients has this dimension,
  /// so a decomposition must satisfy it.
  bool require_dimension_additivity = true;
};

/// dim G/P_{S^p} + |Σ| for an arbitrary couple.
int couple_dimension(const DynkinDiagram& d, NodeSet sp, std::size_t sigma_size);

/// Memoizing evaluator of the colour predicates of one system. Not safe for concurrent use;
/// build one per thread.
class Dictionary {
 public:
  explicit Dictionary(SphericalSystem sys, HilbertBasisOptions hb = {}, DecompositionOptions dec = {});

  const SphericalSystem& system() const { return sys_; }
  const ColourSet& colours() const { return colours_; }

  /// Some φ ∈ Z>0 Δ′ has ρ(φ) ≥ 0 on Σ; the empty subset qualifies.
  bool is_distinguished(ColourSubset delta) const;
  /// Positive weights φ witnessing distinguishedness (scaled to integers).
  std::optional<Eigen::VectorXi> distinguished_witness(ColourSubset delta) const;
  /// Throws PreconditionError when delta is not distinguished.
  const QuotientResult& quotient(ColourSubset delta) const;
  /// γ_k lies in Σ/Δ′ exactly when ρ(D)(γ_k) = 0 for all D in Δ′.
  std::vector<bool> kept_roots(ColourSubset delta) const;

  /// Disjointness, coverage of Σ, orthogonality of the new S^p nodes, one smooth side, and
  /// (by default) dimension additivity; throws on a non-distinguished argument.
  bool decomposes(ColourSubset d1, ColourSubset d2) const;
  /// First decomposing pair in increasing bit order, or nothing.
  std::optional<std::pair<ColourSubset, ColourSubset>> find_decomposition() const;

 private:
  SphericalSystem sys_;
  ColourSet colours_;
  HilbertBasisOptions hb_;
  DecompositionOptions dec_;
  mutable std::map<std::uint64_t, std::optional<Eigen::VectorXi>> witness_;
  mutable std::map<std::uint64_t, QuotientResult> quotients_;

  bool orthogonal_new_nodes(ColourSubset d1, ColourSubset d2) const;
  bool covers_sigma(ColourSubset d1, ColourSubset d2) const;
  bool remaining_conditions(ColourSubset d1, ColourSubset d2) const;
};

bool is_distinguished(const SphericalSystem& sys, ColourSubset delta);
QuotientResult quotient(const SphericalSystem& sys, ColourSubset delta);
bool is_smooth_subset(const SphericalSystem& sys, ColourSubset delta);
bool is_homogeneous_subset(const SphericalSystem& sys, ColourSubset delta);
/// The quotient couple as a system on the same diagram.
SphericalSystem quotient_system(const SphericalSystem& sys, const QuotientResult& q);

/// {D_α : α ∈ Supp Σ}.
ColourSubset underline_empty(const SphericalSystem& sys);
/// Localization at Supp Σ.
SphericalSystem decuspidalize(const SphericalSystem& sys);

bool decomposes(const SphericalSystem& sys, ColourSubset d1, ColourSubset d2, DecompositionOptions options = {});
std::optional<std::pair<ColourSubset, ColourSubset>> is_decomposable(const SphericalSystem& sys,
                                                                     DecompositionOptions options = {});

/// Some ξ ∈ Z≥0 Σ pairs strictly positively with every colour.
bool is_affine_feasible(const SphericalSystem& sys);

struct ExpectedDims {
  int dim_homogeneous_space = 0;
  int rank_character_lattice = 0;
  friend bool operator==(const ExpectedDims&, const ExpectedDims&) = default;
};
/// (dim G/P_{S^p} + |Σ|, |Δ| − |Σ|).
ExpectedDims expected_dims(const SphericalSystem& sys);

}  // namespace wonderful
