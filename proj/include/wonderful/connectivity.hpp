#pragma once

#include <optional>
#include <vector>

#include "wonderful/bitset.hpp"
#include "wonderful/dictionary.hpp"
#include "wonderful/spherical_system.hpp"

namespace wonderful {

/// Both clauses: every colour of Supp γ1 pairs nonzero with γ2, and vice versa.
/// Nodes of Supp γ in S^p carry no colour and are skipped.
bool strongly_adjacent(const SphericalSystem& sys, int gamma1, int gamma2);

/// Transitive closure of strong adjacency, ordered by smallest member.
std::vector<RootSubset> components(const SphericalSystem& sys);

/// Colours of Supp Σ′ whose ρ vanishes on Σ ∖ Σ′.
ColourSubset delta_of(const SphericalSystem& sys, RootSubset subset);

struct ComponentAnalysis {
  RootSubset component;
  ColourSubset delta;
  bool isolated = false;
  bool erasable = false;
  bool quasi_erasable = false;
  /// A nonempty smooth distinguished subset of delta, when erasable.
  std::optional<ColourSubset> erasing;
  /// A nonempty distinguished subset of delta with a valid quotient, when quasi-erasable.
  std::optional<ColourSubset> quasi_erasing;
};

/// Flags of Σ′ by exhaustive search over the nonempty subsets of Δ(Σ′). Isolation asks
/// whether the node partition Supp Σ′ | Supp Σ ∖ Supp Σ′ decomposes the localization at
/// Supp Σ with Σ′ as exactly the roots supported on the first part; it is false when the
/// complement is empty.
ComponentAnalysis classify_component(const SphericalSystem& sys, RootSubset subset);
/// Same, reusing the caller's evaluator of sys.
ComponentAnalysis classify_component(const Dictionary& dict, RootSubset subset);

/// Σ1 and Σ2 disjoint and nonempty, both quasi-erasable, at least one erasable.
bool lemma_erasable_prunes(const SphericalSystem& sys, RootSubset sigma1, RootSubset sigma2);

}  // namespace wonderful
