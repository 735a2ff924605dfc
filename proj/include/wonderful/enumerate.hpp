#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wonderful/catalog.hpp"
#include "wonderful/spherical_system.hpp"

namespace wonderful {

/// Orbit invariant of a system under diagram automorphisms: the lexicographically
/// smallest (S^p, sorted Σ) over all automorphisms.
struct CanonicalKey {
  std::uint64_t sp = 0;
  std::vector<std::vector<int>> sigma;
  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
  friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
};

CanonicalKey canonical_key(const SphericalSystem& sys);
CanonicalKey canonical_key(const SphericalSystem& sys, const std::vector<Permutation>& automorphisms);

struct EnumerationOptions {
  /// Largest accepted diagram rank.
  int max_rank = 9;
  /// Search-node budget; 0 reads WONDERFUL_SEARCH_BUDGET, falling back to the default.
  std::uint64_t budget = 0;
  /// Keep only systems with Supp Σ = S (prunes the search).
  bool cuspidal_only = false;
};

inline constexpr std::uint64_t default_search_budget = 200'000'000;

/// The budget actually applied for the given options.
std::uint64_t effective_budget(const EnumerationOptions& options);

/// All valid systems on d up to diagram automorphism, ordered by canonical key.
/// Throws PreconditionError above max_rank and BudgetExceeded past the budget.
std::vector<SphericalSystem> enumerate_systems(const DynkinDiagram& d, EnumerationOptions options = {});
/// Cuspidal systems admitting no decomposition.
std::vector<SphericalSystem> enumerate_primitive(const DynkinDiagram& d, EnumerationOptions options = {});

/// Catalog instantiations that coincide up to diagram automorphism with an earlier one.
struct CatalogAlias {
  std::string alias;
  std::string target;
};
/// Coincidences among catalog instantiations of rank at most max_rank, alias after target
/// in catalog order.
std::vector<CatalogAlias> catalog_aliases(int max_rank);

/// The first catalog instantiation (catalog order, then parameters) equal to sys up to
/// diagram automorphism; nothing for invalid or non-catalog systems.
std::optional<FamilyInstance> classify(const SphericalSystem& sys);

struct StrictnessReport {
  std::vector<SphericalSystem> strict;
  std::vector<SphericalSystem> non_strict;
};
StrictnessReport strictness_report(const DynkinDiagram& d, EnumerationOptions options = {});

}  // namespace wonderful
