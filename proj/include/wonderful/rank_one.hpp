#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wonderful/dynkin.hpp"

namespace wonderful {

/// One parameterized row of the rank-1 table of spherical roots with Supp Σ = S.
struct RankOneDatum {
  /// Family label with the parameter written as n when it varies, e.g. "b∗(n)".
  std::string label;
  char family = 'A';
  int min_rank = 1;
  /// Equal to min_rank for fixed-rank rows; 0 when unbounded.
  int max_rank = 0;
  /// True only for aa(1,1), whose support is two orthogonal nodes.
  bool orthogonal_pair = false;

  bool admits(int n) const { return n >= min_rank && (max_rank == 0 || n <= max_rank); }
  /// Support pattern at rank n.
  std::vector<Component> pattern(int n) const;
  /// Positive coefficient per pattern position (1-based positions in Bourbaki order).
  std::vector<int> coefficients(int n) const;
  /// Pattern positions forming S^p ∩ Supp γ.
  std::vector<int> sp_positions(int n) const;
  /// Label at a concrete rank, e.g. "b∗(3)".
  std::string instance_label(int n) const;
};

const std::vector<RankOneDatum>& rank_one_table();

/// A row at a concrete rank.
struct RankOneInstance {
  const RankOneDatum* row = nullptr;
  int n = 0;
  std::string label() const { return row->instance_label(n); }
};

/// Replaces ASCII spellings '*' and '\'' by the canonical '∗' and '′'.
std::string normalize_label(std::string_view label);
/// Resolves "b∗(3)", "b*(3)" or an alias such as "d(2)" to a table row; throws ParameterError.
RankOneInstance rank_one_instance(std::string_view label);
/// Looks up a row by its family label, e.g. "g(2)" or "b∗(n)"; throws ParameterError.
const RankOneDatum& rank_one_row(std::string_view label);

/// The alias pairs (alias, target) equating degenerate labels with table rows.
const std::vector<std::pair<std::string, std::string>>& rank_one_aliases();

/// A concrete realization of a table row inside a diagram.
struct RankOneMatch {
  Weight weight;
  /// Nodes of the embedded support that must belong to S^p.
  NodeSet trace;
  std::string label;
  friend bool operator==(const RankOneMatch& a, const RankOneMatch& b) {
    return a.weight == b.weight && a.trace == b.trace && a.label == b.label;
  }
};

/// All embeddings of table rows into d as induced subdiagrams, deduplicated and sorted.
std::vector<RankOneMatch> candidate_spherical_roots(const DynkinDiagram& d);
/// The matches whose weight equals gamma.
std::vector<RankOneMatch> rank_one_matches(const DynkinDiagram& d, const Weight& gamma);

/// Rank-1 compatibility of gamma with sp: a matching row with trace sp ∩ Supp γ and
/// <α^vee, γ> = 0 for every α in sp outside Supp γ.
bool axiom_S_holds(const Weight& gamma, NodeSet sp, const DynkinDiagram& d);
/// True iff 2γ satisfies the rank-1 compatibility with the same sp.
bool axiom_R_violated(const Weight& gamma, NodeSet sp, const DynkinDiagram& d);
/// Label of the row realizing gamma with the given sp, if any.
std::optional<std::string> rank_one_label(const Weight& gamma, NodeSet sp, const DynkinDiagram& d);

}  // namespace wonderful
