#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "wonderful/bitset.hpp"
#include "wonderful/dynkin.hpp"

namespace wonderful {

struct ValidationOptions {
  /// Require Σ to be linearly independent over the rationals.
  bool require_independence = true;
  friend bool operator==(const ValidationOptions&, const ValidationOptions&) = default;
};

enum class Axiom { Shape, Sigma1, Sigma2, S, RPrime, Independence, Distinct };

std::string_view axiom_name(Axiom axiom);

/// Witness of one failed axiom. Indices are Σ positions and global nodes, -1 when unused.
struct Violation {
  Axiom axiom = Axiom::Shape;
  int gamma = -1;
  int other = -1;
  int node = -1;
  int node2 = -1;
  std::string message;
};

struct ValidationReport {
  bool shape = true;
  bool sigma1 = true;
  bool sigma2 = true;
  bool s = true;
  bool r_prime = true;
  bool independent = true;
  bool distinct = true;
  std::vector<Violation> violations;

  bool valid() const { return shape && sigma1 && sigma2 && s && r_prime && independent && distinct; }
  bool holds(Axiom axiom) const;
};

/// Couple (S^p, Σ) on a diagram. Immutable; the validation report is computed once on demand.
class SphericalSystem {
 public:
  SphericalSystem(DynkinDiagram diagram, NodeSet sp, std::vector<Weight> sigma, ValidationOptions options = {});

  const DynkinDiagram& diagram() const { return diagram_; }
  NodeSet sp() const { return sp_; }
  const std::vector<Weight>& sigma() const { return sigma_; }
  const ValidationOptions& options() const { return options_; }
  int rank() const { return static_cast<int>(sigma_.size()); }

  /// Thread-safe; computed at most once per system value.
  const ValidationReport& report() const;
  bool valid() const { return report().valid(); }

  /// Union of the supports of Σ.
  NodeSet support_of_sigma() const;
  /// Position of gamma in Σ, or -1.
  int index_of(const Weight& gamma) const;
  bool contains(const Weight& gamma) const { return index_of(gamma) >= 0; }

  friend bool operator==(const SphericalSystem& a, const SphericalSystem& b) {
    return a.diagram_ == b.diagram_ && a.sp_ == b.sp_ && a.sigma_ == b.sigma_;
  }

 private:
  struct Cache;
  DynkinDiagram diagram_;
  NodeSet sp_;
  std::vector<Weight> sigma_;
  ValidationOptions options_;
  std::shared_ptr<Cache> cache_;
};

ValidationReport validate(const SphericalSystem& sys);

/// Colours (S∖S^p)/∼ with the integer pairing ρ: colours × Σ.
struct ColourSet {
  /// Classes ordered by smallest member node.
  std::vector<NodeSet> classes;
  /// Colour index of each node, -1 on S^p.
  std::vector<int> colour_of;
  /// rho(c, k) = ρ(D_c)(γ_k).
  Eigen::MatrixXi rho;
  /// Per colour: drawn under its vertex (2α ∈ Σ) rather than around it.
  std::vector<bool> under;

  int size() const { return static_cast<int>(classes.size()); }
  ColourSubset all() const { return ColourSubset::first(size()); }
  /// Colours D_α for α in the given nodes (nodes of S^p contribute nothing).
  ColourSubset of_nodes(NodeSet nodes) const;
  /// Union of the node classes of the given colours.
  NodeSet nodes_of(ColourSubset colours) const;
  /// Name such as "D1" or "D1,3" built from 1-based node indices of the class.
  std::string name(int colour, const DynkinDiagram& d) const;
};

/// Throws PreconditionError when merged classes disagree on Σ or a halved pairing is odd.
ColourSet colours(const SphericalSystem& sys);

/// No γ in Σ has 2γ realizable with the same S^p.
bool is_strict(const SphericalSystem& sys);
/// Supp Σ = S.
bool is_cuspidal(const SphericalSystem& sys);

/// The rank-1 table row at the given label (aliases accepted) on its own support diagram.
SphericalSystem rank_one_system(std::string_view label);

}  // namespace wonderful
