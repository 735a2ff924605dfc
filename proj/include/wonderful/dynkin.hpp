#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "wonderful/bitset.hpp"

namespace wonderful {

/// Integer vector over the global nodes of a diagram (an element of the root lattice).
using Weight = Eigen::VectorXi;
using Permutation = std::vector<int>;

/// Lexicographic order on weights of equal length; shorter weights sort first.
struct WeightLess {
  bool operator()(const Weight& a, const Weight& b) const;
};

NodeSet support(const Weight& w);
bool is_zero(const Weight& w);
/// Applies a node permutation: result[perm[i]] = w[i].
Weight permute(const Weight& w, const Permutation& perm);
NodeSet permute(NodeSet s, const Permutation& perm);

struct Component {
  char family = 'A';
  int rank = 1;
  friend auto operator<=>(const Component&, const Component&) = default;
};

/// Stable node identifier: component index and Bourbaki position (1-based).
struct NodeId {
  int component = 0;
  int index = 1;
  friend auto operator<=>(const NodeId&, const NodeId&) = default;
};

struct Edge {
  int a = 0;
  int b = 0;
  int multiplicity = 1;
  /// Node the arrow points to (the shorter root); -1 for simple bonds.
  int short_end = -1;
};

/// Semisimple Dynkin diagram with components in canonical order and Bourbaki numbering.
///
/// Nodes carry global indices 0..rank-1, laid out component by component.
class DynkinDiagram {
 public:
  /// Result of building from a possibly non-canonical component list.
  struct Embedding;

  DynkinDiagram() = default;

  /// Canonicalizes degenerate ranks (B1, C1, C2, D2, D3) and sorts components.
  static DynkinDiagram build(const std::vector<Component>& parts);
  /// Like build, also reporting where each input node (component, Bourbaki index) lands.
  static Embedding embed(const std::vector<Component>& parts);
  /// Parses "A3", "f4,F4", "A1xA3" (separators ',', 'x', '*', whitespace).
  static DynkinDiagram parse(std::string_view text);
  /// Diagram whose Cartan matrix is the principal submatrix on `nodes`, with a map back.
  static Embedding induced(const DynkinDiagram& ambient, NodeSet nodes);

  int rank() const { return static_cast<int>(nodes_.size()); }
  const std::vector<Component>& components() const { return components_; }
  const Eigen::MatrixXi& cartan() const { return cartan_; }
  /// <alpha_i^vee, alpha_j>.
  int cartan_pairing(int i, int j) const;
  /// <alpha_i^vee, w>.
  int pairing(int i, const Weight& w) const;
  bool orthogonal(int i, int j) const { return cartan_(i, j) == 0; }
  bool adjacent(int i, int j) const { return i != j && cartan_(i, j) != 0; }
  std::vector<Edge> edges() const;

  NodeId id(int node) const;
  int node(NodeId id) const;
  int offset(int component) const { return offsets_.at(component); }
  NodeSet all_nodes() const { return NodeSet::first(rank()); }
  NodeSet component_nodes(int component) const;
  int component_of(int node) const { return nodes_.at(node).component; }

  const std::vector<Weight>& positive_roots() const { return positive_roots_; }
  /// Weight with a single 1 at `node`.
  Weight simple_root(int node) const;
  Weight zero_weight() const { return Weight::Zero(rank()); }
  /// Canonical text form, e.g. "A1,F4".
  std::string to_string() const;
  /// Subscripted name of a node, e.g. "α3" or "α′2" for a second component.
  std::string node_name(int node) const;
  std::string weight_to_string(const Weight& w) const;

  friend bool operator==(const DynkinDiagram& a, const DynkinDiagram& b) {
    return a.components_ == b.components_;
  }

 private:
  std::vector<Component> components_;
  std::vector<NodeId> nodes_;
  std::vector<int> offsets_;
  Eigen::MatrixXi cartan_;
  std::vector<Weight> positive_roots_;

  explicit DynkinDiagram(std::vector<Component> canonical);
};

struct DynkinDiagram::Embedding {
  DynkinDiagram diagram;
  /// node_of[input component][bourbaki index - 1] = global node of `diagram` (or of the ambient for induced).
  std::vector<std::vector<int>> node_of;
};

/// Cartan matrix of a single component in Bourbaki numbering.
Eigen::MatrixXi cartan_matrix(const Component& c);

/// Number of positive roots whose support is not contained in sp.
int dim_flag(const DynkinDiagram& d, NodeSet sp);
/// dim of the Lie algebra: rank + 2 * #positive roots.
int dim_lie_algebra(const DynkinDiagram& d);

/// All injective maps p with pattern(i,j) == target(p[i],p[j]) for every pair i, j.
/// Stops after `limit` results when limit > 0.
std::vector<Permutation> induced_embeddings(const Eigen::MatrixXi& pattern, const Eigen::MatrixXi& target,
                                            int limit = 0);
/// Bijective induced embeddings; empty when sizes differ.
std::vector<Permutation> cartan_isomorphisms(const Eigen::MatrixXi& a, const Eigen::MatrixXi& b,
                                             int limit = 0);
std::vector<Permutation> automorphisms(const DynkinDiagram& d);

}  // namespace wonderful
