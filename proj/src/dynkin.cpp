#include "wonderful/dynkin.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>

#include "wonderful/error.hpp"

namespace wonderful {

bool WeightLess::operator()(const Weight& a, const Weight& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(), b.data() + b.size());
}

NodeSet support(const Weight& w) {
  NodeSet s;
  for (int i = 0; i < w.size(); ++i)
    if (w[i] != 0) s.insert(i);
  return s;
}

bool is_zero(const Weight& w) { return (w.array() == 0).all(); }

Weight permute(const Weight& w, const Permutation& perm) {
  Weight out(w.size());
  for (int i = 0; i < w.size(); ++i) out[perm[i]] = w[i];
  return out;
}

NodeSet permute(NodeSet s, const Permutation& perm) {
  NodeSet out;
  s.for_each([&](int i) { out.insert(perm[i]); });
  return out;
}

Eigen::MatrixXi cartan_matrix(const Component& c) {
  const int n = c.rank;
  Eigen::MatrixXi a = 2 * Eigen::MatrixXi::Identity(n, n);
  auto link = [&](int i, int j, int aij = -1, int aji = -1) {
    a(i - 1, j - 1) = aij;
    a(j - 1, i - 1) = aji;
  };
  switch (c.family) {
    case 'A':
      for (int i = 1; i < n; ++i) link(i, i + 1);
      break;
    case 'B':
      for (int i = 1; i < n - 1; ++i) link(i, i + 1);
      link(n - 1, n, -1, -2);
      break;
    case 'C':
      for (int i = 1; i < n - 1; ++i) link(i, i + 1);
      link(n - 1, n, -2, -1);
      break;
    case 'D':
      for (int i = 1; i < n - 1; ++i) link(i, i + 1);
      link(n - 2, n);
      break;
    case 'E':
      link(1, 3);
      link(2, 4);
      for (int i = 3; i < n; ++i) link(i, i + 1);
      break;
    case 'F':
      link(1, 2);
      link(2, 3, -1, -2);
      link(3, 4);
      break;
    case 'G':
      link(1, 2, -3, -1);
      break;
    default:
      throw DiagramError(std::string("unknown family letter '") + c.family + "'");
  }
  return a;
}

namespace {

struct Piece {
  Component component;
  /// For each input Bourbaki index, (piece-local sub-component, canonical index).
  std::vector<std::pair<int, int>> map;
};

/// Canonical form of one input component; may split into two A1 pieces (D2).
std::vector<Piece> canonicalize(Component c) {
  c.family = static_cast<char>(std::toupper(static_cast<unsigned char>(c.family)));
  auto bad = [&] {
    return DiagramError(std::string("invalid component ") + c.family + std::to_string(c.rank));
  };
  if (c.rank < 1) throw bad();
  auto identity = [](Component k) {
    Piece p{k, {}};
    for (int i = 1; i <= k.rank; ++i) p.map.emplace_back(0, i);
    return p;
  };
  switch (c.family) {
    case 'A':
      return {identity(c)};
    case 'B':
      if (c.rank == 1) return {identity({'A', 1})};
      return {identity(c)};
    case 'C':
      if (c.rank == 1) return {identity({'A', 1})};
      if (c.rank == 2) return {Piece{{'B', 2}, {{0, 2}, {0, 1}}}};
      return {identity(c)};
    case 'D':
      if (c.rank == 1) throw bad();
      if (c.rank == 2) return {Piece{{'A', 1}, {{0, 1}, {1, 1}}}, Piece{{'A', 1}, {}}};
      if (c.rank == 3) return {Piece{{'A', 3}, {{0, 2}, {0, 1}, {0, 3}}}};
      return {identity(c)};
    case 'E':
      if (c.rank < 6 || c.rank > 8) throw bad();
      return {identity(c)};
    case 'F':
      if (c.rank != 4) throw bad();
      return {identity(c)};
    case 'G':
      if (c.rank != 2) throw bad();
      return {identity(c)};
    default:
      throw DiagramError(std::string("unknown family letter '") + c.family + "'");
  }
}

std::vector<Weight> component_positive_roots(const Eigen::MatrixXi& a) {
  const int n = static_cast<int>(a.rows());
  std::vector<Weight> roots;
  std::set<Weight, WeightLess> known;
  std::vector<Weight> layer;
  for (int i = 0; i < n; ++i) {
    Weight e = Weight::Zero(n);
    e[i] = 1;
    layer.push_back(e);
    known.insert(e);
  }
  while (!layer.empty()) {
    roots.insert(roots.end(), layer.begin(), layer.end());
    std::vector<Weight> next;
    for (const Weight& beta : layer) {
      for (int i = 0; i < n; ++i) {
        int p = 0;
        Weight down = beta;
        while (true) {
          down[i] -= 1;
          if (!known.count(down)) break;
          ++p;
        }
        const int pairing = a.row(i).dot(beta);
        if (p - pairing > 0) {
          Weight up = beta;
          up[i] += 1;
          if (known.insert(up).second) next.push_back(up);
        }
      }
    }
    layer = std::move(next);
  }
  return roots;
}

}  // namespace

DynkinDiagram::DynkinDiagram(std::vector<Component> canonical) : components_(std::move(canonical)) {
  int total = 0;
  for (const Component& c : components_) {
    offsets_.push_back(total);
    for (int i = 1; i <= c.rank; ++i)
      nodes_.push_back({static_cast<int>(offsets_.size()) - 1, i});
    total += c.rank;
  }
  if (total > NodeSet::capacity) throw DiagramError("diagram rank exceeds 64");
  cartan_ = Eigen::MatrixXi::Zero(total, total);
  for (std::size_t k = 0; k < components_.size(); ++k) {
    const Eigen::MatrixXi block = cartan_matrix(components_[k]);
    const int off = offsets_[k];
    const int n = components_[k].rank;
    cartan_.block(off, off, n, n) = block;
    for (const Weight& r : component_positive_roots(block)) {
      Weight w = Weight::Zero(total);
      w.segment(off, n) = r;
      positive_roots_.push_back(w);
    }
  }
}

DynkinDiagram::Embedding DynkinDiagram::embed(const std::vector<Component>& parts) {
  struct Tagged {
    Component component;
    int input;
    int piece;
  };
  std::vector<std::vector<Piece>> pieces;
  std::vector<Tagged> tagged;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    pieces.push_back(canonicalize(parts[k]));
    for (std::size_t j = 0; j < pieces.back().size(); ++j)
      tagged.push_back({pieces.back()[j].component, static_cast<int>(k), static_cast<int>(j)});
  }
  std::stable_sort(tagged.begin(), tagged.end(),
                   [](const Tagged& x, const Tagged& y) { return x.component < y.component; });
  std::vector<Component> canonical;
  std::map<std::pair<int, int>, int> position;
  for (std::size_t t = 0; t < tagged.size(); ++t) {
    canonical.push_back(tagged[t].component);
    position[{tagged[t].input, tagged[t].piece}] = static_cast<int>(t);
  }
  Embedding out{DynkinDiagram(canonical), {}};
  for (std::size_t k = 0; k < parts.size(); ++k) {
    std::vector<int> row;
    const Piece& head = pieces[k].front();
    for (const auto& [sub, index] : head.map) {
      const int comp = position.at({static_cast<int>(k), sub});
      row.push_back(out.diagram.node({comp, index}));
    }
    out.node_of.push_back(std::move(row));
  }
  return out;
}

DynkinDiagram DynkinDiagram::build(const std::vector<Component>& parts) { return embed(parts).diagram; }

DynkinDiagram DynkinDiagram::parse(std::string_view text) {
  std::vector<Component> parts;
  std::size_t i = 0;
  auto is_sep = [](char ch) {
    return ch == ',' || ch == 'x' || ch == 'X' || ch == '*' || std::isspace(static_cast<unsigned char>(ch));
  };
  while (i < text.size()) {
    if (is_sep(text[i])) {
      ++i;
      continue;
    }
    const char family = static_cast<char>(std::toupper(static_cast<unsigned char>(text[i])));
    if (std::string_view("ABCDEFG").find(family) == std::string_view::npos)
      throw ParseError("bad diagram token at position " + std::to_string(i) + " in '" +
                       std::string(text) + "'");
    ++i;
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (start == i)
      throw ParseError("missing rank at position " + std::to_string(i) + " in '" + std::string(text) + "'");
    if (i - start > 3) throw DiagramError("rank too large in '" + std::string(text) + "'");
    parts.push_back({family, std::stoi(std::string(text.substr(start, i - start)))});
  }
  if (parts.empty()) throw ParseError("empty diagram string");
  return build(parts);
}

namespace {

/// Identifies a connected Cartan matrix with a canonical component, returning the node order.
std::pair<Component, Permutation> identify_component(const Eigen::MatrixXi& a) {
  const int n = static_cast<int>(a.rows());
  for (char family : std::string("ABCDEFG")) {
    const Component candidate{family, n};
    Eigen::MatrixXi b;
    try {
      const auto pieces = canonicalize(candidate);
      if (pieces.size() != 1 || pieces.front().component != candidate) continue;
      b = cartan_matrix(candidate);
    } catch (const DiagramError&) {
      continue;
    }
    auto isos = cartan_isomorphisms(a, b, 1);
    if (!isos.empty()) return {candidate, isos.front()};
  }
  throw DiagramError("induced subdiagram is not of finite type");
}

}  // namespace

DynkinDiagram::Embedding DynkinDiagram::induced(const DynkinDiagram& ambient, NodeSet nodes) {
  std::vector<int> members = nodes.elements();
  // Connected pieces in order of their smallest node.
  std::vector<int> piece_of(members.size(), -1);
  int pieces = 0;
  for (std::size_t s = 0; s < members.size(); ++s) {
    if (piece_of[s] >= 0) continue;
    std::vector<std::size_t> stack{s};
    piece_of[s] = pieces;
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t v = 0; v < members.size(); ++v)
        if (piece_of[v] < 0 && ambient.adjacent(members[u], members[v])) {
          piece_of[v] = pieces;
          stack.push_back(v);
        }
    }
    ++pieces;
  }
  std::vector<Component> parts;
  std::vector<std::vector<int>> ambient_of;  // per piece, ambient node per Bourbaki index
  for (int p = 0; p < pieces; ++p) {
    std::vector<int> local;
    for (std::size_t s = 0; s < members.size(); ++s)
      if (piece_of[s] == p) local.push_back(members[s]);
    Eigen::MatrixXi a(local.size(), local.size());
    for (std::size_t r = 0; r < local.size(); ++r)
      for (std::size_t c = 0; c < local.size(); ++c) a(r, c) = ambient.cartan_(local[r], local[c]);
    auto [component, perm] = identify_component(a);
    std::vector<int> by_index(local.size());
    for (std::size_t r = 0; r < local.size(); ++r) by_index[perm[r]] = local[r];
    parts.push_back(component);
    ambient_of.push_back(std::move(by_index));
  }
  Embedding built = embed(parts);
  // Invert: for each induced global node, its ambient node.
  Embedding out{built.diagram, {}};
  out.node_of.assign(built.diagram.components().size(), {});
  for (std::size_t k = 0; k < out.node_of.size(); ++k)
    out.node_of[k].assign(built.diagram.components()[k].rank, -1);
  for (std::size_t p = 0; p < parts.size(); ++p)
    for (std::size_t j = 0; j < ambient_of[p].size(); ++j) {
      const int local = built.node_of[p][j];
      const NodeId id = built.diagram.id(local);
      out.node_of[id.component][id.index - 1] = ambient_of[p][j];
    }
  return out;
}

int DynkinDiagram::cartan_pairing(int i, int j) const {
  if (i < 0 || j < 0 || i >= rank() || j >= rank()) throw DiagramError("unknown node");
  return cartan_(i, j);
}

int DynkinDiagram::pairing(int i, const Weight& w) const { return cartan_.row(i).dot(w); }

std::vector<Edge> DynkinDiagram::edges() const {
  std::vector<Edge> out;
  for (int i = 0; i < rank(); ++i)
    for (int j = i + 1; j < rank(); ++j) {
      if (cartan_(i, j) == 0) continue;
      Edge e{i, j, cartan_(i, j) * cartan_(j, i), -1};
      if (cartan_(i, j) < cartan_(j, i)) e.short_end = i;
      if (cartan_(j, i) < cartan_(i, j)) e.short_end = j;
      out.push_back(e);
    }
  return out;
}

NodeId DynkinDiagram::id(int node) const {
  if (node < 0 || node >= rank()) throw DiagramError("unknown node " + std::to_string(node));
  return nodes_[node];
}

int DynkinDiagram::node(NodeId id) const {
  if (id.component < 0 || id.component >= static_cast<int>(components_.size()) || id.index < 1 ||
      id.index > components_[id.component].rank)
    throw DiagramError("unknown node (" + std::to_string(id.component) + "," + std::to_string(id.index) + ")");
  return offsets_[id.component] + id.index - 1;
}

NodeSet DynkinDiagram::component_nodes(int component) const {
  const int off = offsets_.at(component);
  return NodeSet((NodeSet::first(components_[component].rank).bits()) << off);
}

Weight DynkinDiagram::simple_root(int node) const {
  Weight w = zero_weight();
  w[node] = 1;
  return w;
}

std::string DynkinDiagram::to_string() const {
  std::string out;
  for (const Component& c : components_) {
    if (!out.empty()) out += ",";
    out += c.family + std::to_string(c.rank);
  }
  return out;
}

std::string DynkinDiagram::node_name(int node) const {
  const NodeId n = id(node);
  std::string out = "α";
  for (int k = 0; k < n.component; ++k) out += "′";
  return out + std::to_string(n.index);
}

std::string DynkinDiagram::weight_to_string(const Weight& w) const {
  std::string out;
  for (int i = 0; i < w.size(); ++i) {
    if (w[i] == 0) continue;
    if (!out.empty()) out += w[i] > 0 ? "+" : "-";
    else if (w[i] < 0) out += "-";
    const int c = std::abs(w[i]);
    if (c != 1) out += std::to_string(c);
    out += node_name(i);
  }
  return out.empty() ? "0" : out;
}

int dim_flag(const DynkinDiagram& d, NodeSet sp) {
  int count = 0;
  for (const Weight& r : d.positive_roots())
    if (!support(r).is_subset_of(sp)) ++count;
  return count;
}

int dim_lie_algebra(const DynkinDiagram& d) {
  return d.rank() + 2 * static_cast<int>(d.positive_roots().size());
}

std::vector<Permutation> induced_embeddings(const Eigen::MatrixXi& a, const Eigen::MatrixXi& b, int limit) {
  const int n = static_cast<int>(a.rows());
  const int m = static_cast<int>(b.rows());
  std::vector<Permutation> out;
  if (n > m) return out;
  // Visit nodes so that each one after the first of its component has a visited neighbour.
  std::vector<int> order;
  std::vector<bool> seen(n, false);
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    seen[s] = true;
    order.push_back(s);
    for (std::size_t k = order.size() - 1; k < order.size(); ++k)
      for (int v = 0; v < n; ++v)
        if (!seen[v] && a(order[k], v) != 0) {
          seen[v] = true;
          order.push_back(v);
        }
  }
  auto degree = [](const Eigen::MatrixXi& mat, int i) {
    int deg = 0;
    for (int j = 0; j < mat.rows(); ++j) deg += (j != i && mat(i, j) != 0);
    return deg;
  };
  std::vector<int> deg_a(n), deg_b(m);
  for (int i = 0; i < n; ++i) deg_a[i] = degree(a, i);
  for (int i = 0; i < m; ++i) deg_b[i] = degree(b, i);
  Permutation perm(n, -1);
  std::vector<bool> used(m, false);
  auto search = [&](auto&& self, int depth) -> bool {
    if (depth == n) {
      out.push_back(perm);
      return limit > 0 && static_cast<int>(out.size()) >= limit;
    }
    const int u = order[depth];
    for (int v = 0; v < m; ++v) {
      if (used[v] || deg_a[u] > deg_b[v] || b(v, v) != a(u, u)) continue;
      bool ok = true;
      for (int k = 0; k < depth && ok; ++k) {
        const int w = order[k];
        ok = a(u, w) == b(v, perm[w]) && a(w, u) == b(perm[w], v);
      }
      if (!ok) continue;
      perm[u] = v;
      used[v] = true;
      if (self(self, depth + 1)) return true;
      used[v] = false;
      perm[u] = -1;
    }
    return false;
  };
  search(search, 0);
  return out;
}

std::vector<Permutation> cartan_isomorphisms(const Eigen::MatrixXi& a, const Eigen::MatrixXi& b, int limit) {
  if (a.rows() != b.rows()) return {};
  return induced_embeddings(a, b, limit);
}

std::vector<Permutation> automorphisms(const DynkinDiagram& d) {
  return cartan_isomorphisms(d.cartan(), d.cartan());
}

}  // namespace wonderful
