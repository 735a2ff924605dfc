#include "wonderful/connectivity.hpp"

#include <numeric>

#include "wonderful/error.hpp"

namespace wonderful {

namespace {

bool adjacent_with(const ColourSet& cs, const SphericalSystem& sys, int g1, int g2) {
  const auto one_way = [&](int a, int b) {
    bool ok = true;
    cs.of_nodes(support(sys.sigma()[a])).for_each([&](int c) { ok = ok && cs.rho(c, b) != 0; });
    return ok;
  };
  return one_way(g1, g2) && one_way(g2, g1);
}

NodeSet support_of(const SphericalSystem& sys, RootSubset subset) {
  NodeSet s;
  subset.for_each([&](int k) { s |= support(sys.sigma()[k]); });
  return s;
}

void check_subset(const SphericalSystem& sys, RootSubset subset) {
  if (!subset.is_subset_of(RootSubset::first(sys.rank())))
    throw PreconditionError("root subset refers to positions outside Σ");
}

ColourSubset delta_with(const ColourSet& cs, const SphericalSystem& sys, RootSubset subset) {
  ColourSubset out;
  const RootSubset rest = RootSubset::first(sys.rank()) - subset;
  cs.of_nodes(support_of(sys, subset)).for_each([&](int c) {
    bool vanishes = true;
    rest.for_each([&](int k) { vanishes = vanishes && cs.rho(c, k) == 0; });
    if (vanishes) out.insert(c);
  });
  return out;
}

/// First nonempty subset of delta (in increasing bit order) passing the predicate.
template <class Pred>
std::optional<ColourSubset> find_subset(ColourSubset delta, Pred&& pred) {
  const std::uint64_t all = delta.bits();
  // Enumerate nonempty submasks of `all` in increasing numeric order.
  for (std::uint64_t m = all & (~all + 1); m != 0; m = (m - all) & all) {
    if (pred(ColourSubset(m))) return ColourSubset(m);
    if (m == all) break;
  }
  return std::nullopt;
}

bool isolated(const SphericalSystem& sys, RootSubset subset) {
  const NodeSet whole = sys.support_of_sigma();
  const NodeSet s1 = support_of(sys, subset);
  const NodeSet s2 = whole - s1;
  if (s1.empty() || s2.empty()) return false;
  // The partition must split off Σ′ itself, not a larger set of roots sharing its support.
  for (int k = 0; k < sys.rank(); ++k)
    if (!subset.contains(k) && support(sys.sigma()[k]).is_subset_of(s1)) return false;
  const Localization loc = localize_with_map(sys, whole);
  NodeSet local1;
  NodeSet local2;
  for (int v = 0; v < static_cast<int>(loc.ambient_node.size()); ++v) {
    if (s1.contains(loc.ambient_node[v])) local1.insert(v);
    if (s2.contains(loc.ambient_node[v])) local2.insert(v);
  }
  const Dictionary dict(loc.system);
  const ColourSubset d1 = dict.colours().of_nodes(local1);
  const ColourSubset d2 = dict.colours().of_nodes(local2);
  if (d1.empty() || d2.empty() || d1.intersects(d2)) return false;
  if (!dict.is_distinguished(d1) || !dict.is_distinguished(d2)) return false;
  return dict.decomposes(d1, d2);
}

}  // namespace

bool strongly_adjacent(const SphericalSystem& sys, int gamma1, int gamma2) {
  if (gamma1 < 0 || gamma2 < 0 || gamma1 >= sys.rank() || gamma2 >= sys.rank() || gamma1 == gamma2)
    throw PreconditionError("strong adjacency needs two distinct positions of Σ");
  return adjacent_with(colours(sys), sys, gamma1, gamma2);
}

std::vector<RootSubset> components(const SphericalSystem& sys) {
  const ColourSet cs = colours(sys);
  const int k = sys.rank();
  std::vector<int> parent(k);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b)
      if (adjacent_with(cs, sys, a, b)) parent[find(a)] = find(b);
  std::vector<RootSubset> out;
  std::vector<int> slot(k, -1);
  for (int a = 0; a < k; ++a) {
    const int r = find(a);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[slot[r]].insert(a);
  }
  return out;
}

ColourSubset delta_of(const SphericalSystem& sys, RootSubset subset) {
  check_subset(sys, subset);
  return delta_with(colours(sys), sys, subset);
}

ComponentAnalysis classify_component(const Dictionary& dict, RootSubset subset) {
  const SphericalSystem& sys = dict.system();
  check_subset(sys, subset);
  ComponentAnalysis out;
  out.component = subset;
  out.delta = delta_with(dict.colours(), sys, subset);
  out.erasing = find_subset(out.delta, [&](ColourSubset s) {
    return dict.is_distinguished(s) && dict.quotient(s).smooth;
  });
  out.quasi_erasing = find_subset(out.delta, [&](ColourSubset s) {
    return dict.is_distinguished(s) && dict.quotient(s).is_valid_system;
  });
  out.erasable = out.erasing.has_value();
  out.quasi_erasable = out.quasi_erasing.has_value();
  out.isolated = isolated(sys, subset);
  return out;
}

ComponentAnalysis classify_component(const SphericalSystem& sys, RootSubset subset) {
  return classify_component(Dictionary(sys), subset);
}

bool lemma_erasable_prunes(const SphericalSystem& sys, RootSubset sigma1, RootSubset sigma2) {
  check_subset(sys, sigma1);
  check_subset(sys, sigma2);
  if (sigma1.empty() || sigma2.empty() || sigma1.intersects(sigma2)) return false;
  const Dictionary dict(sys);
  const ComponentAnalysis a = classify_component(dict, sigma1);
  const ComponentAnalysis b = classify_component(dict, sigma2);
  return a.quasi_erasable && b.quasi_erasable && (a.erasable || b.erasable);
}

}  // namespace wonderful
