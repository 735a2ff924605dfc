#include "wonderful/spherical_system.hpp"

#include <mutex>
#include <numeric>
#include <set>

#include "wonderful/error.hpp"
#include "wonderful/linear_algebra.hpp"
#include "wonderful/rank_one.hpp"

namespace wonderful {

std::string_view axiom_name(Axiom axiom) {
  switch (axiom) {
    case Axiom::Shape: return "shape";
    case Axiom::Sigma1: return "sigma1";
    case Axiom::Sigma2: return "sigma2";
    case Axiom::S: return "S";
    case Axiom::RPrime: return "R'";
    case Axiom::Independence: return "independence";
    case Axiom::Distinct: return "distinct";
  }
  return "unknown";
}

bool ValidationReport::holds(Axiom axiom) const {
  switch (axiom) {
    case Axiom::Shape: return shape;
    case Axiom::Sigma1: return sigma1;
    case Axiom::Sigma2: return sigma2;
    case Axiom::S: return s;
    case Axiom::RPrime: return r_prime;
    case Axiom::Independence: return independent;
    case Axiom::Distinct: return distinct;
  }
  return false;
}

struct SphericalSystem::Cache {
  std::once_flag once;
  ValidationReport report;
};

SphericalSystem::SphericalSystem(DynkinDiagram diagram, NodeSet sp, std::vector<Weight> sigma,
                                 ValidationOptions options)
    : diagram_(std::move(diagram)),
      sp_(sp),
      sigma_(std::move(sigma)),
      options_(options),
      cache_(std::make_shared<Cache>()) {
  if (!sp_.is_subset_of(diagram_.all_nodes())) throw PreconditionError("S^p contains unknown nodes");
}

const ValidationReport& SphericalSystem::report() const {
  std::call_once(cache_->once, [this] { cache_->report = validate(*this); });
  return cache_->report;
}

NodeSet SphericalSystem::support_of_sigma() const {
  NodeSet s;
  for (const Weight& g : sigma_) s |= support(g);
  return s;
}

int SphericalSystem::index_of(const Weight& gamma) const {
  for (std::size_t k = 0; k < sigma_.size(); ++k)
    if (sigma_[k].size() == gamma.size() && sigma_[k] == gamma) return static_cast<int>(k);
  return -1;
}

ValidationReport validate(const SphericalSystem& sys) {
  ValidationReport rep;
  const DynkinDiagram& d = sys.diagram();
  const auto& sigma = sys.sigma();
  const int k = static_cast<int>(sigma.size());
  auto fail = [&](bool& flag, Violation v) {
    flag = false;
    rep.violations.push_back(std::move(v));
  };

  for (int g = 0; g < k; ++g) {
    if (sigma[g].size() != d.rank())
      fail(rep.shape, {Axiom::Shape, g, -1, -1, -1, "weight has wrong length"});
    else if ((sigma[g].array() < 0).any() || is_zero(sigma[g]))
      fail(rep.shape, {Axiom::Shape, g, -1, -1, -1, "weight must be nonzero and nonnegative"});
  }
  if (!rep.shape) return rep;

  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b)
      if (sigma[a] == sigma[b]) fail(rep.distinct, {Axiom::Distinct, a, b, -1, -1, "repeated spherical root"});

  for (int g = 0; g < k; ++g) {
    const NodeSet supp = support(sigma[g]);
    if (supp.size() == 1 && sigma[g][supp.front()] == 1)
      fail(rep.r_prime, {Axiom::RPrime, g, -1, supp.front(), -1, "simple spherical root"});
  }

  for (int g = 0; g < k; ++g) {
    const NodeSet supp = support(sigma[g]);
    if (supp.size() != 1 || sigma[g][supp.front()] != 2) continue;
    const int alpha = supp.front();
    for (int h = 0; h < k; ++h) {
      if (h == g) continue;
      const int p = d.pairing(alpha, sigma[h]);
      if (p > 0 || p % 2 != 0)
        fail(rep.sigma1, {Axiom::Sigma1, g, h, alpha, -1, "half pairing is not a non-positive integer"});
    }
  }

  for (int g = 0; g < k; ++g) {
    const NodeSet supp = support(sigma[g]);
    if (supp.size() != 2) continue;
    const int a = supp.elements()[0];
    const int b = supp.elements()[1];
    if (sigma[g][a] != 1 || sigma[g][b] != 1 || !d.orthogonal(a, b)) continue;
    for (int h = 0; h < k; ++h)
      if (d.pairing(a, sigma[h]) != d.pairing(b, sigma[h]))
        fail(rep.sigma2, {Axiom::Sigma2, g, h, a, b, "orthogonal pair pairs differently"});
  }

  for (int g = 0; g < k; ++g)
    if (!axiom_S_holds(sigma[g], sys.sp(), d))
      fail(rep.s, {Axiom::S, g, -1, -1, -1, "no rank-1 row realizes the spherical root with this S^p"});

  if (sys.options().require_independence && k > 0) {
    Eigen::MatrixXi m(k, d.rank());
    for (int g = 0; g < k; ++g) m.row(g) = sigma[g].transpose();
    if (rational_rank(m) < k)
      fail(rep.independent, {Axiom::Independence, -1, -1, -1, -1, "spherical roots are linearly dependent"});
  }
  return rep;
}

ColourSubset ColourSet::of_nodes(NodeSet nodes) const {
  ColourSubset out;
  nodes.for_each([&](int a) {
    if (a < static_cast<int>(colour_of.size()) && colour_of[a] >= 0) out.insert(colour_of[a]);
  });
  return out;
}

NodeSet ColourSet::nodes_of(ColourSubset subset) const {
  NodeSet out;
  subset.for_each([&](int c) { out |= classes.at(c); });
  return out;
}

std::string ColourSet::name(int colour, const DynkinDiagram& d) const {
  std::string out = "D";
  bool first = true;
  classes.at(colour).for_each([&](int a) {
    if (!first) out += "+";
    first = false;
    const NodeId id = d.id(a);
    out += std::to_string(id.index);
    for (int p = 0; p < id.component; ++p) out += "′";
  });
  return out;
}

ColourSet colours(const SphericalSystem& sys) {
  const DynkinDiagram& d = sys.diagram();
  const auto& sigma = sys.sigma();
  const int n = d.rank();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  const NodeSet free = d.all_nodes() - sys.sp();
  for (const Weight& g : sigma) {
    const NodeSet supp = support(g);
    if (supp.size() != 2) continue;
    const int a = supp.elements()[0];
    const int b = supp.elements()[1];
    if (g[a] == 1 && g[b] == 1 && d.orthogonal(a, b) && free.contains(a) && free.contains(b))
      parent[find(a)] = find(b);
  }
  ColourSet out;
  out.colour_of.assign(n, -1);
  free.for_each([&](int a) {
    const int root = find(a);
    int c = -1;
    for (int i = 0; i < out.size(); ++i)
      if (find(out.classes[i].front()) == root) c = i;
    if (c < 0) {
      c = out.size();
      out.classes.emplace_back();
    }
    out.classes[c].insert(a);
    out.colour_of[a] = c;
  });

  const int k = static_cast<int>(sigma.size());
  out.rho = Eigen::MatrixXi::Zero(out.size(), k);
  out.under.assign(out.size(), false);
  for (int c = 0; c < out.size(); ++c) {
    bool first = true;
    out.classes[c].for_each([&](int a) {
      const bool halved = sys.contains(Weight(2 * d.simple_root(a)));
      Eigen::RowVectorXi row(k);
      for (int g = 0; g < k; ++g) {
        const int p = d.pairing(a, sigma[g]);
        if (halved && p % 2 != 0) throw PreconditionError("odd pairing against a doubled simple root");
        row[g] = halved ? p / 2 : p;
      }
      if (first) {
        out.rho.row(c) = row;
        out.under[c] = halved;
        first = false;
      } else if (out.rho.row(c) != row || out.under[c] != halved) {
        throw PreconditionError("colour class members pair differently with Σ");
      }
    });
  }
  return out;
}

bool is_strict(const SphericalSystem& sys) {
  for (const Weight& g : sys.sigma())
    if (axiom_R_violated(g, sys.sp(), sys.diagram())) return false;
  return true;
}

bool is_cuspidal(const SphericalSystem& sys) {
  return sys.support_of_sigma() == sys.diagram().all_nodes();
}

SphericalSystem rank_one_system(std::string_view label) {
  const RankOneInstance inst = rank_one_instance(label);
  const RankOneDatum& row = *inst.row;
  const auto emb = DynkinDiagram::embed(row.pattern(inst.n));
  const DynkinDiagram& d = emb.diagram;
  // Pattern positions run through the input components in order.
  std::vector<int> position_node;
  for (const auto& comp : emb.node_of) position_node.insert(position_node.end(), comp.begin(), comp.end());
  Weight gamma = d.zero_weight();
  const std::vector<int> coeffs = row.coefficients(inst.n);
  for (std::size_t p = 0; p < coeffs.size(); ++p) gamma[position_node[p]] = coeffs[p];
  NodeSet sp;
  for (int pos : row.sp_positions(inst.n)) sp.insert(position_node[pos - 1]);
  return SphericalSystem(d, sp, {gamma});
}

}  // namespace wonderful
