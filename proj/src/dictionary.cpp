#include "wonderful/dictionary.hpp"

#include <algorithm>
#include <numeric>

#include <boost/integer/common_factor.hpp>

#include "wonderful/error.hpp"
#include "wonderful/feasibility.hpp"

namespace wonderful {

Localization localize_with_map(const SphericalSystem& sys, NodeSet nodes) {
  if (!nodes.is_subset_of(sys.diagram().all_nodes())) throw PreconditionError("localization outside the diagram");
  if (nodes.empty()) return {SphericalSystem(DynkinDiagram(), NodeSet{}, {}, sys.options()), {}};
  const auto emb = DynkinDiagram::induced(sys.diagram(), nodes);
  const DynkinDiagram& sub = emb.diagram;
  std::vector<int> ambient(sub.rank());
  for (std::size_t c = 0; c < emb.node_of.size(); ++c)
    for (std::size_t i = 0; i < emb.node_of[c].size(); ++i)
      ambient[sub.node({static_cast<int>(c), static_cast<int>(i) + 1})] = emb.node_of[c][i];
  NodeSet sp;
  for (int v = 0; v < sub.rank(); ++v)
    if (sys.sp().contains(ambient[v])) sp.insert(v);
  std::vector<Weight> sigma;
  for (const Weight& g : sys.sigma()) {
    if (!support(g).is_subset_of(nodes)) continue;
    Weight local(sub.rank());
    for (int v = 0; v < sub.rank(); ++v) local[v] = g[ambient[v]];
    sigma.push_back(local);
  }
  return {SphericalSystem(sub, sp, std::move(sigma), sys.options()), std::move(ambient)};
}

SphericalSystem localize(const SphericalSystem& sys, NodeSet nodes) { return localize_with_map(sys, nodes).system; }

int couple_dimension(const DynkinDiagram& d, NodeSet sp, std::size_t sigma_size) {
  return dim_flag(d, sp) + static_cast<int>(sigma_size);
}

Dictionary::Dictionary(SphericalSystem sys, HilbertBasisOptions hb, DecompositionOptions dec)
    : sys_(std::move(sys)), colours_(wonderful::colours(sys_)), hb_(hb), dec_(dec) {}

std::optional<Eigen::VectorXi> Dictionary::distinguished_witness(ColourSubset delta) const {
  auto it = witness_.find(delta.bits());
  if (it != witness_.end()) return it->second;
  const std::vector<int> members = delta.elements();
  std::optional<Eigen::VectorXi> result;
  if (members.empty()) {
    result = Eigen::VectorXi();
  } else {
    // Variables φ_D (D ∈ Δ′), constraints one per γ: Σ_D φ_D ρ(D)(γ) ≥ 0.
    Eigen::MatrixXi m(sys_.rank(), members.size());
    for (std::size_t j = 0; j < members.size(); ++j) m.col(j) = colours_.rho.row(members[j]).transpose();
    const auto x = feasible_nonneg(m, std::vector<bool>(members.size(), true));
    if (x) {
      std::int64_t lcm = 1;
      for (Eigen::Index j = 0; j < x->size(); ++j) lcm = boost::integer::lcm(lcm, (*x)[j].denominator());
      Eigen::VectorXi phi(x->size());
      for (Eigen::Index j = 0; j < x->size(); ++j)
        phi[j] = static_cast<int>((*x)[j].numerator() * (lcm / (*x)[j].denominator()));
      result = phi;
    }
  }
  witness_.emplace(delta.bits(), result);
  return result;
}

bool Dictionary::is_distinguished(ColourSubset delta) const { return distinguished_witness(delta).has_value(); }

std::vector<bool> Dictionary::kept_roots(ColourSubset delta) const {
  std::vector<bool> kept(sys_.rank(), true);
  delta.for_each([&](int c) {
    for (int k = 0; k < sys_.rank(); ++k)
      if (colours_.rho(c, k) != 0) kept[k] = false;
  });
  return kept;
}

const QuotientResult& Dictionary::quotient(ColourSubset delta) const {
  auto it = quotients_.find(delta.bits());
  if (it != quotients_.end()) return it->second;
  if (!delta.is_subset_of(colours_.all())) throw PreconditionError("unknown colour in subset");
  if (!is_distinguished(delta)) throw PreconditionError("colour subset is not distinguished");
  QuotientResult q;
  q.delta_prime = delta;
  q.sp_out = sys_.sp() | colours_.nodes_of(delta);
  const std::vector<int> members = delta.elements();
  Eigen::MatrixXi constraints(members.size(), sys_.rank());
  for (std::size_t r = 0; r < members.size(); ++r) constraints.row(r) = colours_.rho.row(members[r]);
  q.coordinates = hilbert_basis(constraints, sys_.rank(), hb_);
  const DynkinDiagram& d = sys_.diagram();
  for (const Eigen::VectorXi& x : q.coordinates) {
    Weight g = d.zero_weight();
    for (int k = 0; k < sys_.rank(); ++k) g += x[k] * sys_.sigma()[k];
    q.sigma_out.push_back(g);
  }
  q.homogeneous = q.sigma_out.empty();
  q.smooth = std::all_of(q.sigma_out.begin(), q.sigma_out.end(), [&](const Weight& g) { return sys_.contains(g); });
  q.is_valid_system = SphericalSystem(d, q.sp_out, q.sigma_out, sys_.options()).valid();
  return quotients_.emplace(delta.bits(), std::move(q)).first->second;
}

bool Dictionary::orthogonal_new_nodes(ColourSubset d1, ColourSubset d2) const {
  const NodeSet a = colours_.nodes_of(d1);
  const NodeSet b = colours_.nodes_of(d2);
  bool ok = true;
  a.for_each([&](int x) { b.for_each([&](int y) { ok = ok && x != y && sys_.diagram().orthogonal(x, y); }); });
  return ok;
}

bool Dictionary::covers_sigma(ColourSubset d1, ColourSubset d2) const {
  const auto k1 = kept_roots(d1);
  const auto k2 = kept_roots(d2);
  for (int k = 0; k < sys_.rank(); ++k)
    if (!k1[k] && !k2[k]) return false;
  return true;
}

bool Dictionary::decomposes(ColourSubset d1, ColourSubset d2) const {
  if (!is_distinguished(d1) || !is_distinguished(d2))
    throw PreconditionError("decomposition requires distinguished colour subsets");
  if (d1.empty() || d2.empty()) return false;
  if (d1.intersects(d2)) return false;
  if (!covers_sigma(d1, d2)) return false;
  if (!orthogonal_new_nodes(d1, d2)) return false;
  return remaining_conditions(d1, d2);
}

bool Dictionary::remaining_conditions(ColourSubset d1, ColourSubset d2) const {
  const QuotientResult& q1 = quotient(d1);
  const QuotientResult& q2 = quotient(d2);
  if (!q1.smooth && !q2.smooth) return false;
  if (!dec_.require_dimension_additivity) return true;
  const QuotientResult& q3 = quotient(d1 | d2);
  const DynkinDiagram& d = sys_.diagram();
  return couple_dimension(d, sys_.sp(), sys_.sigma().size()) ==
         couple_dimension(d, q1.sp_out, q1.sigma_out.size()) + couple_dimension(d, q2.sp_out, q2.sigma_out.size()) -
             couple_dimension(d, q3.sp_out, q3.sigma_out.size());
}

std::optional<std::pair<ColourSubset, ColourSubset>> Dictionary::find_decomposition() const {
  const int c = colours_.size();
  if (c < 2) return std::nullopt;
  const std::uint64_t full = colours_.all().bits();
  for (std::uint64_t a = 1; a <= full; ++a) {
    const ColourSubset d1(a);
    const std::uint64_t rest = full & ~a;
    // Subsets b of the complement with b > a, so each unordered pair is visited once.
    for (std::uint64_t b = rest; b != 0; b = (b - 1) & rest) {
      if (b < a) continue;
      const ColourSubset d2(b);
      if (!covers_sigma(d1, d2) || !orthogonal_new_nodes(d1, d2)) continue;
      if (!is_distinguished(d1)) break;
      if (!is_distinguished(d2)) continue;
      if (remaining_conditions(d1, d2)) return std::make_pair(d1, d2);
    }
  }
  return std::nullopt;
}

bool is_distinguished(const SphericalSystem& sys, ColourSubset delta) {
  return Dictionary(sys).is_distinguished(delta);
}

QuotientResult quotient(const SphericalSystem& sys, ColourSubset delta) { return Dictionary(sys).quotient(delta); }

bool is_smooth_subset(const SphericalSystem& sys, ColourSubset delta) { return quotient(sys, delta).smooth; }

bool is_homogeneous_subset(const SphericalSystem& sys, ColourSubset delta) {
  return quotient(sys, delta).homogeneous;
}

SphericalSystem quotient_system(const SphericalSystem& sys, const QuotientResult& q) {
  return SphericalSystem(sys.diagram(), q.sp_out, q.sigma_out, sys.options());
}

ColourSubset underline_empty(const SphericalSystem& sys) {
  return colours(sys).of_nodes(sys.support_of_sigma());
}

SphericalSystem decuspidalize(const SphericalSystem& sys) { return localize(sys, sys.support_of_sigma()); }

bool decomposes(const SphericalSystem& sys, ColourSubset d1, ColourSubset d2, DecompositionOptions options) {
  return Dictionary(sys, {}, options).decomposes(d1, d2);
}

std::optional<std::pair<ColourSubset, ColourSubset>> is_decomposable(const SphericalSystem& sys,
                                                                     DecompositionOptions options) {
  return Dictionary(sys, {}, options).find_decomposition();
}

bool is_affine_feasible(const SphericalSystem& sys) {
  const ColourSet cs = colours(sys);
  if (cs.size() == 0) return true;
  const int k = sys.rank();
  // Columns ξ_1..ξ_k then the slack t ≥ 1: ρ ξ − t ≥ 0.
  Eigen::MatrixXi m(cs.size(), k + 1);
  m.leftCols(k) = cs.rho;
  m.col(k).setConstant(-1);
  std::vector<bool> strict(k + 1, false);
  strict[k] = true;
  return feasible_nonneg(m, strict).has_value();
}

ExpectedDims expected_dims(const SphericalSystem& sys) {
  const int sigma = sys.rank();
  return {dim_flag(sys.diagram(), sys.sp()) + sigma, colours(sys).size() - sigma};
}

}  // namespace wonderful
