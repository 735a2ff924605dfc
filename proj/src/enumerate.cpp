#include "wonderful/enumerate.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>
#include <numeric>

#include "wonderful/dictionary.hpp"
#include "wonderful/error.hpp"
#include "wonderful/rank_one.hpp"

namespace wonderful {

namespace {

std::vector<int> to_vector(const Weight& w) { return std::vector<int>(w.data(), w.data() + w.size()); }

/// Row echelon form over the integers, kept primitive by gcd division.
class Echelon {
 public:
  /// Adds w when it is independent of the rows so far.
  bool try_add(const Weight& w) {
    std::vector<std::int64_t> v(w.data(), w.data() + w.size());
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const int p = pivots_[r];
      if (v[p] == 0) continue;
      const std::int64_t a = rows_[r][p];
      const std::int64_t b = v[p];
      for (std::size_t j = 0; j < v.size(); ++j) v[j] = a * v[j] - b * rows_[r][j];
      normalize(v);
    }
    const auto it = std::find_if(v.begin(), v.end(), [](std::int64_t x) { return x != 0; });
    if (it == v.end()) return false;
    pivots_.push_back(static_cast<int>(it - v.begin()));
    rows_.push_back(std::move(v));
    return true;
  }

 private:
  std::vector<std::vector<std::int64_t>> rows_;
  std::vector<int> pivots_;

  static void normalize(std::vector<std::int64_t>& v) {
    std::int64_t g = 0;
    for (std::int64_t x : v) g = std::gcd(g, x < 0 ? -x : x);
    if (g > 1)
      for (std::int64_t& x : v) x /= g;
  }
};

/// A distinct candidate weight with the S^p patterns that make it pass the rank-1 axiom.
struct Candidate {
  Weight weight;
  NodeSet support;
  std::vector<NodeSet> traces;
  /// Nodes outside the support orthogonal to the weight.
  NodeSet orthogonal_outside;

  bool admits(NodeSet sp) const {
    if (!(sp - support).is_subset_of(orthogonal_outside)) return false;
    const NodeSet inside = sp & support;
    return std::find(traces.begin(), traces.end(), inside) != traces.end();
  }
};

std::vector<Candidate> distinct_candidates(const DynkinDiagram& d) {
  std::vector<Candidate> out;
  for (const RankOneMatch& m : candidate_spherical_roots(d)) {
    auto it = std::find_if(out.begin(), out.end(), [&](const Candidate& c) { return c.weight == m.weight; });
    if (it == out.end()) {
      Candidate c;
      c.weight = m.weight;
      c.support = support(m.weight);
      (d.all_nodes() - c.support).for_each([&](int a) {
        if (d.pairing(a, m.weight) == 0) c.orthogonal_outside.insert(a);
      });
      out.push_back(std::move(c));
      it = out.end() - 1;
    }
    if (std::find(it->traces.begin(), it->traces.end(), m.trace) == it->traces.end()) it->traces.push_back(m.trace);
  }
  return out;
}

/// (Σ1) and (Σ2) for the pair, which involve no other root.
bool pair_compatible(const DynkinDiagram& d, const Weight& a, const Weight& b) {
  const SphericalSystem pair(d, NodeSet{}, {a, b}, ValidationOptions{false});
  const ValidationReport& r = pair.report();
  return r.sigma1 && r.sigma2;
}

class Search {
 public:
  Search(const DynkinDiagram& d, const EnumerationOptions& options)
      : d_(d), options_(options), budget_(effective_budget(options)), autos_(automorphisms(d)),
        candidates_(distinct_candidates(d)) {
    const int n = static_cast<int>(candidates_.size());
    compatible_.assign(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        compatible_[i][j] = compatible_[j][i] = pair_compatible(d_, candidates_[i].weight, candidates_[j].weight);
  }

  std::vector<SphericalSystem> run() {
    const std::uint64_t subsets = std::uint64_t{1} << d_.rank();
    for (std::uint64_t bits = 0; bits < subsets; ++bits) {
      const NodeSet sp(bits);
      if (!orbit_minimal(sp)) continue;
      active_.clear();
      for (int i = 0; i < static_cast<int>(candidates_.size()); ++i)
        if (candidates_[i].admits(sp)) active_.push_back(i);
      suffix_.assign(active_.size() + 1, NodeSet{});
      for (int i = static_cast<int>(active_.size()) - 1; i >= 0; --i)
        suffix_[i] = suffix_[i + 1] | candidates_[active_[i]].support;
      sp_ = sp;
      chosen_.clear();
      descend(0, NodeSet{}, Echelon{});
    }
    std::vector<SphericalSystem> out;
    out.reserve(found_.size());
    for (auto& [key, sys] : found_) out.push_back(std::move(sys));
    return out;
  }

 private:
  const DynkinDiagram& d_;
  EnumerationOptions options_;
  std::uint64_t budget_;
  std::uint64_t visited_ = 0;
  std::vector<Permutation> autos_;
  std::vector<Candidate> candidates_;
  std::vector<std::vector<bool>> compatible_;
  NodeSet sp_;
  std::vector<int> active_;
  std::vector<NodeSet> suffix_;
  std::vector<int> chosen_;
  std::map<CanonicalKey, SphericalSystem> found_;

  /// Every orbit of systems meets the S^p that is smallest in its automorphism orbit.
  bool orbit_minimal(NodeSet sp) const {
    for (const Permutation& p : autos_)
      if (permute(sp, p) < sp) return false;
    return true;
  }

  void descend(std::size_t pos, NodeSet covered, const Echelon& basis) {
    if (++visited_ > budget_)
      throw BudgetExceeded("enumeration on " + d_.to_string() + " exceeded " + std::to_string(budget_) +
                           " search nodes");
    if (options_.cuspidal_only && (covered | suffix_[pos]) != d_.all_nodes()) return;
    if (!options_.cuspidal_only || covered == d_.all_nodes()) emit();
    for (std::size_t i = pos; i < active_.size(); ++i) {
      const int c = active_[i];
      const bool fits = std::all_of(chosen_.begin(), chosen_.end(), [&](int o) { return compatible_[c][o]; });
      if (!fits) continue;
      Echelon next = basis;
      if (!next.try_add(candidates_[c].weight)) continue;
      chosen_.push_back(c);
      descend(i + 1, covered | candidates_[c].support, next);
      chosen_.pop_back();
    }
  }

  void emit() {
    std::vector<Weight> sigma;
    for (int c : chosen_) sigma.push_back(candidates_[c].weight);
    SphericalSystem sys(d_, sp_, std::move(sigma));
    if (!sys.valid()) return;
    CanonicalKey key = canonical_key(sys, autos_);
    found_.try_emplace(std::move(key), std::move(sys));
  }
};

struct ClassifiedInstance {
  CanonicalKey key;
  FamilyInstance instance;
};

/// Catalog instantiations on one diagram with their keys, computed once per diagram.
const std::vector<ClassifiedInstance>& keyed_instances(const DynkinDiagram& d) {
  static std::mutex mutex;
  static std::map<std::string, std::vector<ClassifiedInstance>> cache;
  const std::lock_guard<std::mutex> lock(mutex);
  auto [it, inserted] = cache.try_emplace(d.to_string());
  if (inserted) {
    const std::vector<Permutation> autos = automorphisms(d);
    for (const FamilyInstance& inst : catalog_instances_on(d))
      it->second.push_back({canonical_key(inst.system(), autos), inst});
  }
  return it->second;
}

}  // namespace

CanonicalKey canonical_key(const SphericalSystem& sys, const std::vector<Permutation>& automorphisms) {
  std::optional<CanonicalKey> best;
  for (const Permutation& p : automorphisms) {
    CanonicalKey k;
    k.sp = permute(sys.sp(), p).bits();
    for (const Weight& g : sys.sigma()) k.sigma.push_back(to_vector(permute(g, p)));
    std::sort(k.sigma.begin(), k.sigma.end());
    if (!best || k < *best) best = std::move(k);
  }
  if (!best) {
    best.emplace();
    best->sp = sys.sp().bits();
    for (const Weight& g : sys.sigma()) best->sigma.push_back(to_vector(g));
    std::sort(best->sigma.begin(), best->sigma.end());
  }
  return *best;
}

CanonicalKey canonical_key(const SphericalSystem& sys) { return canonical_key(sys, automorphisms(sys.diagram())); }

std::uint64_t effective_budget(const EnumerationOptions& options) {
  if (options.budget > 0) return options.budget;
  if (const char* env = std::getenv("WONDERFUL_SEARCH_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return default_search_budget;
}

std::vector<SphericalSystem> enumerate_systems(const DynkinDiagram& d, EnumerationOptions options) {
  if (d.rank() > options.max_rank)
    throw PreconditionError("diagram " + d.to_string() + " has rank " + std::to_string(d.rank()) +
                            " above the enumeration bound " + std::to_string(options.max_rank));
  return Search(d, options).run();
}

std::vector<SphericalSystem> enumerate_primitive(const DynkinDiagram& d, EnumerationOptions options) {
  options.cuspidal_only = true;
  std::vector<SphericalSystem> out;
  for (SphericalSystem& sys : enumerate_systems(d, options))
    if (!is_decomposable(sys)) out.push_back(std::move(sys));
  return out;
}

std::vector<CatalogAlias> catalog_aliases(int max_rank) {
  std::map<std::pair<std::string, CanonicalKey>, std::string> first;
  std::vector<CatalogAlias> out;
  for (const FamilyInstance& inst : catalog_instances(max_rank)) {
    const SphericalSystem sys = inst.system();
    auto [it, inserted] = first.try_emplace({sys.diagram().to_string(), canonical_key(sys)}, inst.label());
    if (!inserted) out.push_back({inst.label(), it->second});
  }
  return out;
}

std::optional<FamilyInstance> classify(const SphericalSystem& sys) {
  if (!sys.valid()) return std::nullopt;
  const CanonicalKey key = canonical_key(sys);
  for (const ClassifiedInstance& c : keyed_instances(sys.diagram()))
    if (c.key == key) return c.instance;
  return std::nullopt;
}

StrictnessReport strictness_report(const DynkinDiagram& d, EnumerationOptions options) {
  StrictnessReport out;
  for (SphericalSystem& sys : enumerate_primitive(d, options))
    (is_strict(sys) ? out.strict : out.non_strict).push_back(std::move(sys));
  return out;
}

}  // namespace wonderful
