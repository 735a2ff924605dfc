// One pass/fail line per acceptance criterion; exits nonzero when any criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "expansion.hpp"
#include "golden_cases.hpp"
#include "oracles.hpp"
#include "wonderful/appendix.hpp"
#include "wonderful/catalog.hpp"
#include "wonderful/dictionary.hpp"
#include "wonderful/enumerate.hpp"
#include "wonderful/rank_one.hpp"
#include "wonderful/render.hpp"

using namespace wonderful;

namespace {

/// Collects failures of one criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    ++checked_;
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    failed_ += !ok;
  }
  bool ok() const { return failed_ == 0; }
  int checked() const { return checked_; }
  std::string summary() const {
    std::ostringstream s;
    s << checked_ - failed_ << "/" << checked_ << " checks";
    for (const std::string& f : failures_) s << "; failed: " << f;
    return s.str();
  }

 private:
  int checked_ = 0;
  int failed_ = 0;
  std::vector<std::string> failures_;
};

void criterion_1(Check& c) {
  const auto& table = rank_one_table();
  c.expect(table.size() == 15, "15 rank-one rows");
  for (const RankOneDatum& row : table) {
    const std::string label = row.instance_label(row.min_rank);
    const SphericalSystem s = rank_one_system(label);
    c.expect(s.valid() && s.rank() == 1 && is_cuspidal(s), label + " validates on its own support");
  }
  for (const auto& [alias, target] : std::vector<std::pair<std::string, std::string>>{
           {"d(2)", "aa(1,1)"}, {"b′(1)", "a′(1)"}, {"c∗(2)", "b∗(2)"}}) {
    c.expect(canonical_key(rank_one_system(alias)) == canonical_key(rank_one_system(target)),
             alias + " = " + target);
    c.expect(rank_one_instance(alias).label() == target, alias + " resolves to " + target);
  }
}

void criterion_2(Check& c) {
  for (const std::string& diagram_text : expansion::reproduction_diagrams()) {
    const DynkinDiagram d = DynkinDiagram::parse(diagram_text);
    const auto primitive = enumerate_primitive(d);
    const auto keys = expansion::keys_of(primitive);
    c.expect(keys.size() == primitive.size(), diagram_text + " has no duplicate orbits");
    c.expect(keys == expansion::keys_on(d), diagram_text + " matches the expanded family list");
  }
  c.expect(enumerate_primitive(DynkinDiagram::parse("G2")).size() == 4, "G2 has 4 primitives");
  c.expect(enumerate_primitive(DynkinDiagram::parse("F4")).size() == 6, "F4 has 6 primitives");
}

void criterion_3(Check& c) {
  for (const std::string& diagram_text : expansion::reproduction_diagrams()) {
    const DynkinDiagram d = DynkinDiagram::parse(diagram_text);
    const StrictnessReport r = strictness_report(d);
    c.expect(expansion::keys_of(r.non_strict) == expansion::keys_on(d, true), diagram_text + " non-strict set");
  }
}

/// Selfnormalising symmetric subgroup families at the smallest parameters of each row.
const std::map<std::pair<std::string, std::string>, std::string>& symmetric_families() {
  static const std::map<std::pair<std::string, std::string>, std::string> m = {
      {{"A×A", ""}, "aa(1,1)"},         {{"B×B", ""}, "bb(2,2)"},          {{"C×C", ""}, "cc(3,3)"},
      {{"D×D", ""}, "dd(4,4)"},         {{"E×E", ""}, "ee(6,6)"},          {{"F×F", ""}, "ff(4,4)"},
      {{"G×G", ""}, "gg(2,2)"},         {{"A I", ""}, "ao(1)"},            {{"A II", ""}, "ac(3)"},
      {{"A III", "q≥2"}, "aa(1+2+1)"},  {{"A III", "q=1"}, "aa′(1+1+1)"},  {{"A IV", "n≥2"}, "a(2)"},
      {{"A IV", "n=1"}, "ao(1)"},       {{"B I", ""}, "bo(1+1)"},          {{"B II", ""}, "b′(2)"},
      {{"C I", ""}, "co(3)"},           {{"C II", "p=0, q≥3"}, "c(3)"},    {{"C II", "p≥2, q≥3"}, "cc(2+3)"},
      {{"C II", "q=2"}, "cc′(2+2)"},    {{"D I", "q≥2"}, "do(1+3)"},       {{"D I", "q=0"}, "do(4)"},
      {{"D II", ""}, "d(4)"},           {{"D III", "n even"}, "dc′(6)"},   {{"D III", "n odd"}, "dc(5)"},
      {{"E I", ""}, "eo(6)"},           {{"E II", ""}, "ea(6)"},           {{"E III", ""}, "ed(6)"},
      {{"E IV", ""}, "ef(6)"},          {{"E V", ""}, "eo(7)"},            {{"E VI", ""}, "ec(7)"},
      {{"E VII", ""}, "ef(7)"},         {{"E VIII", ""}, "eo(8)"},         {{"E IX", ""}, "ef(8)"},
      {{"F I", ""}, "fo(4)"},           {{"F II", ""}, "f(4)"},            {{"G", ""}, "go(2)"},
  };
  return m;
}

void criterion_4(Check& c) {
  const auto& expected = symmetric_families();
  for (const SymmetricDatum& row : symmetric_table()) {
    const std::string name = row.cartan_label + (row.case_label.empty() ? "" : " (" + row.case_label + ")");
    const SphericalSystem s = symmetric_system(row.cartan_label, row.minimal);
    const auto inst = classify(s);
    const auto it = expected.find({row.cartan_label, row.case_label});
    c.expect(s.valid() && inst && it != expected.end() && inst->label() == it->second, name);
  }
  for (int n = 2; n <= 5; ++n) {
    const SphericalSystem full = symmetric_system("B II", {n});
    const SphericalSystem half = halved_symmetric_system("B II", {n});
    const auto fi = classify(full);
    const auto hi = classify(half);
    c.expect(full.valid() && fi && fi->family->label == "b′(n)", "B II n=" + std::to_string(n) + " gives b′(n)");
    c.expect(half.valid() && hi && hi->family->label == "b(n)", "B II n=" + std::to_string(n) + " halved gives b(n)");
  }
}

/// Some ξ in Q≥0 Σ pairs positively with every colour, decided by Fourier–Motzkin elimination
/// on ρ x − t ≥ 0, x ≥ 0, t ≥ 1.
bool affine_by_elimination(const SphericalSystem& s) {
  const ColourSet cs = colours(s);
  const int m = s.rank();
  Eigen::MatrixXi a(cs.size(), m + 1);
  a.leftCols(m) = cs.rho;
  a.col(m).setConstant(-1);
  std::vector<int> lower(m + 1, 0);
  lower[m] = 1;
  return oracle::fm_feasible(a, lower);
}

void criterion_5(Check& c) {
  std::vector<SphericalSystem> affine;
  for (int n : {4, 6}) affine.push_back(instantiate("ac∗(n)", {n}));
  for (int n = 2; n <= 5; ++n) affine.push_back(instantiate("bc′(n)", {n}));
  affine.push_back(instantiate("b∗∗(3)", {}));
  affine.push_back(instantiate("b∗(4)+b∗∗(3)", {}));
  for (int n = 2; n <= 5; ++n) affine.push_back(instantiate("aa(1,1)+c∗(n)", {n}));
  for (const auto& [n1, n2] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 3}})
    affine.push_back(instantiate("aa(1,1)+c∗(n1)+c∗(n2)", {n1, n2}));
  for (int q = 3; q <= 5; ++q) affine.push_back(instantiate("a′(1)+c∗(q)", {q}));
  affine.push_back(instantiate("ds∗(4)", {}));
  affine.push_back(instantiate("g(2)", {}));
  affine.push_back(instantiate("g′(2)", {}));
  for (const SymmetricDatum& row : symmetric_table()) affine.push_back(symmetric_system(row.cartan_label, row.minimal));
  for (const SphericalSystem& s : affine) {
    const std::string name = classify(s) ? classify(s)->label() : "symmetric system";
    c.expect(affine_by_elimination(s), name + " is affine by elimination");
    c.expect(is_affine_feasible(s), name + " passes is_affine_feasible");
  }
  std::vector<std::string> non_affine;
  for (int n = 2; n <= 5; ++n) non_affine.push_back("b∗(" + std::to_string(n) + ")");
  for (int n = 3; n <= 5; ++n) non_affine.push_back("c∗(" + std::to_string(n) + ")");
  for (const std::string& label : non_affine) {
    const SphericalSystem s = rank_one_system(label);
    c.expect(!affine_by_elimination(s), label + " is not affine by elimination");
    c.expect(!is_affine_feasible(s), label + " fails is_affine_feasible");
  }
}

/// dim 𝔤 by the classical closed forms.
int lie_dimension(char family, int n) {
  switch (family) {
    case 'A': return n * (n + 2);
    case 'B':
    case 'C': return n * (2 * n + 1);
    case 'D': return n * (2 * n - 1);
    case 'E': return n == 6 ? 78 : n == 7 ? 133 : 248;
    case 'F': return 52;
    default: return 14;
  }
}

void criterion_6(Check& c) {
  const auto& table = height3_table();
  c.expect(table.size() == 11, "the printed height-3 table has 11 rows");
  for (const OrbitDatum& row : table) {
    const DynkinDiagram d = row.diagram(row.minimal);
    const Characteristic h = row.characteristic(row.minimal);
    c.expect(height(d, h) == 3, row.group + " has height 3");
  }
  const DynkinDiagram g2 = DynkinDiagram::parse("G2");
  c.expect(height(g2, {0, 1}) == 2, "G2 (01) height 2");
  c.expect(height(g2, {1, 0}) == 3, "G2 (10) height 3");
  c.expect(height(g2, {0, 2}) == 4, "G2 (02) height 4");
  for (const char* diagram_text : {"A1", "A2", "A3", "A4", "B2", "B3", "C3", "D4", "G2", "F4"}) {
    const DynkinDiagram d = DynkinDiagram::parse(diagram_text);
    const Component& comp = d.components().front();
    Characteristic h(d.rank(), 0);
    while (true) {
      int total = 0;
      for (const auto& [i, dim] : grading_dims(d, h)) total += dim;
      c.expect(total == lie_dimension(comp.family, comp.rank), std::string(diagram_text) + " grading sums to dim g");
      std::size_t i = 0;
      while (i < h.size() && h[i] == 2) h[i++] = 0;
      if (i == h.size()) break;
      ++h[i];
    }
  }
  for (const OrbitDatum& row : table) {
    const DynkinDiagram d = row.diagram(row.minimal);
    int total = 0;
    for (const auto& [i, dim] : grading_dims(d, row.characteristic(row.minimal))) total += dim;
    const Component& comp = d.components().front();
    c.expect(total == lie_dimension(comp.family, comp.rank), row.group + " grading sums to dim g");
  }
}

Permutation random_automorphism(const DynkinDiagram& d, std::mt19937& rng) {
  const auto autos = automorphisms(d);
  return autos[std::uniform_int_distribution<std::size_t>(0, autos.size() - 1)(rng)];
}

void criterion_7(Check& c) {
  // Hilbert bases against the pivot brute force over a box that holds every generator.
  std::mt19937 rng(97);
  std::uniform_int_distribution<int> entry(-4, 4), k_dist(1, 4), r_dist(1, 2);
  for (int done = 0; done < 500;) {
    const int k = k_dist(rng);
    const int r = std::min(r_dist(rng), k);
    Eigen::MatrixXi a(r, k);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < k; ++j) a(i, j) = entry(rng);
    if (oracle::max_minor(a) == 0) continue;
    ++done;
    const auto hb = hilbert_basis(a, k);
    const auto brute = oracle::pivot_minimal_solutions(a, oracle::hilbert_box_bound(a));
    c.expect(std::set<Eigen::VectorXi, WeightLess>(hb.begin(), hb.end()) ==
                     std::set<Eigen::VectorXi, WeightLess>(brute.begin(), brute.end()) &&
                 hb.size() == brute.size(),
             "hilbert basis instance " + std::to_string(done));
  }
  // Quotient by nothing, localization at Supp Σ, symmetry of decomposes.
  for (const char* diagram_text : {"A3", "B3", "C3", "G2", "A1,A2", "D4"}) {
    for (const SphericalSystem& s : enumerate_systems(DynkinDiagram::parse(diagram_text))) {
      const Dictionary dict(s);
      const QuotientResult& q = dict.quotient(ColourSubset{});
      const std::set<Weight, WeightLess> before(s.sigma().begin(), s.sigma().end());
      const std::set<Weight, WeightLess> after(q.sigma_out.begin(), q.sigma_out.end());
      c.expect(q.sp_out == s.sp() && before == after, std::string(diagram_text) + " quotient by nothing");
      c.expect(is_cuspidal(decuspidalize(s)), std::string(diagram_text) + " localization at Supp Σ is cuspidal");
      const int n = std::min(dict.colours().size(), 4);
      for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x)
        for (std::uint64_t y = 0; y < (std::uint64_t{1} << n); ++y) {
          const ColourSubset d1(x), d2(y);
          if (!dict.is_distinguished(d1) || !dict.is_distinguished(d2)) continue;
          c.expect(dict.decomposes(d1, d2) == dict.decomposes(d2, d1), std::string(diagram_text) + " decomposes symmetric");
        }
    }
  }
  // Automorphism invariance on randomly drawn (system, automorphism) pairs.
  std::vector<SphericalSystem> pool;
  for (const char* diagram_text : {"D4", "A4", "A5", "E6", "A2,A2", "B2,B2", "G2,G2", "A1,A1,A1"})
    for (SphericalSystem& s : enumerate_systems(DynkinDiagram::parse(diagram_text))) pool.push_back(std::move(s));
  int cases = 0;
  for (int trial = 0; trial < 1200; ++trial) {
    const SphericalSystem& s = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
    const Permutation p = random_automorphism(s.diagram(), rng);
    std::vector<Weight> sigma;
    for (const Weight& g : s.sigma()) sigma.push_back(permute(g, p));
    const SphericalSystem t(s.diagram(), permute(s.sp(), p), sigma);
    const Dictionary ds(s), dt(t);
    const ColourSet &cs = ds.colours(), &ct = dt.colours();
    bool same = t.valid() && is_affine_feasible(t) == is_affine_feasible(s) && is_strict(t) == is_strict(s) &&
                is_cuspidal(t) == is_cuspidal(s) &&
                ds.find_decomposition().has_value() == dt.find_decomposition().has_value();
    const int n = std::min(cs.size(), 5);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
      ColourSubset image;
      ColourSubset(bits).for_each([&](int col) { image.insert(ct.colour_of[p[cs.classes[col].elements().front()]]); });
      const bool dist = ds.is_distinguished(ColourSubset(bits));
      same = same && dt.is_distinguished(image) == dist;
      if (dist) {
        same = same && ds.quotient(ColourSubset(bits)).smooth == dt.quotient(image).smooth &&
               ds.quotient(ColourSubset(bits)).homogeneous == dt.quotient(image).homogeneous;
      }
    }
    ++cases;
    c.expect(same, "automorphism invariance case " + std::to_string(trial));
  }
  c.expect(cases >= 1000, "at least 1000 automorphism cases");
}

/// dim G − dim H for the classical pairs (G, H) realizing the families.
struct ClassicalPair {
  std::string label;
  SphericalSystem system;
  int dim_g;
  int dim_h;
  /// Rank of the character group of H.
  int rank;
};

int dim_so(int m) { return m * (m - 1) / 2; }
int dim_sl(int m) { return m * m - 1; }

void criterion_8(Check& c) {
  std::vector<ClassicalPair> table;
  // b(n): SO(2n+1) ⊃ SO(2n) (normalized), a semisimple subgroup up to finite index.
  for (int n = 2; n <= 5; ++n)
    table.push_back({"b(" + std::to_string(n) + ")", instantiate("b(n)", {n}), dim_so(2 * n + 1), dim_so(2 * n), 0});
  // ao(n): SL(n+1) ⊃ N(SO(n+1)).
  for (int n = 1; n <= 5; ++n)
    table.push_back({"ao(" + std::to_string(n) + ")", instantiate("ao(n)", {n}), dim_sl(n + 1), dim_so(n + 1), 0});
  // aa(1,1): SL(2) × SL(2) ⊃ diagonal SL(2).
  table.push_back({"aa(1,1)", instantiate("aa(p,p)", {1}), 2 * dim_sl(2), dim_sl(2), 0});
  for (const ClassicalPair& row : table) {
    const ExpectedDims e = expected_dims(row.system);
    c.expect(e.dim_homogeneous_space == row.dim_g - row.dim_h && e.rank_character_lattice == row.rank,
             row.label + " dimension and rank");
  }
}

void criterion_9(Check& c) {
  const auto cases = golden::cases();
  c.expect(cases.size() == 25, "15 rank-one and 10 catalog diagrams");
  for (const golden::Case& g : cases) {
    const std::string text = golden::read(golden::path(g.stem + ".txt"));
    const std::string svg = golden::read(golden::path(g.stem + ".svg"));
    c.expect(!text.empty() && render_text(g.system) == text, g.stem + ".txt");
    c.expect(!svg.empty() && render_svg(g.system) == svg, g.stem + ".svg");
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria = {
      {"rank-one catalog soundness", criterion_1},
      {"primitive list reproduction", criterion_2},
      {"strictness partition", criterion_3},
      {"symmetric-space cross-check", criterion_4},
      {"affinity lemma", criterion_5},
      {"nilpotent heights", criterion_6},
      {"dictionary property suite", criterion_7},
      {"dimension identities", criterion_8},
      {"rendering goldens", criterion_9},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    failed += !check.ok();
    std::cout << "criterion " << i + 1 << " " << (check.ok() ? "PASS" : "FAIL") << ": " << criteria[i].first
              << " (" << check.summary() << ", " << ms << " ms)\n";
  }
  return failed == 0 ? 0 : 1;
}
