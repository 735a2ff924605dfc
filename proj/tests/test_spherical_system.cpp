#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <tuple>

#include "wonderful/dynkin.hpp"
#include "wonderful/error.hpp"
#include "wonderful/rank_one.hpp"
#include "wonderful/spherical_system.hpp"

using namespace wonderful;

namespace {

Weight w(std::initializer_list<int> c) {
  Weight out(static_cast<int>(c.size()));
  int i = 0;
  for (int x : c) out[i++] = x;
  return out;
}

Weight ones(int n) { return Weight::Ones(n); }

/// Rank-1 rows written out independently of the library table: family, n, coefficients, S^p positions.
struct PlainRow {
  std::string label;
  std::vector<Component> pattern;
  std::vector<int> coeffs;
  std::vector<int> sp;
};

std::vector<PlainRow> plain_rows(int max_n) {
  std::vector<PlainRow> rows;
  auto seq = [](int a, int b) {
    std::vector<int> v;
    for (int i = a; i <= b; ++i) v.push_back(i);
    return v;
  };
  for (int n = 2; n <= max_n; ++n) rows.push_back({"a(" + std::to_string(n) + ")", {{'A', n}}, std::vector<int>(n, 1), seq(2, n - 1)});
  rows.push_back({"a′(1)", {{'A', 1}}, {2}, {}});
  rows.push_back({"aa(1,1)", {{'A', 1}, {'A', 1}}, {1, 1}, {}});
  rows.push_back({"d(3)", {{'A', 3}}, {1, 2, 1}, {1, 3}});
  for (int n = 2; n <= max_n; ++n) {
    const std::string s = std::to_string(n);
    rows.push_back({"b(" + s + ")", {{'B', n}}, std::vector<int>(n, 1), seq(2, n)});
    rows.push_back({"b′(" + s + ")", {{'B', n}}, std::vector<int>(n, 2), seq(2, n)});
    rows.push_back({"b∗(" + s + ")", {{'B', n}}, std::vector<int>(n, 1), seq(2, n - 1)});
  }
  rows.push_back({"b∗∗(3)", {{'B', 3}}, {1, 2, 3}, {1, 2}});
  for (int n = 3; n <= max_n; ++n) {
    std::vector<int> c(n, 2);
    c.front() = c.back() = 1;
    std::vector<int> spc = seq(3, n);
    spc.insert(spc.begin(), 1);
    rows.push_back({"c(" + std::to_string(n) + ")", {{'C', n}}, c, spc});
    rows.push_back({"c∗(" + std::to_string(n) + ")", {{'C', n}}, c, seq(3, n)});
  }
  for (int n = 4; n <= max_n; ++n) {
    std::vector<int> c(n, 2);
    c[n - 2] = c[n - 1] = 1;
    rows.push_back({"d(" + std::to_string(n) + ")", {{'D', n}}, c, seq(2, n)});
  }
  rows.push_back({"f(4)", {{'F', 4}}, {1, 2, 3, 2}, {1, 2, 3}});
  rows.push_back({"g(2)", {{'G', 2}}, {2, 1}, {2}});
  rows.push_back({"g′(2)", {{'G', 2}}, {4, 2}, {2}});
  rows.push_back({"g∗(2)", {{'G', 2}}, {1, 1}, {}});
  return rows;
}

using Key = std::tuple<std::vector<int>, std::uint64_t, std::string>;

/// Brute force: try every injective tuple of ambient nodes for every row.
std::set<Key> brute_force_candidates(const DynkinDiagram& d) {
  std::set<Key> out;
  for (const PlainRow& row : plain_rows(d.rank())) {
    Eigen::MatrixXi p = Eigen::MatrixXi::Zero(row.coeffs.size(), row.coeffs.size());
    int off = 0;
    for (const Component& c : row.pattern) {
      p.block(off, off, c.rank, c.rank) = cartan_matrix(c);
      off += c.rank;
    }
    const int k = static_cast<int>(row.coeffs.size());
    if (k > d.rank()) continue;
    std::vector<int> nodes(d.rank());
    for (int i = 0; i < d.rank(); ++i) nodes[i] = i;
    // Iterate over all k-permutations via sorted subsets and their permutations.
    std::vector<bool> pick(d.rank(), false);
    std::fill(pick.begin(), pick.begin() + k, true);
    do {
      std::vector<int> chosen;
      for (int i = 0; i < d.rank(); ++i)
        if (pick[i]) chosen.push_back(i);
      std::sort(chosen.begin(), chosen.end());
      do {
        bool ok = true;
        for (int a = 0; a < k && ok; ++a)
          for (int b = 0; b < k && ok; ++b) ok = p(a, b) == d.cartan()(chosen[a], chosen[b]);
        if (!ok) continue;
        std::vector<int> weight(d.rank(), 0);
        std::uint64_t trace = 0;
        for (int a = 0; a < k; ++a) weight[chosen[a]] = row.coeffs[a];
        for (int s : row.sp) trace |= std::uint64_t{1} << chosen[s - 1];
        out.insert({weight, trace, row.label});
      } while (std::next_permutation(chosen.begin(), chosen.end()));
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return out;
}

}  // namespace

TEST_CASE("rank-1 table lookups") {
  CHECK(rank_one_table().size() == 15);
  const auto g2 = rank_one_system("g(2)");
  CHECK(g2.diagram().to_string() == "G2");
  CHECK(g2.sigma().front() == w({2, 1}));
  CHECK(g2.sp() == NodeSet::of({1}));

  const auto aa = rank_one_system("aa(1,1)");
  CHECK(aa.diagram().to_string() == "A1,A1");
  CHECK(aa.sigma().front() == w({1, 1}));
  CHECK(aa.sp().empty());

  const auto bss = rank_one_system("b**(3)");
  CHECK(bss.diagram().to_string() == "B3");
  CHECK(bss.sigma().front() == w({1, 2, 3}));
  CHECK(bss.sp() == NodeSet::of({0, 1}));

  CHECK_THROWS_AS(rank_one_instance("q(3)"), ParameterError);
  CHECK_THROWS_AS(rank_one_instance("d(3)x"), ParameterError);
  CHECK_THROWS_AS(rank_one_instance("c(2)"), ParameterError);
}

TEST_CASE("every rank-1 row validates on its own support") {
  for (const RankOneDatum& row : rank_one_table()) {
    for (int n = row.min_rank; n <= (row.max_rank ? row.max_rank : 7); ++n) {
      const auto sys = rank_one_system(row.instance_label(n));
      CAPTURE(row.instance_label(n));
      CHECK(sys.valid());
      CHECK(is_cuspidal(sys));
      CHECK(sys.sigma().front().minCoeff() >= 0);
    }
  }
}

TEST_CASE("rank-1 aliases") {
  CHECK(rank_one_system("d(2)") == rank_one_system("aa(1,1)"));
  CHECK(rank_one_system("b′(1)") == rank_one_system("a′(1)"));
  CHECK(rank_one_system("c∗(2)") == rank_one_system("b∗(2)"));
}

TEST_CASE("candidate spherical roots agree with brute force") {
  for (const char* diagram_text : {"A1", "A2", "A3", "B2", "B3", "C3", "G2", "A1,A1", "A2,A2", "D4", "F4", "A1,B2", "D5"}) {
    const auto d = DynkinDiagram::parse(diagram_text);
    std::set<Key> lib;
    for (const RankOneMatch& m : candidate_spherical_roots(d))
      lib.insert({std::vector<int>(m.weight.data(), m.weight.data() + m.weight.size()), m.trace.bits(), m.label});
    CAPTURE(diagram_text);
    CHECK(lib == brute_force_candidates(d));
    CHECK(lib.size() == candidate_spherical_roots(d).size());
  }
  const auto a1 = candidate_spherical_roots(DynkinDiagram::parse("A1"));
  REQUIRE(a1.size() == 1);
  CHECK(a1.front().weight == w({2}));
  bool cross = false;
  for (const RankOneMatch& m : candidate_spherical_roots(DynkinDiagram::parse("A1,A1")))
    cross = cross || (m.label == "aa(1,1)" && m.weight == w({1, 1}));
  CHECK(cross);
}

TEST_CASE("axiom S and R examples") {
  for (int n = 2; n <= 6; ++n) {
    const auto b = DynkinDiagram::build({{'B', n}});
    const NodeSet all = b.all_nodes();
    CHECK(axiom_S_holds(ones(n), all - NodeSet::single(0), b));
    CHECK(axiom_R_violated(ones(n), all - NodeSet::single(0), b));
    CHECK(axiom_S_holds(ones(n), all - NodeSet::of({0, n - 1}), b));
    CHECK_FALSE(axiom_R_violated(ones(n), all - NodeSet::of({0, n - 1}), b));
    if (n >= 3) CHECK_FALSE(axiom_S_holds(ones(n), NodeSet{}, b));
  }
  // At n = 2 both printed readings of the b∗ trace coincide with S∖{α1,α2} = ∅.
  const auto b2 = DynkinDiagram::parse("B2");
  CHECK(axiom_S_holds(ones(2), NodeSet{}, b2));

  const auto g2 = DynkinDiagram::parse("G2");
  CHECK(axiom_R_violated(w({2, 1}), NodeSet::of({1}), g2));
  CHECK_FALSE(axiom_R_violated(w({1, 1}), NodeSet{}, g2));

  // Outside-support S^p nodes must be orthogonal to γ.
  const auto a3 = DynkinDiagram::parse("A3");
  CHECK(axiom_S_holds(w({1, 1, 0}), NodeSet{}, a3));
  CHECK_FALSE(axiom_S_holds(w({1, 1, 0}), NodeSet::of({2}), a3));
  const auto a4 = DynkinDiagram::parse("A4");
  CHECK(axiom_S_holds(w({1, 1, 0, 0}), NodeSet::of({3}), a4));
}

TEST_CASE("axiom S is invariant under automorphisms") {
  for (const char* diagram_text : {"A4", "D4", "A2,A2", "E6"}) {
    const auto d = DynkinDiagram::parse(diagram_text);
    const auto cands = candidate_spherical_roots(d);
    for (const Permutation& p : automorphisms(d))
      for (const RankOneMatch& m : cands)
        for (std::uint64_t extra = 0; extra < 4; ++extra) {
          const NodeSet sp = m.trace | NodeSet(extra);
          CHECK(axiom_S_holds(m.weight, sp, d) == axiom_S_holds(permute(m.weight, p), permute(sp, p), d));
        }
  }
}

TEST_CASE("validate examples") {
  const auto a3 = DynkinDiagram::parse("A3");
  const SphericalSystem aap(a3, NodeSet{}, {w({1, 0, 1}), w({0, 2, 0})});
  CHECK(aap.valid());

  const SphericalSystem simple(DynkinDiagram::parse("A1"), NodeSet{}, {w({1})});
  CHECK_FALSE(simple.valid());
  CHECK_FALSE(simple.report().r_prime);
  REQUIRE_FALSE(simple.report().violations.empty());
  bool witnessed = false;
  for (const Violation& v : simple.report().violations)
    witnessed = witnessed || (v.axiom == Axiom::RPrime && v.node == 0);
  CHECK(witnessed);

  const SphericalSystem bad(DynkinDiagram::parse("A2"), NodeSet{}, {w({2, 0}), w({1, 1})});
  CHECK_FALSE(bad.report().sigma1);
  CHECK_FALSE(bad.valid());

  const SphericalSystem dup(DynkinDiagram::parse("A1"), NodeSet{}, {w({2}), w({2})});
  CHECK_FALSE(dup.report().distinct);

  const SphericalSystem neg(DynkinDiagram::parse("A2"), NodeSet{}, {w({1, -1})});
  CHECK_FALSE(neg.report().shape);
}

TEST_CASE("sigma2 failure is witnessed") {
  // α1+α3 ∈ Σ on A3 with 2α2: pairings of α1, α3 agree; break them with α2+α3-type root on A4.
  const auto a4 = DynkinDiagram::parse("A4");
  const SphericalSystem sys(a4, NodeSet{}, {w({1, 0, 1, 0}), w({0, 0, 1, 1})});
  CHECK_FALSE(sys.report().sigma2);
}

TEST_CASE("independence is configurable") {
  // Three roots in a rank-2 lattice: a dependent family passing all printed axioms
  // must be rejected only when independence is required.
  const auto a2 = DynkinDiagram::parse("A1,A1");
  const SphericalSystem sys(a2, NodeSet{}, {w({2, 0}), w({0, 2}), w({1, 1})});
  CHECK_FALSE(sys.report().independent);
  const SphericalSystem relaxed(a2, NodeSet{}, {w({2, 0}), w({0, 2}), w({1, 1})}, {false});
  CHECK(relaxed.report().independent);
}

TEST_CASE("colours and rho") {
  const auto aa = colours(rank_one_system("aa(1,1)"));
  REQUIRE(aa.size() == 1);
  CHECK(aa.classes[0] == NodeSet::of({0, 1}));
  CHECK(aa.rho(0, 0) == 2);

  const auto a3 = DynkinDiagram::parse("A3");
  const SphericalSystem aap(a3, NodeSet{}, {w({1, 0, 1}), w({0, 2, 0})});
  const auto c = colours(aap);
  REQUIRE(c.size() == 2);
  CHECK(c.classes[0] == NodeSet::of({0, 2}));
  CHECK(c.rho.row(0) == Eigen::RowVector2i(2, -2));
  CHECK(c.rho.row(1) == Eigen::RowVector2i(-1, 2));
  CHECK(c.under[1]);
  CHECK(c.name(0, a3) == "D1+3");

  for (int n = 2; n <= 5; ++n) {
    const auto b = colours(rank_one_system("b(" + std::to_string(n) + ")"));
    REQUIRE(b.size() == 1);
    CHECK(b.classes[0] == NodeSet::single(0));
    CHECK(b.rho(0, 0) == 1);
  }
}

TEST_CASE("strictness and cuspidality") {
  for (int n = 2; n <= 5; ++n) {
    CHECK_FALSE(is_strict(rank_one_system("b(" + std::to_string(n) + ")")));
    CHECK(is_strict(rank_one_system("b∗(" + std::to_string(n) + ")")));
    CHECK(is_strict(rank_one_system("b′(" + std::to_string(n) + ")")));
  }
  CHECK_FALSE(is_strict(rank_one_system("g(2)")));
  CHECK(is_cuspidal(rank_one_system("g(2)")));
  const SphericalSystem a2in3(DynkinDiagram::parse("A3"), NodeSet{}, {w({1, 1, 0})});
  CHECK(a2in3.valid());
  CHECK_FALSE(is_cuspidal(a2in3));
}

TEST_CASE("strict systems have no simple spherical roots") {
  for (const char* diagram_text : {"A2", "B2", "G2", "A1,A1", "B3"}) {
    const auto d = DynkinDiagram::parse(diagram_text);
    for (const RankOneMatch& m : candidate_spherical_roots(d)) {
      const SphericalSystem sys(d, m.trace, {m.weight});
      if (sys.valid() && is_strict(sys)) CHECK(sys.report().r_prime);
    }
  }
}
