#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "wonderful/dynkin.hpp"
#include "wonderful/error.hpp"

using namespace wonderful;

namespace {

int expected_root_count(const Component& c) {
  const int n = c.rank;
  switch (c.family) {
    case 'A': return n * (n + 1) / 2;
    case 'B':
    case 'C': return n * n;
    case 'D': return n * (n - 1);
    case 'E': return n == 6 ? 36 : n == 7 ? 63 : 120;
    case 'F': return 24;
    default: return 6;
  }
}

std::vector<Component> all_simple(int max_rank) {
  std::vector<Component> out;
  for (int n = 1; n <= max_rank; ++n) out.push_back({'A', n});
  for (int n = 2; n <= max_rank; ++n) out.push_back({'B', n});
  for (int n = 3; n <= max_rank; ++n) out.push_back({'C', n});
  for (int n = 4; n <= max_rank; ++n) out.push_back({'D', n});
  for (int n = 6; n <= 8; ++n) out.push_back({'E', n});
  out.push_back({'F', 4});
  out.push_back({'G', 2});
  return out;
}

}  // namespace

TEST_CASE("build_diagram basic shapes") {
  const auto a1 = DynkinDiagram::build({{'A', 1}});
  CHECK(a1.rank() == 1);
  CHECK(a1.edges().empty());

  const auto g2 = DynkinDiagram::build({{'G', 2}});
  REQUIRE(g2.edges().size() == 1);
  CHECK(g2.edges()[0].multiplicity == 3);
  CHECK(g2.edges()[0].short_end == 0);

  const auto ff = DynkinDiagram::build({{'F', 4}, {'F', 4}});
  CHECK(ff.rank() == 8);
  CHECK(ff.components().size() == 2);
  CHECK(ff.to_string() == "F4,F4");
}

TEST_CASE("invalid families are rejected") {
  CHECK_THROWS_AS(DynkinDiagram::build({{'E', 9}}), DiagramError);
  CHECK_THROWS_AS(DynkinDiagram::build({{'F', 5}}), DiagramError);
  CHECK_THROWS_AS(DynkinDiagram::build({{'G', 3}}), DiagramError);
  CHECK_THROWS_AS(DynkinDiagram::build({{'H', 3}}), DiagramError);
  CHECK_THROWS_AS(DynkinDiagram::build({{'D', 1}}), DiagramError);
  CHECK_THROWS_AS(DynkinDiagram::build({{'A', 0}}), DiagramError);
  CHECK_THROWS(DynkinDiagram::parse("Q3"));
  CHECK_THROWS(DynkinDiagram::parse(""));
}

TEST_CASE("degenerate ranks canonicalize") {
  CHECK(DynkinDiagram::build({{'B', 1}}).to_string() == "A1");
  CHECK(DynkinDiagram::build({{'C', 1}}).to_string() == "A1");
  CHECK(DynkinDiagram::build({{'C', 2}}).to_string() == "B2");
  CHECK(DynkinDiagram::build({{'D', 2}}).to_string() == "A1,A1");
  CHECK(DynkinDiagram::build({{'D', 3}}).to_string() == "A3");

  // C2's long root alpha_2 is B2's long root alpha_1.
  const auto c2 = DynkinDiagram::embed({{'C', 2}});
  CHECK(c2.node_of[0][0] == 1);
  CHECK(c2.node_of[0][1] == 0);
  // D3's middle-free end alpha_1 is A3's central node.
  const auto d3 = DynkinDiagram::embed({{'D', 3}});
  CHECK(d3.node_of[0] == std::vector<int>{1, 0, 2});
  const auto d2 = DynkinDiagram::embed({{'D', 2}});
  CHECK(d2.node_of[0] == std::vector<int>{0, 1});
}

TEST_CASE("components sort canonically") {
  const auto d = DynkinDiagram::parse("g2, a3 ,B2");
  CHECK(d.to_string() == "A3,B2,G2");
  CHECK(d == DynkinDiagram::parse("B2xA3xG2"));
  const auto e = DynkinDiagram::embed({{'G', 2}, {'A', 3}});
  CHECK(e.node_of[0] == std::vector<int>{3, 4});
  CHECK(e.node_of[1] == std::vector<int>{0, 1, 2});
}

TEST_CASE("cartan pairing conventions") {
  const auto b2 = DynkinDiagram::parse("B2");
  CHECK(b2.cartan_pairing(1, 0) == -2);
  CHECK(b2.cartan_pairing(0, 1) == -1);
  const auto c3 = DynkinDiagram::parse("C3");
  CHECK(c3.cartan_pairing(1, 2) == -2);
  const auto f4 = DynkinDiagram::parse("F4");
  CHECK(f4.cartan_pairing(2, 1) == -2);
  const auto g2 = DynkinDiagram::parse("G2");
  CHECK(g2.cartan_pairing(0, 1) == -3);
  const auto e6 = DynkinDiagram::parse("E6");
  CHECK(e6.cartan_pairing(1, 3) == -1);
  CHECK(e6.cartan_pairing(1, 2) == 0);
  const auto aa = DynkinDiagram::parse("A2,A2");
  CHECK(aa.cartan_pairing(0, 2) == 0);
  CHECK_THROWS(aa.cartan_pairing(0, 4));

  for (const Component& c : all_simple(6)) {
    const auto d = DynkinDiagram::build({c});
    for (int i = 0; i < d.rank(); ++i) {
      CHECK(d.cartan_pairing(i, i) == 2);
      for (int j = 0; j < d.rank(); ++j) {
        if (i == j) continue;
        const int aij = d.cartan_pairing(i, j);
        const int aji = d.cartan_pairing(j, i);
        CHECK((aij < 0) == (aji < 0));
        CHECK(aij >= -3);
        CHECK(aij * aji <= 3);
      }
    }
  }
}

TEST_CASE("positive root counts") {
  for (const Component& c : all_simple(9)) {
    const auto d = DynkinDiagram::build({c});
    CAPTURE(d.to_string());
    CHECK(static_cast<int>(d.positive_roots().size()) == expected_root_count(c));
  }
  const auto a2 = DynkinDiagram::parse("A2");
  std::set<Weight, WeightLess> roots(a2.positive_roots().begin(), a2.positive_roots().end());
  CHECK(roots.size() == 3);
  CHECK(roots.count(Weight{{1, 1}}));
  const auto g2 = DynkinDiagram::parse("G2");
  std::set<Weight, WeightLess> groots(g2.positive_roots().begin(), g2.positive_roots().end());
  CHECK(groots.count(Weight{{3, 2}}));
  CHECK(groots.count(Weight{{3, 1}}));
  const auto e8 = DynkinDiagram::parse("E8");
  int top = 0;
  for (const Weight& r : e8.positive_roots()) top = std::max(top, r.sum());
  CHECK(top == 29);  // Coxeter number minus one
}

TEST_CASE("roots are closed under reflections") {
  // Independent oracle: s_i(beta) = beta - <alpha_i^vee, beta> alpha_i permutes the roots.
  for (const Component& c : all_simple(5)) {
    const auto d = DynkinDiagram::build({c});
    std::set<Weight, WeightLess> all;
    for (const Weight& r : d.positive_roots()) {
      all.insert(r);
      all.insert(Weight(-r));
    }
    for (const Weight& r : all)
      for (int i = 0; i < d.rank(); ++i) {
        Weight s = r;
        s[i] -= d.pairing(i, r);
        CHECK(all.count(s));
      }
  }
}

TEST_CASE("dim_flag") {
  const auto b3 = DynkinDiagram::parse("B3");
  CHECK(dim_flag(b3, b3.all_nodes()) == 0);
  CHECK(dim_flag(b3, NodeSet::of({1, 2})) == 5);
  for (int n = 1; n <= 6; ++n) {
    const auto a = DynkinDiagram::build({{'A', n}});
    CHECK(dim_flag(a, NodeSet{}) == n * (n + 1) / 2);
  }
  const auto f4 = DynkinDiagram::parse("F4");
  for (std::uint64_t s = 0; s < 16; ++s)
    for (std::uint64_t t = 0; t < 16; ++t)
      if ((s & ~t) == 0) CHECK(dim_flag(f4, NodeSet(s)) >= dim_flag(f4, NodeSet(t)));
}

TEST_CASE("automorphism counts") {
  const std::map<std::string, std::size_t> expected = {
      {"A1", 1}, {"A3", 2}, {"A2,A2", 8}, {"D4", 6}, {"D5", 2}, {"E6", 2}, {"E7", 1},
      {"F4", 1}, {"G2", 1}, {"B3", 1},    {"A1,A1,A1", 6},       {"F4,F4", 2}, {"A1,A3", 2}};
  for (const auto& [diagram_text, count] : expected) {
    CAPTURE(diagram_text);
    CHECK(automorphisms(DynkinDiagram::parse(diagram_text)).size() == count);
  }
}

TEST_CASE("automorphisms permute positive roots") {
  for (const char* diagram_text : {"A4", "D4", "E6", "A2,A2", "B2,B2"}) {
    const auto d = DynkinDiagram::parse(diagram_text);
    std::set<Weight, WeightLess> roots(d.positive_roots().begin(), d.positive_roots().end());
    for (const Permutation& p : automorphisms(d)) {
      std::set<Weight, WeightLess> image;
      for (const Weight& r : d.positive_roots()) image.insert(permute(r, p));
      CHECK(image == roots);
    }
  }
}

TEST_CASE("induced subdiagrams") {
  const auto f4 = DynkinDiagram::parse("F4");
  const auto sub = DynkinDiagram::induced(f4, NodeSet::of({1, 2, 3}));
  CHECK(sub.diagram.to_string() == "C3");
  CHECK(sub.node_of[0] == std::vector<int>{3, 2, 1});
  const auto sub2 = DynkinDiagram::induced(f4, NodeSet::of({0, 1, 2}));
  CHECK(sub2.diagram.to_string() == "B3");
  const auto d5 = DynkinDiagram::parse("D5");
  const auto sub3 = DynkinDiagram::induced(d5, NodeSet::of({2, 3, 4}));
  CHECK(sub3.diagram.to_string() == "A3");
  CHECK(sub3.node_of[0][1] == 2);
  const auto sub4 = DynkinDiagram::induced(d5, NodeSet::of({0, 3, 4}));
  CHECK(sub4.diagram.to_string() == "A1,A1,A1");
}

TEST_CASE("weight formatting") {
  const auto d = DynkinDiagram::parse("A1,A1");
  CHECK(d.weight_to_string(Weight{{1, 1}}) == "α1+α′1");
  CHECK(d.weight_to_string(Weight{{2, 0}}) == "2α1");
}
