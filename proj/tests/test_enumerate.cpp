#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <set>

#include "expansion.hpp"
#include "wonderful/dictionary.hpp"
#include "wonderful/enumerate.hpp"
#include "wonderful/error.hpp"

using namespace wonderful;

namespace {

Weight w(std::initializer_list<int> c) {
  Weight out(static_cast<int>(c.size()));
  int i = 0;
  for (int x : c) out[i++] = x;
  return out;
}

}  // namespace

TEST_CASE("A1 carries three systems") {
  const auto d = DynkinDiagram::parse("A1");
  const auto all = enumerate_systems(d);
  const std::set<CanonicalKey> expected = expansion::keys_of({
      SphericalSystem(d, NodeSet{}, {}),
      SphericalSystem(d, NodeSet{}, {w({2})}),
      SphericalSystem(d, NodeSet::of({0}), {}),
  });
  CHECK(all.size() == 3);
  CHECK(expansion::keys_of(all) == expected);
  CHECK(enumerate_primitive(d).size() == 1);
}

TEST_CASE("primitive counts on small diagrams") {
  CHECK(enumerate_primitive(DynkinDiagram::parse("G2")).size() == 4);
  CHECK(enumerate_primitive(DynkinDiagram::parse("F4")).size() == 6);
  CHECK(enumerate_primitive(DynkinDiagram::parse("B2")).size() == 5);
  CHECK(enumerate_primitive(DynkinDiagram::parse("A1,A3")).empty());
}

TEST_CASE("enumeration reproduces the primitive list") {
  for (const std::string& diagram_text : expansion::reproduction_diagrams()) {
    INFO(diagram_text);
    const auto d = DynkinDiagram::parse(diagram_text);
    const auto primitive = enumerate_primitive(d);
    CHECK(expansion::keys_of(primitive) == expansion::keys_on(d));
    // Up to automorphism: no two results share an orbit.
    CHECK(expansion::keys_of(primitive).size() == primitive.size());
    for (const SphericalSystem& s : primitive) CHECK(classify(s).has_value());
  }
}

TEST_CASE("enumerated systems are valid, distinct and sorted by canonical key") {
  for (const char* diagram_text : {"A3", "B3", "C3", "G2", "A1,A2"}) {
    INFO(diagram_text);
    const auto all = enumerate_systems(DynkinDiagram::parse(diagram_text));
    for (std::size_t i = 0; i < all.size(); ++i) {
      CHECK(all[i].valid());
      if (i > 0) CHECK(canonical_key(all[i - 1]) < canonical_key(all[i]));
    }
  }
}

TEST_CASE("cuspidal_only keeps exactly the cuspidal systems") {
  const auto d = DynkinDiagram::parse("B3");
  std::set<CanonicalKey> cuspidal;
  for (const SphericalSystem& s : enumerate_systems(d))
    if (is_cuspidal(s)) cuspidal.insert(canonical_key(s));
  EnumerationOptions options;
  options.cuspidal_only = true;
  CHECK(expansion::keys_of(enumerate_systems(d, options)) == cuspidal);
}

TEST_CASE("primitive systems satisfy the dimension identities") {
  for (const char* diagram_text : {"B3", "C4", "D4", "G2"}) {
    for (const SphericalSystem& s : enumerate_primitive(DynkinDiagram::parse(diagram_text))) {
      const ExpectedDims e = expected_dims(s);
      CHECK(e.dim_homogeneous_space >= 0);
      CHECK(e.rank_character_lattice >= 0);
    }
  }
}

TEST_CASE("strictness report partitions the primitives") {
  const auto d = DynkinDiagram::parse("B4");
  const StrictnessReport r = strictness_report(d);
  for (const SphericalSystem& s : r.strict) CHECK(is_strict(s));
  for (const SphericalSystem& s : r.non_strict) CHECK_FALSE(is_strict(s));
  CHECK(r.strict.size() + r.non_strict.size() == enumerate_primitive(d).size());
  std::set<std::string> labels;
  for (const SphericalSystem& s : r.non_strict) labels.insert(classify(s)->family->label);
  CHECK(labels == std::set<std::string>{"b(n)", "a(p)+b(q)"});
}

TEST_CASE("canonical key is invariant under diagram automorphisms") {
  const auto d = DynkinDiagram::parse("D4");
  for (const SphericalSystem& s : enumerate_systems(d)) {
    for (const Permutation& p : automorphisms(d)) {
      std::vector<Weight> sigma;
      for (const Weight& g : s.sigma()) sigma.push_back(permute(g, p));
      CHECK(canonical_key(SphericalSystem(d, permute(s.sp(), p), sigma)) == canonical_key(s));
    }
  }
}

TEST_CASE("search budget and rank limit") {
  EnumerationOptions tight;
  tight.budget = 10;
  CHECK_THROWS_AS(enumerate_systems(DynkinDiagram::parse("B4"), tight), BudgetExceeded);
  CHECK(effective_budget(tight) == 10);
  setenv("WONDERFUL_SEARCH_BUDGET", "123", 1);
  CHECK(effective_budget({}) == 123);
  CHECK(effective_budget(tight) == 10);
  unsetenv("WONDERFUL_SEARCH_BUDGET");
  CHECK(effective_budget({}) == default_search_budget);
  EnumerationOptions small;
  small.max_rank = 3;
  CHECK_THROWS_AS(enumerate_systems(DynkinDiagram::parse("A4"), small), PreconditionError);
}
