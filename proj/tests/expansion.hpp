#pragma once

// Loader for tests/golden/catalog_expansion.json, written by tools/expand_catalog.py
// from the printed family constraints without using the C++ catalog.

#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "wonderful/enumerate.hpp"
#include "wonderful/json_io.hpp"

namespace expansion {

struct Entry {
  std::string label;
  bool strict = true;
  wonderful::SphericalSystem system;
};

inline std::string golden_path(const std::string& name) { return std::string(WONDERFUL_GOLDEN_DIR) + "/" + name; }

inline const std::vector<Entry>& entries() {
  static const std::vector<Entry> all = [] {
    std::ifstream file(golden_path("catalog_expansion.json"));
    std::stringstream text;
    text << file.rdbuf();
    std::vector<Entry> out;
    for (const wonderful::Json& row : wonderful::parse_json(text.str()))
      out.push_back({row.at("label").get<std::string>(), row.at("strict").get<bool>(),
                     wonderful::system_from_json(row.at("system"))});
    return out;
  }();
  return all;
}

/// Canonical keys of the expanded systems on exactly the diagram d.
inline std::set<wonderful::CanonicalKey> keys_on(const wonderful::DynkinDiagram& d, bool only_non_strict = false) {
  std::set<wonderful::CanonicalKey> out;
  for (const Entry& e : entries())
    if (e.system.diagram() == d && (!only_non_strict || !e.strict)) out.insert(wonderful::canonical_key(e.system));
  return out;
}

inline std::set<wonderful::CanonicalKey> keys_of(const std::vector<wonderful::SphericalSystem>& systems) {
  std::set<wonderful::CanonicalKey> out;
  for (const wonderful::SphericalSystem& s : systems) out.insert(wonderful::canonical_key(s));
  return out;
}

/// Diagrams of the primitive-list reproduction check: every simple diagram of rank at most 4,
/// the simple diagrams of rank 5 and the listed composites.
inline std::vector<std::string> reproduction_diagrams() {
  return {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "F4", "G2",
          "A5", "B5", "C5", "D5", "A1,A1", "A1,A3", "B2,B2", "C3,C3", "G2,G2", "F4,F4"};
}

}  // namespace expansion
