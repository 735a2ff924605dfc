#include "wonderful/json_io.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

namespace wonderful {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw ParseError(std::string("expected an object holding '") + key + "'");
  const auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field '") + key + "'");
  return *it;
}

int as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  return j.get<int>();
}

bool as_bool(const Json& j, const char* what) {
  if (!j.is_boolean()) throw ParseError(std::string(what) + " must be a boolean");
  return j.get<bool>();
}

const Json& as_array(const Json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
  return j;
}

std::vector<Component> components_from_json(const Json& j) {
  if (j.is_string()) return DynkinDiagram::parse(j.get<std::string>()).components();
  std::vector<Component> out;
  for (const Json& c : as_array(field(j, "components"), "components")) {
    const Json& fam = field(c, "family");
    if (!fam.is_string() || fam.get<std::string>().size() != 1) throw ParseError("family must be a one-letter string");
    out.push_back({static_cast<char>(std::toupper(static_cast<unsigned char>(fam.get<std::string>()[0]))),
                   as_int(field(c, "rank"), "rank")});
  }
  return out;
}

/// Maps [component, index] references through node_of.
class NodeReader {
 public:
  explicit NodeReader(std::vector<std::vector<int>> node_of) : node_of_(std::move(node_of)) {}

  int node(const Json& ref) const {
    if (!ref.is_array() || ref.size() != 2) throw ParseError("node reference must be [component, index]");
    return lookup(as_int(ref[0], "component"), as_int(ref[1], "index"));
  }

  int lookup(int comp, int index) const {
    if (comp < 0 || comp >= static_cast<int>(node_of_.size()) || index < 1 ||
        index > static_cast<int>(node_of_[comp].size()))
      throw ParseError("node reference [" + std::to_string(comp) + "," + std::to_string(index) + "] out of range");
    return node_of_[comp][index - 1];
  }

  NodeSet nodes(const Json& j) const {
    NodeSet out;
    for (const Json& ref : as_array(j, "node list")) out.insert(node(ref));
    return out;
  }

  Weight weight(const Json& j, int rank) const {
    Weight w = Weight::Zero(rank);
    for (const Json& term : as_array(j, "weight")) {
      if (!term.is_array() || term.size() != 3) throw ParseError("weight term must be [component, index, coeff]");
      w[lookup(as_int(term[0], "component"), as_int(term[1], "index"))] += as_int(term[2], "coeff");
    }
    return w;
  }

 private:
  std::vector<std::vector<int>> node_of_;
};

std::vector<std::vector<int>> identity_map(const DynkinDiagram& d) {
  std::vector<std::vector<int>> out(d.components().size());
  for (int v = 0; v < d.rank(); ++v) out[d.component_of(v)].push_back(v);
  return out;
}

Json subset_positions(RootSubset s) { return Json(s.elements()); }

RootSubset positions_from_json(const SphericalSystem& sys, const Json& j) {
  RootSubset out;
  for (const Json& k : as_array(j, "root subset")) {
    const int i = as_int(k, "root position");
    if (i < 0 || i >= sys.rank()) throw ParseError("root position " + std::to_string(i) + " out of range");
    out.insert(i);
  }
  return out;
}

Json optional_colours(const SphericalSystem& sys, const ColourSet& cs, const std::optional<ColourSubset>& s) {
  return s ? colours_to_json(sys, cs, *s) : Json(nullptr);
}

std::optional<ColourSubset> optional_colours_from(const SphericalSystem& sys, const ColourSet& cs, const Json& j) {
  if (j.is_null()) return std::nullopt;
  return colours_from_json(sys, cs, j);
}

Json optional_node(const DynkinDiagram& d, int node) { return node < 0 ? Json(nullptr) : node_to_json(d, node); }
Json optional_index(int i) { return i < 0 ? Json(nullptr) : Json(i); }

std::string ascii_primes(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (c == '\'') out += "′";
    else out += c;
  }
  return out;
}

}  // namespace

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    const std::size_t byte = e.byte == 0 ? 0 : e.byte - 1;
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError("malformed JSON at line " + std::to_string(line) + ", column " + std::to_string(column) +
                     " (byte " + std::to_string(e.byte) + ")");
  }
}

Json to_json(const DynkinDiagram& d) {
  Json comps = Json::array();
  for (const Component& c : d.components()) comps.push_back({{"family", std::string(1, c.family)}, {"rank", c.rank}});
  return {{"components", comps}};
}

DynkinDiagram diagram_from_json(const Json& j) { return DynkinDiagram::build(components_from_json(j)); }

Json node_to_json(const DynkinDiagram& d, int node) {
  const NodeId id = d.id(node);
  return Json::array({id.component, id.index});
}

Json nodes_to_json(const DynkinDiagram& d, NodeSet nodes) {
  Json out = Json::array();
  nodes.for_each([&](int v) { out.push_back(node_to_json(d, v)); });
  return out;
}

Json weight_to_json(const DynkinDiagram& d, const Weight& w) {
  Json out = Json::array();
  for (int v = 0; v < w.size(); ++v) {
    if (w[v] == 0) continue;
    const NodeId id = d.id(v);
    out.push_back(Json::array({id.component, id.index, w[v]}));
  }
  return out;
}

Json to_json(const SphericalSystem& sys) {
  const DynkinDiagram& d = sys.diagram();
  Json sigma = Json::array();
  for (const Weight& g : sys.sigma()) sigma.push_back(weight_to_json(d, g));
  Json out = {{"diagram", to_json(d)}, {"sp", nodes_to_json(d, sys.sp())}, {"sigma", sigma}};
  if (!sys.options().require_independence) out["require_independence"] = false;
  return out;
}

SphericalSystem system_from_json(const Json& j) {
  const DynkinDiagram::Embedding e = DynkinDiagram::embed(components_from_json(field(j, "diagram")));
  const NodeReader reader(e.node_of);
  const NodeSet sp = reader.nodes(field(j, "sp"));
  std::vector<Weight> sigma;
  for (const Json& g : as_array(field(j, "sigma"), "sigma")) sigma.push_back(reader.weight(g, e.diagram.rank()));
  ValidationOptions options;
  if (const auto it = j.find("require_independence"); it != j.end())
    options.require_independence = as_bool(*it, "require_independence");
  return SphericalSystem(e.diagram, sp, std::move(sigma), options);
}

Json to_json(const SphericalSystem& sys, const ValidationReport& r) {
  const DynkinDiagram& d = sys.diagram();
  Json violations = Json::array();
  for (const Violation& v : r.violations) {
    violations.push_back({{"axiom", std::string(axiom_name(v.axiom))},
                          {"gamma", optional_index(v.gamma)},
                          {"other", optional_index(v.other)},
                          {"node", optional_node(d, v.node)},
                          {"node2", optional_node(d, v.node2)},
                          {"message", v.message}});
  }
  return {{"valid", r.valid()},
          {"axioms",
           {{"shape", r.shape},
            {"sigma1", r.sigma1},
            {"sigma2", r.sigma2},
            {"s", r.s},
            {"r_prime", r.r_prime},
            {"independent", r.independent},
            {"distinct", r.distinct}}},
          {"violations", violations}};
}

ValidationReport report_from_json(const DynkinDiagram& d, const Json& j) {
  const NodeReader reader(identity_map(d));
  const Json& ax = field(j, "axioms");
  ValidationReport r;
  r.shape = as_bool(field(ax, "shape"), "shape");
  r.sigma1 = as_bool(field(ax, "sigma1"), "sigma1");
  r.sigma2 = as_bool(field(ax, "sigma2"), "sigma2");
  r.s = as_bool(field(ax, "s"), "s");
  r.r_prime = as_bool(field(ax, "r_prime"), "r_prime");
  r.independent = as_bool(field(ax, "independent"), "independent");
  r.distinct = as_bool(field(ax, "distinct"), "distinct");
  const auto index = [](const Json& x) { return x.is_null() ? -1 : as_int(x, "index"); };
  const auto node = [&](const Json& x) { return x.is_null() ? -1 : reader.node(x); };
  for (const Json& v : as_array(field(j, "violations"), "violations")) {
    Violation out;
    const std::string name = field(v, "axiom").get<std::string>();
    bool found = false;
    for (Axiom a : {Axiom::Shape, Axiom::Sigma1, Axiom::Sigma2, Axiom::S, Axiom::RPrime, Axiom::Independence,
                    Axiom::Distinct}) {
      if (axiom_name(a) == name) {
        out.axiom = a;
        found = true;
      }
    }
    if (!found) throw ParseError("unknown axiom '" + name + "'");
    out.gamma = index(field(v, "gamma"));
    out.other = index(field(v, "other"));
    out.node = node(field(v, "node"));
    out.node2 = node(field(v, "node2"));
    out.message = field(v, "message").get<std::string>();
    r.violations.push_back(std::move(out));
  }
  return r;
}

Json colours_to_json(const SphericalSystem& sys, const ColourSet& cs, ColourSubset subset) {
  Json out = Json::array();
  subset.for_each([&](int c) { out.push_back(cs.name(c, sys.diagram())); });
  return out;
}

ColourSubset colours_from_json(const SphericalSystem& sys, const ColourSet& cs, const Json& j) {
  ColourSubset out;
  for (const Json& name : as_array(j, "colour list")) {
    if (!name.is_string()) throw ParseError("colour names must be strings");
    out |= parse_colour_list(sys, cs, name.get<std::string>());
  }
  return out;
}

ColourSubset parse_colour_list(const SphericalSystem& sys, const ColourSet& cs, std::string_view text) {
  ColourSubset out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find(',', start), text.size());
    std::string token(text.substr(start, end - start));
    token.erase(std::remove_if(token.begin(), token.end(), [](unsigned char c) { return std::isspace(c); }),
                token.end());
    if (!token.empty()) {
      token = ascii_primes(token);
      int match = -1;
      for (int c = 0; c < cs.size(); ++c)
        if (cs.name(c, sys.diagram()) == token) match = c;
      if (match < 0) {
        std::string known;
        for (int c = 0; c < cs.size(); ++c) known += (c ? ", " : "") + cs.name(c, sys.diagram());
        throw ParameterError("unknown colour '" + token + "'; colours are: " + (known.empty() ? "none" : known));
      }
      out.insert(match);
    }
    start = end + 1;
  }
  return out;
}

Json to_json(const SphericalSystem& sys, const ColourSet& cs) {
  Json out = Json::array();
  for (int c = 0; c < cs.size(); ++c) {
    Json rho = Json::array();
    for (int k = 0; k < sys.rank(); ++k) rho.push_back(cs.rho(c, k));
    out.push_back({{"name", cs.name(c, sys.diagram())},
                   {"nodes", nodes_to_json(sys.diagram(), cs.classes[c])},
                   {"under", static_cast<bool>(cs.under[c])},
                   {"rho", rho}});
  }
  return {{"colours", out}};
}

ColourSet colour_set_from_json(const SphericalSystem& sys, const Json& j) {
  const NodeReader reader(identity_map(sys.diagram()));
  const Json& list = as_array(field(j, "colours"), "colours");
  ColourSet cs;
  cs.colour_of.assign(sys.diagram().rank(), -1);
  cs.rho = Eigen::MatrixXi::Zero(static_cast<int>(list.size()), sys.rank());
  for (std::size_t c = 0; c < list.size(); ++c) {
    const NodeSet nodes = reader.nodes(field(list[c], "nodes"));
    cs.classes.push_back(nodes);
    nodes.for_each([&](int v) { cs.colour_of[v] = static_cast<int>(c); });
    cs.under.push_back(as_bool(field(list[c], "under"), "under"));
    const Json& rho = as_array(field(list[c], "rho"), "rho");
    if (static_cast<int>(rho.size()) != sys.rank()) throw ParseError("rho row length differs from |Σ|");
    for (int k = 0; k < sys.rank(); ++k) cs.rho(static_cast<int>(c), k) = as_int(rho[k], "rho entry");
  }
  return cs;
}

Json to_json(const SphericalSystem& sys, const ColourSet& cs, const QuotientResult& q) {
  const DynkinDiagram& d = sys.diagram();
  Json sigma = Json::array();
  for (const Weight& g : q.sigma_out) sigma.push_back(weight_to_json(d, g));
  Json coords = Json::array();
  for (const Eigen::VectorXi& c : q.coordinates) coords.push_back(std::vector<int>(c.data(), c.data() + c.size()));
  return {{"delta_prime", colours_to_json(sys, cs, q.delta_prime)},
          {"sp", nodes_to_json(d, q.sp_out)},
          {"sigma", sigma},
          {"coordinates", coords},
          {"is_valid_system", q.is_valid_system},
          {"smooth", q.smooth},
          {"homogeneous", q.homogeneous}};
}

QuotientResult quotient_from_json(const SphericalSystem& sys, const ColourSet& cs, const Json& j) {
  const NodeReader reader(identity_map(sys.diagram()));
  QuotientResult q;
  q.delta_prime = colours_from_json(sys, cs, field(j, "delta_prime"));
  q.sp_out = reader.nodes(field(j, "sp"));
  for (const Json& g : as_array(field(j, "sigma"), "sigma")) q.sigma_out.push_back(reader.weight(g, sys.diagram().rank()));
  for (const Json& c : as_array(field(j, "coordinates"), "coordinates")) {
    Eigen::VectorXi v(static_cast<int>(c.size()));
    for (std::size_t i = 0; i < c.size(); ++i) v[static_cast<int>(i)] = as_int(c[i], "coordinate");
    q.coordinates.push_back(v);
  }
  q.is_valid_system = as_bool(field(j, "is_valid_system"), "is_valid_system");
  q.smooth = as_bool(field(j, "smooth"), "smooth");
  q.homogeneous = as_bool(field(j, "homogeneous"), "homogeneous");
  return q;
}

Json to_json(const SphericalSystem& sys, const ColourSet& cs, const ComponentAnalysis& a) {
  Json roots = Json::array();
  a.component.for_each([&](int k) { roots.push_back(sys.diagram().weight_to_string(sys.sigma()[k])); });
  return {{"component", subset_positions(a.component)},
          {"roots", roots},
          {"delta", colours_to_json(sys, cs, a.delta)},
          {"isolated", a.isolated},
          {"erasable", a.erasable},
          {"quasi_erasable", a.quasi_erasable},
          {"erasing", optional_colours(sys, cs, a.erasing)},
          {"quasi_erasing", optional_colours(sys, cs, a.quasi_erasing)}};
}

ComponentAnalysis component_from_json(const SphericalSystem& sys, const ColourSet& cs, const Json& j) {
  ComponentAnalysis a;
  a.component = positions_from_json(sys, field(j, "component"));
  a.delta = colours_from_json(sys, cs, field(j, "delta"));
  a.isolated = as_bool(field(j, "isolated"), "isolated");
  a.erasable = as_bool(field(j, "erasable"), "erasable");
  a.quasi_erasable = as_bool(field(j, "quasi_erasable"), "quasi_erasable");
  a.erasing = optional_colours_from(sys, cs, field(j, "erasing"));
  a.quasi_erasing = optional_colours_from(sys, cs, field(j, "quasi_erasing"));
  return a;
}

Json to_json(const ExpectedDims& e) {
  return {{"dim_homogeneous_space", e.dim_homogeneous_space}, {"rank_character_lattice", e.rank_character_lattice}};
}

ExpectedDims expected_dims_from_json(const Json& j) {
  return {as_int(field(j, "dim_homogeneous_space"), "dim_homogeneous_space"),
          as_int(field(j, "rank_character_lattice"), "rank_character_lattice")};
}

Json to_json(const FamilyInstance& inst) {
  return {{"label", inst.label()}, {"family", inst.family->label}, {"params", inst.params}};
}

FamilyInstance family_instance_from_json(const Json& j) {
  const Json& fam = field(j, "family");
  if (!fam.is_string()) throw ParseError("family must be a string");
  FamilyInstance inst;
  inst.family = &family(fam.get<std::string>());
  for (const Json& p : as_array(field(j, "params"), "params")) inst.params.push_back(as_int(p, "parameter"));
  return inst;
}

Json to_json(const OrbitDims& o) {
  return {{"dim_h", o.dim_h}, {"dim_hu", o.dim_hu}, {"dim_orbit", o.dim_orbit}};
}

OrbitDims orbit_dims_from_json(const Json& j) {
  return {as_int(field(j, "dim_h"), "dim_h"), as_int(field(j, "dim_hu"), "dim_hu"),
          as_int(field(j, "dim_orbit"), "dim_orbit")};
}

Json error_to_json(const Error& e) { return {{"error", {{"kind", e.kind()}, {"message", e.what()}}}}; }

}  // namespace wonderful
