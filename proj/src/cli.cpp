#include "wonderful/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "wonderful/appendix.hpp"
#include "wonderful/catalog.hpp"
#include "wonderful/connectivity.hpp"
#include "wonderful/dictionary.hpp"
#include "wonderful/enumerate.hpp"
#include "wonderful/json_io.hpp"
#include "wonderful/rank_one.hpp"
#include "wonderful/render.hpp"

namespace wonderful::cli {

namespace {

std::string read_all(std::istream& in) { return {std::istreambuf_iterator<char>(in), {}}; }

/// The input system: --system FILE when given, otherwise the whole of stdin.
SphericalSystem load_system(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") return system_from_json(parse_json(read_all(in)));
  std::ifstream file(path);
  if (!file) throw ParseError("cannot open '" + path + "'");
  return system_from_json(parse_json(read_all(file)));
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  for (std::string token; std::getline(ss, token, sep);) {
    token.erase(0, token.find_first_not_of(" \t"));
    token.erase(token.find_last_not_of(" \t") + 1);
    if (!token.empty()) out.push_back(token);
  }
  return out;
}

int parse_int(const std::string& token, const std::string& what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(token, &used);
    if (used == token.size()) return v;
  } catch (const std::logic_error&) {
  }
  throw ParameterError("bad " + what + " '" + token + "'");
}

Params parse_ints(const std::string& text, const std::string& what) {
  Params out;
  for (const std::string& t : split(text, ',')) out.push_back(parse_int(t, what));
  return out;
}

/// Nodes written as Bourbaki indices with one prime per further component: "1,2,1'".
NodeSet parse_nodes(const DynkinDiagram& d, const std::string& text) {
  NodeSet out;
  for (std::string token : split(text, ',')) {
    int component = 0;
    while (!token.empty() && token.back() == '\'') {
      token.pop_back();
      ++component;
    }
    const int index = parse_int(token, "node");
    if (component >= static_cast<int>(d.components().size()) || index < 1 ||
        index > d.components()[component].rank)
      throw ParameterError("node '" + text + "' is not on " + d.to_string());
    out.insert(d.node({component, index}));
  }
  return out;
}

Json classified(const SphericalSystem& sys) {
  const std::optional<FamilyInstance> inst = classify(sys);
  return inst ? to_json(*inst) : Json(nullptr);
}

Json family_row(const FamilyDatum& f) {
  return {{"ordinal", f.ordinal}, {"label", f.label}, {"params", f.params}, {"constraints", f.constraints}};
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Combinatorics of spherical systems and wonderful varieties", "wonderful"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string system_path;
  const auto with_system = [&](CLI::App* cmd) {
    cmd->add_option("--system", system_path, "system JSON file (default: stdin)");
    return cmd;
  };

  CLI::App* validate_cmd = with_system(app.add_subcommand("validate", "check the axioms of a system"));
  CLI::App* colours_cmd = with_system(app.add_subcommand("colours", "colours and the pairing rho"));

  std::string colour_list;
  CLI::App* quotient_cmd = with_system(app.add_subcommand("quotient", "quotient by a distinguished colour set"));
  quotient_cmd->add_option("--colours", colour_list, "colour names, e.g. D1,D3")->required();

  std::string node_list;
  CLI::App* localize_cmd = with_system(app.add_subcommand("localize", "restriction to a set of simple roots"));
  localize_cmd->add_option("--nodes", node_list, "Bourbaki indices, primes select later components: 1,2,1'")
      ->required();

  bool classify_flag = false;
  CLI::App* components_cmd =
      with_system(app.add_subcommand("components", "strongly connected components of the spherical roots"));
  components_cmd->add_flag("--classify", classify_flag, "add isolated / erasable / quasi-erasable flags");

  std::string diagram_text;
  bool primitive_flag = false;
  bool cuspidal_flag = false;
  std::uint64_t budget = 0;
  CLI::App* enumerate_cmd = app.add_subcommand("enumerate", "all systems on a diagram up to automorphism");
  enumerate_cmd->add_option("--diagram", diagram_text, "diagram, e.g. B3 or A1,A3")->required();
  enumerate_cmd->add_flag("--primitive", primitive_flag, "only primitive systems");
  enumerate_cmd->add_flag("--cuspidal", cuspidal_flag, "only cuspidal systems");
  enumerate_cmd->add_flag("--classify", classify_flag, "attach the catalog family of each system");
  enumerate_cmd->add_option("--budget", budget, "search-node budget");

  CLI::App* classify_cmd = with_system(app.add_subcommand("classify", "catalog family of a primitive system"));

  std::string format = "text";
  CLI::App* diagram_cmd = with_system(app.add_subcommand("diagram", "draw the diagram of a system"));
  diagram_cmd->add_option("--format", format, "text or svg")->check(CLI::IsMember({"text", "svg"}));

  std::string label;
  std::string values;
  CLI::App* catalog_cmd = app.add_subcommand("catalog", "catalog tables");
  catalog_cmd->require_subcommand(1);
  CLI::App* families_cmd = catalog_cmd->add_subcommand("families", "primitive families");
  families_cmd->add_option("--label", label, "family label; ASCII * and ' accepted");
  families_cmd->add_option("--params", values, "instantiate at these parameters, e.g. 2,3");
  CLI::App* rank1_cmd = catalog_cmd->add_subcommand("rank1", "rank-one spherical roots");
  rank1_cmd->add_option("--label", label, "row or instance label, e.g. b*(n) or b*(3)");

  int p = -1, q = -1, n = -1;
  bool halved = false;
  CLI::App* symmetric_cmd = app.add_subcommand("symmetric", "system of a symmetric space");
  symmetric_cmd->add_option("--label", label, "Cartan label, e.g. \"A III\" or \"B×B\"")->required();
  symmetric_cmd->add_option("--p", p, "parameter p");
  symmetric_cmd->add_option("--q", q, "parameter q");
  symmetric_cmd->add_option("--n", n, "parameter n");
  symmetric_cmd->add_flag("--halved", halved, "non-selfnormalising companion (B II, C II with q=2)");

  std::string characteristic;
  CLI::App* orbit_cmd = app.add_subcommand("orbit", "grading of a nilpotent orbit");
  orbit_cmd->add_option("--diagram", diagram_text, "simple diagram, e.g. G2")->required();
  orbit_cmd->add_option("--char", characteristic, "characteristic, e.g. 1,0")->required();

  CLI::App* affine_cmd = with_system(app.add_subcommand("affine-check", "affinity criterion"));
  CLI::App* identities_cmd =
      with_system(app.add_subcommand("identities", "expected dimension and character-lattice rank"));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return exit_usage_error;
  }

  try {
    if (validate_cmd->parsed()) {
      const SphericalSystem sys = load_system(system_path, in);
      emit(out, to_json(sys, sys.report()));
    } else if (colours_cmd->parsed()) {
      const SphericalSystem sys = load_system(system_path, in);
      emit(out, to_json(sys, colours(sys)));
    } else if (quotient_cmd->parsed()) {
      const SphericalSystem sys = load_system(system_path, in);
      const ColourSet cs = colours(sys);
      emit(out, to_json(sys, cs, quotient(sys, parse_colour_list(sys, cs, colour_list))));
    } else if (localize_cmd->parsed()) {
      const SphericalSystem sys = load_system(system_path, in);
      const Localization loc = localize_with_map(sys, parse_nodes(sys.diagram(), node_list));
      Json ambient = Json::array();
      for (int v : loc.ambient_node) ambient.push_back(node_to_json(sys.diagram(), v));
      emit(out, {{"system", to_json(loc.system)}, {"ambient_nodes", ambient}});
    } else if (components_cmd->parsed()) {
      const SphericalSystem sys = load_system(system_path, in);
      const Dictionary dict(sys);
      Json list = Json::array();
      for (RootSubset c : components(sys)) {
        if (classify_flag) {
          list.push_back(to_json(sys, dict.colours(), classify_component(dict, c)));
          continue;
        }
        Json roots = Json::array();
        c.for_each([&](int k) { roots.push_back(sys.diagram().weight_to_string(sys.sigma()[k])); });
        list.push_back({{"component", c.elements()}, {"roots", roots}});
      }
      emit(out, list);
    } else if (enumerate_cmd->parsed()) {
      const DynkinDiagram d = DynkinDiagram::parse(diagram_text);
      EnumerationOptions options;
      options.budget = budget;
      options.cuspidal_only = cuspidal_flag;
      const std::vector<SphericalSystem> systems =
          primitive_flag ? enumerate_primitive(d, options) : enumerate_systems(d, options);
      Json list = Json::array();
      for (const SphericalSystem& sys : systems)
        list.push_back(classify_flag ? Json{{"system", to_json(sys)}, {"family", classified(sys)}} : to_json(sys));
      emit(out, list);
    } else if (classify_cmd->parsed()) {
      const SphericalSystem sys = load_system(system_path, in);
      emit(out, {{"valid", sys.valid()}, {"family", classified(sys)}});
    } else if (diagram_cmd->parsed()) {
      const SphericalSystem sys = load_system(system_path, in);
      out << (format == "svg" ? render_svg(sys) : render_text(sys));
    } else if (families_cmd->parsed()) {
      if (label.empty()) {
        Json list = Json::array();
        for (const FamilyDatum& f : family_catalog()) list.push_back(family_row(f));
        emit(out, list);
      } else {
        const FamilyDatum& f = family(label);
        Json row = family_row(f);
        if (families_cmd->count("--params") > 0) {
          const Params params = parse_ints(values, "parameter");
          const SphericalSystem sys = instantiate(f, params);
          row["instance"] = f.instance_label(params);
          row["system"] = to_json(sys);
          row["strict"] = is_strict(sys);
        }
        emit(out, row);
      }
    } else if (rank1_cmd->parsed()) {
      std::vector<RankOneInstance> rows;
      if (label.empty()) {
        for (const RankOneDatum& r : rank_one_table()) rows.push_back({&r, r.min_rank});
      } else if (normalize_label(label).find("(n)") != std::string::npos) {
        const RankOneDatum& r = rank_one_row(normalize_label(label));
        rows.push_back({&r, r.min_rank});
      } else {
        rows.push_back(rank_one_instance(label));
      }
      Json list = Json::array();
      for (const RankOneInstance& inst : rows) {
        const SphericalSystem sys = rank_one_system(inst.label());
        list.push_back({{"row", inst.row->label},
                        {"label", inst.label()},
                        {"min_rank", inst.row->min_rank},
                        {"max_rank", inst.row->max_rank == 0 ? Json(nullptr) : Json(inst.row->max_rank)},
                        {"system", to_json(sys)},
                        {"diagram", render_text(sys)}});
      }
      emit(out, list);
    } else if (symmetric_cmd->parsed()) {
      // Parameters are matched by name against the row, e.g. A III takes p and q.
      const auto collect = [&](const std::vector<std::string>& names) {
        Params out_values;
        for (const std::string& name : names) {
          const int v = name == "p" ? p : name == "q" ? q : name == "n" ? n : -1;
          if (v < 0) throw ParameterError("symmetric '" + label + "' needs --" + name);
          out_values.push_back(v);
        }
        return out_values;
      };
      // ASCII spelling of the group cases: "AxA" for "A×A".
      if (label.size() == 3 && (label[1] == 'x' || label[1] == 'X')) label = label.substr(0, 1) + "×" + label.substr(2);
      const SymmetricDatum* row = nullptr;
      Params params;
      for (const SymmetricDatum& r : symmetric_table()) {
        if (r.cartan_label != label) continue;
        try {
          params = collect(r.params);
        } catch (const ParameterError&) {
          continue;
        }
        if (r.admissible(params)) {
          row = &r;
          break;
        }
      }
      if (!row) {
        const bool known = std::any_of(symmetric_table().begin(), symmetric_table().end(),
                                        [&](const SymmetricDatum& r) { return r.cartan_label == label; });
        throw ParameterError(known ? "no case of symmetric '" + label + "' admits the given parameters"
                                   : "unknown symmetric label '" + label + "'");
      }
      const SphericalSystem sys = halved ? halved_symmetric_system(label, params) : symmetric_system(label, params);
      emit(out, {{"cartan_label", row->cartan_label},
                 {"case", row->case_label},
                 {"params", params},
                 {"restricted_type", row->restricted_type},
                 {"fixed_subalgebra", row->fixed_subalgebra},
                 {"system", to_json(sys)},
                 {"valid", sys.valid()},
                 {"family", classified(sys)}});
    } else if (orbit_cmd->parsed()) {
      const DynkinDiagram d = DynkinDiagram::parse(diagram_text);
      const Characteristic h = parse_ints(characteristic, "characteristic entry");
      Json grading = Json::array();
      for (const auto& [degree, dim] : grading_dims(d, h)) grading.push_back({{"degree", degree}, {"dim", dim}});
      emit(out, {{"diagram", to_json(d)},
                 {"characteristic", h},
                 {"height", height(d, h)},
                 {"spherical", is_spherical_orbit(d, h)},
                 {"grading", grading},
                 {"dims", to_json(orbit_dims(d, h))}});
    } else if (affine_cmd->parsed()) {
      const SphericalSystem sys = load_system(system_path, in);
      emit(out, {{"affine", is_affine_feasible(sys)}});
    } else if (identities_cmd->parsed()) {
      const SphericalSystem sys = load_system(system_path, in);
      emit(out, to_json(expected_dims(sys)));
    }
  } catch (const Error& e) {
    emit(out, error_to_json(e));
    return exit_domain_error;
  } catch (const nlohmann::json::exception& e) {
    emit(out, error_to_json(ParseError(e.what())));
    return exit_domain_error;
  }
  return exit_ok;
}

}  // namespace wonderful::cli
