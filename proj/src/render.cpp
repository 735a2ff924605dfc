#include "wonderful/render.hpp"

#include <algorithm>
#include <sstream>

#include "wonderful/error.hpp"
#include "wonderful/rank_one.hpp"

namespace wonderful {

namespace {

/// Grid column and row of a node inside its own component.
std::pair<int, int> local_position(const Component& c, int index) {
  if (c.family == 'E') {
    if (index == 1) return {0, 0};
    if (index == 2) return {2, 1};
    return {index - 2, 0};
  }
  if (c.family == 'D' && c.rank >= 4 && index == c.rank) return {c.rank - 3, 1};
  return {index - 1, 0};
}

std::string sp_string(const DynkinDiagram& d, NodeSet sp) {
  std::string out = "{";
  bool first = true;
  sp.for_each([&](int v) {
    if (!first) out += ", ";
    first = false;
    out += d.node_name(v);
  });
  return out + "}";
}

/// ASCII index of a node, e.g. "1'" for α′1.
std::string index_label(const NodeId& id) {
  return std::to_string(id.index) + std::string(static_cast<std::size_t>(id.component), '\'');
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string edge_glyph(const Edge& e, int left, int right) {
  if (e.multiplicity == 1) return "---";
  const char line = e.multiplicity == 2 ? '=' : '#';
  const char arrow = e.short_end == right ? '>' : (e.short_end == left ? '<' : line);
  return std::string{line, arrow, line};
}

bool colour_under(const DiagramScene& scene, int colour) {
  for (const DiagramScene::Circle& c : scene.circles)
    if (c.colour == colour) return c.under;
  return false;
}

}  // namespace

DiagramScene build_scene(const SphericalSystem& sys) {
  if (!sys.valid()) throw PreconditionError("only valid spherical systems can be drawn");
  const DynkinDiagram& d = sys.diagram();
  const ColourSet cs = colours(sys);
  DiagramScene scene;
  scene.title = d.to_string() + "  S^p = " + sp_string(d, sys.sp());

  int offset = 0;
  for (int comp = 0; comp < static_cast<int>(d.components().size()); ++comp) {
    const Component& c = d.components()[comp];
    int widest = 0;
    for (int i = 1; i <= c.rank; ++i) {
      const auto [x, y] = local_position(c, i);
      const int node = d.node({comp, i});
      scene.nodes.push_back({node, {comp, i}, offset + x, y, sys.sp().contains(node)});
      widest = std::max(widest, x);
      scene.height = std::max(scene.height, y);
    }
    offset += widest + 2;
  }
  scene.width = std::max(0, offset - 2);
  scene.edges = d.edges();

  for (int c = 0; c < cs.size(); ++c) {
    scene.colour_names.push_back(cs.name(c, d));
    int previous = -1;
    cs.classes[c].for_each([&](int v) {
      scene.circles.push_back({v, c, static_cast<bool>(cs.under[c]), false});
      if (previous >= 0) scene.connectors.push_back({c, previous, v});
      previous = v;
    });
  }

  for (int k = 0; k < sys.rank(); ++k) {
    const Weight& g = sys.sigma()[k];
    scene.root_names.push_back(d.weight_to_string(g));
    DiagramScene::Root root;
    root.gamma = k;
    root.label = rank_one_label(g, sys.sp(), d).value_or("?");
    const NodeSet supp = support(g);
    const ColourSubset touched = cs.of_nodes(supp);
    if (touched.size() == 1) {
      root.mark = DiagramScene::RootMark::Shadow;
      (supp - sys.sp()).for_each([&](int v) { root.nodes.push_back(v); });
      for (DiagramScene::Circle& circle : scene.circles)
        if (supp.contains(circle.node)) circle.shadowed = true;
    } else {
      root.mark = DiagramScene::RootMark::ZigZag;
      touched.for_each([&](int c) { root.nodes.push_back((cs.classes[c] & supp).front()); });
    }
    const bool even = g.unaryExpr([](int x) { return x % 2; }).isZero();
    if (even && support(g).size() > 1) {
      const Weight half = g / 2;
      root.two = rank_one_label(half, sys.sp(), d).has_value();
    }
    scene.roots.push_back(std::move(root));
  }
  return scene;
}

std::string render_text(const DiagramScene& scene) {
  constexpr int cell = 6;
  const int columns = cell * (scene.width + 1) + 4;
  std::vector<std::string> rows;
  const auto blank = [&] { return std::string(static_cast<std::size_t>(columns), ' '); };
  const auto circle_at = [&](int node) -> const DiagramScene::Circle* {
    for (const DiagramScene::Circle& c : scene.circles)
      if (c.node == node) return &c;
    return nullptr;
  };
  const auto place = [](std::string& row, int col, const std::string& text) {
    if (row.size() < static_cast<std::size_t>(col) + text.size()) row.resize(col + text.size(), ' ');
    row.replace(static_cast<std::size_t>(col), text.size(), text);
  };
  std::vector<int> x_of(scene.nodes.size());
  std::vector<int> y_of(scene.nodes.size());
  for (const DiagramScene::Node& n : scene.nodes) {
    x_of[n.node] = n.x;
    y_of[n.node] = n.y;
  }

  for (int level = 0; level <= scene.height; ++level) {
    std::string labels = blank();
    std::string body = blank();
    std::string under = blank();
    std::string link = blank();
    for (const DiagramScene::Node& n : scene.nodes) {
      if (n.y != level) continue;
      const DiagramScene::Circle* c = circle_at(n.node);
      std::string glyph = " * ";
      if (c && !c->under) glyph = c->shadowed ? "(#)" : "(o)";
      place(body, cell * n.x, glyph);
      if (c && c->under) place(under, cell * n.x + 1, c->shadowed ? "U" : "u");
      if (level == 0) place(labels, cell * n.x + 1, index_label(n.id));
      else place(body, cell * n.x + 3, " " + index_label(n.id));
    }
    for (const Edge& e : scene.edges) {
      const int left = x_of[e.a] <= x_of[e.b] ? e.a : e.b;
      const int right = left == e.a ? e.b : e.a;
      if (y_of[left] == level && y_of[right] == level) place(body, cell * x_of[left] + 3, edge_glyph(e, left, right));
      if (y_of[e.a] != y_of[e.b] && std::min(y_of[e.a], y_of[e.b]) == level)
        place(link, cell * x_of[e.a] + 1, e.multiplicity == 1 ? "|" : "H");
    }
    for (std::string* row : {&labels, &body, &under, &link}) {
      row->erase(row->find_last_not_of(' ') + 1);
      if (!row->empty() || row == &body) rows.push_back(*row);
    }
  }

  std::ostringstream out;
  out << scene.title << '\n';
  for (const std::string& r : rows) out << r << '\n';
  for (std::size_t c = 0; c < scene.colour_names.size(); ++c) {
    std::vector<std::string> members;
    bool under = false;
    for (const DiagramScene::Circle& circle : scene.circles) {
      if (circle.colour != static_cast<int>(c)) continue;
      members.push_back("a" + index_label(scene.nodes[circle.node].id));
      under = circle.under;
    }
    out << "colour " << scene.colour_names[c] << ": " << (under ? "under" : "around");
    if (members.size() > 1) {
      out << ", joined";
      for (std::size_t i = 0; i < members.size(); ++i) out << (i ? " - " : " ") << members[i];
    }
    out << '\n';
  }
  for (const DiagramScene::Root& r : scene.roots) {
    out << "root " << r.gamma + 1 << ": " << scene.root_names[r.gamma] << "  " << r.label << "  "
        << (r.mark == DiagramScene::RootMark::Shadow ? "shadow" : "zigzag");
    for (std::size_t i = 0; i < r.nodes.size(); ++i)
      out << (i ? (r.mark == DiagramScene::RootMark::Shadow ? " " : " ~ ") : " ") << "a"
          << index_label(scene.nodes[r.nodes[i]].id);
    if (r.two) out << "  marker 2";
    out << '\n';
  }
  return out.str();
}

std::string render_text(const SphericalSystem& sys) { return render_text(build_scene(sys)); }

std::string render_svg(const DiagramScene& scene) {
  constexpr int margin = 40;
  constexpr int step_x = 60;
  constexpr int step_y = 80;
  constexpr int legend_line = 18;
  const auto px = [&](int node) { return margin + step_x * scene.nodes[node].x; };
  const auto py = [&](int node) { return margin + 20 + step_y * scene.nodes[node].y; };
  const int legend_top = margin + 20 + step_y * scene.height + 80;
  const int legend_count = static_cast<int>(scene.colour_names.size() + scene.roots.size()) + 1;
  const int width = 2 * margin + step_x * scene.width + 80;
  const int height = legend_top + legend_line * legend_count;
  const auto id_of = [&](int node) {
    const NodeId& id = scene.nodes[node].id;
    return std::to_string(id.component) + "-" + std::to_string(id.index);
  };

  std::ostringstream o;
  o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\"" << height
    << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  o << "<g id=\"edges\" stroke=\"black\" stroke-width=\"1.5\" fill=\"none\">\n";
  for (const Edge& e : scene.edges) {
    const std::string id = "edge-" + id_of(e.a) + "-" + id_of(e.b);
    const int x1 = px(e.a), y1 = py(e.a), x2 = px(e.b), y2 = py(e.b);
    const bool vertical = x1 == x2;
    for (int k = 0; k < e.multiplicity; ++k) {
      const int shift = 4 * k - 2 * (e.multiplicity - 1);
      o << "<line id=\"" << id << "-" << k << "\" x1=\"" << x1 + (vertical ? shift : 0) << "\" y1=\""
        << y1 + (vertical ? 0 : shift) << "\" x2=\"" << x2 + (vertical ? shift : 0) << "\" y2=\""
        << y2 + (vertical ? 0 : shift) << "\"/>\n";
    }
    if (e.short_end >= 0) {
      const int tip = px(e.short_end) > (x1 + x2 - px(e.short_end)) ? 1 : -1;
      const int mx = (x1 + x2) / 2, my = (y1 + y2) / 2;
      o << "<polyline id=\"" << id << "-arrow\" points=\"" << mx - 6 * tip << ',' << my - 7 << ' ' << mx + 4 * tip
        << ',' << my << ' ' << mx - 6 * tip << ',' << my + 7 << "\"/>\n";
    }
  }
  o << "</g>\n<g id=\"circles\" stroke=\"black\" stroke-width=\"1.2\">\n";
  for (const DiagramScene::Circle& c : scene.circles) {
    const int cx = px(c.node);
    const int cy = c.under ? py(c.node) + 18 : py(c.node);
    o << "<circle id=\"circle-" << id_of(c.node) << "\" cx=\"" << cx << "\" cy=\"" << cy << "\" r=\""
      << (c.under ? 7 : 12) << "\" fill=\"" << (c.shadowed ? "#b0b0b0" : "none") << "\"/>\n";
  }
  o << "</g>\n<g id=\"connectors\" stroke=\"black\" stroke-width=\"1.2\" fill=\"none\">\n";
  for (std::size_t k = 0; k < scene.connectors.size(); ++k) {
    const DiagramScene::Connector& c = scene.connectors[k];
    const int low = std::max(py(c.from), py(c.to)) + 34;
    o << "<polyline id=\"join-" << id_of(c.from) << "-" << id_of(c.to) << "\" points=\"" << px(c.from) << ','
      << py(c.from) + 12 << ' ' << px(c.from) << ',' << low << ' ' << px(c.to) << ',' << low << ' ' << px(c.to)
      << ',' << py(c.to) + 12 << "\"/>\n";
  }
  o << "</g>\n<g id=\"nodes\" fill=\"black\">\n";
  for (const DiagramScene::Node& n : scene.nodes)
    o << "<circle id=\"node-" << id_of(n.node) << "\" cx=\"" << px(n.node) << "\" cy=\"" << py(n.node)
      << "\" r=\"4\"/>\n";
  o << "</g>\n<g id=\"roots\" stroke=\"black\" stroke-width=\"1.2\" fill=\"none\">\n";
  for (const DiagramScene::Root& r : scene.roots) {
    if (r.mark == DiagramScene::RootMark::ZigZag) {
      for (std::size_t i = 0; i + 1 < r.nodes.size(); ++i) {
        const int xa = px(r.nodes[i]), xb = px(r.nodes[i + 1]);
        const int top = std::min(py(r.nodes[i]), py(r.nodes[i + 1])) - 24 - 6 * r.gamma;
        o << "<polyline id=\"zigzag-" << r.gamma + 1 << "-" << i << "\" points=\"" << xa << ',' << py(r.nodes[i]) - 12;
        const int teeth = std::max(2, (xb - xa) / 10);
        for (int t = 0; t <= teeth; ++t) o << ' ' << xa + (xb - xa) * t / teeth << ',' << top - (t % 2 ? 5 : 0);
        o << ' ' << xb << ',' << py(r.nodes[i + 1]) - 12 << "\"/>\n";
      }
    }
    if (r.two && !r.nodes.empty()) {
      o << "<text id=\"two-" << r.gamma + 1 << "\" x=\"" << px(r.nodes.front()) + 14 << "\" y=\""
        << py(r.nodes.front()) - 14 << "\" font-family=\"monospace\" font-size=\"12\" fill=\"black\" "
        << "stroke=\"none\">2</text>\n";
    }
  }
  o << "</g>\n<g id=\"labels\" font-family=\"monospace\" font-size=\"11\" fill=\"black\">\n";
  for (const DiagramScene::Node& n : scene.nodes)
    o << "<text id=\"label-" << id_of(n.node) << "\" x=\"" << px(n.node) - 4 << "\" y=\"" << py(n.node) + 52
      << "\">" << index_label(n.id) << "</text>\n";
  int line = 0;
  o << "<text id=\"title\" x=\"" << margin << "\" y=\"" << legend_top + legend_line * line++ << "\">"
    << xml_escape(scene.title) << "</text>\n";
  for (std::size_t c = 0; c < scene.colour_names.size(); ++c)
    o << "<text id=\"legend-colour-" << c + 1 << "\" x=\"" << margin << "\" y=\"" << legend_top + legend_line * line++
      << "\">colour " << xml_escape(scene.colour_names[c]) << (colour_under(scene, static_cast<int>(c)) ? " under" : " around")
      << "</text>\n";
  for (const DiagramScene::Root& r : scene.roots)
    o << "<text id=\"legend-root-" << r.gamma + 1 << "\" x=\"" << margin << "\" y=\""
      << legend_top + legend_line * line++ << "\">" << xml_escape(scene.root_names[r.gamma]) << "  "
      << xml_escape(r.label) << "</text>\n";
  o << "</g>\n</svg>\n";
  return o.str();
}

std::string render_svg(const SphericalSystem& sys) { return render_svg(build_scene(sys)); }

}  // namespace wonderful
