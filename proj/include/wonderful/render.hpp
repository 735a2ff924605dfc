#pragma once

#include <string>
#include <vector>

#include "wonderful/spherical_system.hpp"

namespace wonderful {

/// Renderer-independent picture of a spherical system on its Dynkin diagram.
struct DiagramScene {
  struct Node {
    int node = 0;
    NodeId id;
    /// Grid position; y = 0 is the main row, y = 1 holds branch nodes of types D and E.
    int x = 0;
    int y = 0;
    bool in_sp = false;
  };
  /// One circle per colour incidence of a node outside S^p.
  struct Circle {
    int node = 0;
    int colour = 0;
    bool under = false;
    bool shadowed = false;
  };
  /// Line joining the circles of one colour class at nodes `from` and `to`.
  struct Connector {
    int colour = 0;
    int from = 0;
    int to = 0;
  };
  enum class RootMark { Shadow, ZigZag };
  struct Root {
    int gamma = 0;
    std::string label;
    RootMark mark = RootMark::Shadow;
    /// Shadowed nodes, or the zig-zag endpoints in increasing order.
    std::vector<int> nodes;
    /// Drawn with a "2" when γ/2 is itself realizable with the same S^p.
    bool two = false;
  };

  std::string title;
  std::vector<Node> nodes;
  std::vector<Edge> edges;
  std::vector<Circle> circles;
  std::vector<Connector> connectors;
  std::vector<Root> roots;
  std::vector<std::string> colour_names;
  std::vector<std::string> root_names;
  int width = 0;
  int height = 0;
};

/// Pure function of the system; throws PreconditionError on invalid input.
DiagramScene build_scene(const SphericalSystem& sys);

/// Monospace drawing: index row, node row with circles "(o)" around and "u" under (shadowed
/// circles as "(#)" and "U"),
/// S^p vertices as " * ", then one legend line per colour and per spherical root.
std::string render_text(const DiagramScene& scene);
std::string render_text(const SphericalSystem& sys);

/// SVG 1.1 with fixed canvas units and stable element ids.
std::string render_svg(const DiagramScene& scene);
std::string render_svg(const SphericalSystem& sys);

}  // namespace wonderful
