#include "figure.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <vector>

#include <Eigen/Sparse>
#include <Eigen/SparseLU>

namespace crossing_ledger {

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out + "\"";
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '"':
        out += "&quot;";
        break;
      default:
        out.push_back(c);
    }
  }
  return out;
}

std::string fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

FaceIndex longest_face(const PlanarizedMap& map, std::uint32_t component) {
  FaceIndex best = kNone;
  for (const auto& f : map.faces()) {
    if (map.component_of(map.origin(f.darts.front())) != component) continue;
    if (best == kNone || f.size() > map.face(best).size()) best = f.id;
  }
  return best;
}

struct Layout {
  std::vector<double> x, y;
};

Layout tutte(const PlanarizedMap& map, std::optional<FaceIndex> hint) {
  const std::size_t n = map.node_count();
  Layout out{std::vector<double>(n, 0.0), std::vector<double>(n, 0.0)};
  std::vector<bool> fixed_node(n, false);

  constexpr double kRadius = 100.0;
  constexpr double kGap = 40.0;
  std::vector<std::uint32_t> first_node(map.component_count(), kNone);
  for (NodeIndex v = 0; v < n; ++v) {
    if (first_node[map.component_of(v)] == kNone) first_node[map.component_of(v)] = v;
  }

  double offset = 0;
  for (std::uint32_t c = 0; c < map.component_count(); ++c) {
    FaceIndex outer = longest_face(map, c);
    if (hint && map.component_of(map.origin(map.face(*hint).darts.front())) == c) outer = *hint;
    std::vector<NodeIndex> ring;
    if (outer != kNone) {
      for (DartIndex d : map.face(outer).darts) {
        const NodeIndex v = map.origin(d);
        if (std::find(ring.begin(), ring.end(), v) == ring.end()) ring.push_back(v);
      }
    } else {
      ring.push_back(first_node[c]);
    }
    const double radius = ring.size() == 1 ? 0.0 : kRadius;
    const double cx = offset + radius;
    for (std::size_t i = 0; i < ring.size(); ++i) {
      // Walk order on the circle is clockwise on screen (y grows downwards).
      const double angle = -std::numbers::pi / 2 + 2 * std::numbers::pi * static_cast<double>(i) /
                                                     static_cast<double>(ring.size());
      out.x[ring[i]] = cx + radius * std::cos(angle);
      out.y[ring[i]] = radius * std::sin(angle);
      fixed_node[ring[i]] = true;
    }
    offset += 2 * radius + kGap;
  }

  std::vector<std::uint32_t> free_index(n, kNone);
  std::uint32_t free_count = 0;
  for (NodeIndex v = 0; v < n; ++v) {
    if (!fixed_node[v]) free_index[v] = free_count++;
  }
  if (free_count == 0) return out;

  std::vector<Eigen::Triplet<double>> triplets;
  Eigen::VectorXd bx = Eigen::VectorXd::Zero(free_count);
  Eigen::VectorXd by = Eigen::VectorXd::Zero(free_count);
  for (NodeIndex v = 0; v < n; ++v) {
    if (fixed_node[v]) continue;
    const auto row = static_cast<int>(free_index[v]);
    double degree = 0;
    for (DartIndex d : map.rotation(v)) {
      const NodeIndex u = map.target(d);
      if (u == v) continue;
      degree += 1;
      if (fixed_node[u]) {
        bx[row] += out.x[u];
        by[row] += out.y[u];
      } else {
        triplets.emplace_back(row, static_cast<int>(free_index[u]), -1.0);
      }
    }
    triplets.emplace_back(row, row, std::max(degree, 1.0));
  }
  Eigen::SparseMatrix<double> laplacian(free_count, free_count);
  laplacian.setFromTriplets(triplets.begin(), triplets.end());
  Eigen::SparseLU<Eigen::SparseMatrix<double>> solver;
  solver.compute(laplacian);
  if (solver.info() != Eigen::Success) return out;
  const Eigen::VectorXd sx = solver.solve(bx);
  const Eigen::VectorXd sy = solver.solve(by);
  for (NodeIndex v = 0; v < n; ++v) {
    if (fixed_node[v]) continue;
    out.x[v] = sx[free_index[v]];
    out.y[v] = sy[free_index[v]];
  }
  return out;
}

}  // namespace

std::string export_dot(const PlanarizedMap& map) {
  std::ostringstream out;
  out << "graph drawing {\n";
  for (NodeIndex v = 0; v < map.node_count(); ++v) {
    const auto& node = map.node(v);
    out << "  " << quoted(node.id)
        << (node.is_crossing ? " [shape=square, label=\"\", width=0.12]" : " [shape=circle]") << ";\n";
  }
  for (SegmentIndex s = 0; s < map.segment_count(); ++s) {
    const auto& seg = map.segment(s);
    out << "  " << quoted(map.node(seg.from).id) << " -- " << quoted(map.node(seg.to).id)
        << " [label=" << quoted(map.edge(seg.edge).id) << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string export_svg(const PlanarizedMap& map, std::optional<FaceIndex> outer_face) {
  if (outer_face && *outer_face >= map.face_count()) {
    throw Error(ErrorCode::BadHint, "outer face " + std::to_string(*outer_face) + " does not exist (drawing has " +
                                        std::to_string(map.face_count()) + " faces)");
  }
  const Layout pos = tutte(map, outer_face);
  double min_x = 0, max_x = 0, min_y = 0, max_y = 0;
  for (NodeIndex v = 0; v < map.node_count(); ++v) {
    if (v == 0 || pos.x[v] < min_x) min_x = pos.x[v];
    if (v == 0 || pos.x[v] > max_x) max_x = pos.x[v];
    if (v == 0 || pos.y[v] < min_y) min_y = pos.y[v];
    if (v == 0 || pos.y[v] > max_y) max_y = pos.y[v];
  }
  constexpr double kMargin = 12.0;
  const auto px = [&](NodeIndex v) { return fixed(pos.x[v] - min_x + kMargin); };
  const auto py = [&](NodeIndex v) { return fixed(pos.y[v] - min_y + kMargin); };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fixed(max_x - min_x + 2 * kMargin) << "\" height=\""
      << fixed(max_y - min_y + 2 * kMargin) << "\">\n";
  out << "<g fill=\"none\" stroke=\"black\" stroke-width=\"1\">\n";
  for (EdgeIndex e = 0; e < map.edge_count(); ++e) {
    out << "<polyline data-edge=\"" << xml_escape(map.edge(e).id) << "\" points=\"";
    const auto nodes = map.edge_nodes(e);
    for (std::size_t i = 0; i < nodes.size(); ++i) out << (i ? " " : "") << px(nodes[i]) << "," << py(nodes[i]);
    out << "\"/>\n";
  }
  out << "</g>\n";
  for (NodeIndex v = 0; v < map.node_count(); ++v) {
    const auto& node = map.node(v);
    if (node.is_crossing) {
      out << "<rect data-crossing=\"" << xml_escape(node.id) << "\" x=\"" << fixed(pos.x[v] - min_x + kMargin - 2)
          << "\" y=\"" << fixed(pos.y[v] - min_y + kMargin - 2) << "\" width=\"4\" height=\"4\" fill=\"gray\"/>\n";
    } else {
      out << "<circle data-vertex=\"" << xml_escape(node.id) << "\" cx=\"" << px(v) << "\" cy=\"" << py(v)
          << "\" r=\"4\" fill=\"white\" stroke=\"black\"/>\n";
      out << "<text x=\"" << fixed(pos.x[v] - min_x + kMargin + 5) << "\" y=\"" << fixed(pos.y[v] - min_y + kMargin - 5)
          << "\" font-size=\"8\">" << xml_escape(node.id) << "</text>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

std::string export_figure(const PlanarizedMap& map, FigureFormat format, std::optional<FaceIndex> outer_face) {
  if (format == FigureFormat::Dot) {
    if (outer_face && *outer_face >= map.face_count())
      throw Error(ErrorCode::BadHint, "outer face " + std::to_string(*outer_face) + " does not exist");
    return export_dot(map);
  }
  return export_svg(map, outer_face);
}

}  // namespace crossing_ledger
