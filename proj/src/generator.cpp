#include "generator.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>

namespace crossing_ledger {

FrameSpec frame_spec(std::size_t n, bool strict) {
  if (n < 6 || n % 2 != 0) throw Error(ErrorCode::BadN, "n must be even and at least 6, got " + std::to_string(n));
  if (strict && (n - 2) % 4 != 0)
    throw Error(ErrorCode::BadN, "strict mode needs n - 2 divisible by 4, got n = " + std::to_string(n));
  FrameSpec f;
  f.n = n;
  f.paths = (n - 2) / 2;
  for (std::size_t i = 1; i <= f.paths; ++i) {
    const std::string p = "p" + std::to_string(i);
    f.inner.emplace_back(p + "a", p + "b");
  }
  return f;
}

DrawingSpec theta_frame(std::size_t n, bool strict) {
  const FrameSpec frame = frame_spec(n, strict);
  DrawingSpec spec;
  spec.vertices = {frame.pole_u, frame.pole_w};
  for (const auto& [a, b] : frame.inner) {
    spec.vertices.push_back(a);
    spec.vertices.push_back(b);
  }
  auto& at_u = spec.rotations[frame.pole_u];
  auto& at_w = spec.rotations[frame.pole_w];
  for (std::size_t i = 0; i < frame.paths; ++i) {
    const std::string p = "p" + std::to_string(i + 1);
    const auto& [a, b] = frame.inner[i];
    spec.edges.push_back({p + "e1", frame.pole_u, a});
    spec.edges.push_back({p + "e2", a, b});
    spec.edges.push_back({p + "e3", b, frame.pole_w});
    at_u.push_back({p + "e1", Direction::Forward});
    at_w.insert(at_w.begin(), DartRef{p + "e3", Direction::Reverse});
    spec.rotations[a] = {{p + "e1", Direction::Reverse}, {p + "e2", Direction::Forward}};
    spec.rotations[b] = {{p + "e2", Direction::Reverse}, {p + "e3", Direction::Forward}};
  }
  for (const auto& e : spec.edges) spec.chains[e.id];
  return spec;
}

namespace {

struct Point {
  double x;
  double y;
};

// A fixed irregular convex hexagon, corners listed clockwise, so that no
// three chords meet in a point.
constexpr std::array<Point, 6> kHexagon{{
    {0.0, 10.0}, {8.5, 5.2}, {8.9, -4.6}, {0.3, -10.1}, {-8.7, -5.3}, {-8.4, 4.9},
}};

double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
Point sub(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }

// Clockwise sweep from direction `from` to direction `to`, in [0, 2pi).
double clockwise_from(Point from, Point to) {
  double a = std::atan2(from.y, from.x) - std::atan2(to.y, to.x);
  while (a < 0) a += 2 * std::numbers::pi;
  while (a >= 2 * std::numbers::pi) a -= 2 * std::numbers::pi;
  return a;
}

}  // namespace

HexGadget hexagon_gadget(const PlanarizedMap& frame, FaceIndex f, const std::string& prefix,
                         const std::string& first_corner) {
  if (f >= frame.face_count()) throw Error(ErrorCode::NotHexagon, "no face " + std::to_string(f));
  const auto& walk = frame.face(f);
  if (walk.size() != 6) {
    throw Error(ErrorCode::NotHexagon, "face " + std::to_string(f) + " has " + std::to_string(walk.size()) +
                                           " boundary steps, expected 6");
  }
  std::size_t start = 0;
  std::vector<NodeIndex> nodes;
  for (std::size_t i = 0; i < 6; ++i) {
    nodes.push_back(frame.origin(walk.darts[i]));
    if (!first_corner.empty() && frame.node(nodes.back()).id == first_corner) start = i;
  }
  auto sorted = nodes;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() ||
      std::any_of(nodes.begin(), nodes.end(), [&](NodeIndex v) { return frame.node(v).is_crossing; })) {
    throw Error(ErrorCode::NotHexagon, "face " + std::to_string(f) + " does not visit six distinct vertices");
  }

  HexGadget g;
  for (std::size_t i = 0; i < 6; ++i) {
    const DartIndex d = walk.darts[(start + i) % 6];
    g.corners[i] = frame.node(frame.origin(d)).id;
    g.boundary_out[i] = frame.dart_ref(d);
  }

  const auto chord_id = [&](std::size_t k) { return prefix + "_d" + std::to_string(k); };
  for (std::size_t k = 0; k < kGadgetChords.size(); ++k) {
    const auto [a, b] = kGadgetChords[k];
    g.edges.push_back({chord_id(k), g.corners[a - 1], g.corners[b - 1]});
  }

  // Crossings of every interleaving chord pair, located geometrically.
  struct Hit {
    double t;
    std::string id;
  };
  std::vector<std::vector<Hit>> along(kGadgetChords.size());
  std::size_t next = 0;
  for (std::size_t i = 0; i < kGadgetChords.size(); ++i) {
    for (std::size_t j = i + 1; j < kGadgetChords.size(); ++j) {
      const Point p = kHexagon[kGadgetChords[i].first - 1];
      const Point r = sub(kHexagon[kGadgetChords[i].second - 1], p);
      const Point q = kHexagon[kGadgetChords[j].first - 1];
      const Point s = sub(kHexagon[kGadgetChords[j].second - 1], q);
      const double denom = cross(r, s);
      if (std::abs(denom) < 1e-12) continue;
      const double t = cross(sub(q, p), s) / denom;
      const double u = cross(sub(q, p), r) / denom;
      constexpr double eps = 1e-9;
      if (t <= eps || t >= 1 - eps || u <= eps || u >= 1 - eps) continue;

      const std::string cid = prefix + "x" + std::to_string(next++);
      g.crossings[cid] = {chord_id(i), chord_id(j)};
      along[i].push_back({t, cid});
      along[j].push_back({u, cid});

      std::vector<std::pair<double, DartRef>> darts{
          {std::atan2(r.y, r.x), {chord_id(i), Direction::Forward}},
          {std::atan2(-r.y, -r.x), {chord_id(i), Direction::Reverse}},
          {std::atan2(s.y, s.x), {chord_id(j), Direction::Forward}},
          {std::atan2(-s.y, -s.x), {chord_id(j), Direction::Reverse}},
      };
      std::sort(darts.begin(), darts.end(), [](const auto& x, const auto& y) { return x.first > y.first; });
      auto& rot = g.crossing_rotations[cid];
      for (auto& [angle, ref] : darts) rot.push_back(std::move(ref));
    }
  }
  for (std::size_t k = 0; k < kGadgetChords.size(); ++k) {
    std::sort(along[k].begin(), along[k].end(), [](const Hit& x, const Hit& y) { return x.t < y.t; });
    auto& chain = g.chains[chord_id(k)];
    for (const auto& h : along[k]) chain.push_back(h.id);
  }

  for (std::size_t i = 0; i < 6; ++i) {
    const Point here = kHexagon[i];
    const Point toward_next = sub(kHexagon[(i + 1) % 6], here);
    std::vector<std::pair<double, DartRef>> leaving;
    for (std::size_t k = 0; k < kGadgetChords.size(); ++k) {
      const auto [a, b] = kGadgetChords[k];
      if (a - 1 == static_cast<int>(i))
        leaving.push_back({clockwise_from(toward_next, sub(kHexagon[b - 1], here)), {chord_id(k), Direction::Forward}});
      if (b - 1 == static_cast<int>(i))
        leaving.push_back({clockwise_from(toward_next, sub(kHexagon[a - 1], here)), {chord_id(k), Direction::Reverse}});
    }
    std::sort(leaving.begin(), leaving.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    for (auto& [angle, ref] : leaving) g.corner_darts[i].push_back(std::move(ref));
  }
  return g;
}

void embed_gadget(DrawingSpec& spec, const HexGadget& gadget) {
  for (const auto& e : gadget.edges) spec.edges.push_back(e);
  for (const auto& [id, chain] : gadget.chains) spec.chains[id] = chain;
  for (const auto& [id, pair] : gadget.crossings) spec.crossings[id] = pair;
  for (const auto& [id, rot] : gadget.crossing_rotations) spec.rotations[id] = rot;
  for (std::size_t i = 0; i < 6; ++i) {
    auto& rot = spec.rotations[gadget.corners[i]];
    auto at = std::find(rot.begin(), rot.end(), gadget.boundary_out[i]);
    if (at == rot.end()) {
      throw Error(ErrorCode::Invariant, "corner " + gadget.corners[i] + " lacks boundary dart " +
                                            gadget.boundary_out[i].to_string());
    }
    rot.insert(at + 1, gadget.corner_darts[i].begin(), gadget.corner_darts[i].end());
  }
}

DrawingSpec generate_optimal(std::size_t n, bool strict) {
  const FrameSpec frame = frame_spec(n, strict);
  DrawingSpec spec = theta_frame(n, strict);
  const PlanarizedMap map = build_map(spec);
  for (FaceIndex f = 0; f < map.face_count(); ++f) {
    embed_gadget(spec, hexagon_gadget(map, f, "h" + std::to_string(f), frame.pole_u));
  }
  return spec;
}

bool strict_mode_from_env() {
  const char* mode = std::getenv("CROSSING_LEDGER_MODE");
  return mode != nullptr && std::string_view(mode) == "strict-paper";
}

}  // namespace crossing_ledger
