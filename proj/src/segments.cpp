#include "segments.hpp"

#include <algorithm>
#include <map>

namespace crossing_ledger {

std::size_t SegmentReport::stick_count() const {
  return static_cast<std::size_t>(
      std::count_if(pieces.begin(), pieces.end(), [](const SegmentPiece& p) { return p.kind == PieceKind::Stick; }));
}

std::size_t SegmentReport::middle_count() const { return pieces.size() - stick_count(); }

bool stick_is_short(std::size_t corner, std::size_t anchor, std::size_t length) {
  if (length == 0) return false;
  const std::size_t ahead = (anchor + length - corner % length) % length;
  const std::size_t behind = (corner + 2 * length - anchor % length - 1) % length;
  return ahead == 1 || behind == 1;
}

bool middle_is_short(std::size_t first, std::size_t second, std::size_t length) {
  if (length == 0) return false;
  const std::size_t gap = (second + length - first % length) % length;
  return gap == 1 || gap == length - 1;
}

StickSide stick_side(std::size_t corner, std::size_t anchor, std::size_t length) {
  return length != 0 && anchor % length == (corner + 1) % length ? StickSide::Right : StickSide::Left;
}

namespace {

struct Anchor {
  FaceIndex face = kNone;
  std::uint32_t position = kNone;
};

class Locator {
 public:
  explicit Locator(const SkeletonDecomposition& dec) : dec_(dec) {}

  // Skeleton dart running along full-map dart `d` of a skeleton edge.
  DartIndex skeleton_dart(DartIndex d) const {
    const EdgeIndex e = *dec_.skeleton.find_edge(dec_.full.edge(dec_.full.edge_of(d)).id);
    const SegmentIndex s = dec_.skeleton.edge_segments(e).front();
    return PlanarizedMap::dart(s, PlanarizedMap::is_forward(d) ? Direction::Forward : Direction::Reverse);
  }

  // Host face of the residual piece that leaves crossing `c` along dart `x`,
  // where `c` is a crossing with skeleton edge `g`.
  Anchor across(NodeIndex c, DartIndex x, EdgeIndex g) const {
    const PlanarizedMap& full = dec_.full;
    DartIndex forward = kNone;
    for (DartIndex d : full.rotation(c)) {
      if (full.edge_of(d) == g && PlanarizedMap::is_forward(d)) forward = d;
    }
    const DartIndex along = skeleton_dart(forward);
    const DartIndex h = full.rot_next(forward) == x ? along : PlanarizedMap::twin(along);
    return {dec_.skeleton.face_of(h), dec_.skeleton.position_in_face(h)};
  }

  // Face corner at a real vertex holding the outgoing dart `y`: the wedge
  // that follows the nearest skeleton dart counter-clockwise from `y`.
  Anchor corner(DartIndex y) const {
    const PlanarizedMap& full = dec_.full;
    for (DartIndex d = full.rot_prev(y); d != y; d = full.rot_prev(d)) {
      if (dec_.in_skeleton(full.edge_of(d))) {
        const DartIndex h = skeleton_dart(d);
        return {dec_.skeleton.face_of(h), dec_.skeleton.position_in_face(h)};
      }
    }
    return {};
  }

 private:
  const SkeletonDecomposition& dec_;
};

EdgeIndex other_edge(const PlanarizedMap& map, NodeIndex c, EdgeIndex e) {
  const auto [a, b] = map.crossing_edges(c);
  return a == e ? b : a;
}

}  // namespace

std::vector<SegmentPiece> decompose(const SkeletonDecomposition& dec, std::vector<std::string>* warnings) {
  const PlanarizedMap& full = dec.full;
  const Locator locate(dec);
  std::vector<SegmentPiece> pieces;
  // Crossings between residual edges: crossing node -> pieces through it.
  std::map<NodeIndex, std::vector<std::size_t>> interior;
  const auto warn = [&](std::string text) {
    if (warnings) warnings->push_back(std::move(text));
  };

  for (EdgeIndex r : dec.residual) {
    const auto nodes = full.edge_nodes(r);
    const auto segs = full.edge_segments(r);
    const std::string& rid = full.edge(r).id;

    std::vector<std::size_t> cuts{0};
    for (std::size_t t = 1; t + 1 < nodes.size(); ++t) {
      const auto [a, b] = full.crossing_edges(nodes[t]);
      if (a != b && dec.in_skeleton(other_edge(full, nodes[t], r))) cuts.push_back(t);
    }
    if (cuts.size() == 1) {
      throw Error(ErrorCode::Invariant, "residual edge '" + rid + "' crosses no skeleton edge");
    }
    cuts.push_back(nodes.size() - 1);

    const std::size_t first_piece = pieces.size();
    const std::size_t count = cuts.size() - 1;
    for (std::size_t q = 0; q < count; ++q) {
      SegmentPiece p;
      p.edge = r;
      p.ordinal = static_cast<std::uint32_t>(q);
      p.from = nodes[cuts[q]];
      p.to = nodes[cuts[q + 1]];
      const bool head = q == 0;
      const bool tail = q + 1 == count;
      p.kind = head || tail ? PieceKind::Stick : PieceKind::Middle;

      if (p.kind == PieceKind::Stick) {
        const std::size_t cut = head ? cuts[1] : cuts[count - 1];
        const DartIndex into = head ? PlanarizedMap::dart(segs[cut - 1], Direction::Reverse)
                                    : PlanarizedMap::dart(segs[cut], Direction::Forward);
        const EdgeIndex g = other_edge(full, nodes[cut], r);
        const Anchor host = locate.across(nodes[cut], into, g);
        p.face = host.face;
        p.anchor[0] = host.position;
        p.crossed[0] = g;
        p.vertex = head ? nodes.front() : nodes.back();
        const DartIndex out = head ? PlanarizedMap::dart(segs.front(), Direction::Forward)
                                   : PlanarizedMap::dart(segs.back(), Direction::Reverse);
        const Anchor at = locate.corner(out);
        if (at.face == host.face) {
          p.corner = at.position;
          const std::size_t length = dec.skeleton.face(p.face).size();
          p.is_short = stick_is_short(p.corner, p.anchor[0], length);
          p.side = stick_side(p.corner, p.anchor[0], length);
        } else {
          warn("stick of " + rid + " at " + full.node(p.vertex).id +
               " does not meet its vertex on the host face boundary");
        }
      } else {
        const std::size_t c0 = cuts[q];
        const std::size_t c1 = cuts[q + 1];
        const EdgeIndex g0 = other_edge(full, nodes[c0], r);
        const EdgeIndex g1 = other_edge(full, nodes[c1], r);
        const Anchor a0 = locate.across(nodes[c0], PlanarizedMap::dart(segs[c0], Direction::Forward), g0);
        const Anchor a1 = locate.across(nodes[c1], PlanarizedMap::dart(segs[c1 - 1], Direction::Reverse), g1);
        p.face = a0.face;
        p.anchor[0] = a0.position;
        p.anchor[1] = a1.position;
        p.crossed[0] = g0;
        p.crossed[1] = g1;
        if (a1.face != a0.face) {
          warn("middle part " + std::to_string(q) + " of " + rid + " meets two different faces");
        }
        p.is_short = middle_is_short(a0.position, a1.position, dec.skeleton.face(p.face).size());
        if (g0 == g1) {
          warn("middle part " + std::to_string(q) + " of " + rid + " crosses two occurrences of " +
               full.edge(g0).id + "; compared by occurrence");
        }
      }
      pieces.push_back(std::move(p));
    }

    for (std::size_t q = 0; q < count; ++q) {
      for (std::size_t t = cuts[q] + 1; t < cuts[q + 1]; ++t) interior[nodes[t]].push_back(first_piece + q);
    }
  }

  for (const auto& [c, through] : interior) {
    if (through.size() != 2 || through[0] == through[1]) continue;
    pieces[through[0]].crossings.push_back(through[1]);
    pieces[through[1]].crossings.push_back(through[0]);
  }
  return pieces;
}

std::vector<FaceProfile> face_profiles(const SkeletonDecomposition& dec, const std::vector<SegmentPiece>& pieces,
                                       std::vector<std::string>* warnings) {
  const PlanarizedMap& skel = dec.skeleton;
  std::vector<FaceProfile> out;
  for (const auto& walk : skel.faces()) {
    FaceProfile prof;
    prof.face = walk.id;
    prof.size = walk.size();
    prof.type.assign(walk.size(), 0);

    std::map<EdgeIndex, std::size_t> seen;
    for (DartIndex d : walk.darts) ++seen[skel.edge_of(d)];
    for (DartIndex d : walk.darts) prof.bridge.push_back(seen[skel.edge_of(d)] > 1);
    for (const auto& [e, times] : seen) (times > 1 ? prof.bridges : prof.non_bridges) += 1;
    out.push_back(std::move(prof));
  }

  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const SegmentPiece& p = pieces[i];
    FaceProfile& prof = out[p.face];
    if (p.kind == PieceKind::Stick) {
      prof.sticks.push_back(i);
      if (p.corner != kNone) ++prof.type[p.corner];
    } else {
      prof.middles.push_back(i);
    }
  }

  for (auto& prof : out) {
    const auto& walk = skel.face(prof.face);
    std::vector<bool> crossed(walk.size(), false);
    for (std::size_t i : prof.middles) {
      for (auto a : pieces[i].anchor) {
        if (a != kNone) crossed[a] = true;
      }
    }
    std::map<EdgeIndex, bool> hit;
    for (std::size_t k = 0; k < walk.size(); ++k) {
      if (prof.bridge[k]) continue;
      hit[skel.edge_of(walk.darts[k])] = crossed[k];
    }
    prof.uncrossed_non_bridges =
        static_cast<std::size_t>(std::count_if(hit.begin(), hit.end(), [](const auto& kv) { return !kv.second; }));

    for (std::size_t i : prof.sticks) {
      std::vector<std::size_t> partners;
      for (std::size_t j : pieces[i].crossings) {
        if (j > i && pieces[j].kind == PieceKind::Stick && pieces[j].face == prof.face) partners.push_back(j);
      }
      std::sort(partners.begin(), partners.end());
      partners.erase(std::unique(partners.begin(), partners.end()), partners.end());
      for (std::size_t j : partners) {
        const bool placed = pieces[i].corner != kNone && pieces[j].corner != kNone;
        prof.crossing_sticks.push_back(StickPair{i, j, placed && pieces[i].side != pieces[j].side});
      }
    }

    std::size_t placed = 0;
    for (auto t : prof.type) placed += t;
    if (placed != prof.sticks.size() && warnings) {
      warnings->push_back("face " + std::to_string(prof.face) + " hosts " + std::to_string(prof.sticks.size()) +
                          " sticks but only " + std::to_string(placed) + " sit at a boundary corner");
    }
  }
  return out;
}

SegmentReport analyze_segments(const SkeletonDecomposition& dec) {
  SegmentReport report;
  report.pieces = decompose(dec, &report.warnings);
  report.profiles = face_profiles(dec, report.pieces, &report.warnings);
  return report;
}

}  // namespace crossing_ledger
