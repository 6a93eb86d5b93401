#include "validate.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace crossing_ledger {

void ValidationReport::merge(ValidationReport other) {
  if (other.k) k = other.k;
  if (!other.crossing_counts.empty()) {
    crossing_counts = std::move(other.crossing_counts);
    max_crossings = other.max_crossings;
  }
  for (auto& v : other.violations) violations.push_back(std::move(v));
  for (auto& v : other.homotopy_violations) homotopy_violations.push_back(std::move(v));
  for (auto& w : other.warnings) warnings.push_back(std::move(w));
}

namespace {

void fill_counts(const PlanarizedMap& map, ValidationReport& report) {
  report.crossing_counts.clear();
  report.max_crossings = 0;
  for (EdgeIndex e = 0; e < map.edge_count(); ++e) {
    const std::size_t c = map.crossings_on(e);
    report.crossing_counts.emplace_back(map.edge(e).id, c);
    report.max_crossings = std::max(report.max_crossings, c);
  }
}

class FaceUnion {
 public:
  explicit FaceUnion(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0u); }
  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::uint32_t> parent_;
};

struct RegionCount {
  std::size_t regions = 0;
  std::size_t empty = 0;
  // Real vertices outside the curve's component (their region is unknown).
  std::size_t unplaced = 0;
};

// Cuts the sphere along the closed curve formed by `curve` and counts the
// regions that contain no real vertex other than the curve's endpoints.
RegionCount empty_regions(const PlanarizedMap& map, std::span<const EdgeIndex> curve) {
  std::vector<bool> on_curve(map.segment_count(), false);
  for (EdgeIndex e : curve) {
    for (SegmentIndex s : map.edge_segments(e)) on_curve[s] = true;
  }
  FaceUnion uf(map.face_count());
  for (SegmentIndex s = 0; s < map.segment_count(); ++s) {
    if (on_curve[s]) continue;
    uf.unite(map.face_of(PlanarizedMap::dart(s, Direction::Forward)),
             map.face_of(PlanarizedMap::dart(s, Direction::Reverse)));
  }

  const EdgeDecl& first = map.edge(curve.front());
  const NodeIndex a = *map.find_node(first.end_a);
  const NodeIndex b = *map.find_node(first.end_b);
  const auto comp = map.component_of(a);

  std::set<std::uint32_t> regions;
  for (const auto& f : map.faces()) {
    if (map.component_of(map.origin(f.darts.front())) == comp) regions.insert(uf.find(f.id));
  }
  std::set<std::uint32_t> occupied;
  std::size_t unplaced = 0;
  for (NodeIndex x = 0; x < map.vertex_count(); ++x) {
    if (x == a || x == b) continue;
    if (map.component_of(x) != comp) {
      ++unplaced;
      continue;
    }
    occupied.insert(uf.find(map.face_of(map.rotation(x).front())));
  }
  RegionCount out;
  out.regions = regions.size();
  out.unplaced = unplaced;
  for (auto r : regions) {
    if (!occupied.contains(r)) ++out.empty;
  }
  return out;
}

}  // namespace

ValidationReport check_k_planar(const PlanarizedMap& map, int k) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "k must be a positive integer");
  ValidationReport report;
  report.k = k;
  fill_counts(map, report);
  for (const auto& [id, count] : report.crossing_counts) {
    if (count > static_cast<std::size_t>(k)) {
      report.violations.push_back(Violation{"k-planarity", {id},
                                            "crossed " + std::to_string(count) + " times, limit " + std::to_string(k)});
    }
  }
  return report;
}

ValidationReport check_homotopy(const PlanarizedMap& map) {
  ValidationReport report;

  std::map<std::pair<std::string, std::string>, std::vector<EdgeIndex>> bundles;
  for (EdgeIndex e = 0; e < map.edge_count(); ++e) {
    const auto& decl = map.edge(e);
    bundles[std::minmax(decl.end_a, decl.end_b)].push_back(e);
  }

  for (const auto& [ends, members] : bundles) {
    if (ends.first == ends.second) {
      for (EdgeIndex e : members) {
        const EdgeIndex one[] = {e};
        const auto rc = empty_regions(map, one);
        if (rc.regions < 2)
          throw Error(ErrorCode::SelfLoopDegenerate, "self-loop '" + map.edge(e).id + "' does not separate the sphere");
        if (rc.empty > 0 && rc.unplaced > 0) {
          report.warnings.push_back("self-loop " + map.edge(e).id +
                                    " bounds a region with no vertex of its own component; undecided");
        } else if (rc.empty > 0) {
          report.homotopy_violations.push_back(
              Violation{"homotopic-loop", {map.edge(e).id}, "a region bounded by the loop contains no vertex"});
        }
      }
    }
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        const EdgeIndex pair[] = {members[i], members[j]};
        const auto rc = empty_regions(map, pair);
        const std::vector<std::string> ids{map.edge(members[i]).id, map.edge(members[j]).id};
        if (rc.regions < 2) {
          report.warnings.push_back("parallel edges " + ids[0] + ", " + ids[1] + " do not separate the sphere");
          continue;
        }
        if (rc.empty > 0 && rc.unplaced > 0) {
          report.warnings.push_back("parallel edges " + ids[0] + ", " + ids[1] +
                                    " bound a region with no vertex of their own component; undecided");
        } else if (rc.empty > 0) {
          report.homotopy_violations.push_back(
              Violation{"homotopic-pair", ids,
                        std::to_string(rc.empty) + " of " + std::to_string(rc.regions) +
                            " regions bounded by the pair contain no vertex"});
        }
      }
    }
  }
  return report;
}

ValidationReport check_sanity(const PlanarizedMap& map) {
  ValidationReport report;
  std::map<std::pair<EdgeIndex, EdgeIndex>, std::size_t> pair_count;
  for (NodeIndex c = static_cast<NodeIndex>(map.vertex_count()); c < map.node_count(); ++c) {
    const auto [e, f] = map.crossing_edges(c);
    if (e == f) {
      report.violations.push_back(
          Violation{"self-crossing", {map.edge(e).id}, "edge crosses itself at '" + map.node(c).id + "'"});
      continue;
    }
    if (map.degree(c) != 4) {
      report.violations.push_back(Violation{"crossing-degree", {map.edge(e).id, map.edge(f).id},
                                            "crossing '" + map.node(c).id + "' does not have degree 4"});
      continue;
    }
    const auto rot = map.rotation(c);
    if (map.edge_of(rot[0]) != map.edge_of(rot[2]) || map.edge_of(rot[1]) != map.edge_of(rot[3])) {
      report.violations.push_back(Violation{"tangential-meeting", {map.edge(e).id, map.edge(f).id},
                                            "edges touch without crossing at '" + map.node(c).id + "'"});
    }
    ++pair_count[std::minmax(e, f)];
  }
  for (const auto& [pair, count] : pair_count) {
    const auto& a = map.edge(pair.first);
    const auto& b = map.edge(pair.second);
    if (count > 1) {
      report.warnings.push_back("edges " + a.id + " and " + b.id + " cross " + std::to_string(count) + " times");
    }
    if (std::minmax(a.end_a, a.end_b) == std::minmax(b.end_a, b.end_b)) {
      report.warnings.push_back("parallel edges " + a.id + " and " + b.id + " cross each other");
    }
  }
  return report;
}

ValidationReport validate_drawing(const PlanarizedMap& map, int k) {
  ValidationReport report = check_sanity(map);
  report.merge(check_k_planar(map, k));
  report.merge(check_homotopy(map));
  return report;
}

}  // namespace crossing_ledger
