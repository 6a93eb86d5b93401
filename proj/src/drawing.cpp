#include "drawing.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace crossing_ledger {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Io: return "IoError";
    case ErrorCode::Parse: return "ParseError";
    case ErrorCode::Invariant: return "InvariantError";
    case ErrorCode::InvalidRotation: return "InvalidRotation";
    case ErrorCode::DanglingCrossing: return "DanglingCrossing";
    case ErrorCode::NonSpherical: return "NonSpherical";
    case ErrorCode::BadN: return "BadN";
    case ErrorCode::NotHexagon: return "NotHexagon";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::UnsupportedK: return "UnsupportedK";
    case ErrorCode::BadHint: return "BadHint";
    case ErrorCode::Inapplicable: return "Inapplicable";
    case ErrorCode::SelfLoopDegenerate: return "SelfLoopDegenerate";
  }
  return "Unknown";
}

std::string DartRef::to_string() const {
  return (dir == Direction::Forward ? "+" : "-") + edge;
}

std::optional<DartRef> DartRef::from_string(std::string_view text) {
  if (text.size() < 2 || (text[0] != '+' && text[0] != '-')) return std::nullopt;
  return DartRef{std::string(text.substr(1)),
                 text[0] == '+' ? Direction::Forward : Direction::Reverse};
}

std::optional<NodeIndex> PlanarizedMap::find_node(std::string_view id) const {
  auto it = node_index_.find(id);
  if (it == node_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<EdgeIndex> PlanarizedMap::find_edge(std::string_view id) const {
  auto it = edge_index_.find(id);
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

NodeIndex PlanarizedMap::origin(DartIndex d) const {
  const Segment& s = segments_[segment_of(d)];
  return is_forward(d) ? s.from : s.to;
}

DartRef PlanarizedMap::dart_ref(DartIndex d) const {
  return DartRef{edge(edge_of(d)).id, is_forward(d) ? Direction::Forward : Direction::Reverse};
}

std::vector<NodeIndex> PlanarizedMap::edge_nodes(EdgeIndex e) const {
  std::vector<NodeIndex> out;
  const auto& segs = edge_segments_[e];
  out.reserve(segs.size() + 1);
  out.push_back(segments_[segs.front()].from);
  for (SegmentIndex s : segs) out.push_back(segments_[s].to);
  return out;
}

std::pair<EdgeIndex, EdgeIndex> PlanarizedMap::crossing_edges(NodeIndex v) const {
  if (!nodes_[v].is_crossing) throw Error(ErrorCode::InvalidArgument, "node '" + nodes_[v].id + "' is not a crossing");
  return crossing_edges_[v - vertex_count_];
}

std::vector<NodeIndex> PlanarizedMap::face_nodes(FaceIndex f) const {
  std::vector<NodeIndex> out;
  out.reserve(faces_[f].darts.size());
  for (DartIndex d : faces_[f].darts) out.push_back(origin(d));
  return out;
}

namespace {

[[noreturn]] void fail(ErrorCode code, const std::string& message) { throw Error(code, message); }

struct UnionFind {
  std::vector<std::uint32_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

PlanarizedMap build_map(DrawingSpec spec) {
  PlanarizedMap m;

  // Nodes: real vertices in declaration order, then crossings by id.
  for (const auto& v : spec.vertices) {
    if (!m.node_index_.emplace(v, static_cast<NodeIndex>(m.nodes_.size())).second)
      fail(ErrorCode::Invariant, "duplicate vertex id '" + v + "'");
    m.nodes_.push_back(Node{v, false});
  }
  m.vertex_count_ = m.nodes_.size();
  for (const auto& [cid, pair] : spec.crossings) {
    if (!m.node_index_.emplace(cid, static_cast<NodeIndex>(m.nodes_.size())).second)
      fail(ErrorCode::Invariant, "crossing id '" + cid + "' collides with a vertex id");
    m.nodes_.push_back(Node{cid, true});
  }

  for (const auto& e : spec.edges) {
    if (!m.edge_index_.emplace(e.id, static_cast<EdgeIndex>(m.edge_index_.size())).second)
      fail(ErrorCode::Invariant, "duplicate edge id '" + e.id + "'");
    for (const auto* end : {&e.end_a, &e.end_b}) {
      auto it = m.node_index_.find(*end);
      if (it == m.node_index_.end() || it->second >= m.vertex_count_)
        fail(ErrorCode::Invariant, "edge '" + e.id + "' references unknown vertex '" + *end + "'");
    }
  }
  for (const auto& [eid, chain] : spec.chains) {
    if (!m.edge_index_.contains(eid)) fail(ErrorCode::Invariant, "chain for unknown edge '" + eid + "'");
  }

  // Crossing bookkeeping: each crossing of edges {e,f} must appear once in
  // each chain, or twice in one chain when e == f.
  m.crossing_edges_.resize(spec.crossings.size());
  std::vector<std::map<EdgeIndex, int>> seen(spec.crossings.size());
  for (const auto& [cid, pair] : spec.crossings) {
    auto ia = m.edge_index_.find(pair.first);
    auto ib = m.edge_index_.find(pair.second);
    if (ia == m.edge_index_.end() || ib == m.edge_index_.end())
      fail(ErrorCode::Invariant, "crossing '" + cid + "' references an unknown edge");
    m.crossing_edges_[m.node_index_.at(cid) - m.vertex_count_] = {ia->second, ib->second};
  }

  const auto chain_of = [&](const std::string& eid) -> const std::vector<std::string>* {
    auto it = spec.chains.find(eid);
    return it == spec.chains.end() ? nullptr : &it->second;
  };

  m.edge_segments_.resize(spec.edges.size());
  for (EdgeIndex e = 0; e < spec.edges.size(); ++e) {
    const EdgeDecl& decl = spec.edges[e];
    std::vector<NodeIndex> seq;
    seq.push_back(m.node_index_.at(decl.end_a));
    if (const auto* chain = chain_of(decl.id)) {
      for (const auto& cid : *chain) {
        auto it = m.node_index_.find(cid);
        if (it == m.node_index_.end() || !m.nodes_[it->second].is_crossing)
          fail(ErrorCode::DanglingCrossing, "edge '" + decl.id + "' lists unknown crossing '" + cid + "'");
        const NodeIndex c = it->second;
        const auto [x, y] = m.crossing_edges_[c - m.vertex_count_];
        if (x != e && y != e)
          fail(ErrorCode::DanglingCrossing,
               "edge '" + decl.id + "' lists crossing '" + cid + "' which does not involve it");
        ++seen[c - m.vertex_count_][e];
        seq.push_back(c);
      }
    }
    seq.push_back(m.node_index_.at(decl.end_b));
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
      m.edge_segments_[e].push_back(static_cast<SegmentIndex>(m.segments_.size()));
      m.segments_.push_back(Segment{e, static_cast<std::uint32_t>(i), seq[i], seq[i + 1]});
    }
  }
  for (const auto& [cid, pair] : spec.crossings) {
    const std::size_t slot = m.node_index_.at(cid) - m.vertex_count_;
    const auto [x, y] = m.crossing_edges_[slot];
    const auto& counts = seen[slot];
    const auto count = [&](EdgeIndex e) {
      auto it = counts.find(e);
      return it == counts.end() ? 0 : it->second;
    };
    const bool ok = x == y ? count(x) == 2 && counts.size() == 1
                           : count(x) == 1 && count(y) == 1 && counts.size() == 2;
    if (!ok)
      fail(ErrorCode::DanglingCrossing, "crossing '" + cid + "' is not referenced exactly once by each of its two edges' chains");
  }

  // Expected outgoing darts per node, keyed by rotation entry.
  const std::size_t node_total = m.nodes_.size();
  std::vector<std::map<DartRef, std::vector<DartIndex>>> expected(node_total);
  for (EdgeIndex e = 0; e < spec.edges.size(); ++e) {
    const auto& segs = m.edge_segments_[e];
    const std::string& id = spec.edges[e].id;
    expected[m.segments_[segs.front()].from][DartRef{id, Direction::Forward}].push_back(
        PlanarizedMap::dart(segs.front(), Direction::Forward));
    expected[m.segments_[segs.back()].to][DartRef{id, Direction::Reverse}].push_back(
        PlanarizedMap::dart(segs.back(), Direction::Reverse));
    for (std::size_t p = 1; p < segs.size(); ++p) {
      const NodeIndex c = m.segments_[segs[p]].from;
      expected[c][DartRef{id, Direction::Forward}].push_back(PlanarizedMap::dart(segs[p], Direction::Forward));
      expected[c][DartRef{id, Direction::Reverse}].push_back(PlanarizedMap::dart(segs[p - 1], Direction::Reverse));
    }
  }

  for (const auto& [nid, refs] : spec.rotations) {
    if (!m.node_index_.contains(nid)) fail(ErrorCode::Invariant, "rotation for unknown node '" + nid + "'");
  }

  m.rotations_.resize(node_total);
  m.rot_next_.assign(m.dart_count(), kNone);
  m.rot_prev_.assign(m.dart_count(), kNone);
  for (NodeIndex v = 0; v < node_total; ++v) {
    const std::string& nid = m.nodes_[v].id;
    auto& want = expected[v];
    std::size_t want_total = 0;
    for (const auto& [ref, darts] : want) want_total += darts.size();

    auto rit = spec.rotations.find(nid);
    if (rit == spec.rotations.end()) {
      if (want_total == 0) continue;
      fail(ErrorCode::InvalidRotation, "missing rotation for node '" + nid + "'");
    }
    const auto& refs = rit->second;
    if (refs.size() != want_total)
      fail(ErrorCode::InvalidRotation, "rotation of '" + nid + "' has " + std::to_string(refs.size()) +
                                           " entries, expected " + std::to_string(want_total));

    std::vector<DartIndex> order(refs.size(), kNone);
    const bool self_crossing = m.nodes_[v].is_crossing &&
                               m.crossing_edges_[v - m.vertex_count_].first ==
                                   m.crossing_edges_[v - m.vertex_count_].second;
    if (self_crossing) {
      // Positions {0,2} form one pass and {1,3} the other; the pass holding
      // position 0 is the earlier one along the chain.
      for (int pass = 0; pass < 2; ++pass) {
        const DartRef& r0 = refs[pass];
        const DartRef& r1 = refs[pass + 2];
        auto i0 = want.find(r0);
        auto i1 = want.find(r1);
        if (i0 == want.end() || i1 == want.end() || r0.dir == r1.dir)
          fail(ErrorCode::InvalidRotation, "self-crossing '" + nid + "' does not alternate its two passes");
        order[pass] = i0->second[pass];
        order[pass + 2] = i1->second[pass];
      }
    } else {
      std::map<DartRef, std::size_t> used;
      for (std::size_t i = 0; i < refs.size(); ++i) {
        auto it = want.find(refs[i]);
        if (it == want.end())
          fail(ErrorCode::InvalidRotation,
               "rotation of '" + nid + "' lists '" + refs[i].to_string() + "' which does not leave this node");
        std::size_t& k = used[refs[i]];
        if (k >= it->second.size())
          fail(ErrorCode::InvalidRotation, "rotation of '" + nid + "' repeats '" + refs[i].to_string() + "'");
        order[i] = it->second[k++];
      }
      if (m.nodes_[v].is_crossing) {
        if (refs[0].edge != refs[2].edge || refs[1].edge != refs[3].edge || refs[0].edge == refs[1].edge)
          fail(ErrorCode::InvalidRotation, "rotation at crossing '" + nid + "' does not alternate between its two edges");
      }
    }
    m.rotations_[v] = order;
    for (std::size_t i = 0; i < order.size(); ++i) {
      const DartIndex d = order[i];
      const DartIndex nx = order[(i + 1) % order.size()];
      m.rot_next_[d] = nx;
      m.rot_prev_[nx] = d;
    }
  }

  // Faces: the lowest unvisited dart starts each face.
  m.face_of_.assign(m.dart_count(), kNone);
  m.face_pos_.assign(m.dart_count(), 0);
  for (DartIndex start = 0; start < m.dart_count(); ++start) {
    if (m.face_of_[start] != kNone) continue;
    FaceWalk walk;
    walk.id = static_cast<FaceIndex>(m.faces_.size());
    DartIndex d = start;
    do {
      m.face_of_[d] = walk.id;
      m.face_pos_[d] = static_cast<std::uint32_t>(walk.darts.size());
      walk.darts.push_back(d);
      d = m.face_next(d);
    } while (d != start);
    m.faces_.push_back(std::move(walk));
  }

  // Per-component Euler check on the sphere.
  UnionFind uf(node_total);
  for (const auto& s : m.segments_) uf.unite(s.from, s.to);
  m.component_.assign(node_total, kNone);
  std::vector<std::uint32_t> root_to_comp(node_total, kNone);
  for (NodeIndex v = 0; v < node_total; ++v) {
    const auto r = uf.find(v);
    if (root_to_comp[r] == kNone) root_to_comp[r] = static_cast<std::uint32_t>(m.component_count_++);
    m.component_[v] = root_to_comp[r];
  }
  std::vector<long> euler(m.component_count_, 0);
  std::vector<bool> has_segment(m.component_count_, false);
  for (NodeIndex v = 0; v < node_total; ++v) ++euler[m.component_[v]];
  for (const auto& s : m.segments_) {
    --euler[m.component_[s.from]];
    has_segment[m.component_[s.from]] = true;
  }
  for (const auto& f : m.faces_) ++euler[m.component_[m.origin(f.darts.front())]];
  for (std::size_t c = 0; c < m.component_count_; ++c) {
    if (has_segment[c] && euler[c] != 2) {
      std::ostringstream msg;
      msg << "component " << c << " has V - E + F = " << euler[c] << ", expected 2";
      fail(ErrorCode::NonSpherical, msg.str());
    }
  }

  m.spec_ = std::move(spec);
  return m;
}

DrawingSpec restrict_spec(const DrawingSpec& spec, const std::set<std::string>& keep) {
  std::set<std::string> known;
  for (const auto& e : spec.edges) known.insert(e.id);
  for (const auto& id : keep) {
    if (!known.contains(id)) throw Error(ErrorCode::InvalidArgument, "restrict: unknown edge '" + id + "'");
  }

  DrawingSpec out;
  out.vertices = spec.vertices;
  for (const auto& e : spec.edges) {
    if (keep.contains(e.id)) out.edges.push_back(e);
  }
  std::set<std::string> surviving;
  for (const auto& [cid, pair] : spec.crossings) {
    if (keep.contains(pair.first) && keep.contains(pair.second)) {
      out.crossings.emplace(cid, pair);
      surviving.insert(cid);
    }
  }
  for (const auto& [eid, chain] : spec.chains) {
    if (!keep.contains(eid)) continue;
    auto& dst = out.chains[eid];
    for (const auto& cid : chain) {
      if (surviving.contains(cid)) dst.push_back(cid);
    }
  }
  for (const auto& [nid, refs] : spec.rotations) {
    if (spec.crossings.contains(nid)) {
      if (surviving.contains(nid)) out.rotations.emplace(nid, refs);
      continue;
    }
    auto& dst = out.rotations[nid];
    for (const auto& r : refs) {
      if (keep.contains(r.edge)) dst.push_back(r);
    }
  }
  return out;
}

PlanarizedMap restrict(const PlanarizedMap& map, const std::set<std::string>& keep) {
  return build_map(restrict_spec(map.spec(), keep));
}

std::span<const FaceWalk> faces_of(const PlanarizedMap& map) { return map.faces(); }

bool same_map(const PlanarizedMap& lhs, const PlanarizedMap& rhs) {
  if (!(lhs.spec() == rhs.spec()) || lhs.face_count() != rhs.face_count()) return false;
  for (FaceIndex f = 0; f < lhs.face_count(); ++f) {
    if (lhs.face(f).darts != rhs.face(f).darts) return false;
  }
  return true;
}

}  // namespace crossing_ledger
