#pragma once

// Topological drawings of (possibly non-simple) graphs, stored as a
// planarized combinatorial map: real vertices plus one degree-4 node per
// crossing, with a clockwise rotation of outgoing darts at every node.
//
// Conventions used throughout the library:
//   * dart 2s walks segment s along its edge's chain (end_a -> end_b),
//     dart 2s+1 walks it backwards; twin(d) == d ^ 1.
//   * rotations list outgoing darts clockwise.
//   * faces are traced with the face on the right of every dart:
//     face_next(d) = rot_prev(twin(d)). Bounded faces are therefore walked
//     clockwise, and the corner of a face at the head of d_in spans the
//     clockwise wedge from d_out to twin(d_in).

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace crossing_ledger {

enum class ErrorCode {
  InvalidArgument,
  Io,
  Parse,
  Invariant,
  InvalidRotation,
  DanglingCrossing,
  NonSpherical,
  BadN,
  NotHexagon,
  BudgetExceeded,
  UnsupportedK,
  BadHint,
  Inapplicable,
  SelfLoopDegenerate,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

using NodeIndex = std::uint32_t;
using EdgeIndex = std::uint32_t;
using SegmentIndex = std::uint32_t;
using DartIndex = std::uint32_t;
using FaceIndex = std::uint32_t;

inline constexpr std::uint32_t kNone = 0xffffffffu;

enum class Direction : std::uint8_t { Forward, Reverse };

// One rotation entry: the segment-endpoint of `edge` leaving a node, either
// along the chain ("+id") or against it ("-id").
struct DartRef {
  std::string edge;
  Direction dir = Direction::Forward;

  std::string to_string() const;
  static std::optional<DartRef> from_string(std::string_view text);

  bool operator==(const DartRef&) const = default;
  auto operator<=>(const DartRef&) const = default;
};

struct EdgeDecl {
  std::string id;
  std::string end_a;
  std::string end_b;

  bool is_loop() const { return end_a == end_b; }
  bool operator==(const EdgeDecl&) const = default;
};

struct DrawingSpec {
  std::vector<std::string> vertices;
  std::vector<EdgeDecl> edges;
  // Crossings along each edge from end_a to end_b. Missing entry == empty.
  std::map<std::string, std::vector<std::string>> chains;
  std::map<std::string, std::pair<std::string, std::string>> crossings;
  // Clockwise; the first entry is the anchor.
  std::map<std::string, std::vector<DartRef>> rotations;

  bool operator==(const DrawingSpec&) const = default;
};

struct Node {
  std::string id;
  bool is_crossing = false;
};

struct Segment {
  EdgeIndex edge = kNone;
  std::uint32_t position = 0;  // index within the edge's chain of segments
  NodeIndex from = kNone;
  NodeIndex to = kNone;
};

struct FaceWalk {
  FaceIndex id = 0;
  // darts[i] leaves the i-th boundary node occurrence; the incoming segment
  // of step i is segment(darts[i-1]).
  std::vector<DartIndex> darts;

  std::size_t size() const { return darts.size(); }
};

class PlanarizedMap {
 public:
  const DrawingSpec& spec() const { return spec_; }

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t node_count() const { return nodes_.size(); }
  std::size_t crossing_count() const { return nodes_.size() - vertex_count_; }
  std::size_t edge_count() const { return spec_.edges.size(); }
  std::size_t segment_count() const { return segments_.size(); }
  std::size_t dart_count() const { return 2 * segments_.size(); }
  std::size_t face_count() const { return faces_.size(); }
  std::size_t component_count() const { return component_count_; }

  const Node& node(NodeIndex v) const { return nodes_[v]; }
  const EdgeDecl& edge(EdgeIndex e) const { return spec_.edges[e]; }
  const Segment& segment(SegmentIndex s) const { return segments_[s]; }

  std::optional<NodeIndex> find_node(std::string_view id) const;
  std::optional<EdgeIndex> find_edge(std::string_view id) const;

  static constexpr DartIndex twin(DartIndex d) { return d ^ 1u; }
  static constexpr SegmentIndex segment_of(DartIndex d) { return d >> 1; }
  static constexpr bool is_forward(DartIndex d) { return (d & 1u) == 0; }
  static constexpr DartIndex dart(SegmentIndex s, Direction dir) {
    return 2 * s + (dir == Direction::Forward ? 0u : 1u);
  }

  NodeIndex origin(DartIndex d) const;
  NodeIndex target(DartIndex d) const { return origin(twin(d)); }
  EdgeIndex edge_of(DartIndex d) const { return segments_[segment_of(d)].edge; }
  DartRef dart_ref(DartIndex d) const;

  DartIndex rot_next(DartIndex d) const { return rot_next_[d]; }
  DartIndex rot_prev(DartIndex d) const { return rot_prev_[d]; }
  DartIndex face_next(DartIndex d) const { return rot_prev_[twin(d)]; }

  // Outgoing darts of v in clockwise order, starting at the anchor.
  std::span<const DartIndex> rotation(NodeIndex v) const { return rotations_[v]; }
  std::size_t degree(NodeIndex v) const { return rotations_[v].size(); }

  // Segments of edge e in chain order.
  std::span<const SegmentIndex> edge_segments(EdgeIndex e) const { return edge_segments_[e]; }
  // Node sequence of edge e: end_a, crossings..., end_b.
  std::vector<NodeIndex> edge_nodes(EdgeIndex e) const;
  std::size_t crossings_on(EdgeIndex e) const { return edge_segments_[e].size() - 1; }

  // For a crossing node: the two edges that cross there (equal for a
  // self-crossing).
  std::pair<EdgeIndex, EdgeIndex> crossing_edges(NodeIndex v) const;

  std::span<const FaceWalk> faces() const { return faces_; }
  const FaceWalk& face(FaceIndex f) const { return faces_[f]; }
  FaceIndex face_of(DartIndex d) const { return face_of_[d]; }
  std::uint32_t position_in_face(DartIndex d) const { return face_pos_[d]; }
  std::vector<NodeIndex> face_nodes(FaceIndex f) const;

  std::uint32_t component_of(NodeIndex v) const { return component_[v]; }

  friend PlanarizedMap build_map(DrawingSpec spec);

 private:
  DrawingSpec spec_;
  std::size_t vertex_count_ = 0;
  std::vector<Node> nodes_;
  std::map<std::string, NodeIndex, std::less<>> node_index_;
  std::map<std::string, EdgeIndex, std::less<>> edge_index_;
  std::vector<Segment> segments_;
  std::vector<std::vector<SegmentIndex>> edge_segments_;
  std::vector<std::pair<EdgeIndex, EdgeIndex>> crossing_edges_;  // by node - vertex_count
  std::vector<std::vector<DartIndex>> rotations_;
  std::vector<DartIndex> rot_next_;
  std::vector<DartIndex> rot_prev_;
  std::vector<FaceWalk> faces_;
  std::vector<FaceIndex> face_of_;
  std::vector<std::uint32_t> face_pos_;
  std::vector<std::uint32_t> component_;
  std::size_t component_count_ = 0;
};

// Throws Error{Invariant, InvalidRotation, DanglingCrossing, NonSpherical}.
// Self-crossings and repeated crossings between one pair of edges are
// representable; check_sanity reports them.
PlanarizedMap build_map(DrawingSpec spec);

// Sub-drawing inherited from `map` on the edges in `keep`: crossings with
// dropped edges dissolve and faces are recomputed.
DrawingSpec restrict_spec(const DrawingSpec& spec, const std::set<std::string>& keep);
PlanarizedMap restrict(const PlanarizedMap& map, const std::set<std::string>& keep);

std::span<const FaceWalk> faces_of(const PlanarizedMap& map);

// Structural equality of two maps: same source drawing and same faces.
bool same_map(const PlanarizedMap& lhs, const PlanarizedMap& rhs);

}  // namespace crossing_ledger
