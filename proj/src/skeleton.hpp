#pragma once

// Crossing-free skeleton of a drawing: a maximum (exact mode) or maximal
// (greedy mode) set of pairwise non-crossing edges, together with the
// sub-drawing it inherits.

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "drawing.hpp"

namespace crossing_ledger {

// Nodes are the edges of the drawing (declaration order); two nodes are
// adjacent when the edges cross at least once.
struct ConflictGraph {
  std::vector<std::string> ids;
  std::vector<std::vector<EdgeIndex>> adjacency;  // sorted, no self entries
  std::vector<bool> self_conflict;                // edge crosses itself

  std::size_t size() const { return ids.size(); }
  std::size_t conflict_count() const;
  bool adjacent(EdgeIndex a, EdgeIndex b) const;

  // Connected components, each sorted by edge index, ordered by their
  // smallest member.
  std::vector<std::vector<EdgeIndex>> components() const;
};

ConflictGraph conflict_graph(const PlanarizedMap& map);

enum class SkeletonMode { Exact, Greedy };

std::string_view skeleton_mode_name(SkeletonMode mode);

inline constexpr std::size_t kDefaultNodeBudget = 64;

struct SkeletonOptions {
  SkeletonMode mode = SkeletonMode::Exact;
  // Largest conflict component the exact solver accepts.
  std::size_t node_budget = kDefaultNodeBudget;
};

// Maximum independent set of the subgraph induced by `nodes`. Among maxima
// the one whose id list (sorted by id) is lexicographically smallest wins.
// Throws Error{BudgetExceeded} when nodes.size() > budget.
std::vector<EdgeIndex> exact_independent_set(const ConflictGraph& graph, const std::vector<EdgeIndex>& nodes,
                                             std::size_t budget = kDefaultNodeBudget);

// Repeatedly drops the node of highest remaining conflict degree (ties by
// smallest id), then re-adds dropped nodes that no longer conflict so the
// result is maximal.
std::vector<EdgeIndex> greedy_independent_set(const ConflictGraph& graph, const std::vector<EdgeIndex>& nodes);

struct SkeletonDecomposition {
  SkeletonMode mode = SkeletonMode::Exact;
  // True when the skeleton is certified maximum for this drawing.
  bool maximum = false;
  PlanarizedMap full;
  PlanarizedMap skeleton;
  // Edge indices of `full`, ascending.
  std::vector<EdgeIndex> kept;
  std::vector<EdgeIndex> residual;
  std::size_t component_count = 0;
  std::size_t largest_component = 0;

  bool in_skeleton(EdgeIndex e) const;
  std::set<std::string> kept_ids() const;
};

SkeletonDecomposition extract_skeleton(const PlanarizedMap& map, const SkeletonOptions& options = {});

std::span<const FaceWalk> skeleton_faces(const SkeletonDecomposition& dec);

// True when `nodes` is independent and every other non-self-conflicting
// edge conflicts with one of them.
bool is_independent(const ConflictGraph& graph, const std::vector<EdgeIndex>& nodes);
bool is_maximal(const ConflictGraph& graph, const std::vector<EdgeIndex>& nodes);

}  // namespace crossing_ledger
