#include "skeleton.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>

namespace crossing_ledger {

std::size_t ConflictGraph::conflict_count() const {
  std::size_t total = 0;
  for (const auto& list : adjacency) total += list.size();
  return total / 2;
}

bool ConflictGraph::adjacent(EdgeIndex a, EdgeIndex b) const {
  return std::binary_search(adjacency[a].begin(), adjacency[a].end(), b);
}

std::vector<std::vector<EdgeIndex>> ConflictGraph::components() const {
  std::vector<std::uint32_t> comp(size(), kNone);
  std::vector<std::vector<EdgeIndex>> out;
  for (EdgeIndex start = 0; start < size(); ++start) {
    if (comp[start] != kNone) continue;
    const auto id = static_cast<std::uint32_t>(out.size());
    std::vector<EdgeIndex> members{start};
    comp[start] = id;
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (EdgeIndex next : adjacency[members[i]]) {
        if (comp[next] == kNone) {
          comp[next] = id;
          members.push_back(next);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

ConflictGraph conflict_graph(const PlanarizedMap& map) {
  ConflictGraph g;
  g.adjacency.resize(map.edge_count());
  g.self_conflict.assign(map.edge_count(), false);
  for (EdgeIndex e = 0; e < map.edge_count(); ++e) g.ids.push_back(map.edge(e).id);
  for (NodeIndex c = static_cast<NodeIndex>(map.vertex_count()); c < map.node_count(); ++c) {
    const auto [a, b] = map.crossing_edges(c);
    if (a == b) {
      g.self_conflict[a] = true;
      continue;
    }
    g.adjacency[a].push_back(b);
    g.adjacency[b].push_back(a);
  }
  for (auto& list : g.adjacency) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  return g;
}

std::string_view skeleton_mode_name(SkeletonMode mode) {
  return mode == SkeletonMode::Exact ? "exact" : "greedy";
}

namespace {

class Bits {
 public:
  explicit Bits(std::size_t n = 0) : words_((n + 63) / 64, 0) {}

  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  std::size_t count_and(const Bits& other) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) c += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
    return c;
  }
  bool empty() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
  }
  std::size_t first() const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] != 0) return i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i]));
    }
    return kNone;
  }
  Bits minus(const Bits& other) const {
    Bits out = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] &= ~other.words_[i];
    return out;
  }
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      for (std::uint64_t w = words_[i]; w != 0; w &= w - 1) f(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
    }
  }

 private:
  std::vector<std::uint64_t> words_;
};

class BranchAndBound {
 public:
  BranchAndBound(std::vector<Bits> adjacency, std::size_t target)
      : adjacency_(std::move(adjacency)), target_(target) {}

  std::vector<std::size_t> solve(const Bits& candidates) {
    search(candidates);
    return best_;
  }

 private:
  // Any independent set avoids a vertex cover, and a cover of the candidate
  // subgraph needs at least ceil(edges / max degree) vertices.
  std::size_t upper_bound(const Bits& p) const {
    const std::size_t size = p.count();
    std::size_t degree_sum = 0;
    std::size_t max_degree = 0;
    p.for_each([&](std::size_t v) {
      const std::size_t d = adjacency_[v].count_and(p);
      degree_sum += d;
      max_degree = std::max(max_degree, d);
    });
    if (max_degree == 0) return size;
    const std::size_t edges = degree_sum / 2;
    return size - (edges + max_degree - 1) / max_degree;
  }

  void search(const Bits& p) {
    if (p.empty()) {
      if (chosen_.size() >= target_) {
        best_ = chosen_;
        target_ = chosen_.size() + 1;
      }
      return;
    }
    if (chosen_.size() + upper_bound(p) < target_) return;
    const std::size_t v = p.first();
    Bits rest = p;
    rest.reset(v);
    chosen_.push_back(v);
    search(rest.minus(adjacency_[v]));
    chosen_.pop_back();
    search(rest);
  }

  std::vector<Bits> adjacency_;
  std::size_t target_;
  std::vector<std::size_t> chosen_;
  std::vector<std::size_t> best_;
};

std::vector<EdgeIndex> by_id(const ConflictGraph& graph, std::vector<EdgeIndex> nodes) {
  std::sort(nodes.begin(), nodes.end(), [&](EdgeIndex a, EdgeIndex b) { return graph.ids[a] < graph.ids[b]; });
  return nodes;
}

}  // namespace

std::vector<EdgeIndex> greedy_independent_set(const ConflictGraph& graph, const std::vector<EdgeIndex>& nodes) {
  const auto order = by_id(graph, nodes);
  std::vector<bool> alive(graph.size(), false);
  std::vector<EdgeIndex> dropped;
  for (EdgeIndex v : order) {
    if (graph.self_conflict[v])
      dropped.push_back(v);
    else
      alive[v] = true;
  }
  const auto live_degree = [&](EdgeIndex v) {
    return std::count_if(graph.adjacency[v].begin(), graph.adjacency[v].end(), [&](EdgeIndex u) { return alive[u]; });
  };
  while (true) {
    EdgeIndex pick = kNone;
    std::ptrdiff_t pick_degree = 0;
    for (EdgeIndex v : order) {
      if (!alive[v]) continue;
      const auto d = live_degree(v);
      if (d > pick_degree) {
        pick = v;
        pick_degree = d;
      }
    }
    if (pick == kNone) break;
    alive[pick] = false;
    dropped.push_back(pick);
  }
  for (EdgeIndex v : by_id(graph, dropped)) {
    if (graph.self_conflict[v] || live_degree(v) > 0) continue;
    alive[v] = true;
  }
  std::vector<EdgeIndex> out;
  for (EdgeIndex v : nodes) {
    if (alive[v]) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<EdgeIndex> exact_independent_set(const ConflictGraph& graph, const std::vector<EdgeIndex>& nodes,
                                             std::size_t budget) {
  if (nodes.size() > budget) {
    throw Error(ErrorCode::BudgetExceeded, "conflict component of " + std::to_string(nodes.size()) +
                                               " edges exceeds the exact solver budget of " + std::to_string(budget) +
                                               "; use greedy mode");
  }
  const auto order = by_id(graph, nodes);
  std::vector<std::uint32_t> local(graph.size(), kNone);
  for (std::size_t i = 0; i < order.size(); ++i) local[order[i]] = static_cast<std::uint32_t>(i);

  std::vector<Bits> adjacency(order.size(), Bits(order.size()));
  Bits candidates(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (!graph.self_conflict[order[i]]) candidates.set(i);
    for (EdgeIndex u : graph.adjacency[order[i]]) {
      if (local[u] != kNone) adjacency[i].set(local[u]);
    }
  }

  const std::size_t lower = greedy_independent_set(graph, nodes).size();
  BranchAndBound solver(std::move(adjacency), lower);
  std::vector<EdgeIndex> out;
  for (std::size_t i : solver.solve(candidates)) out.push_back(order[i]);
  std::sort(out.begin(), out.end());
  return out;
}

bool SkeletonDecomposition::in_skeleton(EdgeIndex e) const { return std::binary_search(kept.begin(), kept.end(), e); }

std::set<std::string> SkeletonDecomposition::kept_ids() const {
  std::set<std::string> ids;
  for (EdgeIndex e : kept) ids.insert(full.edge(e).id);
  return ids;
}

SkeletonDecomposition extract_skeleton(const PlanarizedMap& map, const SkeletonOptions& options) {
  const ConflictGraph graph = conflict_graph(map);
  SkeletonDecomposition dec;
  dec.mode = options.mode;
  dec.full = map;

  const auto components = graph.components();
  dec.component_count = components.size();
  for (const auto& comp : components) {
    dec.largest_component = std::max(dec.largest_component, comp.size());
    const auto chosen = options.mode == SkeletonMode::Exact
                            ? exact_independent_set(graph, comp, options.node_budget)
                            : greedy_independent_set(graph, comp);
    dec.kept.insert(dec.kept.end(), chosen.begin(), chosen.end());
  }
  std::sort(dec.kept.begin(), dec.kept.end());
  for (EdgeIndex e = 0; e < map.edge_count(); ++e) {
    if (!dec.in_skeleton(e)) dec.residual.push_back(e);
  }
  dec.maximum = options.mode == SkeletonMode::Exact || graph.conflict_count() == 0;
  dec.skeleton = restrict(map, dec.kept_ids());
  return dec;
}

std::span<const FaceWalk> skeleton_faces(const SkeletonDecomposition& dec) { return dec.skeleton.faces(); }

bool is_independent(const ConflictGraph& graph, const std::vector<EdgeIndex>& nodes) {
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (graph.self_conflict[nodes[i]]) return false;
    for (std::size_t j = i + 1; j < nodes.size(); ++j) {
      if (graph.adjacent(nodes[i], nodes[j])) return false;
    }
  }
  return true;
}

bool is_maximal(const ConflictGraph& graph, const std::vector<EdgeIndex>& nodes) {
  std::vector<bool> in(graph.size(), false);
  for (EdgeIndex v : nodes) in[v] = true;
  for (EdgeIndex v = 0; v < graph.size(); ++v) {
    if (in[v] || graph.self_conflict[v]) continue;
    const auto& adj = graph.adjacency[v];
    if (std::none_of(adj.begin(), adj.end(), [&](EdgeIndex u) { return in[u]; })) return false;
  }
  return true;
}

}  // namespace crossing_ledger
