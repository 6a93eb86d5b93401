#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace oracles {

using crossing_ledger::EdgeIndex;

bool chords_interleave(std::pair<int, int> a, std::pair<int, int> b, int size) {
  if (a.first == b.first || a.first == b.second || a.second == b.first || a.second == b.second) return false;
  const auto strictly_between = [size](int from, int to, int x) {
    // Walk from `from` towards `to` increasing modulo size.
    for (int step = (from % size) + 1;; ++step) {
      const int at = (step - 1) % size + 1;
      if (at == to) return false;
      if (at == x) return true;
    }
  };
  return strictly_between(a.first, a.second, b.first) != strictly_between(a.first, a.second, b.second);
}

ExhaustiveResult exhaustive_independent_set(const crossing_ledger::ConflictGraph& graph,
                                            const std::vector<EdgeIndex>& nodes) {
  const std::size_t k = nodes.size();
  if (k > 24) throw std::invalid_argument("too many nodes for exhaustive search");
  std::vector<std::uint32_t> adjacent(k, 0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (i != j && graph.adjacent(nodes[i], nodes[j])) adjacent[i] |= 1u << j;

  ExhaustiveResult best;
  std::vector<std::string> best_ids;
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    bool ok = true;
    for (std::size_t i = 0; i < k && ok; ++i) {
      if (!(mask >> i & 1u)) continue;
      if (graph.self_conflict[nodes[i]] || (adjacent[i] & mask)) ok = false;
    }
    if (!ok) continue;
    const auto size = static_cast<std::size_t>(__builtin_popcount(mask));
    std::vector<EdgeIndex> chosen;
    std::vector<std::string> ids;
    for (std::size_t i = 0; i < k; ++i) {
      if (mask >> i & 1u) {
        chosen.push_back(nodes[i]);
        ids.push_back(graph.ids[nodes[i]]);
      }
    }
    std::sort(ids.begin(), ids.end());
    if (size > best.size || (best.maxima == 0 && size == 0)) {
      best.size = size;
      best.maxima = 1;
      best.smallest = chosen;
      best_ids = ids;
    } else if (size == best.size) {
      ++best.maxima;
      if (ids < best_ids) {
        best.smallest = chosen;
        best_ids = ids;
      }
    }
  }
  std::sort(best.smallest.begin(), best.smallest.end());
  return best;
}

std::vector<long> euler_characteristics(const crossing_ledger::PlanarizedMap& map) {
  const std::size_t nodes = map.node_count();
  std::vector<std::size_t> parent(nodes);
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (crossing_ledger::SegmentIndex s = 0; s < map.segment_count(); ++s)
    parent[find(map.segment(s).from)] = find(map.segment(s).to);

  std::vector<long> chi(nodes, 0);
  std::vector<bool> present(nodes, false);
  for (std::size_t v = 0; v < nodes; ++v) {
    ++chi[find(v)];
    present[find(v)] = true;
  }
  for (crossing_ledger::SegmentIndex s = 0; s < map.segment_count(); ++s) --chi[find(map.segment(s).from)];
  for (const auto& f : map.faces()) ++chi[find(map.origin(f.darts.front()))];
  std::vector<long> out;
  for (std::size_t v = 0; v < nodes; ++v) {
    // An isolated vertex has no face of its own; count the sphere around it.
    if (present[v] && map.degree(v) == 0 && find(v) == v) ++chi[v];
    if (present[v] && find(v) == v) out.push_back(chi[v]);
  }
  return out;
}

}  // namespace oracles
