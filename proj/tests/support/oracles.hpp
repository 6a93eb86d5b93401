#pragma once

// Independent reference computations used to check the library.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "drawing.hpp"
#include "skeleton.hpp"

namespace oracles {

// Two chords of a convex polygon with corners 1..size cross iff their
// endpoints interleave around the boundary.
bool chords_interleave(std::pair<int, int> a, std::pair<int, int> b, int size = 6);

struct ExhaustiveResult {
  std::size_t size = 0;
  std::size_t maxima = 0;                 // number of maximum independent sets
  std::vector<crossing_ledger::EdgeIndex> smallest;  // smallest id list among maxima
};

// Exhaustive maximum independent set over all subsets of `nodes` (at most
// 24 of them). Self-conflicting nodes are never chosen.
ExhaustiveResult exhaustive_independent_set(const crossing_ledger::ConflictGraph& graph,
                                            const std::vector<crossing_ledger::EdgeIndex>& nodes);

// V - E + F per connected component, computed from the map's raw data.
std::vector<long> euler_characteristics(const crossing_ledger::PlanarizedMap& map);

}  // namespace oracles
