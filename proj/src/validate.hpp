#pragma once

#include <optional>
#include <string>
#include <vector>

#include "drawing.hpp"

namespace crossing_ledger {

struct Violation {
  std::string rule;                // "k-planarity", "self-crossing", "homotopic-pair", ...
  std::vector<std::string> edges;  // offending edge ids
  std::string detail;
};

struct ValidationReport {
  std::optional<int> k;
  // Crossings per edge, in edge declaration order.
  std::vector<std::pair<std::string, std::size_t>> crossing_counts;
  std::size_t max_crossings = 0;
  std::vector<Violation> violations;
  std::vector<Violation> homotopy_violations;
  std::vector<std::string> warnings;

  bool ok() const { return violations.empty() && homotopy_violations.empty(); }
  void merge(ValidationReport other);
};

ValidationReport check_k_planar(const PlanarizedMap& map, int k);

// Every pair of parallel edges (and every self-loop) must bound regions that
// each hold a real vertex strictly inside. Regions are the components of the
// face-adjacency graph once the curve's segments are cut.
ValidationReport check_homotopy(const PlanarizedMap& map);

ValidationReport check_sanity(const PlanarizedMap& map);

// All three checks merged.
ValidationReport validate_drawing(const PlanarizedMap& map, int k);

}  // namespace crossing_ledger
