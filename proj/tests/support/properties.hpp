#pragma once

// Randomized property checks shared by the unit tests and the acceptance
// binary.

#include <cstdint>
#include <string>
#include <vector>

namespace properties {

struct Outcome {
  std::size_t instances = 0;
  std::size_t checks = 0;
  std::vector<std::string> failures;
};

// Each instance is a random small drawing; checked properties:
//   round-trip      parse(emit(spec)) == spec and emit is a fixed point
//   euler           every restriction keeps V - E + F = 2 per component
//   sticks          sticks == 2 x residual edges, exact and greedy
//   k-monotone      valid at k implies valid at k + 1
//   skeleton        independence, maximality, exact >= greedy, exhaustive
//                   agreement on components of at most 20 edges
//   removal         deleting an edge creates no new violation
Outcome run(std::uint64_t seed, std::size_t count);

}  // namespace properties
