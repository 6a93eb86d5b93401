#include <cstdlib>

#include "doctest.h"
#include "generator.hpp"
#include "oracles.hpp"

using namespace crossing_ledger;

namespace {

ErrorCode error_of(std::size_t n, bool strict) {
  try {
    generate_optimal(n, strict);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("edge and vertex counts") {
  for (std::size_t n = 6; n <= 40; n += 2) {
    const auto spec = generate_optimal(n);
    CHECK(spec.vertices.size() == n);
    CHECK(spec.edges.size() == 11 * n / 2 - 11);
  }
  CHECK(generate_optimal(102).edges.size() == 550);
}

TEST_CASE("frame") {
  const auto frame = frame_spec(10);
  CHECK(frame.paths == 4);
  CHECK(frame.inner.size() == 4);
  const auto m = build_map(theta_frame(10));
  CHECK(m.edge_count() == 3 * frame.paths);
  CHECK(m.face_count() == frame.paths);
}

TEST_CASE("invalid n") {
  CHECK(error_of(4, false) == ErrorCode::BadN);
  CHECK(error_of(7, false) == ErrorCode::BadN);
  CHECK(error_of(8, true) == ErrorCode::BadN);
  CHECK_NOTHROW(generate_optimal(8, false));
  CHECK_NOTHROW(generate_optimal(10, true));
}

TEST_CASE("strict mode from the environment") {
  ::setenv("CROSSING_LEDGER_MODE", "strict-paper", 1);
  CHECK(strict_mode_from_env());
  ::setenv("CROSSING_LEDGER_MODE", "default", 1);
  CHECK_FALSE(strict_mode_from_env());
  ::unsetenv("CROSSING_LEDGER_MODE");
  CHECK_FALSE(strict_mode_from_env());
}

TEST_CASE("gadget crossings match convex chord interleaving") {
  const auto frame = build_map(theta_frame(6));
  const auto gadget = hexagon_gadget(frame, 0, "h0", "u");
  REQUIRE(gadget.edges.size() == kGadgetChords.size());
  std::set<std::pair<std::string, std::string>> crossing_pairs;
  for (const auto& [cid, pair] : gadget.crossings) crossing_pairs.insert(std::minmax(pair.first, pair.second));
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < kGadgetChords.size(); ++i) {
    for (std::size_t j = i + 1; j < kGadgetChords.size(); ++j) {
      ++pairs;
      const bool crossing = crossing_pairs.contains(std::minmax(gadget.edges[i].id, gadget.edges[j].id));
      CHECK_MESSAGE(crossing == oracles::chords_interleave(kGadgetChords[i], kGadgetChords[j]),
                    gadget.edges[i].id << " / " << gadget.edges[j].id);
    }
  }
  CHECK(pairs == 28);
  CHECK(gadget.crossings.size() == 11);
}

TEST_CASE("gadget needs a hexagonal face") {
  DrawingSpec tri;
  tri.vertices = {"a", "b", "c"};
  tri.edges = {{"ab", "a", "b"}, {"bc", "b", "c"}, {"ca", "c", "a"}};
  tri.rotations = {{"a", {{"ab", Direction::Forward}, {"ca", Direction::Reverse}}},
                   {"b", {{"bc", Direction::Forward}, {"ab", Direction::Reverse}}},
                   {"c", {{"ca", Direction::Forward}, {"bc", Direction::Reverse}}}};
  try {
    hexagon_gadget(build_map(tri), 0, "h");
    FAIL("expected NotHexagon");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotHexagon);
  }
}

TEST_CASE("generation is deterministic") {
  CHECK(generate_optimal(14) == generate_optimal(14));
}
