#include <numeric>

#include "doctest.h"
#include "fixtures.hpp"
#include "generator.hpp"
#include "segments.hpp"

using namespace crossing_ledger;

namespace {

std::vector<const SegmentPiece*> pieces_of(const SegmentReport& r, const PlanarizedMap& m, const std::string& id) {
  std::vector<const SegmentPiece*> out;
  const EdgeIndex e = *m.find_edge(id);
  for (const auto& p : r.pieces) {
    if (p.edge == e) out.push_back(&p);
  }
  std::sort(out.begin(), out.end(), [](auto* a, auto* b) { return a->ordinal < b->ordinal; });
  return out;
}

}  // namespace

TEST_CASE("classification helpers") {
  CHECK(stick_is_short(0, 1, 6));
  CHECK(stick_is_short(0, 4, 6));
  CHECK_FALSE(stick_is_short(0, 2, 6));
  CHECK_FALSE(stick_is_short(0, 3, 6));
  CHECK(stick_is_short(5, 0, 6));
  for (std::size_t c = 0; c < 3; ++c) CHECK(stick_is_short(c, (c + 1) % 3, 3));
  CHECK(stick_side(0, 1, 6) == StickSide::Right);
  CHECK(stick_side(0, 4, 6) == StickSide::Left);
  CHECK(stick_side(5, 0, 6) == StickSide::Right);
  CHECK(middle_is_short(2, 3, 6));
  CHECK(middle_is_short(5, 0, 6));
  CHECK(middle_is_short(0, 5, 6));
  CHECK_FALSE(middle_is_short(0, 3, 6));
  CHECK_FALSE(middle_is_short(1, 3, 6));
}

TEST_CASE("hexagon chords split into sticks and middle parts") {
  const auto dec = extract_skeleton(build_map(generate_optimal(6)));
  const auto r = analyze_segments(dec);
  CHECK(r.stick_count() == 20);
  CHECK(r.middle_count() == 6);
  CHECK(r.warnings.empty());

  SUBCASE("short diagonal crossing two skeleton chords") {
    const auto parts = pieces_of(r, dec.full, "h0_d3");
    REQUIRE(parts.size() == 3);
    CHECK(parts[0]->kind == PieceKind::Stick);
    CHECK(parts[1]->kind == PieceKind::Middle);
    CHECK(parts[2]->kind == PieceKind::Stick);
    CHECK(parts[1]->is_short);
    CHECK(parts[0]->face != parts[1]->face);
    CHECK(parts[1]->face != parts[2]->face);
  }

  SUBCASE("long diagonal crossing one skeleton chord") {
    const auto parts = pieces_of(r, dec.full, "h0_d6");
    REQUIRE(parts.size() == 2);
    CHECK(parts[0]->kind == PieceKind::Stick);
    CHECK(parts[1]->kind == PieceKind::Stick);
    CHECK(parts[0]->crossed[0] == parts[1]->crossed[0]);
    CHECK(dec.full.edge(parts[0]->crossed[0]).id == "h0_d1");
  }

  SUBCASE("sticks in triangles are short and sit at their vertex") {
    for (const auto& p : r.pieces) {
      if (p.kind != PieceKind::Stick) continue;
      CHECK(p.is_short);
      const auto& walk = dec.skeleton.face(p.face);
      REQUIRE(p.corner < walk.size());
      CHECK(dec.skeleton.node(dec.skeleton.origin(walk.darts[p.corner])).id == dec.full.node(p.vertex).id);
    }
  }

  SUBCASE("face profiles") {
    std::size_t total = 0;
    std::map<std::size_t, std::size_t> by_count;
    for (const auto& prof : r.profiles) {
      CHECK(prof.triangle());
      const auto sum = std::accumulate(prof.type.begin(), prof.type.end(), std::size_t{0});
      CHECK(sum == prof.sticks.size());
      CHECK(prof.bridges == 0);
      total += sum;
      ++by_count[sum];
    }
    CHECK(total == 20);
    CHECK(by_count[0] == 0);
    CHECK(by_count[2] == 4);
    CHECK(by_count[3] == 4);
  }
}

TEST_CASE("pendant edges are bridges of the face around them") {
  const auto dec = extract_skeleton(build_map(fixtures::non_simple_face()));
  const auto r = analyze_segments(dec);
  std::size_t bridges = 0;
  for (const auto& prof : r.profiles) bridges += prof.bridges;
  CHECK(bridges == 1);
}

TEST_CASE("decomposition needs every residual edge to cross the skeleton") {
  auto dec = extract_skeleton(build_map(fixtures::square_with_diagonals()));
  // Demote an uncrossed boundary edge.
  dec.residual.push_back(*dec.full.find_edge("c1"));
  dec.kept.erase(std::find(dec.kept.begin(), dec.kept.end(), *dec.full.find_edge("c1")));
  std::set<std::string> keep = dec.kept_ids();
  dec.skeleton = restrict(dec.full, keep);
  CHECK_THROWS_AS(decompose(dec), Error);
}
