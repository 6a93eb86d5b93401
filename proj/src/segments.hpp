#pragma once

// Residual edges cut at their crossings with the skeleton. The piece between
// an endpoint and the nearest skeleton crossing is a stick; a piece between
// two consecutive skeleton crossings is a middle part. Every piece lies in
// one face of the skeleton, its host.

#include <cstddef>
#include <string>
#include <vector>

#include "skeleton.hpp"

namespace crossing_ledger {

enum class PieceKind { Stick, Middle };
enum class StickSide { Left, Right };

struct SegmentPiece {
  EdgeIndex edge = kNone;  // index in the full map
  PieceKind kind = PieceKind::Stick;
  std::uint32_t ordinal = 0;  // position along the edge's chain
  // Full-map chain node indices bounding the piece, in chain order.
  NodeIndex from = kNone;
  NodeIndex to = kNone;
  FaceIndex face = kNone;  // skeleton face

  // Sticks: the emanating real vertex and its occurrence in the host walk
  // (kNone when the vertex has no skeleton edge at all).
  NodeIndex vertex = kNone;
  std::uint32_t corner = kNone;

  // Walk positions of the crossed skeleton-edge occurrences and the crossed
  // edges (full-map indices). A stick uses slot 0 only.
  std::uint32_t anchor[2] = {kNone, kNone};
  EdgeIndex crossed[2] = {kNone, kNone};

  bool is_short = false;  // stick: short vs long; middle: short vs far
  StickSide side = StickSide::Left;

  // Pieces (indices into SegmentReport::pieces) crossed inside the host face.
  std::vector<std::size_t> crossings;
};

struct StickPair {
  std::size_t first = 0;
  std::size_t second = 0;
  bool opposite = false;
};

struct FaceProfile {
  FaceIndex face = 0;
  std::size_t size = 0;
  std::vector<std::size_t> type;  // sticks per vertex occurrence
  std::vector<std::size_t> sticks;
  std::vector<std::size_t> middles;
  std::vector<bool> bridge;  // per edge occurrence
  std::size_t bridges = 0;
  std::size_t non_bridges = 0;
  std::size_t uncrossed_non_bridges = 0;  // non-bridges crossed by no middle part
  std::vector<StickPair> crossing_sticks;

  bool triangle() const { return size == 3; }
};

struct SegmentReport {
  std::vector<SegmentPiece> pieces;
  std::vector<FaceProfile> profiles;  // one per skeleton face, by face id
  std::vector<std::string> warnings;

  std::size_t stick_count() const;
  std::size_t middle_count() const;
};

// Walk positions are taken modulo `length`. A stick from occurrence
// `corner` crossing edge occurrence `anchor` is short when exactly one other
// vertex occurrence lies between them in either direction.
bool stick_is_short(std::size_t corner, std::size_t anchor, std::size_t length);
// A middle part is short when its two crossed occurrences are consecutive.
bool middle_is_short(std::size_t first, std::size_t second, std::size_t length);
// Right when the stick crosses the edge occurrence starting one step after
// its corner.
StickSide stick_side(std::size_t corner, std::size_t anchor, std::size_t length);

// Throws Error{Invariant} when a residual edge crosses no skeleton edge.
std::vector<SegmentPiece> decompose(const SkeletonDecomposition& dec, std::vector<std::string>* warnings = nullptr);
std::vector<FaceProfile> face_profiles(const SkeletonDecomposition& dec, const std::vector<SegmentPiece>& pieces,
                                       std::vector<std::string>* warnings = nullptr);
SegmentReport analyze_segments(const SkeletonDecomposition& dec);

}  // namespace crossing_ledger
