#pragma once

// Tight family: a plane frame whose faces are all hexagons (poles u and w
// joined by (n-2)/2 paths of length three), with eight chords drawn inside
// every hexagon as in convex position.

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "drawing.hpp"

namespace crossing_ledger {

struct FrameSpec {
  std::size_t n = 0;
  std::size_t paths = 0;  // also the number of hexagonal faces
  std::string pole_u = "u";
  std::string pole_w = "w";
  std::vector<std::pair<std::string, std::string>> inner;  // internal vertices per path
};

// n even and at least 6; strict additionally needs (n - 2) % 4 == 0.
// Throws Error{BadN}.
FrameSpec frame_spec(std::size_t n, bool strict = false);
DrawingSpec theta_frame(std::size_t n, bool strict = false);

// Chords of a hexagon v1..v6 (1-based corners): six short diagonals then the
// two long ones.
inline constexpr std::array<std::pair<int, int>, 8> kGadgetChords{{
    {1, 3}, {3, 5}, {5, 1}, {2, 4}, {4, 6}, {6, 2}, {1, 4}, {2, 5},
}};

struct HexGadget {
  std::array<std::string, 6> corners;  // vertex ids v1..v6
  std::vector<EdgeDecl> edges;         // in kGadgetChords order
  std::map<std::string, std::vector<std::string>> chains;
  std::map<std::string, std::pair<std::string, std::string>> crossings;
  std::map<std::string, std::vector<DartRef>> crossing_rotations;
  // Per corner: the boundary dart leaving it along the face walk, and the
  // chord darts to insert right after it, clockwise.
  std::array<DartRef, 6> boundary_out;
  std::array<std::vector<DartRef>, 6> corner_darts;
};

// Face `f` of `frame` must be a 6-walk through six distinct real vertices.
// v1 is `first_corner` when given and on the walk, else the walk's first
// node. Throws Error{NotHexagon}.
HexGadget hexagon_gadget(const PlanarizedMap& frame, FaceIndex f, const std::string& prefix,
                         const std::string& first_corner = {});

void embed_gadget(DrawingSpec& spec, const HexGadget& gadget);

DrawingSpec generate_optimal(std::size_t n, bool strict = false);

// True when CROSSING_LEDGER_MODE=strict-paper is set.
bool strict_mode_from_env();

}  // namespace crossing_ledger
