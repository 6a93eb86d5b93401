#pragma once

// Hand-built drawings with known answers.

#include "drawing.hpp"
#include "geometry.hpp"

namespace fixtures {

using crossing_ledger::DrawingSpec;

// Triangle a b c with a pendant edge c-d: the outer face visits c twice.
DrawingSpec non_simple_face();
// Edge "long" crossed by four vertical edges.
DrawingSpec four_crossing_edge();
// Parallel edges e1, e2 between u and v with nothing between them.
DrawingSpec empty_bigon();
// Same as empty_bigon with a vertex inside the bigon.
DrawingSpec occupied_bigon();
// Square a b c d with a stick from a through bc that nothing crosses.
DrawingSpec uncrossed_stick();
// Square a b c d crossed by an edge p-q through ab and cd.
DrawingSpec far_middle();
// Triangle A B C with one stick at each corner, pairwise crossing, inside a
// triangulated skeleton.
DrawingSpec one_one_one();
// Triangle A B C hosting four sticks from C (valid only for k = 4).
DrawingSpec four_stick_triangle();
// Edge "loopy" crossing itself once.
DrawingSpec self_crossing();
// Edges e1 and e2 crossing each other twice.
DrawingSpec double_crossing();
// 4-cycle v1..v4 whose two diagonals cross once.
DrawingSpec square_with_diagonals();

}  // namespace fixtures
