#include "fixtures.hpp"

namespace fixtures {

DrawingSpec non_simple_face() {
  GeoDrawing g;
  g.vertex("a", 0, 0).vertex("b", 10, 0).vertex("c", 5, 8).vertex("d", 5, 14);
  g.edge("ab", "a", "b").edge("bc", "b", "c").edge("ca", "c", "a").edge("cd", "c", "d");
  return planarize(g);
}

DrawingSpec four_crossing_edge() {
  GeoDrawing g;
  g.vertex("a", 0, 0).vertex("b", 10, 0);
  for (int i = 1; i <= 4; ++i) {
    g.vertex("p" + std::to_string(i), 2.0 * i, -5).vertex("q" + std::to_string(i), 2.0 * i, 5);
  }
  g.edge("long", "a", "b");
  for (int i = 1; i <= 4; ++i) g.edge("v" + std::to_string(i), "p" + std::to_string(i), "q" + std::to_string(i));
  return planarize(g);
}

DrawingSpec empty_bigon() {
  GeoDrawing g;
  g.vertex("u", 0, 0).vertex("v", 10, 0).vertex("w", 5, -5);
  g.edge("e1", "u", "v").edge("e2", "u", "v", {{5, 3}}).edge("f", "u", "w");
  return planarize(g);
}

DrawingSpec occupied_bigon() {
  GeoDrawing g;
  g.vertex("u", 0, 0).vertex("v", 10, 0).vertex("w", 5, -5).vertex("x", 5, 1);
  g.edge("e1", "u", "v").edge("e2", "u", "v", {{5, 3}}).edge("f", "u", "w").edge("g", "u", "x");
  return planarize(g);
}

DrawingSpec uncrossed_stick() {
  GeoDrawing g;
  g.vertex("a", 0, 0).vertex("b", 10, 0).vertex("c", 10, 10).vertex("d", 0, 10).vertex("x", 15, 5);
  g.edge("e1", "a", "b").edge("e2", "b", "c").edge("e3", "c", "d").edge("e4", "d", "a");
  g.edge("e5", "b", "x").edge("e6", "c", "x").edge("r", "a", "x");
  return planarize(g);
}

DrawingSpec far_middle() {
  GeoDrawing g;
  g.vertex("a", 0, 0).vertex("b", 10, 0).vertex("c", 10, 10).vertex("d", 0, 10);
  g.vertex("p", 5, -5).vertex("q", 5, 15);
  g.edge("e1", "a", "b").edge("e2", "b", "c").edge("e3", "c", "d").edge("e4", "d", "a");
  g.edge("e5", "p", "a").edge("e6", "p", "b").edge("e7", "q", "c").edge("e8", "q", "d");
  g.edge("r", "p", "q");
  return planarize(g);
}

DrawingSpec one_one_one() {
  const Point A{0, 0}, B{10, 0}, C{5, 9};
  const auto beyond = [](Point from, Point through) {
    return Point{from.x + 4 * (through.x - from.x), from.y + 4 * (through.y - from.y)};
  };
  const Point X = beyond(A, {5.4, 2.8});
  const Point Y = beyond(B, {4.7, 3.1});
  const Point Z = beyond(C, {5.1, 2.9});
  GeoDrawing g;
  g.vertex("A", A.x, A.y).vertex("B", B.x, B.y).vertex("C", C.x, C.y);
  g.vertex("X", X.x, X.y).vertex("Y", Y.x, Y.y).vertex("Z", Z.x, Z.y);
  g.edge("eAB", "A", "B").edge("eBC", "B", "C").edge("eCA", "C", "A");
  g.edge("eXB", "X", "B").edge("eXC", "X", "C").edge("eYC", "Y", "C");
  g.edge("eYA", "Y", "A").edge("eZA", "Z", "A").edge("eZB", "Z", "B");
  g.edge("eXY", "X", "Y").edge("eYZ", "Y", "Z").edge("eZX", "Z", "X");
  g.edge("rA", "A", "X").edge("rB", "B", "Y").edge("rC", "C", "Z");
  return planarize(g);
}

DrawingSpec four_stick_triangle() {
  GeoDrawing g;
  g.vertex("A", 0, 0).vertex("B", 20, 0).vertex("C", 10, 20);
  for (int i = 1; i <= 3; ++i) {
    g.vertex("D" + std::to_string(i), -2, -4.0 * i).vertex("E" + std::to_string(i), 22, -4.0 * i);
  }
  for (int j = 0; j < 4; ++j) g.vertex("P" + std::to_string(j), 4 + 4.0 * j, -16);
  g.edge("h0", "A", "B");
  for (int i = 1; i <= 3; ++i) g.edge("h" + std::to_string(i), "D" + std::to_string(i), "E" + std::to_string(i));
  g.edge("s1", "B", "C").edge("s2", "C", "A");
  for (int j = 0; j < 4; ++j) g.edge("r" + std::to_string(j), "C", "P" + std::to_string(j));
  return planarize(g);
}

DrawingSpec self_crossing() {
  GeoDrawing g;
  g.vertex("a", 0, 0).vertex("b", -5, 5);
  g.edge("loopy", "a", "b", {{10, 10}, {10, 0}, {0, 10}});
  return planarize(g);
}

DrawingSpec double_crossing() {
  GeoDrawing g;
  g.vertex("a", 0, 0).vertex("b", 10, 0).vertex("c", 2, -3).vertex("d", 8, -3);
  g.edge("e1", "a", "b").edge("e2", "c", "d", {{5, 3}});
  return planarize(g);
}

DrawingSpec square_with_diagonals() {
  GeoDrawing g;
  g.vertex("v1", 0, 0).vertex("v2", 10, 0).vertex("v3", 10, 10).vertex("v4", 0, 10);
  g.edge("c1", "v1", "v2").edge("c2", "v2", "v3").edge("c3", "v3", "v4").edge("c4", "v4", "v1");
  g.edge("d1", "v1", "v3").edge("d2", "v2", "v4");
  return planarize(g);
}

}  // namespace fixtures
