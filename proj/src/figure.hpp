#pragma once

// Static pictures of a planarized drawing. Geometry is cosmetic; only the
// topology is meaningful.

#include <optional>
#include <string>

#include "drawing.hpp"

namespace crossing_ledger {

enum class FigureFormat { Dot, Svg };

// Real vertices as circles, crossings as squares, one line per segment.
std::string export_dot(const PlanarizedMap& map);

// Tutte layout: the outer face of each component sits on a circle and every
// other node at the barycentre of its neighbours. The outer face defaults
// to the longest face (lowest id on ties). Throws Error{BadHint} for an
// unknown face id. One polyline per edge.
std::string export_svg(const PlanarizedMap& map, std::optional<FaceIndex> outer_face = std::nullopt);

std::string export_figure(const PlanarizedMap& map, FigureFormat format,
                          std::optional<FaceIndex> outer_face = std::nullopt);

}  // namespace crossing_ledger
