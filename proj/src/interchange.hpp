#pragma once

// Interchange document: a JSON object whose keys are emitted in the order
// vertices, edges, chains, crossings, rotations. Reports reuse the same
// document and append their own sections after these keys; parsing ignores
// keys it does not know.
//
//   {
//     "vertices":  ["u", "v", ...],
//     "edges":     [{"id": "e1", "end_a": "u", "end_b": "v"}, ...],
//     "chains":    {"e1": ["x1", ...], ...},        // end_a -> end_b
//     "crossings": {"x1": ["e1", "e2"], ...},
//     "rotations": {"u": ["+e1", "-e2", ...], ...}  // clockwise
//   }
//
// A rotation entry "+e" is the segment of e leaving the node towards end_b,
// "-e" the one leaving towards end_a. Integer ids are accepted and read as
// their decimal spelling.

#include <filesystem>
#include <string>
#include <string_view>

#include "json.hpp"

#include "drawing.hpp"

namespace crossing_ledger {

using ordered_json = nlohmann::ordered_json;

ordered_json drawing_to_json(const DrawingSpec& spec);
std::string emit_drawing(const DrawingSpec& spec);

// Throws Error{Parse} with line/column or field-path context, and
// Error{Invariant} for duplicate or dangling identifiers.
DrawingSpec parse_drawing_text(std::string_view text);
DrawingSpec drawing_from_json(const nlohmann::json& doc);
DrawingSpec parse_drawing(const std::filesystem::path& path);

// Rotations re-anchored at their smallest entry and crossing pairs sorted;
// idempotent.
DrawingSpec canonicalize(DrawingSpec spec);

// "sha256:<hex>" of the emitted document.
std::string input_digest(const DrawingSpec& spec);

}  // namespace crossing_ledger
