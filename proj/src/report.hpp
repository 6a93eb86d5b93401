#pragma once

// Report documents: the interchange document of the input drawing, followed
// by a "report" header and one key per computed section. Key order is fixed,
// so identical inputs and flags give identical bytes.

#include <string>
#include <utility>
#include <vector>

#include "audit.hpp"
#include "interchange.hpp"
#include "validate.hpp"

namespace crossing_ledger {

inline constexpr const char* kToolName = "crossing-ledger";
inline constexpr const char* kToolVersion = "0.1.0";

ordered_json validation_section(const ValidationReport& report);
ordered_json skeleton_section(const SkeletonDecomposition& dec);
ordered_json segments_section(const SkeletonDecomposition& dec, const SegmentReport& segments);
ordered_json audit_section(const SkeletonDecomposition& dec, const AuditReport& audit);

std::string validation_text(const PlanarizedMap& map, const ValidationReport& report);
std::string skeleton_text(const SkeletonDecomposition& dec);
std::string segments_text(const SkeletonDecomposition& dec, const SegmentReport& segments);
std::string audit_text(const SkeletonDecomposition& dec, const AuditReport& audit);

class ReportDocument {
 public:
  explicit ReportDocument(const DrawingSpec& spec);

  void add(std::string key, ordered_json section, std::string text);

  std::string json() const;
  std::string text() const;

 private:
  ordered_json doc_;
  std::string digest_;
  std::vector<std::string> text_;
};

}  // namespace crossing_ledger
