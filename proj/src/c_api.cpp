#include "crossing_ledger/crossing_ledger.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "audit.hpp"
#include "figure.hpp"
#include "generator.hpp"
#include "interchange.hpp"
#include "report.hpp"
#include "validate.hpp"

using namespace crossing_ledger;

struct cl_drawing {
  DrawingSpec spec;
  PlanarizedMap map;
};

namespace {

thread_local std::string last_error;

cl_status to_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument:
      return CL_ERR_INVALID_ARGUMENT;
    case ErrorCode::Io:
      return CL_ERR_IO;
    case ErrorCode::Parse:
      return CL_ERR_PARSE;
    case ErrorCode::Invariant:
      return CL_ERR_INVARIANT;
    case ErrorCode::InvalidRotation:
      return CL_ERR_INVALID_ROTATION;
    case ErrorCode::DanglingCrossing:
      return CL_ERR_DANGLING_CROSSING;
    case ErrorCode::NonSpherical:
      return CL_ERR_NON_SPHERICAL;
    case ErrorCode::BadN:
      return CL_ERR_BAD_N;
    case ErrorCode::NotHexagon:
      return CL_ERR_NOT_HEXAGON;
    case ErrorCode::BudgetExceeded:
      return CL_ERR_BUDGET_EXCEEDED;
    case ErrorCode::UnsupportedK:
      return CL_ERR_UNSUPPORTED_K;
    case ErrorCode::BadHint:
      return CL_ERR_BAD_HINT;
    case ErrorCode::Inapplicable:
      return CL_ERR_INAPPLICABLE;
    case ErrorCode::SelfLoopDegenerate:
      return CL_ERR_SELF_LOOP_DEGENERATE;
  }
  return CL_ERR_INTERNAL;
}

template <class F>
cl_status guarded(F&& body) {
  last_error.clear();
  try {
    body();
    return CL_OK;
  } catch (const Error& err) {
    last_error = err.what();
    return to_status(err.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return CL_ERR_INTERNAL;
  } catch (const std::exception& err) {
    last_error = err.what();
    return CL_ERR_INTERNAL;
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::InvalidArgument, what);
}

char* copy_out(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, text.data(), text.size() + 1);
  return out;
}

cl_drawing* make_drawing(DrawingSpec spec) {
  PlanarizedMap map = build_map(spec);
  return new cl_drawing{std::move(spec), std::move(map)};
}

SkeletonOptions skeleton_options(cl_mode mode, size_t budget) {
  require(mode == CL_MODE_EXACT || mode == CL_MODE_GREEDY, "unknown skeleton mode");
  SkeletonOptions o;
  o.mode = mode == CL_MODE_EXACT ? SkeletonMode::Exact : SkeletonMode::Greedy;
  o.node_budget = budget == 0 ? kDefaultNodeBudget : budget;
  return o;
}

std::string render(const ReportDocument& doc, cl_format format) {
  require(format == CL_FORMAT_JSON || format == CL_FORMAT_TEXT, "unknown format");
  return format == CL_FORMAT_JSON ? doc.json() : doc.text();
}

}  // namespace

extern "C" {

const char* cl_version(void) { return kToolVersion; }

const char* cl_status_name(cl_status status) {
  switch (status) {
    case CL_OK:
      return "ok";
    case CL_ERR_INVALID_ARGUMENT:
      return "InvalidArgument";
    case CL_ERR_IO:
      return "IoError";
    case CL_ERR_PARSE:
      return "ParseError";
    case CL_ERR_INVARIANT:
      return "InvariantError";
    case CL_ERR_INVALID_ROTATION:
      return "InvalidRotation";
    case CL_ERR_DANGLING_CROSSING:
      return "DanglingCrossing";
    case CL_ERR_NON_SPHERICAL:
      return "NonSpherical";
    case CL_ERR_BAD_N:
      return "BadN";
    case CL_ERR_NOT_HEXAGON:
      return "NotHexagon";
    case CL_ERR_BUDGET_EXCEEDED:
      return "BudgetExceeded";
    case CL_ERR_UNSUPPORTED_K:
      return "UnsupportedK";
    case CL_ERR_BAD_HINT:
      return "BadHint";
    case CL_ERR_INAPPLICABLE:
      return "Inapplicable";
    case CL_ERR_SELF_LOOP_DEGENERATE:
      return "SelfLoopDegenerate";
    case CL_ERR_INTERNAL:
      return "InternalError";
  }
  return "unknown";
}

const char* cl_last_error(void) { return last_error.c_str(); }

void cl_string_free(char* text) { std::free(text); }

cl_status cl_drawing_parse(const char* text, size_t length, cl_drawing** out) {
  return guarded([&] {
    require(text != nullptr && out != nullptr, "null argument");
    *out = make_drawing(parse_drawing_text(std::string_view(text, length)));
  });
}

cl_status cl_drawing_load(const char* path, cl_drawing** out) {
  return guarded([&] {
    require(path != nullptr && out != nullptr, "null argument");
    *out = make_drawing(parse_drawing(path));
  });
}

cl_status cl_generate_optimal(unsigned n, int strict, cl_drawing** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    *out = make_drawing(generate_optimal(n, strict != 0 || strict_mode_from_env()));
  });
}

void cl_drawing_free(cl_drawing* drawing) { delete drawing; }

cl_status cl_drawing_stats_get(const cl_drawing* drawing, cl_drawing_stats* out) {
  return guarded([&] {
    require(drawing != nullptr && out != nullptr, "null argument");
    const PlanarizedMap& m = drawing->map;
    out->vertices = m.vertex_count();
    out->edges = m.edge_count();
    out->crossings = m.crossing_count();
    out->segments = m.segment_count();
    out->faces = m.face_count();
    out->components = m.component_count();
    out->max_crossings = 0;
    for (EdgeIndex e = 0; e < m.edge_count(); ++e) out->max_crossings = std::max(out->max_crossings, m.crossings_on(e));
  });
}

cl_status cl_drawing_emit(const cl_drawing* drawing, char** out) {
  return guarded([&] {
    require(drawing != nullptr && out != nullptr, "null argument");
    *out = copy_out(emit_drawing(drawing->spec));
  });
}

cl_status cl_validate(const cl_drawing* drawing, int k, cl_format format, int* violated, char** report) {
  return guarded([&] {
    require(drawing != nullptr && violated != nullptr && report != nullptr, "null argument");
    const ValidationReport r = validate_drawing(drawing->map, k);
    ReportDocument doc(drawing->spec);
    doc.add("violations", validation_section(r), validation_text(drawing->map, r));
    *report = copy_out(render(doc, format));
    *violated = r.ok() ? 0 : 1;
  });
}

cl_status cl_analyze(const cl_drawing* drawing, unsigned sections, cl_mode mode, size_t budget, cl_format format,
                     char** report) {
  return guarded([&] {
    require(drawing != nullptr && report != nullptr, "null argument");
    if (sections == 0) sections = CL_SECTION_SKELETON | CL_SECTION_SEGMENTS;
    const SkeletonDecomposition dec = extract_skeleton(drawing->map, skeleton_options(mode, budget));
    ReportDocument doc(drawing->spec);
    if (sections & CL_SECTION_SKELETON) doc.add("skeleton", skeleton_section(dec), skeleton_text(dec));
    if (sections & CL_SECTION_SEGMENTS) {
      const SegmentReport seg = analyze_segments(dec);
      doc.add("segments", segments_section(dec, seg), segments_text(dec, seg));
    }
    *report = copy_out(render(doc, format));
  });
}

cl_status cl_audit(const cl_drawing* drawing, int k, cl_mode mode, size_t budget, cl_format format, int* violated,
                   char** report) {
  return guarded([&] {
    require(drawing != nullptr && violated != nullptr && report != nullptr, "null argument");
    if (k != 3 && k != 4) throw Error(ErrorCode::UnsupportedK, "audit supports k = 3 or k = 4");
    const ValidationReport v = validate_drawing(drawing->map, k);
    ReportDocument doc(drawing->spec);
    doc.add("violations", validation_section(v), validation_text(drawing->map, v));
    bool bad = !v.ok();
    if (v.ok()) {
      const SkeletonDecomposition dec = extract_skeleton(drawing->map, skeleton_options(mode, budget));
      const SegmentReport seg = analyze_segments(dec);
      const AuditReport a = density_report(dec, seg, k);
      doc.add("skeleton", skeleton_section(dec), skeleton_text(dec));
      doc.add("audit", audit_section(dec, a), audit_text(dec, a));
      bad = a.verdict == Verdict::Exceeded;
    }
    *report = copy_out(render(doc, format));
    *violated = bad ? 1 : 0;
  });
}

cl_status cl_export_figure(const cl_drawing* drawing, cl_figure figure, long outer_face, char** out) {
  return guarded([&] {
    require(drawing != nullptr && out != nullptr, "null argument");
    require(figure == CL_FIGURE_DOT || figure == CL_FIGURE_SVG, "unknown figure format");
    std::optional<FaceIndex> hint;
    if (outer_face >= 0) {
      if (static_cast<unsigned long>(outer_face) >= drawing->map.face_count())
        throw Error(ErrorCode::BadHint, "outer face " + std::to_string(outer_face) + " does not exist");
      hint = static_cast<FaceIndex>(outer_face);
    }
    *out = copy_out(export_figure(drawing->map, figure == CL_FIGURE_DOT ? FigureFormat::Dot : FigureFormat::Svg, hint));
  });
}

cl_status cl_k_bound(long long n, int k, long long* bound, double* general) {
  return guarded([&] {
    require(bound != nullptr, "null argument");
    if (general) *general = sqrt_k_bound(n, k < 0 ? 0 : k);
    *bound = k_bound(n, k);
  });
}

}  // extern "C"
