#ifndef CROSSING_LEDGER_H
#define CROSSING_LEDGER_H

/*
 * C interface to the crossing-ledger library: load or generate a topological
 * drawing, validate it, extract its crossing-free skeleton, decompose the
 * remaining edges and audit the edge count.
 *
 * Every function returns a cl_status. On failure cl_last_error() describes
 * the problem (thread-local, valid until the next call on the same thread).
 * Strings returned through char** are owned by the caller and released with
 * cl_string_free().
 */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(CL_BUILDING_LIBRARY)
#define CL_API __attribute__((visibility("default")))
#else
#define CL_API
#endif

typedef enum cl_status {
  CL_OK = 0,
  CL_ERR_INVALID_ARGUMENT,
  CL_ERR_IO,
  CL_ERR_PARSE,
  CL_ERR_INVARIANT,
  CL_ERR_INVALID_ROTATION,
  CL_ERR_DANGLING_CROSSING,
  CL_ERR_NON_SPHERICAL,
  CL_ERR_BAD_N,
  CL_ERR_NOT_HEXAGON,
  CL_ERR_BUDGET_EXCEEDED,
  CL_ERR_UNSUPPORTED_K,
  CL_ERR_BAD_HINT,
  CL_ERR_INAPPLICABLE,
  CL_ERR_SELF_LOOP_DEGENERATE,
  CL_ERR_INTERNAL
} cl_status;

typedef enum cl_format { CL_FORMAT_JSON = 0, CL_FORMAT_TEXT = 1 } cl_format;

typedef enum cl_mode { CL_MODE_EXACT = 0, CL_MODE_GREEDY = 1 } cl_mode;

/* Section flags for cl_analyze; 0 selects both. */
enum { CL_SECTION_SKELETON = 1, CL_SECTION_SEGMENTS = 2 };

typedef enum cl_figure { CL_FIGURE_DOT = 0, CL_FIGURE_SVG = 1 } cl_figure;

/* Largest conflict component the exact skeleton solver accepts by default. */
#define CL_DEFAULT_BUDGET 64

typedef struct cl_drawing cl_drawing;

typedef struct cl_drawing_stats {
  size_t vertices;
  size_t edges;
  size_t crossings;
  size_t segments;
  size_t faces;
  size_t components;
  size_t max_crossings;
} cl_drawing_stats;

CL_API const char* cl_version(void);
CL_API const char* cl_status_name(cl_status status);
CL_API const char* cl_last_error(void);
CL_API void cl_string_free(char* text);

CL_API cl_status cl_drawing_parse(const char* text, size_t length, cl_drawing** out);
CL_API cl_status cl_drawing_load(const char* path, cl_drawing** out);
/* strict != 0, or CROSSING_LEDGER_MODE=strict-paper, requires (n-2) % 4 == 0. */
CL_API cl_status cl_generate_optimal(unsigned n, int strict, cl_drawing** out);
CL_API void cl_drawing_free(cl_drawing* drawing);

CL_API cl_status cl_drawing_stats_get(const cl_drawing* drawing, cl_drawing_stats* out);
CL_API cl_status cl_drawing_emit(const cl_drawing* drawing, char** out);

/* *violated is set to 1 when the drawing breaks a rule, else 0. */
CL_API cl_status cl_validate(const cl_drawing* drawing, int k, cl_format format, int* violated, char** report);
CL_API cl_status cl_analyze(const cl_drawing* drawing, unsigned sections, cl_mode mode, size_t budget,
                            cl_format format, char** report);
/* k is 3 or 4. *violated is 1 on a rule violation or an exceeded bound. */
CL_API cl_status cl_audit(const cl_drawing* drawing, int k, cl_mode mode, size_t budget, cl_format format,
                          int* violated, char** report);
/* outer_face < 0 picks the default outer face. */
CL_API cl_status cl_export_figure(const cl_drawing* drawing, cl_figure figure, long outer_face, char** out);

/* Exact bound for k in 1..4. For other k the call fails with
 * CL_ERR_UNSUPPORTED_K and still stores the general sqrt(k) bound. */
CL_API cl_status cl_k_bound(long long n, int k, long long* bound, double* general);

#ifdef __cplusplus
}
#endif

#endif
