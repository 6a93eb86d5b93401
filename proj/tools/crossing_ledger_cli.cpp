#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "crossing_ledger/crossing_ledger.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitViolation = 2;

struct DrawingDeleter {
  void operator()(cl_drawing* d) const { cl_drawing_free(d); }
};
using Drawing = std::unique_ptr<cl_drawing, DrawingDeleter>;

struct Text {
  char* data = nullptr;
  ~Text() { cl_string_free(data); }
};

class Failure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void check(cl_status status) {
  if (status != CL_OK) throw Failure(std::string(cl_status_name(status)) + ": " + cl_last_error());
}

Drawing load(const std::string& path) {
  cl_drawing* raw = nullptr;
  if (path.empty() || path == "-") {
    std::string text((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
    check(cl_drawing_parse(text.data(), text.size(), &raw));
  } else {
    check(cl_drawing_load(path.c_str(), &raw));
  }
  return Drawing(raw);
}

void write(const std::string& path, const char* text) {
  if (path.empty() || path == "-") {
    std::fputs(text, stdout);
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Failure("IoError: cannot write '" + path + "'");
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Validate, analyze, audit and generate k-planar topological drawings"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(cl_version()));

  std::string format = "json";
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "text"}));

  std::string input;
  std::string output;
  int k = 3;
  std::string mode = "exact";
  std::size_t budget = CL_DEFAULT_BUDGET;

  auto* generate = app.add_subcommand("generate", "Emit a tight 3-planar drawing with 11n/2 - 11 edges");
  unsigned n = 0;
  bool strict = false;
  generate->add_option("--n", n, "Number of vertices (even, at least 6)")->required();
  generate->add_flag("--strict-paper", strict, "Require n - 2 divisible by 4");
  generate->add_option("-o,--output", output, "Output file (default stdout)");

  auto* validate = app.add_subcommand("validate", "Check k-planarity, sanity and edge homotopy");
  validate->add_option("--k", k, "Crossings allowed per edge")->check(CLI::PositiveNumber);
  validate->add_option("file", input, "Drawing file (default stdin)");

  auto* analyze = app.add_subcommand("analyze", "Extract the skeleton and decompose residual edges");
  bool want_skeleton = false;
  bool want_segments = false;
  analyze->add_flag("--skeleton", want_skeleton, "Emit the skeleton section");
  analyze->add_flag("--segments", want_segments, "Emit the segments section");
  analyze->add_option("--mode", mode, "Skeleton solver")->check(CLI::IsMember({"exact", "greedy"}));
  analyze->add_option("--budget", budget, "Largest conflict component for the exact solver");
  analyze->add_option("file", input, "Drawing file (default stdin)");

  auto* audit = app.add_subcommand("audit", "Run the density audit");
  audit->add_option("--k", k, "3 or 4")->check(CLI::IsMember({3, 4}));
  audit->add_option("--mode", mode, "Skeleton solver")->check(CLI::IsMember({"exact", "greedy"}));
  audit->add_option("--budget", budget, "Largest conflict component for the exact solver");
  audit->add_option("file", input, "Drawing file (default stdin)");

  auto* exporter = app.add_subcommand("export", "Draw the planarization as dot or svg");
  std::string figure = "dot";
  long outer = -1;
  exporter->add_option("--figure", figure, "Figure format")->check(CLI::IsMember({"dot", "svg"}));
  exporter->add_option("--outer-face", outer, "Face id drawn as the outer face");
  exporter->add_option("-o,--output", output, "Output file (default stdout)");
  exporter->add_option("file", input, "Drawing file (default stdin)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  const cl_format fmt = format == "text" ? CL_FORMAT_TEXT : CL_FORMAT_JSON;
  const cl_mode solver = mode == "greedy" ? CL_MODE_GREEDY : CL_MODE_EXACT;

  try {
    if (generate->parsed()) {
      cl_drawing* raw = nullptr;
      check(cl_generate_optimal(n, strict ? 1 : 0, &raw));
      Drawing d(raw);
      Text t;
      check(cl_drawing_emit(d.get(), &t.data));
      write(output, t.data);
      return kExitOk;
    }
    if (validate->parsed()) {
      Drawing d = load(input);
      Text t;
      int violated = 0;
      check(cl_validate(d.get(), k, fmt, &violated, &t.data));
      write("", t.data);
      return violated ? kExitViolation : kExitOk;
    }
    if (analyze->parsed()) {
      Drawing d = load(input);
      unsigned sections = 0;
      if (want_skeleton) sections |= CL_SECTION_SKELETON;
      if (want_segments) sections |= CL_SECTION_SEGMENTS;
      Text t;
      check(cl_analyze(d.get(), sections, solver, budget, fmt, &t.data));
      write("", t.data);
      return kExitOk;
    }
    if (audit->parsed()) {
      Drawing d = load(input);
      Text t;
      int violated = 0;
      check(cl_audit(d.get(), k, solver, budget, fmt, &violated, &t.data));
      write("", t.data);
      return violated ? kExitViolation : kExitOk;
    }
    if (exporter->parsed()) {
      Drawing d = load(input);
      Text t;
      check(cl_export_figure(d.get(), figure == "svg" ? CL_FIGURE_SVG : CL_FIGURE_DOT, outer, &t.data));
      write(output, t.data);
      return kExitOk;
    }
  } catch (const Failure& e) {
    std::cerr << "crossing-ledger: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
