#include "properties.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <tuple>

#include "geometry.hpp"
#include "interchange.hpp"
#include "oracles.hpp"
#include "segments.hpp"
#include "validate.hpp"

namespace properties {

using namespace crossing_ledger;

namespace {

using ViolationKey = std::tuple<std::string, std::vector<std::string>>;

std::set<ViolationKey> keys(const ValidationReport& r) {
  std::set<ViolationKey> out;
  for (const auto* list : {&r.violations, &r.homotopy_violations}) {
    for (const auto& v : *list) out.emplace(v.rule, v.edges);
  }
  return out;
}

class Checker {
 public:
  Checker(Outcome& out, std::size_t instance) : out_(out), instance_(instance) {}

  void expect(bool ok, const std::string& property, const std::string& detail = {}) {
    ++out_.checks;
    if (ok) return;
    std::ostringstream msg;
    msg << "instance " << instance_ << ": " << property;
    if (!detail.empty()) msg << " (" << detail << ")";
    out_.failures.push_back(msg.str());
  }

 private:
  Outcome& out_;
  std::size_t instance_;
};

void check_euler(Checker& check, const PlanarizedMap& map, const std::string& label) {
  for (long chi : oracles::euler_characteristics(map)) check.expect(chi == 2, "euler", label);
  std::size_t walked = 0;
  for (const auto& f : map.faces()) walked += f.size();
  check.expect(walked == map.dart_count(), "euler", label + ": face walks cover every dart once");
}

void check_instance(Checker& check, std::mt19937_64& rng) {
  const DrawingSpec spec = fixtures::planarize(fixtures::random_drawing(rng));
  const PlanarizedMap map = build_map(spec);

  // Round trip.
  const std::string text = emit_drawing(spec);
  const DrawingSpec parsed = parse_drawing_text(text);
  check.expect(parsed == spec, "round-trip", "parse(emit(spec)) differs");
  check.expect(emit_drawing(parsed) == text, "round-trip", "emit is not a fixed point");
  check.expect(canonicalize(canonicalize(spec)) == canonicalize(spec), "round-trip", "canonical form not idempotent");

  // Euler after restrictions.
  check_euler(check, map, "full map");
  std::set<std::string> all;
  for (const auto& e : spec.edges) all.insert(e.id);
  check.expect(same_map(restrict(map, all), map), "euler", "restrict to all edges changed the map");
  std::bernoulli_distribution coin(0.5);
  for (int round = 0; round < 3; ++round) {
    std::set<std::string> keep;
    for (const auto& e : spec.edges) {
      if (coin(rng)) keep.insert(e.id);
    }
    const PlanarizedMap sub = restrict(map, keep);
    check_euler(check, sub, "restriction " + std::to_string(round));
    check.expect(same_map(restrict(sub, keep), sub), "euler", "restrict is not idempotent");
  }

  // k-monotone.
  bool valid_before = false;
  std::set<ViolationKey> before;
  for (int k = 1; k <= 6; ++k) {
    const ValidationReport r = check_k_planar(map, k);
    const auto now = keys(r);
    if (k > 1) {
      check.expect(!valid_before || r.ok(), "k-monotone", "valid at k=" + std::to_string(k - 1) + " but not at k");
      check.expect(std::includes(before.begin(), before.end(), now.begin(), now.end()), "k-monotone",
                   "new violation at k=" + std::to_string(k));
    }
    valid_before = r.ok();
    before = now;
  }

  // Skeleton and sticks.
  const ConflictGraph graph = conflict_graph(map);
  const auto exact = extract_skeleton(map, {SkeletonMode::Exact, 64});
  const auto greedy = extract_skeleton(map, {SkeletonMode::Greedy, 64});
  for (const auto* dec : {&exact, &greedy}) {
    const std::string mode(skeleton_mode_name(dec->mode));
    check.expect(is_independent(graph, dec->kept), "skeleton", mode + " skeleton has a crossing pair");
    check.expect(is_maximal(graph, dec->kept), "skeleton", mode + " skeleton is not maximal");
    check.expect(dec->skeleton.crossing_count() == 0, "skeleton", mode + " skeleton map keeps a crossing");
    const SegmentReport seg = analyze_segments(*dec);
    check.expect(seg.stick_count() == 2 * dec->residual.size(), "sticks",
                 mode + ": " + std::to_string(seg.stick_count()) + " sticks for " +
                     std::to_string(dec->residual.size()) + " residual edges");
  }
  check.expect(exact.kept.size() >= greedy.kept.size(), "skeleton", "exact smaller than greedy");
  for (const auto& comp : graph.components()) {
    if (comp.size() > 20) continue;
    const auto oracle = oracles::exhaustive_independent_set(graph, comp);
    std::vector<EdgeIndex> mine;
    for (EdgeIndex e : comp) {
      if (exact.in_skeleton(e)) mine.push_back(e);
    }
    check.expect(mine == oracle.smallest, "skeleton", "exact differs from exhaustive search");
  }

  // Removing one edge creates no new violation.
  if (!spec.edges.empty()) {
    const std::size_t drop = std::uniform_int_distribution<std::size_t>(0, spec.edges.size() - 1)(rng);
    std::set<std::string> keep = all;
    keep.erase(spec.edges[drop].id);
    const auto full_keys = keys(validate_drawing(map, 3));
    const auto sub_keys = keys(validate_drawing(restrict(map, keep), 3));
    check.expect(std::includes(full_keys.begin(), full_keys.end(), sub_keys.begin(), sub_keys.end()), "removal",
                 "dropping " + spec.edges[drop].id + " created a violation");
  }
}

}  // namespace

Outcome run(std::uint64_t seed, std::size_t count) {
  Outcome out;
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    Checker check(out, i);
    try {
      check_instance(check, rng);
    } catch (const std::exception& err) {
      check.expect(false, "exception", err.what());
    }
    ++out.instances;
  }
  return out;
}

}  // namespace properties
