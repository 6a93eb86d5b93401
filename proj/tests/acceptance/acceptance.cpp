// One line per acceptance criterion; exit status 1 when any fails.

#include <chrono>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "audit.hpp"
#include "fixtures.hpp"
#include "generator.hpp"
#include "oracles.hpp"
#include "properties.hpp"
#include "validate.hpp"

using namespace crossing_ledger;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<std::size_t> family(std::size_t last) {
  std::vector<std::size_t> out;
  for (std::size_t n = 6; n <= last; n += 4) out.push_back(n);
  return out;
}

struct Criterion {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& why) {
    if (ok || !pass) {
      pass = pass && ok;
      return;
    }
    pass = false;
    detail.str("");
    detail << why;
  }
};

void tight_counts(Criterion& c) {
  const auto start = Clock::now();
  for (std::size_t n : family(102)) {
    const auto spec = generate_optimal(n);
    c.require(spec.edges.size() == 11 * n / 2 - 11, "n=" + std::to_string(n) + ": " +
                                                        std::to_string(spec.edges.size()) + " edges");
  }
  const double elapsed = seconds_since(start);
  c.require(elapsed < 1.0, "took " + std::to_string(elapsed) + " s");
  if (c.pass) c.detail << "n=6..102 step 4, 22..550 edges, " << elapsed << " s total";
}

void family_valid(Criterion& c) {
  double slowest = 0;
  for (std::size_t n : family(102)) {
    const auto start = Clock::now();
    const auto map = build_map(generate_optimal(n));
    const auto sanity = check_sanity(map);
    const auto homotopy = check_homotopy(map);
    const auto planar = check_k_planar(map, 3);
    const double elapsed = seconds_since(start);
    slowest = std::max(slowest, elapsed);
    const std::string at = "n=" + std::to_string(n) + ": ";
    c.require(sanity.ok(), at + "sanity");
    c.require(homotopy.ok(), at + "homotopy");
    c.require(planar.ok(), at + "3-planarity");
    c.require(planar.max_crossings == 3, at + "max crossings " + std::to_string(planar.max_crossings));
    c.require(elapsed < 1.0, at + "took " + std::to_string(elapsed) + " s");
  }
  if (c.pass) c.detail << "sanity, homotopy and k=3 pass, max crossings 3, slowest " << slowest << " s";
}

void skeleton_triangulated(Criterion& c) {
  for (std::size_t n : family(50)) {
    const auto dec = extract_skeleton(build_map(generate_optimal(n)), {SkeletonMode::Exact, kDefaultNodeBudget});
    const std::string at = "n=" + std::to_string(n) + ": ";
    c.require(dec.maximum, at + "skeleton not certified maximum");
    c.require(dec.kept.size() == 3 * n - 6, at + std::to_string(dec.kept.size()) + " skeleton edges");
    for (const auto& f : skeleton_faces(dec)) c.require(f.size() == 3, at + "face of length " + std::to_string(f.size()));
    c.require(dec.skeleton.component_count() == 1, at + "skeleton disconnected");
  }
  if (c.pass) c.detail << "n=6..50: |Ep| = 3n-6, every face a 3-walk";
}

void ledger(Criterion& c) {
  for (std::size_t n : family(102)) {
    const auto dec = extract_skeleton(build_map(generate_optimal(n)));
    const auto seg = analyze_segments(dec);
    const auto a = density_report(dec, seg, 3);
    const std::string at = "n=" + std::to_string(n) + ": ";
    c.require(a.t_p == 2 * n - 4, at + "t_p=" + std::to_string(a.t_p));
    c.require(a.stick_cap_violations.empty() && a.t_over == 0, at + "triangle with more than three sticks");
    c.require(a.association && a.association->ok(), at + "association failed");
    if (a.association) {
      std::set<FaceIndex> targets;
      for (const auto& link : a.association->map) targets.insert(link.target);
      c.require(targets.size() == a.association->map.size(), at + "association not injective");
      c.require(a.association->map.size() == a.t[3], at + "not every 3-stick triangle associated");
    }
    c.require(a.t[3] <= a.t[0] + a.t[1] + a.t[2], at + "t3 > t0 + t1 + t2");
    c.require(a.t[1] + 2 * a.t[2] + 3 * a.t[3] == 2 * (a.edges - a.skeleton_edges), at + "stick identity");
    c.require(a.chain_applicable && !a.ledger.empty(), at + "chain inapplicable");
    for (const auto& step : a.ledger) c.require(step.holds, at + "step '" + step.expression + "' fails");
    c.require(a.verdict == Verdict::Tight, at + "verdict " + std::string(verdict_name(a.verdict)));
  }
  if (c.pass) c.detail << "n=6..102: t_p = 2n-4, no overfull triangle, injective association, identity holds, bound met";
}

void oracle_equivalence(Criterion& c) {
  const auto gadget = hexagon_gadget(build_map(theta_frame(6)), 0, "h0", "u");
  std::set<std::pair<std::string, std::string>> crossing_pairs;
  for (const auto& [cid, pair] : gadget.crossings) crossing_pairs.insert(std::minmax(pair.first, pair.second));
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < kGadgetChords.size(); ++i) {
    for (std::size_t j = i + 1; j < kGadgetChords.size(); ++j, ++pairs) {
      const bool crossing = crossing_pairs.contains(std::minmax(gadget.edges[i].id, gadget.edges[j].id));
      c.require(crossing == oracles::chords_interleave(kGadgetChords[i], kGadgetChords[j]),
                "chords " + gadget.edges[i].id + " and " + gadget.edges[j].id);
    }
  }
  c.require(pairs == 28, std::to_string(pairs) + " chord pairs");

  std::size_t components = 0;
  std::size_t gadget_maximum = 0;
  const auto compare = [&](const PlanarizedMap& map) {
    const auto graph = conflict_graph(map);
    for (const auto& comp : graph.components()) {
      if (comp.size() > 20) continue;
      ++components;
      const auto oracle = oracles::exhaustive_independent_set(graph, comp);
      const auto exact = exact_independent_set(graph, comp);
      c.require(exact == oracle.smallest, "component of " + std::to_string(comp.size()) + " nodes");
      if (comp.size() == 8) gadget_maximum = std::max(gadget_maximum, exact.size());
    }
  };
  for (std::size_t n : {6u, 10u, 14u}) compare(build_map(generate_optimal(n)));
  c.require(gadget_maximum == 3, "gadget maximum " + std::to_string(gadget_maximum));
  std::mt19937_64 rng(20260501);
  for (int i = 0; i < 300; ++i) compare(build_map(fixtures::planarize(fixtures::random_drawing(rng, {5, 9, 6, 16, 0.3}))));
  if (c.pass) c.detail << "28 chord pairs agree; " << components << " conflict components agree, gadget maximum 3";
}

void bounds(Criterion& c) {
  const std::vector<std::pair<int, long long>> expected{{1, 72}, {2, 90}, {3, 99}, {4, 108}};
  for (const auto& [k, value] : expected) {
    const long long got = k_bound(20, k);
    c.require(got == value, "k=" + std::to_string(k) + ": " + std::to_string(got));
  }
  if (c.pass) c.detail << "n=20: 72, 90, 99, 108";
}

void negative_fixtures(Criterion& c) {
  const auto four = validate_drawing(build_map(fixtures::four_crossing_edge()), 3);
  bool named = false;
  for (const auto& v : four.violations) named |= v.rule == "k-planarity" && v.edges == std::vector<std::string>{"long"};
  c.require(!four.ok() && named, "4-crossing edge not reported");

  const auto bigon = check_homotopy(build_map(fixtures::empty_bigon()));
  c.require(!bigon.homotopy_violations.empty(), "empty bigon not reported");

  const auto fails = [](const DrawingSpec& spec, const std::string& name) {
    const auto dec = extract_skeleton(build_map(spec));
    const auto seg = analyze_segments(dec);
    const auto report = structural_predicates(dec, seg);
    for (const auto& f : report.faces) {
      const auto* p = report.find(f.face, name);
      if (p && p->state == PredicateState::Fails) return true;
    }
    return false;
  };
  c.require(fails(fixtures::uncrossed_stick(), "stick-crossed"), "uncrossed stick not reported");
  c.require(fails(fixtures::far_middle(), "middle-short"), "far middle part not reported");
  if (c.pass) c.detail << "4-crossing edge, empty bigon, uncrossed stick and far middle part all rejected";
}

void property_suite(Criterion& c) {
  const auto out = properties::run(1, 1000);
  c.require(out.instances == 1000, std::to_string(out.instances) + " instances");
  c.require(out.failures.empty(), std::to_string(out.failures.size()) + " failures, first: " +
                                      (out.failures.empty() ? std::string() : out.failures.front()));
  if (c.pass) c.detail << out.instances << " instances, " << out.checks << " checks, 0 failures";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, void (*)(Criterion&)>> criteria{
      {"tight-family edge counts", tight_counts},
      {"generated family is valid", family_valid},
      {"skeleton is a triangulation", skeleton_triangulated},
      {"edge-count ledger", ledger},
      {"oracle equivalence", oracle_equivalence},
      {"bound table", bounds},
      {"negative fixtures", negative_fixtures},
      {"property suites", property_suite},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Criterion c;
    try {
      criteria[i].second(c);
    } catch (const std::exception& err) {
      c.pass = false;
      c.detail.str("");
      c.detail << "exception: " << err.what();
    }
    std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << i + 1 << ". " << criteria[i].first << ": " << c.detail.str()
              << "\n";
    failed += c.pass ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
