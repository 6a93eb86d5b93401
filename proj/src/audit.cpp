#include "audit.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

namespace crossing_ledger {

const std::vector<BoundEntry>& bound_table() {
  static const std::vector<BoundEntry> table{
      {1, 8, 8, "4n - 8"},
      {2, 10, 10, "5n - 10"},
      {3, 11, 11, "11n/2 - 11"},
      {4, 12, 12, "6n - 12"},
  };
  return table;
}

double sqrt_k_bound(long long n, int k) { return 4.1208 * std::sqrt(static_cast<double>(k)) * static_cast<double>(n); }

long long k_bound(long long n, int k) {
  if (n < 3) throw Error(ErrorCode::InvalidArgument, "n must be at least 3");
  for (const auto& entry : bound_table()) {
    if (entry.k == k) return entry.coefficient_halves * n / 2 - entry.constant;
  }
  std::ostringstream msg;
  msg << "no exact bound for k = " << k << "; general bound 4.1208*sqrt(k)*n = " << sqrt_k_bound(n, std::max(k, 0));
  throw Error(ErrorCode::UnsupportedK, msg.str());
}

std::string_view association_rule_name(AssociationRule rule) {
  switch (rule) {
    case AssociationRule::OppositeEdge:
      return "opposite-edge";
    case AssociationRule::TwoOneZero:
      return "two-one-zero";
    case AssociationRule::Reassigned:
      return "reassigned";
  }
  return "";
}

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Tight:
      return "tight";
    case Verdict::Within:
      return "within";
    case Verdict::Exceeded:
      return "exceeded";
  }
  return "";
}

std::string_view predicate_state_name(PredicateState s) {
  switch (s) {
    case PredicateState::Holds:
      return "holds";
    case PredicateState::Fails:
      return "fails";
    case PredicateState::Vacuous:
      return "vacuous";
  }
  return "";
}

std::vector<FaceIndex> stick_cap_check(const SkeletonDecomposition& /*dec*/, const std::vector<FaceProfile>& profiles) {
  std::vector<FaceIndex> out;
  for (const auto& p : profiles) {
    if (p.triangle() && p.sticks.size() > 3) out.push_back(p.face);
  }
  return out;
}

namespace {

bool all_triangles(const PlanarizedMap& skel) {
  return skel.face_count() > 0 &&
         std::all_of(skel.faces().begin(), skel.faces().end(), [](const FaceWalk& f) { return f.size() == 3; });
}

std::string face_name(FaceIndex f) { return "face " + std::to_string(f); }

// Neighbour across edge occurrence k of triangle f.
FaceIndex across(const PlanarizedMap& skel, FaceIndex f, std::size_t k) {
  return skel.face_of(PlanarizedMap::twin(skel.face(f).darts[k % 3]));
}

}  // namespace

AssociationResult associate(const SkeletonDecomposition& dec, const std::vector<FaceProfile>& profiles) {
  const PlanarizedMap& skel = dec.skeleton;
  if (!all_triangles(skel)) {
    throw Error(ErrorCode::Inapplicable, "association needs a skeleton whose faces are all triangles");
  }
  AssociationResult result;
  std::map<FaceIndex, std::vector<Association>> by_target;

  for (const auto& p : profiles) {
    if (p.sticks.size() != 3) continue;
    const auto& tau = p.type;
    const std::size_t placed = tau[0] + tau[1] + tau[2];
    if (placed != 3) {
      result.diagnoses.push_back(face_name(p.face) + ": sticks not all placed at corners; cannot classify");
      continue;
    }
    const auto at = [&](std::size_t count) {
      for (std::size_t i = 0; i < 3; ++i) {
        if (tau[i] == count) return i;
      }
      return std::size_t{3};
    };
    Association a;
    a.source = p.face;
    if (std::size_t i = at(3); i < 3) {
      a.rule = AssociationRule::OppositeEdge;
      a.target = across(skel, p.face, i + 1);
    } else if (std::size_t two = at(2); two < 3) {
      const std::size_t zero = at(0);
      a.rule = AssociationRule::TwoOneZero;
      // The occurrence k with {k, k+1} = {two, zero}.
      a.target = across(skel, p.face, (two + 1) % 3 == zero ? two : zero);
    } else {
      result.diagnoses.push_back(face_name(p.face) +
                                 ": one stick at each corner; its three neighbours form a hexagon whose six "
                                 "interior edges could be replaced by eight");
      continue;
    }
    if (a.target == a.source) {
      result.diagnoses.push_back(face_name(p.face) + ": associated edge borders the face on both sides");
      continue;
    }
    by_target[a.target].push_back(a);
  }

  const auto stick_count = [&](FaceIndex f) { return profiles[f].sticks.size(); };
  std::set<FaceIndex> used;
  for (const auto& [target, list] : by_target) used.insert(target);

  for (auto& [target, list] : by_target) {
    if (stick_count(target) > 2) {
      for (const auto& a : list) {
        result.diagnoses.push_back(face_name(a.source) + ": neighbour " + face_name(target) + " hosts " +
                                   std::to_string(stick_count(target)) + " sticks");
      }
      continue;
    }
    std::sort(list.begin(), list.end(), [](const Association& x, const Association& y) { return x.source < y.source; });
    result.map.push_back(list.front());
    if (list.size() == 1) continue;
    if (list.size() > 2) {
      std::string names;
      for (const auto& a : list) names += (names.empty() ? "" : ", ") + face_name(a.source);
      result.diagnoses.push_back(names + ": more than two triangles compete for " + face_name(target));
      continue;
    }
    // Two triangles compete: move the later one to the target's remaining
    // neighbour when that face is free and hosts at most two sticks.
    Association moved = list[1];
    std::optional<FaceIndex> third;
    for (std::size_t k = 0; k < 3; ++k) {
      const FaceIndex nb = across(skel, target, k);
      if (nb != list[0].source && nb != list[1].source) third = nb;
    }
    if (third && stick_count(*third) <= 2 && !used.contains(*third) && *third != target) {
      moved.target = *third;
      moved.rule = AssociationRule::Reassigned;
      used.insert(*third);
      result.map.push_back(moved);
    } else {
      result.diagnoses.push_back(face_name(list[0].source) + " and " + face_name(list[1].source) + " both map to " +
                                 face_name(target) + " and no free neighbour remains");
    }
  }
  std::sort(result.map.begin(), result.map.end(),
            [](const Association& x, const Association& y) { return x.source < y.source; });
  return result;
}

const PredicateResult* StructuralReport::find(FaceIndex face, std::string_view name) const {
  for (const auto& f : faces) {
    if (f.face != face) continue;
    for (const auto& r : f.results) {
      if (r.name == name) return &r;
    }
  }
  return nullptr;
}

namespace {

PredicateResult verdict(std::string name, bool ok, std::string detail = {}) {
  return PredicateResult{std::move(name), ok ? PredicateState::Holds : PredicateState::Fails, ok ? "" : std::move(detail)};
}

PredicateResult vacuous(std::string name, std::string detail) {
  return PredicateResult{std::move(name), PredicateState::Vacuous, std::move(detail)};
}

std::string piece_name(const SkeletonDecomposition& dec, const SegmentPiece& p) {
  std::string s = dec.full.edge(p.edge).id;
  if (p.kind == PieceKind::Stick && p.vertex != kNone) s += "@" + dec.full.node(p.vertex).id;
  return s;
}

FacePredicates face_predicates(const SkeletonDecomposition& dec, const std::vector<SegmentPiece>& pieces,
                               const FaceProfile& prof) {
  FacePredicates out;
  out.face = prof.face;
  out.size = prof.size;
  const auto& sticks = prof.sticks;
  const auto& middles = prof.middles;
  const auto first_bad = [&](const std::vector<std::size_t>& list, auto&& bad) -> std::string {
    for (std::size_t i : list) {
      if (bad(pieces[i])) return piece_name(dec, pieces[i]);
    }
    return {};
  };

  if (sticks.empty()) {
    out.results.push_back(vacuous("stick-crossed", "no sticks"));
  } else {
    auto bad = first_bad(sticks, [](const SegmentPiece& p) { return p.crossings.empty(); });
    out.results.push_back(verdict("stick-crossed", bad.empty(), "stick " + bad + " is not crossed inside the face"));
  }

  if (middles.empty()) {
    out.results.push_back(vacuous("middle-short", "no middle parts"));
  } else {
    auto bad = first_bad(middles, [](const SegmentPiece& p) { return !p.is_short; });
    out.results.push_back(
        verdict("middle-short", bad.empty(), "middle part of " + bad + " crosses two non-consecutive boundary edges"));
  }

  if (sticks.empty()) {
    out.results.push_back(vacuous("stick-short", "no sticks"));
  } else {
    auto bad = first_bad(sticks, [](const SegmentPiece& p) { return !p.is_short; });
    out.results.push_back(verdict("stick-short", bad.empty(), "stick " + bad + " passes more than one boundary vertex"));
  }

  if (!sticks.empty()) {
    out.results.push_back(vacuous("uncrossed-minority", "face has sticks"));
  } else {
    const bool ok = 2 * prof.uncrossed_non_bridges < prof.non_bridges;
    out.results.push_back(verdict("uncrossed-minority", ok,
                                  std::to_string(prof.uncrossed_non_bridges) + " of " +
                                      std::to_string(prof.non_bridges) +
                                      " non-bridge edges are crossed by no middle part"));
  }

  out.results.push_back(verdict("has-stick", !sticks.empty(), "face has no sticks"));

  {
    std::set<std::pair<std::size_t, std::size_t>> crossing;
    for (const auto& pair : prof.crossing_sticks) crossing.insert({pair.first, pair.second});
    const auto cross = [&](std::size_t a, std::size_t b) { return crossing.contains({std::min(a, b), std::max(a, b)}); };
    std::string triple;
    for (std::size_t a = 0; a < sticks.size() && triple.empty(); ++a)
      for (std::size_t b = a + 1; b < sticks.size() && triple.empty(); ++b)
        for (std::size_t c = b + 1; c < sticks.size() && triple.empty(); ++c)
          if (cross(sticks[a], sticks[b]) && cross(sticks[a], sticks[c]) && cross(sticks[b], sticks[c]))
            triple = piece_name(dec, pieces[sticks[a]]) + ", " + piece_name(dec, pieces[sticks[b]]) + ", " +
                     piece_name(dec, pieces[sticks[c]]);
    if (sticks.size() < 3)
      out.results.push_back(vacuous("no-stick-triple", "fewer than three sticks"));
    else
      out.results.push_back(verdict("no-stick-triple", triple.empty(), "sticks " + triple + " cross pairwise"));
  }

  if (sticks.empty()) {
    out.results.push_back(vacuous("stick-crossed-once", "no sticks"));
    out.results.push_back(vacuous("stick-middle-free", "no sticks"));
    out.results.push_back(vacuous("opposite-crossings", "no sticks"));
  } else {
    auto bad = first_bad(sticks, [](const SegmentPiece& p) { return p.crossings.size() != 1; });
    out.results.push_back(
        verdict("stick-crossed-once", bad.empty(), "stick " + bad + " is not crossed exactly once inside the face"));

    bad = first_bad(sticks, [&](const SegmentPiece& p) {
      return std::any_of(p.crossings.begin(), p.crossings.end(),
                         [&](std::size_t j) { return pieces[j].kind == PieceKind::Middle; });
    });
    out.results.push_back(verdict("stick-middle-free", bad.empty(), "stick " + bad + " crosses a middle part"));

    bad = first_bad(sticks, [&](const SegmentPiece& p) {
      return std::any_of(p.crossings.begin(), p.crossings.end(), [&](std::size_t j) {
        const auto& q = pieces[j];
        return q.kind != PieceKind::Stick || p.corner == kNone || q.corner == kNone || q.side == p.side;
      });
    });
    out.results.push_back(
        verdict("opposite-crossings", bad.empty(), "stick " + bad + " is crossed by something other than an opposite stick"));
  }

  out.results.push_back(
      verdict("two-sticks", sticks.size() == 2, "face has " + std::to_string(sticks.size()) + " sticks"));
  return out;
}

}  // namespace

StructuralReport structural_predicates(const SkeletonDecomposition& dec, const SegmentReport& segments) {
  StructuralReport report;
  const PlanarizedMap& skel = dec.skeleton;
  const bool connected = skel.component_count() == 1;
  report.connected = verdict("skeleton-connected", connected,
                             "skeleton has " + std::to_string(skel.component_count()) + " components");
  const bool triangles = all_triangles(skel);
  report.triangulated = verdict("skeleton-triangulated", connected && triangles,
                                connected ? "skeleton has a face that is not a 3-walk" : "skeleton is disconnected");
  for (const auto& prof : segments.profiles) {
    if (prof.size < 4) continue;
    report.faces.push_back(face_predicates(dec, segments.pieces, prof));
  }
  return report;
}

namespace {

struct ChainBuilder {
  std::vector<LedgerStep> steps;

  void add(std::string expression, std::string relation, double value) {
    LedgerStep s{std::move(expression), std::move(relation), value, 0, true};
    if (!steps.empty()) {
      s.slack = value - steps.back().value;
      s.holds = s.relation == "=" ? s.slack == 0 : s.slack >= 0;
    }
    steps.push_back(std::move(s));
  }
};

}  // namespace

AuditReport density_report(const SkeletonDecomposition& dec, const SegmentReport& segments, int k) {
  if (k != 3 && k != 4) throw Error(ErrorCode::UnsupportedK, "audit supports k = 3 or k = 4");
  AuditReport r;
  r.k = k;
  const PlanarizedMap& skel = dec.skeleton;
  r.n = dec.full.vertex_count();
  r.edges = dec.full.edge_count();
  r.skeleton_edges = dec.kept.size();
  r.connected = skel.component_count() == 1;
  r.triangulated = r.connected && all_triangles(skel);
  r.t.assign(static_cast<std::size_t>(k) + 1, 0);
  for (const auto& p : segments.profiles) {
    if (!p.triangle()) continue;
    ++r.t_p;
    r.sticks += p.sticks.size();
    if (p.sticks.size() < r.t.size())
      ++r.t[p.sticks.size()];
    else
      ++r.t_over;
  }
  r.stick_cap_violations = stick_cap_check(dec, segments.profiles);
  r.bound = k_bound(static_cast<long long>(std::max<std::size_t>(r.n, 3)), k);
  const auto E = static_cast<long long>(r.edges);
  r.verdict = E == r.bound ? Verdict::Tight : (E < r.bound ? Verdict::Within : Verdict::Exceeded);
  r.predicates = structural_predicates(dec, segments);

  if (all_triangles(skel)) {
    r.association = associate(dec, segments.profiles);
  } else {
    r.notes.push_back("association inapplicable: skeleton has a face that is not a 3-walk");
  }

  r.chain_applicable = r.triangulated && r.t_over == 0;
  if (!r.chain_applicable) {
    r.notes.push_back(r.triangulated ? "inequality chain inapplicable: a triangle exceeds the stick cap"
                                     : "inequality chain inapplicable: skeleton is not a connected triangulation");
    return r;
  }

  const double n = static_cast<double>(r.n);
  const double Ep = static_cast<double>(r.skeleton_edges);
  const double tp = static_cast<double>(r.t_p);
  std::vector<double> t(r.t.begin(), r.t.end());
  ChainBuilder chain;
  chain.add("E", "=", static_cast<double>(E));
  if (k == 3) {
    chain.add("Ep + (t1 + 2 t2 + 3 t3)/2", "=", Ep + (t[1] + 2 * t[2] + 3 * t[3]) / 2);
    chain.add("Ep + (tp - t0) + (t3 - t1)/2", "=", Ep + (tp - t[0]) + (t[3] - t[1]) / 2);
    chain.add("Ep + tp + t3/2", "<=", Ep + tp + t[3] / 2);
    chain.add("Ep + 5 tp/4", "<=", Ep + 5 * tp / 4);
    chain.add("3n - 6 + 5 tp/4", "<=", 3 * n - 6 + 5 * tp / 4);
    chain.add("3n - 6 + 5(2n - 4)/4", "=", 3 * n - 6 + 5 * (2 * n - 4) / 4);
  } else {
    chain.add("Ep + (t1 + 2 t2 + 3 t3 + 4 t4)/2", "=", Ep + (t[1] + 2 * t[2] + 3 * t[3] + 4 * t[4]) / 2);
    chain.add("Ep + 3(t1 + t2 + t3 + t4)/2", "<=", Ep + 3 * (t[1] + t[2] + t[3] + t[4]) / 2);
    chain.add("Ep + 3 tp/2", "<=", Ep + 3 * tp / 2);
    chain.add("3n - 6 + 3 tp/2", "<=", 3 * n - 6 + 3 * tp / 2);
    chain.add("3n - 6 + 3(2n - 4)/2", "=", 3 * n - 6 + 3 * (2 * n - 4) / 2);
    r.four_stick_assumption = r.t[4] <= r.t[1] + r.t[2];
    r.notes.push_back("k = 4 chain is conditional on t4 <= t1 + t2 for triangulated skeletons");
  }
  r.ledger = std::move(chain.steps);
  return r;
}

}  // namespace crossing_ledger
