#pragma once

// Counting audit over a skeleton decomposition: sticks per triangular face,
// the association of 3-stick triangles with sparser neighbours, the
// edge-count inequality chain, the k-bound table and the structural
// predicates on non-triangular faces.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "segments.hpp"

namespace crossing_ledger {

// Maximum edge count of a k-planar graph on n vertices, k in 1..4.
// Throws Error{InvalidArgument} for n < 3 and Error{UnsupportedK} otherwise.
long long k_bound(long long n, int k);
// 4.1208 * sqrt(k) * n, reported for information only.
double sqrt_k_bound(long long n, int k);

struct BoundEntry {
  int k;
  long long coefficient_halves;  // slope in halves: edges <= (c/2) n - constant
  long long constant;
  const char* formula;
};
const std::vector<BoundEntry>& bound_table();

// Triangular faces hosting more than three sticks.
std::vector<FaceIndex> stick_cap_check(const SkeletonDecomposition& dec, const std::vector<FaceProfile>& profiles);

enum class AssociationRule { OppositeEdge, TwoOneZero, Reassigned };
std::string_view association_rule_name(AssociationRule rule);

struct Association {
  FaceIndex source = 0;
  FaceIndex target = 0;
  AssociationRule rule = AssociationRule::OppositeEdge;
};

struct AssociationResult {
  std::vector<Association> map;  // sorted by source
  std::vector<std::string> diagnoses;
  bool ok() const { return diagnoses.empty(); }
};

// Throws Error{Inapplicable} unless every skeleton face is a 3-walk.
AssociationResult associate(const SkeletonDecomposition& dec, const std::vector<FaceProfile>& profiles);

struct LedgerStep {
  std::string expression;
  std::string relation;  // "=" or "<="
  double value = 0;
  double slack = 0;  // value - previous value
  bool holds = false;
};

enum class Verdict { Tight, Within, Exceeded };
std::string_view verdict_name(Verdict v);

enum class PredicateState { Holds, Fails, Vacuous };
std::string_view predicate_state_name(PredicateState s);

struct PredicateResult {
  std::string name;  // "stick-crossed", "middle-short", ...
  PredicateState state = PredicateState::Vacuous;
  std::string detail;
};

struct FacePredicates {
  FaceIndex face = 0;
  std::size_t size = 0;
  std::vector<PredicateResult> results;
};

struct StructuralReport {
  PredicateResult connected;     // skeleton connected
  PredicateResult triangulated;  // skeleton connected and all faces 3-walks
  std::vector<FacePredicates> faces;  // non-triangular faces only

  const PredicateResult* find(FaceIndex face, std::string_view name) const;
};

StructuralReport structural_predicates(const SkeletonDecomposition& dec, const SegmentReport& segments);

struct AuditReport {
  int k = 3;
  std::size_t n = 0;
  std::size_t edges = 0;
  std::size_t skeleton_edges = 0;
  bool connected = false;
  bool triangulated = false;
  std::vector<std::size_t> t;   // t[i]: triangles with exactly i sticks, i <= k
  std::size_t t_over = 0;       // triangles with more than k sticks
  std::size_t t_p = 0;          // triangular faces
  std::size_t sticks = 0;
  std::vector<FaceIndex> stick_cap_violations;
  std::optional<AssociationResult> association;  // empty when inapplicable
  bool chain_applicable = false;
  std::vector<LedgerStep> ledger;
  long long bound = 0;
  Verdict verdict = Verdict::Within;
  // k = 4 only: whether the assumed t4 <= t1 + t2 holds on this input.
  std::optional<bool> four_stick_assumption;
  StructuralReport predicates;
  std::vector<std::string> notes;
};

// k must be 3 or 4; throws Error{UnsupportedK} otherwise.
AuditReport density_report(const SkeletonDecomposition& dec, const SegmentReport& segments, int k = 3);

}  // namespace crossing_ledger
