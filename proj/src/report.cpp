#include "report.hpp"

#include <iomanip>
#include <map>
#include <sstream>

namespace crossing_ledger {

namespace {

ordered_json violation_list(const std::vector<Violation>& list) {
  ordered_json out = ordered_json::array();
  for (const auto& v : list) {
    ordered_json item = ordered_json::object();
    item["rule"] = v.rule;
    item["edges"] = v.edges;
    item["detail"] = v.detail;
    out.push_back(std::move(item));
  }
  return out;
}

std::string number(double v) {
  std::ostringstream out;
  out << std::setprecision(12) << v;
  return out.str();
}

std::string piece_class(const SegmentPiece& p) {
  if (p.kind == PieceKind::Middle) return p.is_short ? "short" : "far";
  return p.is_short ? "short" : "long";
}

std::string join(const std::vector<std::string>& parts, const char* sep = ", ") {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : sep) + p;
  return out;
}

}  // namespace

ordered_json validation_section(const ValidationReport& report) {
  ordered_json s = ordered_json::object();
  if (report.k) s["k"] = *report.k;
  s["ok"] = report.ok();
  s["max_crossings"] = report.max_crossings;
  ordered_json counts = ordered_json::object();
  for (const auto& [id, c] : report.crossing_counts) counts[id] = c;
  s["crossing_counts"] = std::move(counts);
  s["violations"] = violation_list(report.violations);
  s["homotopy_violations"] = violation_list(report.homotopy_violations);
  s["warnings"] = report.warnings;
  return s;
}

ordered_json skeleton_section(const SkeletonDecomposition& dec) {
  ordered_json s = ordered_json::object();
  s["mode"] = std::string(skeleton_mode_name(dec.mode));
  s["maximum"] = dec.maximum;
  std::vector<std::string> kept, residual;
  for (EdgeIndex e : dec.kept) kept.push_back(dec.full.edge(e).id);
  for (EdgeIndex e : dec.residual) residual.push_back(dec.full.edge(e).id);
  s["edges"] = kept;
  s["residual"] = residual;
  s["conflict_components"] = dec.component_count;
  s["largest_component"] = dec.largest_component;
  ordered_json faces = ordered_json::array();
  for (const auto& f : dec.skeleton.faces()) {
    ordered_json item = ordered_json::object();
    item["id"] = f.id;
    std::vector<std::string> nodes, edges;
    for (DartIndex d : f.darts) {
      nodes.push_back(dec.skeleton.node(dec.skeleton.origin(d)).id);
      edges.push_back(dec.skeleton.edge(dec.skeleton.edge_of(d)).id);
    }
    item["nodes"] = nodes;
    item["edges"] = edges;
    faces.push_back(std::move(item));
  }
  s["faces"] = std::move(faces);
  return s;
}

ordered_json segments_section(const SkeletonDecomposition& dec, const SegmentReport& segments) {
  const PlanarizedMap& full = dec.full;
  ordered_json s = ordered_json::object();
  s["sticks"] = segments.stick_count();
  s["middles"] = segments.middle_count();
  ordered_json pieces = ordered_json::array();
  for (const auto& p : segments.pieces) {
    ordered_json item = ordered_json::object();
    item["edge"] = full.edge(p.edge).id;
    item["kind"] = p.kind == PieceKind::Stick ? "stick" : "middle";
    item["ordinal"] = p.ordinal;
    item["from"] = full.node(p.from).id;
    item["to"] = full.node(p.to).id;
    item["face"] = p.face;
    if (p.kind == PieceKind::Stick) {
      item["vertex"] = full.node(p.vertex).id;
      item["corner"] = p.corner == kNone ? ordered_json(nullptr) : ordered_json(p.corner);
      item["crossed"] = {full.edge(p.crossed[0]).id};
      item["anchors"] = {p.anchor[0]};
      if (p.corner != kNone) item["side"] = p.side == StickSide::Right ? "right" : "left";
    } else {
      item["crossed"] = {full.edge(p.crossed[0]).id, full.edge(p.crossed[1]).id};
      item["anchors"] = {p.anchor[0], p.anchor[1]};
    }
    item["class"] = piece_class(p);
    item["crossings"] = p.crossings.size();
    pieces.push_back(std::move(item));
  }
  s["pieces"] = std::move(pieces);
  ordered_json faces = ordered_json::array();
  for (const auto& f : segments.profiles) {
    ordered_json item = ordered_json::object();
    item["id"] = f.face;
    item["size"] = f.size;
    item["type"] = f.type;
    item["sticks"] = f.sticks;
    item["middles"] = f.middles;
    item["bridges"] = f.bridges;
    item["non_bridges"] = f.non_bridges;
    item["uncrossed_non_bridges"] = f.uncrossed_non_bridges;
    ordered_json pairs = ordered_json::array();
    for (const auto& pair : f.crossing_sticks) {
      ordered_json one = ordered_json::object();
      one["pieces"] = {pair.first, pair.second};
      one["opposite"] = pair.opposite;
      pairs.push_back(std::move(one));
    }
    item["crossing_sticks"] = std::move(pairs);
    faces.push_back(std::move(item));
  }
  s["faces"] = std::move(faces);
  s["warnings"] = segments.warnings;
  return s;
}

namespace {

ordered_json predicate_json(const PredicateResult& r) {
  ordered_json o = ordered_json::object();
  o["state"] = std::string(predicate_state_name(r.state));
  if (!r.detail.empty()) o["detail"] = r.detail;
  return o;
}

}  // namespace

ordered_json audit_section(const SkeletonDecomposition& /*dec*/, const AuditReport& a) {
  ordered_json s = ordered_json::object();
  s["k"] = a.k;
  s["n"] = a.n;
  s["edges"] = a.edges;
  s["skeleton_edges"] = a.skeleton_edges;
  s["connected"] = a.connected;
  s["triangulated"] = a.triangulated;
  s["triangles"] = a.t_p;
  s["sticks_per_triangle"] = a.t;
  s["overfull_triangles"] = a.t_over;
  s["sticks"] = a.sticks;
  s["stick_cap_violations"] = a.stick_cap_violations;

  ordered_json assoc = ordered_json::object();
  assoc["applicable"] = a.association.has_value();
  if (a.association) {
    ordered_json map = ordered_json::array();
    for (const auto& m : a.association->map) {
      ordered_json item = ordered_json::object();
      item["source"] = m.source;
      item["target"] = m.target;
      item["rule"] = std::string(association_rule_name(m.rule));
      map.push_back(std::move(item));
    }
    assoc["map"] = std::move(map);
    assoc["diagnoses"] = a.association->diagnoses;
  }
  s["association"] = std::move(assoc);

  ordered_json chain = ordered_json::object();
  chain["applicable"] = a.chain_applicable;
  ordered_json steps = ordered_json::array();
  for (const auto& st : a.ledger) {
    ordered_json item = ordered_json::object();
    item["expression"] = st.expression;
    item["relation"] = st.relation;
    item["value"] = st.value;
    item["slack"] = st.slack;
    item["holds"] = st.holds;
    steps.push_back(std::move(item));
  }
  chain["steps"] = std::move(steps);
  s["chain"] = std::move(chain);

  s["bound"] = a.bound;
  s["verdict"] = std::string(verdict_name(a.verdict));
  if (a.four_stick_assumption) s["four_stick_assumption"] = *a.four_stick_assumption;

  ordered_json preds = ordered_json::object();
  preds[a.predicates.connected.name] = predicate_json(a.predicates.connected);
  preds[a.predicates.triangulated.name] = predicate_json(a.predicates.triangulated);
  ordered_json faces = ordered_json::array();
  for (const auto& f : a.predicates.faces) {
    ordered_json item = ordered_json::object();
    item["face"] = f.face;
    item["size"] = f.size;
    ordered_json results = ordered_json::object();
    for (const auto& r : f.results) results[r.name] = predicate_json(r);
    item["results"] = std::move(results);
    faces.push_back(std::move(item));
  }
  preds["faces"] = std::move(faces);
  s["predicates"] = std::move(preds);
  s["notes"] = a.notes;
  return s;
}

std::string validation_text(const PlanarizedMap& map, const ValidationReport& r) {
  std::ostringstream out;
  out << "validation";
  if (r.k) out << " (k = " << *r.k << ")";
  out << ": " << (r.ok() ? "ok" : "violations found") << "\n";
  out << "  vertices " << map.vertex_count() << ", edges " << map.edge_count() << ", crossings "
      << map.crossing_count() << ", max crossings per edge " << r.max_crossings << "\n";
  for (const auto& v : r.violations) out << "  violation " << v.rule << " [" << join(v.edges) << "] " << v.detail << "\n";
  for (const auto& v : r.homotopy_violations)
    out << "  violation " << v.rule << " [" << join(v.edges) << "] " << v.detail << "\n";
  for (const auto& w : r.warnings) out << "  warning " << w << "\n";
  return out.str();
}

std::string skeleton_text(const SkeletonDecomposition& dec) {
  std::ostringstream out;
  std::map<std::size_t, std::size_t> sizes;
  for (const auto& f : dec.skeleton.faces()) ++sizes[f.size()];
  out << "skeleton (" << skeleton_mode_name(dec.mode) << (dec.maximum ? ", maximum" : ", maximal") << "): "
      << dec.kept.size() << " of " << dec.full.edge_count() << " edges, " << dec.residual.size() << " residual\n";
  out << "  conflict components " << dec.component_count << ", largest " << dec.largest_component << "\n";
  out << "  faces " << dec.skeleton.face_count() << " by size:";
  for (const auto& [size, count] : sizes) out << " " << size << "x" << count;
  out << "\n";
  return out.str();
}

std::string segments_text(const SkeletonDecomposition& /*dec*/, const SegmentReport& s) {
  std::ostringstream out;
  out << "segments: " << s.stick_count() << " sticks, " << s.middle_count() << " middle parts\n";
  for (const auto& f : s.profiles) {
    if (f.sticks.empty() && f.middles.empty()) continue;
    out << "  face " << f.face << " (size " << f.size << ") type (";
    for (std::size_t i = 0; i < f.type.size(); ++i) out << (i ? "," : "") << f.type[i];
    out << ") sticks " << f.sticks.size() << ", middles " << f.middles.size() << "\n";
  }
  for (const auto& w : s.warnings) out << "  warning " << w << "\n";
  return out.str();
}

std::string audit_text(const SkeletonDecomposition& /*dec*/, const AuditReport& a) {
  std::ostringstream out;
  out << "audit (k = " << a.k << "): n = " << a.n << ", edges = " << a.edges << ", skeleton edges = "
      << a.skeleton_edges << "\n";
  out << "  skeleton " << (a.connected ? "connected" : "disconnected") << ", "
      << (a.triangulated ? "triangulated" : "not triangulated") << "\n";
  out << "  triangles " << a.t_p;
  for (std::size_t i = 0; i < a.t.size(); ++i) out << ", t" << i << " = " << a.t[i];
  if (a.t_over) out << ", over cap = " << a.t_over;
  out << "\n";
  if (!a.stick_cap_violations.empty()) {
    out << "  triangles with more than three sticks:";
    for (auto f : a.stick_cap_violations) out << " " << f;
    out << "\n";
  }
  if (a.association) {
    out << "  association: " << a.association->map.size() << " triangles mapped";
    out << (a.association->ok() ? "" : ", with diagnoses") << "\n";
    for (const auto& m : a.association->map)
      out << "    " << m.source << " -> " << m.target << " (" << association_rule_name(m.rule) << ")\n";
    for (const auto& d : a.association->diagnoses) out << "    diagnosis: " << d << "\n";
  }
  if (a.chain_applicable) {
    out << "  chain:\n";
    for (std::size_t i = 0; i < a.ledger.size(); ++i) {
      const auto& st = a.ledger[i];
      out << "    " << (i == 0 ? "  " : st.relation == "=" ? " =" : "<=") << " " << std::left << std::setw(36)
          << st.expression << std::right << " " << number(st.value);
      if (i > 0) out << "  (slack " << number(st.slack) << (st.holds ? "" : ", FAILS") << ")";
      out << "\n";
    }
  }
  out << "  bound " << a.bound << ", verdict " << verdict_name(a.verdict) << "\n";
  if (a.four_stick_assumption)
    out << "  assumption t4 <= t1 + t2: " << (*a.four_stick_assumption ? "holds" : "fails") << "\n";
  out << "  " << a.predicates.connected.name << ": " << predicate_state_name(a.predicates.connected.state) << "\n";
  out << "  " << a.predicates.triangulated.name << ": " << predicate_state_name(a.predicates.triangulated.state)
      << "\n";
  for (const auto& f : a.predicates.faces) {
    out << "  face " << f.face << " (size " << f.size << "):";
    for (const auto& r : f.results) out << " " << r.name << "=" << predicate_state_name(r.state);
    out << "\n";
    for (const auto& r : f.results) {
      if (r.state == PredicateState::Fails) out << "    " << r.name << ": " << r.detail << "\n";
    }
  }
  for (const auto& n : a.notes) out << "  note " << n << "\n";
  return out.str();
}

ReportDocument::ReportDocument(const DrawingSpec& spec) : doc_(drawing_to_json(spec)), digest_(input_digest(spec)) {
  ordered_json header = ordered_json::object();
  header["tool"] = kToolName;
  header["version"] = kToolVersion;
  header["input_digest"] = digest_;
  doc_["report"] = std::move(header);
}

void ReportDocument::add(std::string key, ordered_json section, std::string text) {
  doc_[std::move(key)] = std::move(section);
  text_.push_back(std::move(text));
}

std::string ReportDocument::json() const { return doc_.dump(2) + "\n"; }

std::string ReportDocument::text() const {
  std::string out = std::string(kToolName) + " " + kToolVersion + "  input " + digest_ + "\n";
  for (const auto& t : text_) out += t;
  return out;
}

}  // namespace crossing_ledger
