#include "interchange.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include <openssl/evp.h>

namespace crossing_ledger {

namespace {

using json = nlohmann::json;

[[noreturn]] void parse_fail(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::Parse, where + ": " + what);
}

std::string read_id(const json& node, const std::string& where) {
  if (node.is_string()) {
    std::string s = node.get<std::string>();
    if (s.empty()) parse_fail(where, "identifier must not be empty");
    return s;
  }
  if (node.is_number_integer()) return std::to_string(node.get<long long>());
  if (node.is_number_unsigned()) return std::to_string(node.get<unsigned long long>());
  parse_fail(where, "expected a string or integer identifier");
}

const json& require(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) parse_fail(where, std::string("missing field '") + key + "'");
  return *it;
}

std::pair<std::size_t, std::size_t> line_col(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace

ordered_json drawing_to_json(const DrawingSpec& spec) {
  ordered_json doc = ordered_json::object();
  doc["vertices"] = spec.vertices;

  ordered_json edges = ordered_json::array();
  for (const auto& e : spec.edges) {
    ordered_json item = ordered_json::object();
    item["id"] = e.id;
    item["end_a"] = e.end_a;
    item["end_b"] = e.end_b;
    edges.push_back(std::move(item));
  }
  doc["edges"] = std::move(edges);

  // Chains follow edge declaration order.
  ordered_json chains = ordered_json::object();
  for (const auto& e : spec.edges) {
    auto it = spec.chains.find(e.id);
    if (it != spec.chains.end()) chains[e.id] = it->second;
  }
  doc["chains"] = std::move(chains);

  ordered_json crossings = ordered_json::object();
  for (const auto& [cid, pair] : spec.crossings) crossings[cid] = {pair.first, pair.second};
  doc["crossings"] = std::move(crossings);

  // Vertices in declaration order, then crossings by id.
  ordered_json rotations = ordered_json::object();
  const auto put = [&](const std::string& nid) {
    auto it = spec.rotations.find(nid);
    if (it == spec.rotations.end()) return;
    ordered_json list = ordered_json::array();
    for (const auto& r : it->second) list.push_back(r.to_string());
    rotations[nid] = std::move(list);
  };
  for (const auto& v : spec.vertices) put(v);
  for (const auto& [cid, pair] : spec.crossings) put(cid);
  doc["rotations"] = std::move(rotations);
  return doc;
}

std::string emit_drawing(const DrawingSpec& spec) { return drawing_to_json(spec).dump(2) + "\n"; }

DrawingSpec drawing_from_json(const json& doc) {
  if (!doc.is_object()) parse_fail("document", "expected a JSON object");
  DrawingSpec spec;

  const json& vertices = require(doc, "vertices", "document");
  if (!vertices.is_array()) parse_fail("vertices", "expected an array");
  if (vertices.empty()) parse_fail("vertices", "a drawing needs at least one vertex");
  std::set<std::string> vertex_ids;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    std::string id = read_id(vertices[i], "vertices[" + std::to_string(i) + "]");
    if (!vertex_ids.insert(id).second) throw Error(ErrorCode::Invariant, "duplicate vertex id '" + id + "'");
    spec.vertices.push_back(std::move(id));
  }

  const json& edges = require(doc, "edges", "document");
  if (!edges.is_array()) parse_fail("edges", "expected an array");
  std::set<std::string> edge_ids;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string where = "edges[" + std::to_string(i) + "]";
    const json& item = edges[i];
    if (!item.is_object()) parse_fail(where, "expected an object");
    EdgeDecl e{read_id(require(item, "id", where), where + ".id"),
               read_id(require(item, "end_a", where), where + ".end_a"),
               read_id(require(item, "end_b", where), where + ".end_b")};
    if (!edge_ids.insert(e.id).second) throw Error(ErrorCode::Invariant, "duplicate edge id '" + e.id + "'");
    for (const auto* end : {&e.end_a, &e.end_b}) {
      if (!vertex_ids.contains(*end))
        throw Error(ErrorCode::Invariant, "edge '" + e.id + "' references unknown vertex '" + *end + "'");
    }
    spec.edges.push_back(std::move(e));
  }

  if (auto it = doc.find("chains"); it != doc.end()) {
    if (!it->is_object()) parse_fail("chains", "expected an object");
    for (const auto& [key, list] : it->items()) {
      const std::string where = "chains." + key;
      if (!edge_ids.contains(key)) throw Error(ErrorCode::Invariant, "chain for unknown edge '" + key + "'");
      if (!list.is_array()) parse_fail(where, "expected an array");
      std::vector<std::string> chain;
      for (std::size_t i = 0; i < list.size(); ++i)
        chain.push_back(read_id(list[i], where + "[" + std::to_string(i) + "]"));
      spec.chains[key] = std::move(chain);
    }
  }
  for (const auto& e : spec.edges) spec.chains.try_emplace(e.id);

  if (auto it = doc.find("crossings"); it != doc.end()) {
    if (!it->is_object()) parse_fail("crossings", "expected an object");
    for (const auto& [key, pair] : it->items()) {
      const std::string where = "crossings." + key;
      if (!pair.is_array() || pair.size() != 2) parse_fail(where, "expected a pair of edge ids");
      std::string a = read_id(pair[0], where + "[0]");
      std::string b = read_id(pair[1], where + "[1]");
      for (const auto* e : {&a, &b}) {
        if (!edge_ids.contains(*e))
          throw Error(ErrorCode::Invariant, "crossing '" + key + "' references unknown edge '" + *e + "'");
      }
      if (vertex_ids.contains(key))
        throw Error(ErrorCode::Invariant, "crossing id '" + key + "' collides with a vertex id");
      spec.crossings.emplace(key, std::make_pair(std::move(a), std::move(b)));
    }
  }

  const json& rotations = require(doc, "rotations", "document");
  if (!rotations.is_object()) parse_fail("rotations", "expected an object");
  for (const auto& [key, list] : rotations.items()) {
    const std::string where = "rotations." + key;
    if (!vertex_ids.contains(key) && !spec.crossings.contains(key))
      throw Error(ErrorCode::Invariant, "rotation for unknown node '" + key + "'");
    if (!list.is_array()) parse_fail(where, "expected an array");
    std::vector<DartRef> refs;
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string at = where + "[" + std::to_string(i) + "]";
      if (!list[i].is_string()) parse_fail(at, "expected a string like \"+e1\" or \"-e1\"");
      auto ref = DartRef::from_string(list[i].get<std::string>());
      if (!ref) parse_fail(at, "expected a string like \"+e1\" or \"-e1\"");
      if (!edge_ids.contains(ref->edge))
        throw Error(ErrorCode::Invariant, "rotation of '" + key + "' references unknown edge '" + ref->edge + "'");
      refs.push_back(std::move(*ref));
    }
    spec.rotations[key] = std::move(refs);
  }
  return spec;
}

DrawingSpec parse_drawing_text(std::string_view text) {
  // Track object keys so that duplicate ids are caught before the parser
  // silently keeps the last one.
  std::vector<std::set<std::string>> key_stack;
  std::string duplicate;
  json::parser_callback_t on_event = [&](int /*depth*/, json::parse_event_t event, json& parsed) {
    switch (event) {
      case json::parse_event_t::object_start:
        key_stack.emplace_back();
        break;
      case json::parse_event_t::object_end:
        if (!key_stack.empty()) key_stack.pop_back();
        break;
      case json::parse_event_t::key:
        if (!key_stack.empty() && !key_stack.back().insert(parsed.get<std::string>()).second && duplicate.empty())
          duplicate = parsed.get<std::string>();
        break;
      default:
        break;
    }
    return true;
  };

  json doc;
  try {
    doc = json::parse(text.begin(), text.end(), on_event);
  } catch (const json::parse_error& err) {
    const auto [line, col] = line_col(text, err.byte == 0 ? 0 : err.byte - 1);
    std::ostringstream msg;
    msg << "line " << line << ", column " << col << ": malformed document";
    throw Error(ErrorCode::Parse, msg.str());
  }
  if (!duplicate.empty()) throw Error(ErrorCode::Invariant, "duplicate key '" + duplicate + "'");
  return drawing_from_json(doc);
}

DrawingSpec parse_drawing(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_drawing_text(buf.str());
  } catch (const Error& err) {
    throw Error(err.code(), path.string() + ": " + err.what());
  }
}

DrawingSpec canonicalize(DrawingSpec spec) {
  for (auto& [nid, refs] : spec.rotations) {
    if (refs.empty()) continue;
    auto lowest = std::min_element(refs.begin(), refs.end(), [](const DartRef& a, const DartRef& b) {
      return a.to_string() < b.to_string();
    });
    std::rotate(refs.begin(), lowest, refs.end());
  }
  for (auto& [cid, pair] : spec.crossings) {
    if (pair.second < pair.first) std::swap(pair.first, pair.second);
  }
  for (const auto& e : spec.edges) spec.chains.try_emplace(e.id);
  return spec;
}

std::string input_digest(const DrawingSpec& spec) {
  const std::string text = emit_drawing(spec);
  unsigned char hash[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(text.data(), text.size(), hash, &len, EVP_sha256(), nullptr);
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out = "sha256:";
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(kHex[hash[i] >> 4]);
    out.push_back(kHex[hash[i] & 0xf]);
  }
  return out;
}

}  // namespace crossing_ledger
