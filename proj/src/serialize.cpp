#include "ptolemy_lab/serialize.hpp"

#include <charconv>
#include <set>
#include <sstream>

namespace ptolemy_lab {

namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorCode::parse_error, what); }

int to_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) parse_fail(std::string(what) + " must be an integer");
  const auto v = j.get<long long>();
  if (v < -1'000'000 || v > 1'000'000) parse_fail(std::string(what) + " out of range");
  return static_cast<int>(v);
}

int to_int(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  int v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    parse_fail("not an integer: '" + std::string(text) + "'");
  }
  return v;
}

std::string node_id(const Diagonal& d) {
  return std::to_string(d.first()) + "_" + std::to_string(d.second());
}

}  // namespace

Json diagonal_json(const Diagonal& d) { return Json::array({d.first(), d.second()}); }

Json diagonals_json(const std::vector<Diagonal>& ds) {
  Json out = Json::array();
  for (const Diagonal& d : ds) out.push_back(diagonal_json(d));
  return out;
}

Json document_json(const Diagram& d) {
  Json out;
  out["polygon_size"] = d.polygon().size();
  out["diagonals"] = diagonals_json({d.begin(), d.end()});
  return out;
}

Diagonal parse_diagonal(const Polygon& p, const Json& pair) {
  if (!pair.is_array() || pair.size() != 2) parse_fail("a diagonal is a pair [u, v]");
  return p.diagonal(to_int(pair[0], "vertex"), to_int(pair[1], "vertex"));
}

Diagonal parse_diagonal_text(const Polygon& p, std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) parse_fail("expected u,v but got '" + std::string(text) + "'");
  return p.diagonal(to_int(text.substr(0, comma)), to_int(text.substr(comma + 1)));
}

Diagram parse_document(const Json& doc) {
  if (!doc.is_object()) parse_fail("document must be a JSON object");
  if (!doc.contains("polygon_size")) parse_fail("missing polygon_size");
  const Polygon p(to_int(doc["polygon_size"], "polygon_size"));
  std::set<Diagonal> ds;
  if (doc.contains("diagonals")) {
    const Json& list = doc["diagonals"];
    if (!list.is_array()) parse_fail("diagonals must be a list");
    for (const Json& pair : list) ds.insert(parse_diagonal(p, pair));
  }
  return Diagram(p, std::move(ds));
}

Diagram parse_document_text(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    parse_fail(std::string("malformed JSON: ") + e.what());
  }
  return parse_document(doc);
}

std::string_view to_string(CellKind kind) {
  switch (kind) {
    case CellKind::empty:
      return "EMPTY";
    case CellKind::clique:
      return "CLIQUE";
    case CellKind::mixed:
      return "MIXED";
  }
  return "UNKNOWN";
}

std::string_view to_string(Direction direction) {
  return direction == Direction::left ? "left" : "right";
}

std::string_view to_string(MutationDirection direction) {
  return direction == MutationDirection::backward ? "backward" : "forward";
}

MutationDirection parse_direction(std::string_view text) {
  if (text == "backward") return MutationDirection::backward;
  if (text == "forward") return MutationDirection::forward;
  parse_fail("direction must be backward or forward, got '" + std::string(text) + "'");
}

Json cell_json(const Cell& c) {
  Json out;
  out["vertices"] = c.vertices;
  out["kind"] = to_string(c.kind);
  return out;
}

Json triangle_json(const Polygon& p, const WeakARTriangle& t) {
  Json out;
  out["direction"] = to_string(t.direction);
  out["x"] = diagonal_json(t.x);
  out["b"] = diagonals_json(t.middle(p));
  out["c"] = diagonal_json(t.c);
  return out;
}

Json theorem_c_json(const TheoremCReport& r) {
  Json out;
  out["d_subcategory"] = diagonals_json(r.d_subcategory);
  out["cover_summands"] = diagonals_json(r.cover_summands);
  out["cover_is_precover"] = r.cover_is_precover;
  out["cover_is_right_minimal"] = r.cover_is_right_minimal;
  out["cover_in_d"] = r.cover_in_d;
  out["mu_of_removed"] = diagonal_json(r.mu_of_removed);
  out["equals_inserted"] = r.equals_inserted;
  out["reason"] = r.reason;
  return out;
}

Json mutation_json(const MutationReport& r) {
  Json out;
  out["direction"] = to_string(r.direction);
  out["input"] = document_json(r.input);
  out["removed"] = diagonal_json(r.removed);
  out["inserted"] = diagonal_json(r.inserted);
  out["result"] = document_json(r.result);
  out["extension_closed"] = r.extension_closed;
  out["criterion_two_empty_cells"] = r.criterion_two_empty_cells;
  out["x_ext_projective_in_result"] = r.x_ext_projective_in_result;
  out["reason"] = r.reason;
  out["failing_cell"] = r.failing_cell ? cell_json(*r.failing_cell) : Json(nullptr);
  out["theorem_c"] = r.theorem_c ? theorem_c_json(*r.theorem_c) : Json(nullptr);
  return out;
}

Json quiver_json(const ARQuiver& q) {
  Json out;
  out["polygon_size"] = q.polygon().size();
  out["nodes"] = diagonals_json(q.nodes());
  Json arrows = Json::array();
  for (const auto& [from, to] : q.arrows()) {
    Json a;
    a["from"] = diagonal_json(from);
    a["to"] = diagonal_json(to);
    arrows.push_back(std::move(a));
  }
  out["arrows"] = std::move(arrows);
  return out;
}

std::string quiver_dot(const ARQuiver& q) {
  std::ostringstream os;
  os << "digraph ar_quiver {\n";
  for (const Diagonal& d : q.nodes()) {
    os << "  \"" << node_id(d) << "\" [label=\"" << d.first() << "-" << d.second() << "\"];\n";
  }
  for (const auto& [from, to] : q.arrows()) {
    os << "  \"" << node_id(from) << "\" -> \"" << node_id(to) << "\";\n";
  }
  os << "}\n";
  return os.str();
}

Json error_json(const Error& e) {
  Json out;
  out["error"] = to_string(e.code());
  out["message"] = e.what();
  if (e.witness()) out["witness"] = diagonal_json(*e.witness());
  return out;
}

std::string to_text(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace ptolemy_lab
