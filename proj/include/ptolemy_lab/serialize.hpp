#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "ptolemy_lab/diagram.hpp"
#include "ptolemy_lab/error.hpp"
#include "ptolemy_lab/hom.hpp"
#include "ptolemy_lab/mutation.hpp"
#include "ptolemy_lab/weak_ar.hpp"

namespace ptolemy_lab {

using Json = nlohmann::ordered_json;

/// {"polygon_size": N, "diagonals": [[u, v], ...]} with u < v, sorted.
Json document_json(const Diagram& d);

/// Accepts pairs in either order and repeated pairs. Throws
/// Error(parse_error) on anything else.
Diagram parse_document(const Json& doc);
Diagram parse_document_text(std::string_view text);

/// "u,v" or a JSON pair. Throws Error(parse_error).
Diagonal parse_diagonal_text(const Polygon& p, std::string_view text);
Diagonal parse_diagonal(const Polygon& p, const Json& pair);

Json diagonal_json(const Diagonal& d);
Json diagonals_json(const std::vector<Diagonal>& ds);
Json cell_json(const Cell& c);

std::string_view to_string(CellKind kind);
std::string_view to_string(Direction direction);
std::string_view to_string(MutationDirection direction);

/// Throws Error(parse_error) unless the text is "backward" or "forward".
MutationDirection parse_direction(std::string_view text);

/// {"direction", "x", "b", "c"}; zero middle terms are left out of "b".
Json triangle_json(const Polygon& p, const WeakARTriangle& t);

Json theorem_c_json(const TheoremCReport& r);
Json mutation_json(const MutationReport& r);

Json quiver_json(const ARQuiver& q);
std::string quiver_dot(const ARQuiver& q);

/// {"error": "CODE", "message": "...", "witness": [u, v]}; witness only
/// when known.
Json error_json(const Error& e);

/// The one text form every report goes out in.
std::string to_text(const Json& j);

}  // namespace ptolemy_lab
