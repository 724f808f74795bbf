#pragma once

#include "qrep/numeric.hpp"
#include "qrep/representation.hpp"
#include "qrep/subspace.hpp"

#include <json.hpp>

#include <string>

namespace qrep {

using Json = nlohmann::ordered_json;

/// Row-major list of rows; each entry is [re, im] (a bare number is read as real).
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j, const std::string& where);

/// {"quiver": {"vertices": [...], "arrows": [{"name", "src", "dst"}]},
///  "dims": {vertex: int}, "maps": {arrow: matrix}, "meta": {...}}
Json representation_to_json(const Representation& rep, const Json& meta = Json::object());
Representation representation_from_json(const Json& j);

/// {"ambient": d, "subspaces": [matrix, ...]}
Json system_to_json(const SubspaceSystem& s, const Json& meta = Json::object());
SubspaceSystem system_from_json(const Json& j, const Tolerances& tol = {});

/// {"matrix": matrix}
Json operator_to_json(const Matrix& a);
Matrix operator_from_json(const Json& j);

/// {vertex: matrix} for a per-vertex tuple.
Json vertex_tuple_to_json(const Quiver& q, const VertexTuple& t);

enum class DocumentKind { representation, system, op };

DocumentKind document_kind(const Json& j);

/// Reads a JSON document from a file, or from stdin when `path` is "-".
/// Parse errors carry the byte position.
Json read_json(const std::string& path);

Json parse_json(const std::string& text, const std::string& origin = "<string>");

}  // namespace qrep
