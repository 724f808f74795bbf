#include "qrep/io.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace qrep {

namespace {

const Json& require(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw ValidationError(where + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ValidationError(where + ": missing key \"" + key + "\"");
  return *it;
}

std::string require_string(const Json& j, const std::string& where) {
  if (!j.is_string()) throw ValidationError(where + ": expected a string");
  return j.get<std::string>();
}

Complex entry_from_json(const Json& e, const std::string& where) {
  if (e.is_number()) return {e.get<double>(), 0.0};
  if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number())
    return {e[0].get<double>(), e[1].get<double>()};
  throw ValidationError(where + ": expected [re, im] or a number");
}

}  // namespace

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) throw ValidationError(where + ": expected a list of rows");
  const auto rows = static_cast<Index>(j.size());
  Index cols = -1;
  for (Index i = 0; i < rows; ++i) {
    const Json& row = j[i];
    const std::string at = where + "[" + std::to_string(i) + "]";
    if (!row.is_array()) throw ValidationError(at + ": expected a row");
    if (cols < 0) cols = static_cast<Index>(row.size());
    if (static_cast<Index>(row.size()) != cols)
      throw ValidationError(at + ": row has " + std::to_string(row.size()) +
                            " entries, expected " + std::to_string(cols));
  }
  Matrix m(rows, std::max<Index>(cols, 0));
  for (Index i = 0; i < rows; ++i)
    for (Index k = 0; k < m.cols(); ++k)
      m(i, k) = entry_from_json(j[i][k], where + "[" + std::to_string(i) + "][" +
                                             std::to_string(k) + "]");
  return m;
}

Json representation_to_json(const Representation& rep, const Json& meta) {
  const Quiver& q = rep.quiver();
  Json arrows = Json::array();
  for (const auto& a : q.arrows()) arrows.push_back({{"name", a.name}, {"src", a.source}, {"dst", a.target}});
  Json dims = Json::object();
  for (std::size_t v = 0; v < q.vertex_count(); ++v) dims[q.vertices()[v]] = rep.dim(v);
  Json maps = Json::object();
  for (std::size_t a = 0; a < q.arrow_count(); ++a) maps[q.arrows()[a].name] = matrix_to_json(rep.map(a));
  Json out{{"quiver", {{"vertices", q.vertices()}, {"arrows", arrows}}}, {"dims", dims}, {"maps", maps}};
  if (!meta.empty()) out["meta"] = meta;
  return out;
}

Representation representation_from_json(const Json& j) {
  const Json& qj = require(j, "quiver", "document");
  const Json& vj = require(qj, "vertices", "quiver");
  if (!vj.is_array()) throw ValidationError("quiver.vertices: expected a list");
  std::vector<std::string> vertices;
  for (std::size_t i = 0; i < vj.size(); ++i)
    vertices.push_back(require_string(vj[i], "quiver.vertices[" + std::to_string(i) + "]"));

  const Json& aj = require(qj, "arrows", "quiver");
  if (!aj.is_array()) throw ValidationError("quiver.arrows: expected a list");
  std::vector<Arrow> arrows;
  for (std::size_t i = 0; i < aj.size(); ++i) {
    const std::string at = "quiver.arrows[" + std::to_string(i) + "]";
    arrows.push_back({require_string(require(aj[i], "name", at), at + ".name"),
                      require_string(require(aj[i], "src", at), at + ".src"),
                      require_string(require(aj[i], "dst", at), at + ".dst")});
  }
  Quiver quiver(std::move(vertices), std::move(arrows));

  const Json& dj = require(j, "dims", "document");
  if (!dj.is_object()) throw ValidationError("dims: expected an object");
  for (const auto& [key, _] : dj.items())
    if (!quiver.has_vertex(key)) throw ValidationError("dims." + key + ": unknown vertex");
  std::vector<Index> dims;
  for (const auto& v : quiver.vertices()) {
    const Json& d = require(dj, v.c_str(), "dims");
    if (!d.is_number_integer() || d.get<long long>() < 0)
      throw ValidationError("dims." + v + ": expected a nonnegative integer");
    dims.push_back(d.get<Index>());
  }

  const Json& mj = require(j, "maps", "document");
  if (!mj.is_object()) throw ValidationError("maps: expected an object");
  for (const auto& [key, _] : mj.items()) quiver.arrow_index(key);
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < quiver.arrow_count(); ++a) {
    const std::string& name = quiver.arrows()[a].name;
    const std::string at = "maps." + name;
    Matrix m = matrix_from_json(require(mj, name.c_str(), "maps"), at);
    const Index rows = dims[quiver.target_index(a)];
    const Index cols = dims[quiver.source_index(a)];
    // An empty list stands for any matrix with zero rows.
    if (m.rows() == 0 && rows == 0) m.resize(0, cols);
    if (m.rows() != rows || m.cols() != cols)
      throw ValidationError(at + ": expected " + std::to_string(rows) + "x" + std::to_string(cols) +
                            ", got " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    maps.push_back(std::move(m));
  }
  return Representation(std::move(quiver), std::move(dims), std::move(maps));
}

Json system_to_json(const SubspaceSystem& s, const Json& meta) {
  Json subs = Json::array();
  for (const auto& q : s.subspaces()) subs.push_back(matrix_to_json(q));
  Json out{{"ambient", s.ambient()}, {"subspaces", subs}};
  if (!meta.empty()) out["meta"] = meta;
  return out;
}

SubspaceSystem system_from_json(const Json& j, const Tolerances& tol) {
  const Json& dj = require(j, "ambient", "document");
  if (!dj.is_number_integer() || dj.get<long long>() < 0)
    throw ValidationError("ambient: expected a nonnegative integer");
  const Index d = dj.get<Index>();
  const Json& sj = require(j, "subspaces", "document");
  if (!sj.is_array()) throw ValidationError("subspaces: expected a list");
  std::vector<Matrix> subs;
  for (std::size_t i = 0; i < sj.size(); ++i) {
    const std::string at = "subspaces[" + std::to_string(i) + "]";
    Matrix m = matrix_from_json(sj[i], at);
    if (m.rows() == 0 && d == 0) m.resize(0, 0);
    if (m.rows() != d)
      throw ValidationError(at + ": expected " + std::to_string(d) + " rows, got " +
                            std::to_string(m.rows()));
    subs.push_back(std::move(m));
  }
  return SubspaceSystem(d, std::move(subs), tol);
}

Json operator_to_json(const Matrix& a) { return Json{{"matrix", matrix_to_json(a)}}; }

Matrix operator_from_json(const Json& j) {
  Matrix a = matrix_from_json(require(j, "matrix", "document"), "matrix");
  if (a.rows() != a.cols()) throw ValidationError("matrix: operator must be square");
  return a;
}

Json vertex_tuple_to_json(const Quiver& q, const VertexTuple& t) {
  Json out = Json::object();
  for (std::size_t v = 0; v < q.vertex_count() && v < t.size(); ++v)
    out[q.vertices()[v]] = matrix_to_json(t[v]);
  return out;
}

DocumentKind document_kind(const Json& j) {
  if (!j.is_object()) throw ValidationError("document: expected a JSON object");
  if (j.contains("quiver")) return DocumentKind::representation;
  if (j.contains("subspaces")) return DocumentKind::system;
  if (j.contains("matrix")) return DocumentKind::op;
  throw ValidationError("document: expected one of the keys \"quiver\", \"subspaces\", \"matrix\"");
}

Json parse_json(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ValidationError(origin + ": JSON parse error at byte " + std::to_string(e.byte) + ": " +
                          e.what());
  }
}

Json read_json(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    return parse_json(text, "<stdin>");
  }
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str(), path);
}

}  // namespace qrep
