#include "qrep/quiver.hpp"

#include "qrep/numeric.hpp"

#include <algorithm>
#include <unordered_set>

namespace qrep {

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
  std::unordered_set<std::string> seen;
  for (const auto& v : vertices_)
    if (!seen.insert(v).second) throw ValidationError("duplicate vertex '" + v + "'");
  seen.clear();
  for (const auto& a : arrows_) {
    if (!seen.insert(a.name).second) throw ValidationError("duplicate arrow '" + a.name + "'");
    if (!has_vertex(a.source))
      throw ValidationError("arrow '" + a.name + "' has unknown source '" + a.source + "'");
    if (!has_vertex(a.target))
      throw ValidationError("arrow '" + a.name + "' has unknown target '" + a.target + "'");
    source_.push_back(vertex_index(a.source));
    target_.push_back(vertex_index(a.target));
  }
}

std::size_t Quiver::vertex_index(std::string_view vertex) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), vertex);
  if (it == vertices_.end()) throw ValidationError("unknown vertex '" + std::string(vertex) + "'");
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::size_t Quiver::arrow_index(std::string_view arrow) const {
  auto it = std::find_if(arrows_.begin(), arrows_.end(),
                         [&](const Arrow& a) { return a.name == arrow; });
  if (it == arrows_.end()) throw ValidationError("unknown arrow '" + std::string(arrow) + "'");
  return static_cast<std::size_t>(it - arrows_.begin());
}

bool Quiver::has_vertex(std::string_view vertex) const {
  return std::find(vertices_.begin(), vertices_.end(), vertex) != vertices_.end();
}

bool Quiver::is_acyclic() const {
  // Kahn's algorithm; a loop contributes to its own vertex's in-degree.
  const std::size_t n = vertices_.size();
  std::vector<std::size_t> indegree(n, 0);
  for (std::size_t a = 0; a < arrows_.size(); ++a) ++indegree[target_[a]];
  std::vector<std::size_t> ready;
  for (std::size_t v = 0; v < n; ++v)
    if (indegree[v] == 0) ready.push_back(v);
  std::size_t removed = 0;
  while (!ready.empty()) {
    std::size_t v = ready.back();
    ready.pop_back();
    ++removed;
    for (std::size_t a = 0; a < arrows_.size(); ++a)
      if (source_[a] == v && --indegree[target_[a]] == 0) ready.push_back(target_[a]);
  }
  return removed == n;
}

std::vector<std::string> Quiver::loops_at(std::string_view vertex) const {
  const std::size_t v = vertex_index(vertex);
  std::vector<std::string> out;
  for (std::size_t a = 0; a < arrows_.size(); ++a)
    if (source_[a] == v && target_[a] == v) out.push_back(arrows_[a].name);
  return out;
}

bool Quiver::has_loops() const {
  for (std::size_t a = 0; a < arrows_.size(); ++a)
    if (is_loop(a)) return true;
  return false;
}

std::size_t Quiver::out_degree(std::string_view vertex) const {
  const std::size_t v = vertex_index(vertex);
  return static_cast<std::size_t>(std::count(source_.begin(), source_.end(), v));
}

Quiver Quiver::loop(int n) {
  if (n < 1) throw ValidationError("loop quiver needs at least one loop");
  std::vector<Arrow> arrows;
  for (int k = 1; k <= n; ++k) arrows.push_back({"a" + std::to_string(k), "1", "1"});
  return Quiver({"1"}, std::move(arrows));
}

Quiver Quiver::kronecker(int n) {
  if (n < 0) throw ValidationError("kronecker quiver needs a nonnegative arrow count");
  std::vector<Arrow> arrows;
  for (int k = 1; k <= n; ++k) arrows.push_back({"a" + std::to_string(k), "1", "2"});
  return Quiver({"1", "2"}, std::move(arrows));
}

Quiver Quiver::subspace(int n) {
  if (n < 1) throw ValidationError("subspace quiver needs at least one subspace");
  std::vector<std::string> vertices;
  for (int k = 1; k <= n + 1; ++k) vertices.push_back(std::to_string(k));
  std::vector<Arrow> arrows;
  const std::string sink = std::to_string(n + 1);
  for (int k = 1; k <= n; ++k) arrows.push_back({"a" + std::to_string(k), std::to_string(k), sink});
  return Quiver(std::move(vertices), std::move(arrows));
}

Quiver Quiver::two_inclusions() { return subspace(2); }

Path::Path(const Quiver& quiver, std::vector<std::string> arrows) : arrows_(std::move(arrows)) {
  for (std::size_t k = 0; k < arrows_.size(); ++k) {
    const Arrow& a = quiver.arrows()[quiver.arrow_index(arrows_[k])];
    if (k == 0) source_ = a.source;
    else if (a.source != target_)
      throw ValidationError("path breaks at arrow '" + a.name + "': expected source '" + target_ +
                            "'");
    target_ = a.target;
  }
}

}  // namespace qrep
