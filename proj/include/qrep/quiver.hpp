#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace qrep {

struct Arrow {
  std::string name;
  std::string source;
  std::string target;

  bool operator==(const Arrow&) const = default;
};

/// Directed multigraph with named vertices and arrows. Declaration order of
/// both is significant: matrix blocks and unknowns are laid out in it.
/// Loops and parallel arrows are allowed.
class Quiver {
 public:
  Quiver() = default;
  Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows);

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t arrow_count() const { return arrows_.size(); }

  /// Throws ValidationError for unknown names.
  std::size_t vertex_index(std::string_view vertex) const;
  std::size_t arrow_index(std::string_view arrow) const;
  bool has_vertex(std::string_view vertex) const;

  std::size_t source_index(std::size_t arrow) const { return source_[arrow]; }
  std::size_t target_index(std::size_t arrow) const { return target_[arrow]; }
  bool is_loop(std::size_t arrow) const { return source_[arrow] == target_[arrow]; }

  /// True iff there is no directed cycle; a loop is a cycle.
  bool is_acyclic() const;

  /// Names of the loops at `vertex`, in declaration order.
  std::vector<std::string> loops_at(std::string_view vertex) const;

  bool has_loops() const;
  std::size_t out_degree(std::string_view vertex) const;

  bool operator==(const Quiver& other) const {
    return vertices_ == other.vertices_ && arrows_ == other.arrows_;
  }

  /// One vertex "1" with loops a1..an.
  static Quiver loop(int n);
  /// Vertices "1","2" and arrows a1..an : 1 -> 2 (n >= 0).
  static Quiver kronecker(int n);
  /// Vertices "1".."n+1" with a_k : k -> n+1.
  static Quiver subspace(int n);
  /// Two sources included into one target: 1 -> 3 <- 2.
  static Quiver two_inclusions();

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::vector<std::size_t> source_;
  std::vector<std::size_t> target_;
};

/// A composable sequence of arrows.
class Path {
 public:
  Path(const Quiver& quiver, std::vector<std::string> arrows);

  const std::vector<std::string>& arrows() const { return arrows_; }
  std::size_t length() const { return arrows_.size(); }
  const std::string& source() const { return source_; }
  const std::string& target() const { return target_; }
  bool is_cycle() const { return !arrows_.empty() && source_ == target_; }

 private:
  std::vector<std::string> arrows_;
  std::string source_;
  std::string target_;
};

}  // namespace qrep
