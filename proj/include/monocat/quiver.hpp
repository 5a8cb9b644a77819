#pragma once

#include <string>
#include <vector>

namespace monocat {

struct Arrow {
  int s;
  int t;
  friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// A path as its sequence of arrow indices in traversal order; trivial paths carry a vertex.
struct Path {
  int s;
  int t;
  std::vector<int> arrows;
  int length() const { return static_cast<int>(arrows.size()); }
  friend bool operator==(const Path&, const Path&) = default;
};

/// Finite acyclic quiver on vertices 0..V-1.
class Quiver {
 public:
  Quiver() = default;
  Quiver(int vertices, std::vector<Arrow> arrows);

  int vertices() const { return v_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  int arrow_count() const { return static_cast<int>(arrows_.size()); }

  /// Arrows ending at v, sorted by (source, arrow index).
  const std::vector<int>& incoming(int v) const { return incoming_[v]; }
  /// All paths, ordered by length then lexicographically (trivial paths by vertex).
  const std::vector<Path>& paths() const { return paths_; }
  std::vector<Path> paths_from(int v) const;
  std::vector<Path> paths_to(int v) const;
  /// Index of a path in `paths()`, or -1.
  int path_index(const Path& q) const;

  /// Connected components of the underlying graph, each sorted.
  std::vector<std::vector<int>> components() const;

  /// "a2".."a9", "d4".."d9", "e6".."e8" (0-indexed, see README for orientation).
  static Quiver from_shorthand(const std::string& name);
  static Quiver a(int m);

  friend bool operator==(const Quiver& x, const Quiver& y) { return x.v_ == y.v_ && x.arrows_ == y.arrows_; }

 private:
  int v_ = 0;
  std::vector<Arrow> arrows_;
  std::vector<std::vector<int>> incoming_;
  std::vector<Path> paths_;
};

bool is_a2(const Quiver& q);

}  // namespace monocat
