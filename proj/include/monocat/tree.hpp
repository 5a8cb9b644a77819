#pragma once

#include <optional>
#include <string>
#include <vector>

#include "monocat/valuated.hpp"

namespace monocat {

/// Finite valuated tree. Nodes are 0..m-1; parent[x] = -1 means the parent is the root *.
/// Values satisfy v(parent) > v(child); the root has value ∞.
struct ValuatedTree {
  std::vector<int> parent;
  std::vector<int> value;

  int size() const { return static_cast<int>(parent.size()); }
  friend bool operator==(const ValuatedTree&, const ValuatedTree&) = default;
};

void check_tree(const ValuatedTree& T, int n);
/// Parenthesized-sequence syntax, e.g. "210", "3(2)(10)", "43(2)(10)": the first digit is the
/// node nearest the root; a node with several children lists them as (..)(..).
ValuatedTree parse_tree(const std::string& s);
/// Canonical encoding (children sorted), used as isomorphism key.
std::string to_string(const ValuatedTree& T);
bool tree_iso(const ValuatedTree& a, const ValuatedTree& b);
/// Node lists per depth (depth 0 = children of the root).
std::vector<std::vector<int>> levels_by_depth(const ValuatedTree& T);

/// Unique expression Σ b_x [x] with 0 ≤ b_x < p of a raw integer combination.
std::vector<Int> canonical_sum(const ValuatedTree& T, int p, std::vector<Int> coeffs);

/// S(T) realized on the cyclic decomposition of its presentation.
struct TreeGroup {
  ValuatedGroup group;
  /// Column x: coordinates of the generator [x].
  Mat node_coords;
  Diagonalization diag;
};
TreeGroup s_of_t(const ValuatedTree& T, const Ring& R);

struct RetractionResult {
  bool irretractable = true;
  /// A retraction other than the identity and the collapse to *; -1 encodes *.
  std::optional<std::vector<int>> witness;
};
RetractionResult is_irretractable(const ValuatedTree& T);

struct HullResult {
  ValuatedTree hull;     // T_{n-1}; the nodes of T keep their indices
  std::vector<int> gamma;  // inclusion T -> hull
};
HullResult tree_hull(const ValuatedTree& T, int n);

/// The monomorphism S(T) -> S(hull) as a representation of A2.
Rep m_of_t(const ValuatedTree& T, const Ring& R);

/// Isomorphism classes of irretractable trees with 1..max_nodes nodes and values < n,
/// sorted by (size, encoding).
std::vector<ValuatedTree> enumerate_irretractable_trees(int n, int max_nodes);

}  // namespace monocat
