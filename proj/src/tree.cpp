#include "monocat/tree.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

namespace monocat {

void check_tree(const ValuatedTree& T, int n) {
  const int m = T.size();
  if (static_cast<int>(T.value.size()) != m) fail_input("tree: parent and value arrays differ in length");
  for (int x = 0; x < m; ++x) {
    if (T.value[x] < 0 || T.value[x] > n - 1)
      fail_input("tree: value of node " + std::to_string(x + 1) + " outside [0, n-1]");
    const int p = T.parent[x];
    if (p < -1 || p >= m) fail_input("tree: parent of node " + std::to_string(x + 1) + " out of range");
    if (p >= 0 && T.value[p] <= T.value[x])
      fail_input("tree: value must strictly increase towards the root at node " + std::to_string(x + 1));
  }
  // strict increase of values along parents already rules out cycles
}

namespace {

std::vector<std::vector<int>> children_of(const ValuatedTree& T, std::vector<int>* roots) {
  std::vector<std::vector<int>> ch(T.size());
  for (int x = 0; x < T.size(); ++x) {
    if (T.parent[x] < 0)
      roots->push_back(x);
    else
      ch[T.parent[x]].push_back(x);
  }
  return ch;
}

std::string forest_code(std::vector<std::string> parts) {
  if (parts.size() == 1) return parts[0];
  std::sort(parts.begin(), parts.end(), std::greater<>());
  std::string s;
  for (const auto& p : parts) s += "(" + p + ")";
  return s;
}

}  // namespace

ValuatedTree parse_tree(const std::string& raw) {
  std::string s;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  ValuatedTree T;
  std::size_t pos = 0;
  std::function<void(int)> node, forest;
  node = [&](int parent) {
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
      fail_input("tree syntax: expected a digit at position " + std::to_string(pos));
    const int v = s[pos++] - '0';
    if (parent >= 0 && T.value[parent] <= v) fail_input("tree syntax: values must decrease away from the root");
    T.parent.push_back(parent);
    T.value.push_back(v);
    forest(T.size() - 1);
  };
  forest = [&](int parent) {
    if (pos < s.size() && s[pos] == '(') {
      while (pos < s.size() && s[pos] == '(') {
        ++pos;
        node(parent);
        if (pos >= s.size() || s[pos] != ')') fail_input("tree syntax: expected ')' at position " + std::to_string(pos));
        ++pos;
      }
    } else if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      node(parent);
    }
  };
  forest(-1);
  if (pos != s.size()) fail_input("tree syntax: unexpected '" + std::string(1, s[pos]) + "'");
  return T;
}

std::string to_string(const ValuatedTree& T) {
  std::vector<int> roots;
  const auto ch = children_of(T, &roots);
  std::function<std::string(int)> enc = [&](int x) {
    std::vector<std::string> parts;
    for (int c : ch[x]) parts.push_back(enc(c));
    return std::to_string(T.value[x]) + (parts.empty() ? "" : forest_code(parts));
  };
  std::vector<std::string> parts;
  for (int r : roots) parts.push_back(enc(r));
  return parts.empty() ? "" : forest_code(parts);
}

bool tree_iso(const ValuatedTree& a, const ValuatedTree& b) { return to_string(a) == to_string(b); }

std::vector<std::vector<int>> levels_by_depth(const ValuatedTree& T) {
  std::vector<int> depth(T.size(), -1);
  std::function<int(int)> d = [&](int x) {
    if (depth[x] < 0) depth[x] = T.parent[x] < 0 ? 0 : d(T.parent[x]) + 1;
    return depth[x];
  };
  std::vector<std::vector<int>> out;
  for (int x = 0; x < T.size(); ++x) {
    const int k = d(x);
    if (static_cast<int>(out.size()) <= k) out.resize(k + 1);
    out[k].push_back(x);
  }
  return out;
}

std::vector<Int> canonical_sum(const ValuatedTree& T, int p, std::vector<Int> c) {
  if (static_cast<int>(c.size()) != T.size()) fail_input("canonical sum: one coefficient per node required");
  const auto lv = levels_by_depth(T);
  for (auto it = lv.rbegin(); it != lv.rend(); ++it)
    for (int x : *it) {
      Int q = c[x] / p;
      if (c[x] - q * p < 0) --q;
      c[x] -= q * p;
      if (T.parent[x] >= 0) c[T.parent[x]] += q;  // p·[x] = [p(x)], and [*] = 0
    }
  return c;
}

TreeGroup s_of_t(const ValuatedTree& T, const Ring& R) {
  check_tree(T, R.n());
  const int m = T.size();
  Mat rel(m, m);
  for (int x = 0; x < m; ++x) {
    rel(x, x) = R.p() % R.modulus();
    if (T.parent[x] >= 0) rel(x, T.parent[x]) = R.reduce(-1);
  }
  TreeGroup G;
  G.diag = presentation_to_partition(R, rel, m);
  const Partition& parts = G.diag.parts;
  const int k = static_cast<int>(parts.size());
  G.node_coords = Mat(k, m);
  for (int x = 0; x < m; ++x)
    for (int l = 0; l < k; ++l) G.node_coords(l, x) = R.reduce(G.diag.Q(x, l), parts[l]);
  std::vector<Mat> levels;
  for (int i = 0; i <= R.n(); ++i) {
    std::vector<Vec> cols;
    for (int x = 0; x < m; ++x)
      if (T.value[x] >= i) cols.push_back(G.node_coords.col(x));
    levels.push_back(from_cols(cols, k));
  }
  G.group = make_valuated_group(R, parts, std::move(levels));
  return G;
}

RetractionResult is_irretractable(const ValuatedTree& T) {
  const int m = T.size();
  std::vector<int> roots;
  const auto ch = children_of(T, &roots);
  std::vector<int> order;
  for (const auto& level : levels_by_depth(T)) order.insert(order.end(), level.begin(), level.end());
  constexpr int kUnset = -2;
  std::vector<int> r(m, kUnset), in_image(m, 0);
  RetractionResult out;

  std::function<bool(std::size_t)> search = [&](std::size_t idx) -> bool {
    if (idx == order.size()) {
      bool identity = true, collapse = true;
      for (int x = 0; x < m; ++x) {
        identity = identity && r[x] == x;
        collapse = collapse && r[x] == -1;
        if (r[x] >= 0 && r[r[x]] != r[x]) return false;
      }
      if (identity || collapse) return false;
      out.irretractable = false;
      out.witness = r;
      return true;
    }
    const int x = order[idx];
    const int base = T.parent[x] < 0 ? -1 : r[T.parent[x]];
    std::vector<int> cand{};
    if (base == -1) {
      cand.push_back(-1);
      cand.insert(cand.end(), roots.begin(), roots.end());
    } else {
      cand = ch[base];
    }
    for (int y : cand) {
      if (y >= 0 && T.value[y] < T.value[x]) continue;
      if (y >= 0 && r[y] != kUnset && r[y] != y) continue;  // images must be fixed points
      if (in_image[x] > 0 && y != x) continue;
      r[x] = y;
      if (y >= 0) ++in_image[y];
      if (search(idx + 1)) return true;
      if (y >= 0) --in_image[y];
      r[x] = kUnset;
    }
    return false;
  };
  search(0);
  return out;
}

HullResult tree_hull(const ValuatedTree& T, int n) {
  check_tree(T, n);
  const int m = T.size();
  HullResult H{T, {}};
  for (int x = 0; x < m; ++x) H.gamma.push_back(x);
  for (int i = 1; i <= n - 1; ++i) {
    // heights in T_{i-1}: longest chain of nodes above x
    const int cur = H.hull.size();
    std::vector<int> h(cur, 0);
    std::vector<int> order;
    for (const auto& level : levels_by_depth(H.hull)) order.insert(order.end(), level.begin(), level.end());
    for (auto it = order.rbegin(); it != order.rend(); ++it)
      if (H.hull.parent[*it] >= 0) h[H.hull.parent[*it]] = std::max(h[H.hull.parent[*it]], h[*it] + 1);
    for (int x = 0; x < m; ++x) {
      if (T.value[x] != i || h[x] >= i) continue;
      int below = x;
      for (int k = i - 1; k >= 0; --k) {
        H.hull.parent.push_back(below);
        H.hull.value.push_back(k);
        below = H.hull.size() - 1;
      }
    }
  }
  return H;
}

Rep m_of_t(const ValuatedTree& T, const Ring& R) {
  const HullResult H = tree_hull(T, R.n());
  const TreeGroup S = s_of_t(T, R);
  const TreeGroup J = s_of_t(H.hull, R);
  const Partition& a = S.diag.parts;
  const Partition& b = J.diag.parts;
  Mat m(static_cast<int>(b.size()), static_cast<int>(a.size()));
  for (int l = 0; l < m.cols; ++l)
    for (int x = 0; x < T.size(); ++x) {
      const Int c = S.diag.Qinv(l, x);
      if (c == 0) continue;
      for (int r = 0; r < m.rows; ++r) m(r, l) = R.reduce(m(r, l) + c * J.node_coords(r, H.gamma[x]));
    }
  for (int r = 0; r < m.rows; ++r)
    for (int l = 0; l < m.cols; ++l) m(r, l) = R.reduce(m(r, l), b[r]);
  Rep M = make_rep(Quiver::a(2), R, {a, b}, {m});
  if (!is_mono(M).mono) fail_internal("m_of_t: S(T) -> S(hull) is not injective");
  return M;
}

std::vector<ValuatedTree> enumerate_irretractable_trees(int n, int max_nodes) {
  if (max_nodes < 1) fail_input("enumerate: max_nodes must be at least 1");
  if (n < 1 || n > 9) fail_input("enumerate: n out of range");
  struct Node {
    std::string code;
    int size;
    int value;
  };
  std::vector<Node> all;
  // multisets (non-decreasing index sequences) of candidates with the given total size
  std::function<void(const std::vector<int>&, int, std::size_t, std::vector<int>&, const std::function<void(const std::vector<int>&)>&)>
      multisets = [&](const std::vector<int>& cand, int total, std::size_t start, std::vector<int>& cur,
                      const std::function<void(const std::vector<int>&)>& emit) {
        if (total == 0) {
          emit(cur);
          return;
        }
        for (std::size_t i = start; i < cand.size(); ++i) {
          if (all[cand[i]].size > total) continue;
          cur.push_back(cand[i]);
          multisets(cand, total - all[cand[i]].size, i, cur, emit);
          cur.pop_back();
        }
      };
  auto code_of = [&](const std::vector<int>& idx) {
    std::vector<std::string> parts;
    for (int i : idx) parts.push_back(all[i].code);
    return parts.empty() ? std::string() : forest_code(parts);
  };
  for (int s = 1; s <= max_nodes; ++s) {
    std::vector<Node> fresh;
    for (int v = 0; v < n; ++v) {
      std::vector<int> cand;
      for (int i = 0; i < static_cast<int>(all.size()); ++i)
        if (all[i].value < v && all[i].size <= s - 1) cand.push_back(i);
      std::vector<int> cur;
      multisets(cand, s - 1, 0, cur, [&](const std::vector<int>& kids) {
        fresh.push_back({std::to_string(v) + code_of(kids), s, v});
      });
    }
    all.insert(all.end(), fresh.begin(), fresh.end());
  }
  std::vector<int> every(all.size());
  for (std::size_t i = 0; i < all.size(); ++i) every[i] = static_cast<int>(i);
  std::vector<ValuatedTree> out;
  for (int s = 1; s <= max_nodes; ++s) {
    std::vector<int> cur;
    multisets(every, s, 0, cur, [&](const std::vector<int>& roots) {
      ValuatedTree T = parse_tree(code_of(roots));
      if (is_irretractable(T).irretractable) out.push_back(std::move(T));
    });
  }
  std::sort(out.begin(), out.end(), [](const ValuatedTree& a, const ValuatedTree& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return to_string(a) < to_string(b);
  });
  return out;
}

}  // namespace monocat
