#include "monocat/quiver.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "monocat/ring.hpp"

namespace monocat {

Quiver::Quiver(int vertices, std::vector<Arrow> arrows) : v_(vertices), arrows_(std::move(arrows)) {
  if (v_ < 0) fail_input("quiver: negative vertex count");
  for (const auto& a : arrows_)
    if (a.s < 0 || a.s >= v_ || a.t < 0 || a.t >= v_) fail_input("quiver: arrow endpoint out of range");

  // Kahn's algorithm; loops and cycles leave vertices unprocessed
  std::vector<int> indeg(v_, 0);
  for (const auto& a : arrows_) ++indeg[a.t];
  std::vector<int> stack;
  for (int v = 0; v < v_; ++v)
    if (indeg[v] == 0) stack.push_back(v);
  int seen = 0;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    ++seen;
    for (const auto& a : arrows_)
      if (a.s == v && --indeg[a.t] == 0) stack.push_back(a.t);
  }
  if (seen != v_) fail_input("quiver: contains a directed cycle");

  incoming_.assign(v_, {});
  for (int k = 0; k < arrow_count(); ++k) incoming_[arrows_[k].t].push_back(k);
  for (auto& in : incoming_)
    std::stable_sort(in.begin(), in.end(), [&](int x, int y) { return arrows_[x].s < arrows_[y].s; });

  // breadth-first by length; within a length, extensions of lex-ordered paths by increasing
  // arrow index are again lex-ordered after a final sort
  std::vector<Path> layer;
  for (int v = 0; v < v_; ++v) layer.push_back(Path{v, v, {}});
  while (!layer.empty()) {
    paths_.insert(paths_.end(), layer.begin(), layer.end());
    std::vector<Path> next;
    for (const auto& q : layer)
      for (int k = 0; k < arrow_count(); ++k)
        if (arrows_[k].s == q.t) {
          Path r = q;
          r.arrows.push_back(k);
          r.t = arrows_[k].t;
          next.push_back(std::move(r));
        }
    std::sort(next.begin(), next.end(), [](const Path& x, const Path& y) { return x.arrows < y.arrows; });
    layer = std::move(next);
  }
}

std::vector<Path> Quiver::paths_from(int v) const {
  std::vector<Path> out;
  for (const auto& q : paths_)
    if (q.s == v) out.push_back(q);
  return out;
}

std::vector<Path> Quiver::paths_to(int v) const {
  std::vector<Path> out;
  for (const auto& q : paths_)
    if (q.t == v) out.push_back(q);
  return out;
}

int Quiver::path_index(const Path& q) const {
  for (std::size_t i = 0; i < paths_.size(); ++i)
    if (paths_[i] == q) return static_cast<int>(i);
  return -1;
}

std::vector<std::vector<int>> Quiver::components() const {
  std::vector<int> parent(v_);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& a : arrows_) parent[find(a.s)] = find(a.t);
  std::vector<std::vector<int>> comps;
  std::vector<int> slot(v_, -1);
  for (int v = 0; v < v_; ++v) {
    const int r = find(v);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(comps.size());
      comps.emplace_back();
    }
    comps[slot[r]].push_back(v);
  }
  return comps;
}

Quiver Quiver::a(int m) {
  std::vector<Arrow> arr;
  for (int i = 0; i + 1 < m; ++i) arr.push_back({i, i + 1});
  return Quiver(m, arr);
}

Quiver Quiver::from_shorthand(const std::string& name) {
  if (name.size() < 2) fail_input("quiver: unknown shorthand '" + name + "'");
  const char kind = static_cast<char>(std::tolower(static_cast<unsigned char>(name[0])));
  int m = 0;
  try {
    std::size_t used = 0;
    m = std::stoi(name.substr(1), &used);
    if (used != name.size() - 1) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    fail_input("quiver: unknown shorthand '" + name + "'");
  }
  std::vector<Arrow> arr;
  switch (kind) {
    case 'a':
      if (m < 1 || m > 9) break;
      return a(m);
    case 'd':
      if (m < 4 || m > 9) break;
      for (int i = 0; i + 1 < m - 1; ++i) arr.push_back({i, i + 1});
      arr.push_back({m - 1, m - 3});
      return Quiver(m, arr);
    case 'e':
      if (m < 6 || m > 8) break;
      for (int i = 0; i + 1 < m - 1; ++i) arr.push_back({i, i + 1});
      arr.push_back({m - 1, 2});
      return Quiver(m, arr);
    default:
      break;
  }
  fail_input("quiver: unknown shorthand '" + name + "'");
}

bool is_a2(const Quiver& q) { return q.vertices() == 2 && q.arrow_count() == 1 && q.arrows()[0] == Arrow{0, 1}; }

}  // namespace monocat
