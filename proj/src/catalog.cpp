#include "monocat/catalog.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "json.hpp"
#include "monocat/catalog_data.hpp"
#include "monocat/decomp.hpp"
#include "monocat/tree.hpp"

namespace monocat {

namespace {

using nlohmann::json;

const json& sub_data() {
  static const json j = json::parse(data::kSubCatalog);
  return j;
}

const json& d4_data() {
  static const json j = json::parse(data::kD4Catalog);
  return j;
}

// Entry of a map Z/p^a -> Z/p^b given by a block token.
Int token_value(const Ring& R, const std::string& tok, int a, int b) {
  auto need = [&](bool ok) {
    if (!ok) fail_internal("catalog data: token '" + tok + "' does not fit Z/p^" + std::to_string(a) + " -> Z/p^" + std::to_string(b));
  };
  Int v = 0;
  if (tok == "0") {
    v = 0;
  } else if (tok == "1") {
    v = 1;
  } else if (tok == "i") {
    need(a <= b);
    v = R.pow(b - a);
  } else if (tok == "pi") {
    need(a >= b);
    v = 1;
  } else if (tok == "p") {
    v = R.p();
  } else if (tok == "p*i") {
    need(a <= b && b - a + 1 <= R.n());
    v = R.pow(b - a + 1);
  } else if (tok == "p*pi") {
    need(a >= b);
    v = R.p();
  } else {
    fail_internal("catalog data: unknown token '" + tok + "'");
  }
  return R.reduce(v, b);
}

Mat expand(const Ring& R, const Partition& src, const Partition& tgt, const json& rows) {
  if (rows.size() != tgt.size()) fail_internal("catalog data: row count does not match the target");
  Mat m(static_cast<int>(tgt.size()), static_cast<int>(src.size()));
  for (int r = 0; r < m.rows; ++r) {
    if (rows[r].size() != src.size()) fail_internal("catalog data: column count does not match the source");
    for (int c = 0; c < m.cols; ++c) m(r, c) = token_value(R, rows[r][c].get<std::string>(), src[c], tgt[r]);
  }
  return m;
}

Int eval_poly(const json& coeffs, int p) {
  Int v = 0, pw = 1;
  for (const auto& c : coeffs) {
    v += c.get<Int>() * pw;
    pw *= p;
  }
  return v;
}

std::string shape_key(const Rep& M) {
  std::string k;
  for (const auto& a : M.modules) k += to_string(canonical(a)) + "|";
  return k;
}

}  // namespace

std::vector<CatalogEntry> build_catalog(int n, int p) {
  if (n < 3 || n > 5) fail_input("catalog: n must be 3, 4 or 5");
  const Ring R(p, n);
  const Quiver q = Quiver::a(2);
  std::vector<CatalogEntry> out;
  for (const auto& e : sub_data().at("entries")) {
    if (e.at("min_n").get<int>() > n) continue;
    CatalogEntry c;
    c.name = e.at("name").get<std::string>();
    if (e.contains("y")) {
      c.source = EntrySource::Y;
      c.rep = make_rep(q, R, {{}, {e.at("y").get<int>()}}, {Mat(1, 0)});
    } else {
      const auto src = e.at("source").get<Partition>();
      const auto tgt = e.at("target").get<Partition>();
      c.rep = make_rep(q, R, {src, tgt}, {expand(R, src, tgt, e.at("rows"))});
      if (e.contains("tree")) {
        c.source = EntrySource::Tree;
        c.tree = e.at("tree").get<std::string>();
      }
    }
    out.push_back(std::move(c));
  }
  return out;
}

Quiver d4_catalog_quiver() {
  const auto& q = d4_data().at("quiver");
  std::vector<Arrow> arr;
  for (const auto& a : q.at("arrows")) arr.push_back({a[0].get<int>(), a[1].get<int>()});
  return Quiver(q.at("vertices").get<int>(), arr);
}

std::vector<CatalogEntry> build_d4_catalog(int p) {
  const Ring R(p, d4_data().at("n").get<int>());
  const Quiver q = d4_catalog_quiver();
  std::vector<CatalogEntry> out;
  for (const auto& e : d4_data().at("entries")) {
    CatalogEntry c;
    c.name = e.at("name").get<std::string>();
    if (e.contains("injective")) {
      c.rep = f_shriek(q, R, {R.n()}, e.at("injective").get<int>());
    } else {
      const auto modules = e.at("modules").get<std::vector<Partition>>();
      std::vector<Mat> maps;
      for (const auto& a : q.arrows()) maps.emplace_back(static_cast<int>(modules[a.t].size()), static_cast<int>(modules[a.s].size()));
      for (const auto& m : e.at("maps")) {
        const int k = m.at("arrow").get<int>();
        const Arrow& a = q.arrows()[k];
        maps[k] = expand(R, modules[a.s], modules[a.t], m.at("rows"));
      }
      c.rep = make_rep(q, R, modules, maps);
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<HungData> hung_data(int p) {
  std::vector<HungData> out;
  for (const auto& e : sub_data().at("entries")) {
    if (!e.contains("generators")) continue;
    HungData h;
    h.name = e.at("name").get<std::string>();
    for (const auto& c : e.at("generators").at("x")) h.x.push_back(eval_poly(c, p));
    for (const auto& c : e.at("generators").at("y")) h.y.push_back(eval_poly(c, p));
    for (const auto& w : e.at("valuations"))
      h.witnesses.push_back({w.at("label").get<std::string>(), eval_poly(w.at("x"), p), eval_poly(w.at("y"), p), w.at("v").get<int>()});
    out.push_back(std::move(h));
  }
  return out;
}

namespace {

// Shared checks (a)-(c); fills mono / indecomposable / classes.
void check_entries(const std::vector<CatalogEntry>& entries, CatalogReport& rep) {
  rep.entries = static_cast<int>(entries.size());
  std::vector<bool> indec(entries.size(), false);
  std::set<std::string> names;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& e = entries[i];
    if (!names.insert(e.name).second) rep.failures.push_back(e.name + ": duplicate name");
    if (is_mono(e.rep).mono)
      ++rep.mono;
    else
      rep.failures.push_back(e.name + ": not monomorphic");
    indec[i] = is_indecomposable(e.rep).indecomposable;
    if (indec[i])
      ++rep.indecomposable;
    else
      rep.failures.push_back(e.name + ": decomposable");
  }
  std::map<std::string, std::vector<std::size_t>> by_shape;
  for (std::size_t i = 0; i < entries.size(); ++i) by_shape[shape_key(entries[i].rep)].push_back(i);
  // union of isomorphic entries; classes = number of representatives
  std::vector<std::size_t> rep_of(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) rep_of[i] = i;
  for (const auto& [key, idx] : by_shape)
    for (std::size_t a = 0; a < idx.size(); ++a)
      for (std::size_t b = a + 1; b < idx.size(); ++b) {
        const Rep& X = entries[idx[a]].rep;
        const Rep& Y = entries[idx[b]].rep;
        const bool iso = indec[idx[a]] && indec[idx[b]] ? indecomposables_isomorphic(X, Y) : is_isomorphic(X, Y);
        if (iso) {
          rep.failures.push_back(entries[idx[a]].name + " ≅ " + entries[idx[b]].name);
          rep_of[idx[b]] = std::min(rep_of[idx[b]], rep_of[idx[a]]);
        }
      }
  for (std::size_t i = 0; i < entries.size(); ++i)
    if (rep_of[i] == i) ++rep.classes;
}

}  // namespace

CatalogReport verify_catalog(int n, int p) {
  const auto entries = build_catalog(n, p);
  const Ring R(p, n);
  CatalogReport rep;
  rep.n = n;
  rep.p = p;
  const int expected = n == 3 ? 10 : n == 4 ? 20 : 50;
  check_entries(entries, rep);
  if (rep.entries != expected)
    rep.failures.push_back("expected " + std::to_string(expected) + " entries, found " + std::to_string(rep.entries));

  // (d) tree labels
  for (const auto& e : entries) {
    if (!e.tree) continue;
    if (is_isomorphic(m_of_t(parse_tree(*e.tree), R), e.rep))
      ++rep.tree_matches;
    else
      rep.failures.push_back(e.name + ": differs from the realization of tree " + *e.tree);
  }

  // (e) enumerated trees against the non-Y entries
  const auto trees = enumerate_irretractable_trees(n, 7);
  rep.trees_enumerated = static_cast<int>(trees.size());
  std::map<std::string, std::vector<std::size_t>> by_shape;
  for (std::size_t i = 0; i < entries.size(); ++i)
    if (entries[i].source != EntrySource::Y) by_shape[shape_key(entries[i].rep)].push_back(i);
  std::vector<int> hits(entries.size(), 0);
  for (const auto& T : trees) {
    const Rep M = m_of_t(T, R);
    int found = 0;
    if (auto it = by_shape.find(shape_key(M)); it != by_shape.end())
      for (std::size_t i : it->second)
        if (is_isomorphic(M, entries[i].rep)) {
          ++hits[i];
          ++found;
        }
    if (found != 1)
      rep.failures.push_back("tree " + to_string(T) + " matches " + std::to_string(found) + " entries");
  }
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].source == EntrySource::Y) continue;
    if (hits[i] > 0)
      ++rep.simply_presented;
    else
      rep.not_simply_presented.push_back(entries[i].name);
    if (hits[i] > 1) rep.failures.push_back(entries[i].name + ": realized by several trees");
  }
  if (rep.simply_presented != rep.trees_enumerated)
    rep.failures.push_back("enumerated trees (" + std::to_string(rep.trees_enumerated) + ") vs simply presented entries (" +
                           std::to_string(rep.simply_presented) + ")");

  // (f)
  const std::vector<std::string> expected_nsp = n == 5 ? std::vector<std::string>{"M_F", "M_T"} : std::vector<std::string>{};
  if (rep.not_simply_presented != expected_nsp) {
    std::string got;
    for (const auto& s : rep.not_simply_presented) got += (got.empty() ? "" : ", ") + s;
    rep.failures.push_back("entries without a tree: {" + got + "}");
  }
  return rep;
}

CatalogReport verify_d4_catalog(int p) {
  const auto entries = build_d4_catalog(p);
  CatalogReport rep;
  rep.n = 2;
  rep.p = p;
  check_entries(entries, rep);
  if (rep.entries != 16) rep.failures.push_back("expected 16 entries, found " + std::to_string(rep.entries));
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const bool want = i >= 12;
    if (is_injective_object(entries[i].rep) != want)
      rep.failures.push_back(entries[i].name + (want ? ": not injective" : ": unexpectedly injective"));
  }
  return rep;
}

std::optional<std::string> dynkin_type(const Quiver& q, const std::vector<int>& component) {
  const int V = static_cast<int>(component.size());
  if (V == 0) return std::nullopt;
  std::map<int, std::vector<int>> adj;
  for (int v : component) adj[v];
  int edges = 0;
  for (const auto& a : q.arrows())
    if (adj.count(a.s) && adj.count(a.t)) {
      adj[a.s].push_back(a.t);
      adj[a.t].push_back(a.s);
      ++edges;
    }
  if (edges != V - 1) return std::nullopt;  // connected: a tree iff E = V - 1
  std::vector<int> branch;
  for (const auto& [v, nb] : adj) {
    if (nb.size() > 3) return std::nullopt;
    if (nb.size() == 3) branch.push_back(v);
  }
  if (branch.empty()) return "A" + std::to_string(V);
  if (branch.size() > 1) return std::nullopt;
  const int b = branch[0];
  std::vector<int> arms;
  for (int start : adj[b]) {
    int len = 1, prev = b, cur = start;
    while (adj[cur].size() == 2) {
      const int next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return "D" + std::to_string(V);
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return "E" + std::to_string(V);
  return std::nullopt;
}

RepTypeVerdict rep_type(const Quiver& q, int n) {
  if (n < 1) fail_input("reptype: n must be positive");
  const auto comps = q.components();
  RepTypeVerdict v;
  if (n == 1) {
    v.finite = true;  // Λ is a field: monomorphic = projective kQ-modules
    return v;
  }
  static const std::set<std::pair<int, int>> finite_linear{{3, 2}, {4, 2}, {5, 2}, {3, 3}, {3, 4}};
  v.finite = true;
  for (const auto& c : comps) {
    const auto t = dynkin_type(q, c);
    const int m = static_cast<int>(c.size());
    const bool ok = n == 2 ? t.has_value()
                           : t && (*t)[0] == 'A' && (m == 1 || finite_linear.count({n, m}) > 0);
    v.finite = v.finite && ok;
  }
  if (v.finite || n < 3 || comps.size() != 1) return v;
  // linearly oriented A_m: every vertex has in- and out-degree at most one
  const int m = q.vertices();
  const auto t = dynkin_type(q, comps[0]);
  if (!t || (*t)[0] != 'A') return v;
  std::vector<int> indeg(m, 0), outdeg(m, 0);
  for (const auto& a : q.arrows()) {
    ++outdeg[a.s];
    ++indeg[a.t];
  }
  for (int x = 0; x < m; ++x)
    if (indeg[x] > 1 || outdeg[x] > 1) return v;
  if (n == 6 && m == 2)
    v.note = "open";
  else if ((n == 4 && m == 3) || (n == 3 && m == 5))
    v.note = "tame";
  else
    v.note = "wild";
  return v;
}

}  // namespace monocat
