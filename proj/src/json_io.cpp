#include "monocat/json_io.hpp"

#include <set>

namespace monocat {

namespace {

void only_fields(const Json& j, const std::string& what, std::initializer_list<const char*> allowed) {
  if (!j.is_object()) fail_input(what + ": expected a JSON object");
  const std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& [k, v] : j.items())
    if (!ok.count(k)) fail_input(what + ": unknown field '" + k + "'");
}

const Json& need(const Json& j, const char* key, const std::string& what) {
  if (!j.contains(key)) fail_input(what + ": missing field '" + std::string(key) + "'");
  return j.at(key);
}

void check_schema(const Json& j, const std::string& what) {
  if (j.contains("schema") && (!j.at("schema").is_number_integer() || j.at("schema").get<int>() != kSchema))
    fail_input(what + ": unsupported schema version");
}

int get_int(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) fail_input(what + ": expected an integer");
  return j.get<int>();
}

Partition get_partition(const Json& j, const std::string& what) {
  if (!j.is_array()) fail_input(what + ": expected an array of parts");
  Partition a;
  for (const auto& x : j) a.push_back(get_int(x, what));
  return a;
}

Mat get_matrix(const Json& j, int rows, int cols, const std::string& what) {
  if (!j.is_array() || static_cast<int>(j.size()) != rows)
    fail_input(what + ": expected " + std::to_string(rows) + " rows");
  Mat m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    if (!j[r].is_array() || static_cast<int>(j[r].size()) != cols)
      fail_input(what + ": expected " + std::to_string(cols) + " columns in row " + std::to_string(r));
    for (int c = 0; c < cols; ++c) {
      if (!j[r][c].is_number_integer()) fail_input(what + ": entries must be integers");
      m(r, c) = j[r][c].get<Int>();
    }
  }
  return m;
}

Json matrix_json(const Mat& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.rows; ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.cols; ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json columns_json(const Mat& m) {
  Json cols = Json::array();
  for (int c = 0; c < m.cols; ++c) cols.push_back(m.col(c));
  return cols;
}

Json structure_json(const fp::Structure& s) {
  return Json{{"end_top_dim", s.dim}, {"radical_dim", s.radical_dim}, {"local", s.local}};
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail_input(std::string("malformed JSON: ") + e.what());
  }
}

Quiver quiver_from_json(const Json& j) {
  if (j.is_string()) return Quiver::from_shorthand(j.get<std::string>());
  only_fields(j, "quiver", {"vertices", "arrows"});
  const int V = get_int(need(j, "vertices", "quiver"), "quiver.vertices");
  if (V < 0) fail_input("quiver: negative vertex count");
  std::vector<Arrow> arr;
  const Json& a = need(j, "arrows", "quiver");
  if (!a.is_array()) fail_input("quiver.arrows: expected an array");
  for (const auto& e : a) {
    if (!e.is_array() || e.size() != 2) fail_input("quiver.arrows: each arrow is [source, target]");
    arr.push_back({get_int(e[0], "quiver.arrows"), get_int(e[1], "quiver.arrows")});
  }
  return Quiver(V, arr);
}

Json quiver_to_json(const Quiver& q) {
  Json arr = Json::array();
  for (const auto& a : q.arrows()) arr.push_back({a.s, a.t});
  return Json{{"vertices", q.vertices()}, {"arrows", arr}};
}

Rep rep_from_json(const Json& j) {
  only_fields(j, "rep", {"schema", "name", "meta", "p", "n", "quiver", "modules", "maps"});
  check_schema(j, "rep");
  const Ring R(get_int(need(j, "p", "rep"), "rep.p"), get_int(need(j, "n", "rep"), "rep.n"));
  const Quiver q = quiver_from_json(need(j, "quiver", "rep"));
  const Json& mods = need(j, "modules", "rep");
  if (!mods.is_array() || static_cast<int>(mods.size()) != q.vertices())
    fail_input("rep.modules: expected one partition per vertex");
  std::vector<Partition> modules;
  for (const auto& m : mods) modules.push_back(get_partition(m, "rep.modules"));
  std::vector<Mat> maps;
  for (const auto& a : q.arrows())
    maps.emplace_back(static_cast<int>(modules[a.t].size()), static_cast<int>(modules[a.s].size()));
  std::vector<bool> seen(q.arrow_count(), false);
  if (j.contains("maps")) {
    if (!j.at("maps").is_array()) fail_input("rep.maps: expected an array");
    for (const auto& m : j.at("maps")) {
      only_fields(m, "rep.maps[]", {"arrow", "entries"});
      const int k = get_int(need(m, "arrow", "rep.maps[]"), "rep.maps[].arrow");
      if (k < 0 || k >= q.arrow_count()) fail_input("rep.maps: arrow index out of range");
      if (seen[k]) fail_input("rep.maps: arrow " + std::to_string(k) + " given twice");
      seen[k] = true;
      maps[k] = get_matrix(need(m, "entries", "rep.maps[]"), maps[k].rows, maps[k].cols,
                           "rep.maps[" + std::to_string(k) + "]");
    }
  }
  return make_rep(q, R, modules, maps);
}

Json rep_to_json(const Rep& M) {
  Json mods = Json::array();
  for (const auto& a : M.modules) mods.push_back(a);
  Json maps = Json::array();
  for (int k = 0; k < M.quiver.arrow_count(); ++k) maps.push_back(Json{{"arrow", k}, {"entries", matrix_json(M.maps[k].m)}});
  return Json{{"schema", kSchema}, {"p", M.ring.p()},        {"n", M.ring.n()},
              {"quiver", quiver_to_json(M.quiver)}, {"modules", mods}, {"maps", maps}};
}

RepMorphism morphism_from_json(const Json& j, const Rep& M, const Rep& N) {
  only_fields(j, "morphism", {"schema", "meta", "components"});
  check_schema(j, "morphism");
  const Json& comps = need(j, "components", "morphism");
  const int V = M.quiver.vertices();
  if (!comps.is_array() || static_cast<int>(comps.size()) != V) fail_input("morphism: expected one component per vertex");
  RepMorphism f;
  for (int v = 0; v < V; ++v) {
    only_fields(comps[v], "morphism.components[]", {"vertex", "entries"});
    if (get_int(need(comps[v], "vertex", "morphism"), "morphism.vertex") != v) fail_input("morphism: components out of order");
    const Mat m = get_matrix(need(comps[v], "entries", "morphism"), static_cast<int>(N.modules[v].size()),
                             static_cast<int>(M.modules[v].size()), "morphism.components[" + std::to_string(v) + "]");
    f.comps.push_back(make_map(M.ring, M.modules[v], N.modules[v], m));
  }
  if (!is_morphism(M, N, f)) fail_input("morphism: squares do not commute");
  return f;
}

Json morphism_to_json(const RepMorphism& f) {
  Json comps = Json::array();
  for (std::size_t v = 0; v < f.comps.size(); ++v)
    comps.push_back(Json{{"vertex", v}, {"entries", matrix_json(f.comps[v].m)}});
  return Json{{"schema", kSchema}, {"components", comps}};
}

ValuatedTree tree_from_json(const Json& j, int* n) {
  if (j.is_string()) return parse_tree(j.get<std::string>());
  only_fields(j, "tree", {"schema", "n", "parent", "valuation", "encoding"});
  check_schema(j, "tree");
  if (j.contains("n") && n) *n = get_int(j.at("n"), "tree.n");
  const Json& par = need(j, "parent", "tree");
  const Json& val = need(j, "valuation", "tree");
  if (!par.is_array() || !val.is_array() || par.size() != val.size())
    fail_input("tree: parent and valuation must be arrays of equal length");
  ValuatedTree T;
  const int m = static_cast<int>(par.size());
  for (int x = 0; x < m; ++x) {
    const int p = get_int(par[x], "tree.parent");
    if (p < 0 || p > m) fail_input("tree: parent of node " + std::to_string(x + 1) + " out of range");
    T.parent.push_back(p - 1);
    T.value.push_back(get_int(val[x], "tree.valuation"));
  }
  int cap = 9;
  if (j.contains("n")) cap = get_int(j.at("n"), "tree.n");
  check_tree(T, cap);
  return T;
}

Json tree_to_json(const ValuatedTree& T, int n) {
  Json par = Json::array();
  for (int p : T.parent) par.push_back(p + 1);
  return Json{{"schema", kSchema}, {"n", n}, {"parent", par}, {"valuation", T.value}, {"encoding", to_string(T)}};
}

Json valuated_group_to_json(const ValuatedGroup& B) {
  Json levels = Json::array();
  for (const auto& L : B.levels) levels.push_back(columns_json(L));
  return Json{{"schema", kSchema}, {"p", B.ring.p()}, {"n", B.ring.n()}, {"ambient", B.ambient}, {"levels", levels}};
}

Json mono_to_json(const MonoResult& r) {
  Json j{{"mono", r.mono}};
  if (!r.mono) j["witness"] = Json{{"vertex", r.vertex}, {"element", r.witness}};
  return j;
}

Json decomposition_to_json(const Decomposition& D) {
  Json factors = Json::array();
  for (const auto& f : D.factors)
    factors.push_back(Json{{"multiplicity", f.multiplicity}, {"certificate", structure_json(f.structure)}, {"rep", rep_to_json(f.rep)}});
  return Json{{"schema", kSchema},
              {"seed", D.seed},
              {"factors", factors},
              {"sum", rep_to_json(D.sum)},
              {"inclusion", morphism_to_json(D.inclusion)},
              {"inverse", morphism_to_json(D.inverse)}};
}

Json catalog_report_to_json(const CatalogReport& r) {
  Json j{{"schema", kSchema},
         {"n", r.n},
         {"p", r.p},
         {"pass", r.pass()},
         {"entries", r.entries},
         {"mono", r.mono},
         {"indecomposable", r.indecomposable},
         {"classes", r.classes}};
  if (r.trees_enumerated >= 0) {
    j["trees_enumerated"] = r.trees_enumerated;
    j["tree_matches"] = r.tree_matches;
    j["simply_presented"] = r.simply_presented;
    j["not_simply_presented"] = r.not_simply_presented;
  }
  j["failures"] = r.failures;
  return j;
}

}  // namespace monocat
