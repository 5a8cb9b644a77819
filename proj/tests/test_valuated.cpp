#include <algorithm>
#include <map>

#include "doctest.h"
#include "monocat/decomp.hpp"
#include "monocat/mimo.hpp"
#include "monocat/tree.hpp"
#include "oracle.hpp"

using namespace monocat;

namespace {

ValuatedTree random_tree(std::mt19937_64& rng, int n, int max_nodes) {
  const int m = std::uniform_int_distribution<int>(1, max_nodes)(rng);
  ValuatedTree T;
  for (int x = 0; x < m; ++x) {
    std::vector<int> options{-1};
    for (int y = 0; y < x; ++y)
      if (T.value[y] > 0) options.push_back(y);
    const int par = options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)];
    const int hi = par < 0 ? n - 1 : T.value[par] - 1;
    T.parent.push_back(par);
    T.value.push_back(std::uniform_int_distribution<int>(0, hi)(rng));
  }
  return T;
}

ValuatedTree relabel(std::mt19937_64& rng, const ValuatedTree& T) {
  std::vector<int> perm(T.size());
  for (int i = 0; i < T.size(); ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  ValuatedTree U{std::vector<int>(T.size()), std::vector<int>(T.size())};
  for (int x = 0; x < T.size(); ++x) {
    U.parent[perm[x]] = T.parent[x] < 0 ? -1 : perm[T.parent[x]];
    U.value[perm[x]] = T.value[x];
  }
  return U;
}

/// Valuation by enumerating each filtration level.
std::map<Vec, int> brute_valuations(const ValuatedGroup& B) {
  std::map<Vec, int> v;
  for (const auto& x : oracle::elements(B.ring, B.ambient)) v[x] = 0;
  for (int i = 1; i <= B.ring.n(); ++i)
    for (const auto& x : oracle::span(B.ring, B.ambient, B.levels[i])) v[x] = i;
  return v;
}

/// Every retraction of T other than identity and collapse, by exhaustive map search.
bool brute_irretractable(const ValuatedTree& T) {
  const int m = T.size();
  std::vector<int> r(m, -1);
  for (;;) {
    bool ok = true, id = true, collapse = true;
    for (int x = 0; x < m && ok; ++x) {
      const int px = T.parent[x];
      const int rpx = px < 0 ? -1 : r[px];
      const int prx = r[x] < 0 ? -1 : T.parent[r[x]];
      ok = rpx == prx && (r[x] < 0 || T.value[r[x]] >= T.value[x]) && (r[x] < 0 || r[r[x]] == r[x]);
      id = id && r[x] == x;
      collapse = collapse && r[x] == -1;
    }
    if (ok && !id && !collapse) return false;
    int k = 0;
    while (k < m && ++r[k] == m) r[k++] = -1;
    if (k == m) return true;
  }
}

/// Heights inside a tree: longest chain above each node.
std::vector<int> heights(const ValuatedTree& T) {
  std::vector<int> h(T.size(), 0);
  for (int x = 0; x < T.size(); ++x) {
    int d = 0;
    for (int y = x; T.parent[y] >= 0; y = T.parent[y]) h[T.parent[y]] = std::max(h[T.parent[y]], ++d);
  }
  return h;
}

Rep a2(const Ring& R, Partition a, Partition b, std::vector<std::vector<Int>> m) {
  Mat h = m.empty() ? Mat(static_cast<int>(b.size()), static_cast<int>(a.size())) : Mat::from_rows(m, static_cast<int>(a.size()));
  return make_rep(Quiver::a(2), R, {a, b}, {h});
}

}  // namespace

TEST_CASE("tree syntax") {
  CHECK(parse_tree("10").parent == std::vector<int>{-1, 0});
  CHECK(to_string(parse_tree(" 3 (1)(0) ")) == "3(1)(0)");
  CHECK(tree_iso(parse_tree("3(2)(10)"), parse_tree("3(10)(2)")));
  CHECK_FALSE(tree_iso(parse_tree("21"), parse_tree("20")));
  CHECK(parse_tree("43(2)(10)").size() == 5);
  CHECK(parse_tree("(1)(0)").parent == std::vector<int>{-1, -1});
  CHECK(parse_tree("").size() == 0);
  CHECK_THROWS_AS(parse_tree("12"), InputError);
  CHECK_THROWS_AS(parse_tree("3(2"), InputError);
  CHECK_THROWS_AS(parse_tree("3x"), InputError);
  CHECK_THROWS_AS(check_tree(parse_tree("3"), 3), InputError);
  std::mt19937_64 rng(1);
  for (int t = 0; t < 200; ++t) {
    const auto T = random_tree(rng, 5, 7);
    CHECK(tree_iso(T, relabel(rng, T)));
    CHECK(tree_iso(parse_tree(to_string(T)), T));
  }
}

TEST_CASE("canonical sums") {
  const auto ten = parse_tree("10");
  CHECK(canonical_sum(ten, 3, {0, 3}) == std::vector<Int>{1, 0});
  CHECK(canonical_sum(ten, 3, {0, 0}) == std::vector<Int>{0, 0});
  // chain 210: nodes 0 (v=2), 1 (v=1), 2 (v=0); (p+1)[x] on the leaf
  CHECK(canonical_sum(parse_tree("210"), 2, {0, 0, 3}) == std::vector<Int>{0, 1, 1});
  // random rewrite order reaches the same form
  std::mt19937_64 rng(2);
  for (int t = 0; t < 300; ++t) {
    const int p = t % 2 ? 3 : 2;
    const auto T = random_tree(rng, 4, 6);
    std::vector<Int> c(T.size());
    for (auto& x : c) x = std::uniform_int_distribution<Int>(-20, 20)(rng);
    const auto expected = canonical_sum(T, p, c);
    for (;;) {
      std::vector<int> bad;
      for (int x = 0; x < T.size(); ++x)
        if (c[x] < 0 || c[x] >= p) bad.push_back(x);
      if (bad.empty()) break;
      const int x = bad[std::uniform_int_distribution<std::size_t>(0, bad.size() - 1)(rng)];
      const Int s = c[x] < 0 ? 1 : -1;  // add or remove one copy of p[x] - [p(x)]
      c[x] += s * p;
      if (T.parent[x] >= 0) c[T.parent[x]] -= s;
    }
    CHECK(c == expected);
  }
}

TEST_CASE("S(T) matches canonical-sum valuations") {
  const Ring R3(2, 3);
  CHECK(s_of_t(parse_tree("10"), R3).group.ambient == Partition{2});
  CHECK(canonical(s_of_t(parse_tree("3(1)(0)"), Ring(2, 4)).group.ambient) == Partition{2, 1});
  std::mt19937_64 rng(3);
  for (int t = 0; t < 120; ++t) {
    const int p = t % 3 == 0 ? 3 : 2;
    const int n = 3 + t % 3;
    const Ring R(p, n);
    const auto T = random_tree(rng, n, p == 2 ? 6 : 4);
    const auto G = s_of_t(T, R);
    CHECK(total_length(G.group.ambient) == T.size());
    const auto vals = brute_valuations(G.group);
    std::set<Vec> seen;
    for (const auto& b : oracle::elements(Ring(p, 1), Partition(T.size(), 1))) {
      Vec x(G.group.ambient.size(), 0);
      int expected = n;
      for (int k = 0; k < T.size(); ++k) {
        if (b[k] == 0) continue;
        expected = std::min(expected, T.value[k]);
        for (std::size_t l = 0; l < x.size(); ++l) x[l] += b[k] * G.node_coords(static_cast<int>(l), k);
      }
      x = reduce_elem(R, G.group.ambient, x);
      seen.insert(x);
      CHECK(vals.at(x) == expected);
      CHECK(valuation(G.group, x) == expected);
    }
    CHECK(seen.size() == vals.size());
  }
}

TEST_CASE("irretractability against exhaustive retraction search") {
  CHECK(is_irretractable(parse_tree("21")).irretractable);
  CHECK(is_irretractable(parse_tree("3(2)(10)")).irretractable);
  const auto w = is_irretractable(parse_tree("3(0)(0)"));
  CHECK_FALSE(w.irretractable);
  REQUIRE(w.witness.has_value());
  CHECK(((*w.witness)[1] == 2 || (*w.witness)[2] == 1));
  std::mt19937_64 rng(4);
  for (int t = 0; t < 400; ++t) {
    const auto T = random_tree(rng, 5, 6);
    CHECK(is_irretractable(T).irretractable == brute_irretractable(T));
  }
}

TEST_CASE("hull filtration") {
  const auto H = tree_hull(parse_tree("4(1)(2)"), 5);
  CHECK(tree_iso(H.hull, parse_tree("4(3210)(210)(10)")));
  CHECK(tree_hull(parse_tree("210"), 3).hull == parse_tree("210"));
  CHECK(tree_hull(parse_tree("2"), 3).hull.size() == 3);
  std::mt19937_64 rng(5);
  for (int t = 0; t < 200; ++t) {
    const int n = 3 + t % 3;
    const auto T = random_tree(rng, n, 6);
    const auto R = tree_hull(T, n);
    const auto h = heights(R.hull);
    for (int x = 0; x < R.hull.size(); ++x) CHECK(h[x] == R.hull.value[x]);
    for (int x = 0; x < T.size(); ++x) {
      CHECK(R.hull.value[R.gamma[x]] == T.value[x]);
      CHECK(R.hull.parent[R.gamma[x]] == (T.parent[x] < 0 ? -1 : R.gamma[T.parent[x]]));
    }
  }
}

TEST_CASE("phi examples") {
  for (int p : {2, 3}) {
    const Ring R(p, 3);
    const auto B = phi(a2(R, {2}, {3}, {{p}}));
    CHECK(valuation(B, {1}) == 1);
    CHECK(valuation(B, {p}) == 2);
    CHECK(valuation(B, {0}) == 3);
    CHECK(phi(a2(R, {}, {2}, {})).ambient.empty());
    const auto B0 = phi(a2(R, {1}, {1}, {{1}}));
    CHECK(valuation(B0, {1}) == 0);
    CHECK_THROWS_AS(phi(a2(R, {1}, {}, {})), InputError);
    CHECK_THROWS_AS(phi(make_rep(Quiver::a(3), R, {{}, {}, {}}, {Mat(), Mat()})), InputError);
  }
}

TEST_CASE("phi agrees with height oracle, additivity and axioms") {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 100; ++t) {
    const Ring R(2, 1 + t % 4);
    Rep M = random_rep(rng, Quiver::a(2), R, 2);
    if (!is_mono(M).mono) continue;
    const auto B = phi(M);
    // brute force: v(x) = height of h(x) in the target
    for (const auto& x : oracle::elements(R, M.modules[0])) {
      const Vec y = apply(R, M.maps[0], x);
      int expected = 0;
      for (int i = 1; i <= R.n(); ++i)
        if (oracle::span(R, M.modules[1], scaled_identity(R, M.modules[1], i)).count(y)) expected = i;
      CHECK(valuation(B, x) == expected);
    }
    // axioms on all pairs
    const auto els = oracle::elements(R, B.ambient);
    for (std::size_t i = 0; i < els.size(); i += 3)
      for (std::size_t j = 0; j < els.size(); j += 5) {
        const Vec s = oracle::add(R, B.ambient, els[i], els[j]);
        CHECK(valuation(B, s) >= std::min(valuation(B, els[i]), valuation(B, els[j])));
      }
    for (const auto& x : els) {
      Vec px = x;
      for (auto& c : px) c *= R.p();
      px = reduce_elem(R, B.ambient, px);
      if (valuation(B, x) < R.n()) CHECK(valuation(B, px) > valuation(B, x));
    }
    // additivity
    const Rep N = mimo(random_rep(rng, Quiver::a(2), R, 1)).rep;
    const auto S = phi(direct_sum(M, N));
    const auto C = phi(N);
    ValuatedGroup D{R, concat(B.ambient, C.ambient), {}};
    for (int i = 0; i <= R.n(); ++i) {
      const Mat& x = B.levels[i];
      const Mat& y = C.levels[i];
      D.levels.push_back(hcat(vcat(x, Mat(y.rows, x.cols)), vcat(Mat(x.rows, y.cols), y)));
    }
    CHECK(same_filtration(S, D));
  }
}

TEST_CASE("exact structure predicates") {
  const Ring R(2, 3);
  // Z/p with v = 1 against Z/p with v = 0
  const auto high = make_valuated_group(R, {1}, {Mat::from_rows({{1}}, 1), Mat::from_rows({{1}}, 1), Mat(1, 0), Mat(1, 0)});
  const auto low = make_valuated_group(R, {1}, {Mat::from_rows({{1}}, 1), Mat(1, 0), Mat(1, 0), Mat(1, 0)});
  const ZpnMatrix id = identity_map({1});
  CHECK(is_inflation(high, high, id));
  CHECK(is_deflation(high, high, id));
  CHECK_FALSE(is_inflation(low, high, id));
  CHECK(is_deflation(low, low, id));
  CHECK_THROWS_AS(is_inflation(high, low, id), InputError);
  CHECK_FALSE(is_deflation(high, high, zero_map({1}, {1})));
  // S(10) onto its quotient by the socle
  const auto S10 = s_of_t(parse_tree("10"), R).group;
  const auto quot = make_valuated_group(R, {1}, {Mat::from_rows({{1}}, 1), Mat(1, 0), Mat(1, 0), Mat(1, 0)});
  const ZpnMatrix q = make_map(R, S10.ambient, {1}, Mat::from_rows({{1}}, 1));
  CHECK(is_deflation(S10, quot, q));
  CHECK_FALSE(is_inflation(S10, quot, q));
  CHECK(is_injective_vg(S10));
  CHECK_FALSE(is_injective_vg(s_of_t(parse_tree("1"), R).group));
  CHECK(is_injective_vg(make_valuated_group(R, {3}, {Mat::from_rows({{1}}, 1), Mat::from_rows({{2}}, 1),
                                                      Mat::from_rows({{4}}, 1), Mat(1, 0)})));

  // random morphisms between tree groups against level-wise brute force
  std::mt19937_64 rng(8);
  int infl = 0, defl = 0;
  for (int t = 0; t < 300; ++t) {
    const auto A = s_of_t(random_tree(rng, 3, 3), R).group;
    const auto B = s_of_t(random_tree(rng, 3, 3), R).group;
    const auto f = oracle::random_map(rng, R, A.ambient, B.ambient);
    const auto va = brute_valuations(A);
    const auto vb = brute_valuations(B);
    bool morphism = true, inj_pres = true;
    std::set<Vec> kernel_elems;
    for (const auto& [x, v] : va) {
      const int w = vb.at(apply(R, f, x));
      morphism = morphism && w >= v;
      inj_pres = inj_pres && w == v;
    }
    if (!morphism) {
      CHECK_THROWS_AS(is_inflation(A, B, f), InputError);
      continue;
    }
    bool onto = true;
    for (int i = 0; i < R.n(); ++i) {
      std::set<Vec> img;
      for (const auto& [x, v] : va)
        if (v >= i) img.insert(apply(R, f, x));
      for (const auto& [y, w] : vb)
        if (w >= i && !img.count(y)) onto = false;
    }
    CHECK(is_inflation(A, B, f) == inj_pres);
    CHECK(is_deflation(A, B, f) == onto);
    infl += inj_pres;
    defl += onto;
  }
  CHECK(infl > 5);
  CHECK(defl > 5);
}

TEST_CASE("M_T realizes S(T) and detects irretractability") {
  for (int p : {2, 3}) {
    const Ring R(p, 3);
    CHECK(is_isomorphic(m_of_t(parse_tree("21"), R), a2(R, {2}, {3}, {{p}})));
    CHECK(is_isomorphic(m_of_t(parse_tree("20"), R), a2(R, {2}, {3, 1}, {{p}, {1}})));
    CHECK(is_isomorphic(m_of_t(parse_tree("0"), R), a2(R, {1}, {1}, {{1}})));
  }
  std::mt19937_64 rng(9);
  for (int t = 0; t < 60; ++t) {
    const int n = 3 + t % 3;
    const Ring R(2, n);
    const auto T = random_tree(rng, n, 5);
    const Rep M = m_of_t(T, R);
    const auto S = s_of_t(T, R);
    const auto H = tree_hull(T, n);
    CHECK(same_filtration(phi(M), S.group));
    CHECK(is_injective_vg(s_of_t(H.hull, R).group));
    CHECK(is_inflation(S.group, s_of_t(H.hull, R).group, M.maps[0]));
    CHECK(strip_Y(M).stripped.empty());
    CHECK(is_indecomposable(M).indecomposable == is_irretractable(T).irretractable);
    CHECK(vg_iso(M, M));
    const Rep Y = a2(R, {}, {n - 1}, {});
    CHECK(vg_iso(direct_sum(M, Y), M));
  }
}

TEST_CASE("irretractable trees give pairwise distinct indecomposables") {
  for (int n : {3, 4, 5}) {
    const Ring R(2, n);
    const auto trees = enumerate_irretractable_trees(n, 7);
    CHECK(trees.size() == (n == 3 ? 7u : n == 4 ? 16u : 43u));
    std::vector<Rep> reps;
    for (const auto& T : trees) {
      reps.push_back(m_of_t(T, R));
      CHECK(is_indecomposable(reps.back()).indecomposable);
      CHECK(strip_Y(reps.back()).stripped.empty());
    }
    for (std::size_t a = 0; a < reps.size(); ++a)
      for (std::size_t b = a + 1; b < reps.size(); ++b) CHECK_FALSE(indecomposables_isomorphic(reps[a], reps[b]));
  }
  const auto t3 = enumerate_irretractable_trees(3, 7);
  std::vector<std::string> names;
  for (const auto& T : t3) names.push_back(to_string(T));
  CHECK(names == std::vector<std::string>{"0", "1", "2", "10", "20", "21", "210"});
}
