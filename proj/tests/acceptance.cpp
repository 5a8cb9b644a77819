// Acceptance run: one PASS/FAIL line per criterion.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>

#include "monocat/catalog.hpp"
#include "monocat/decomp.hpp"
#include "monocat/mimo.hpp"
#include "monocat/tree.hpp"
#include "monocat/valuated.hpp"

using namespace monocat;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

void report(int k, const std::string& title, const std::function<Outcome()>& body, bool* all) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("%s criterion %d: %s — %s (%.1fs)\n", o.ok ? "PASS" : "FAIL", k, title.c_str(), o.detail.c_str(), s);
  std::fflush(stdout);
  *all = *all && o.ok;
}

const CatalogEntry* by_tree(const std::vector<CatalogEntry>& c, const ValuatedTree& T) {
  for (const auto& e : c)
    if (e.tree && tree_iso(parse_tree(*e.tree), T)) return &e;
  return nullptr;
}

// ---------------------------------------------------------------- brute force over A2

// Maps M(a) -> M(b) in generator form, entries flattened row-major; streamed by an odometer.
struct MapSpace {
  const Ring* R;
  Partition a, b;
  std::vector<Int> step, top;  // entry (i,j) runs over multiples of step below top
  MapSpace(const Ring& ring, const Partition& src, const Partition& tgt) : R(&ring), a(src), b(tgt) {
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = 0; j < a.size(); ++j) {
        step.push_back(R->pow(std::max(0, b[i] - a[j])));
        top.push_back(R->pow(b[i]));
      }
  }
  bool next(std::vector<Int>& x) const {
    for (std::size_t k = 0; k < x.size(); ++k) {
      x[k] += step[k];
      if (x[k] < top[k]) return true;
      x[k] = 0;
    }
    return false;
  }
};

// (g f)(i,j) = Σ_k g(i,k) f(k,j) mod p^{c_i}
std::vector<Int> mul(const Ring& R, const std::vector<Int>& g, const std::vector<Int>& f, const Partition& c, int mid, int cols) {
  std::vector<Int> out(c.size() * cols, 0);
  for (std::size_t i = 0; i < c.size(); ++i)
    for (int j = 0; j < cols; ++j) {
      Int s = 0;
      for (int k = 0; k < mid; ++k) s += g[i * mid + k] * f[k * cols + j];
      out[i * cols + j] = R.reduce(s, c[i]);
    }
  return out;
}

std::vector<Int> flat(const Mat& m) { return m.a; }

// Injective on all |M(a)| elements (orders are equal in every use, so bijective).
bool injective(const Ring& R, const Partition& a, const Partition& b, const std::vector<Int>& f) {
  std::vector<Int> x(a.size(), 0);
  std::vector<Int> topx;
  for (int e : a) topx.push_back(R.pow(e));
  for (;;) {
    std::size_t k = 0;
    for (; k < x.size(); ++k) {
      if (++x[k] < topx[k]) break;
      x[k] = 0;
    }
    if (k == x.size()) return true;  // wrapped: every nonzero element checked
    bool zero = true;
    for (std::size_t i = 0; i < b.size() && zero; ++i) {
      Int s = 0;
      for (std::size_t j = 0; j < a.size(); ++j) s += f[i * a.size() + j] * x[j];
      zero = R.reduce(s, b[i]) == 0;
    }
    if (zero) return false;
  }
}

// Visit every morphism (φ0, φ1): M -> N of A2 representations; stop when visit returns true.
bool for_each_morphism(const Rep& M, const Rep& N, const std::function<bool(const std::vector<Int>&, const std::vector<Int>&)>& visit) {
  const Ring& R = M.ring;
  const Partition &a = M.modules[0], &b = M.modules[1], &c = N.modules[0], &d = N.modules[1];
  const auto h = flat(M.maps[0].m), k = flat(N.maps[0].m);
  MapSpace S0(R, a, c), S1(R, b, d);
  std::vector<Int> f0(a.size() * c.size(), 0);
  do {
    const auto kf0 = mul(R, k, f0, d, static_cast<int>(c.size()), static_cast<int>(a.size()));
    std::vector<Int> f1(b.size() * d.size(), 0);
    do {
      if (mul(R, f1, h, d, static_cast<int>(b.size()), static_cast<int>(a.size())) == kf0 && visit(f0, f1)) return true;
    } while (S1.next(f1));
  } while (S0.next(f0));
  return false;
}

std::vector<Int> identity_flat(const Partition& a) {
  std::vector<Int> id(a.size() * a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) id[i * a.size() + i] = 1;
  return id;
}

bool brute_indecomposable(const Rep& M) {
  if (is_zero(M)) return false;
  const Ring& R = M.ring;
  const Partition &a = M.modules[0], &b = M.modules[1];
  const auto id0 = identity_flat(a), id1 = identity_flat(b);
  const int na = static_cast<int>(a.size()), nb = static_cast<int>(b.size());
  const bool split = for_each_morphism(M, M, [&](const std::vector<Int>& e0, const std::vector<Int>& e1) {
    if (mul(R, e0, e0, a, na, na) != e0 || mul(R, e1, e1, b, nb, nb) != e1) return false;
    const bool zero = std::all_of(e0.begin(), e0.end(), [](Int x) { return x == 0; }) &&
                      std::all_of(e1.begin(), e1.end(), [](Int x) { return x == 0; });
    return !zero && !(e0 == id0 && e1 == id1);
  });
  return !split;
}

bool brute_iso(const Rep& M, const Rep& N) {
  for (int v = 0; v < 2; ++v)
    if (total_length(M.modules[v]) != total_length(N.modules[v])) return false;
  const Ring& R = M.ring;
  return for_each_morphism(M, N, [&](const std::vector<Int>& f0, const std::vector<Int>& f1) {
    return injective(R, M.modules[0], N.modules[0], f0) && injective(R, M.modules[1], N.modules[1], f1);
  });
}

void partitions(int total, int max_part, Partition cur, std::vector<Partition>& out) {
  out.push_back(cur);
  for (int x = std::min(max_part, cur.empty() ? max_part : cur.back()); x >= 1; --x)
    if (total_length(cur) + x <= total) {
      Partition nxt = cur;
      nxt.push_back(x);
      partitions(total, max_part, nxt, out);
    }
}

// ---------------------------------------------------------------- probes for the Mimo contract

std::vector<Quiver> contract_quivers() {
  return {Quiver::a(2), Quiver::a(3), Quiver(3, {{0, 1}, {2, 1}}), Quiver(3, {{1, 0}, {1, 2}}), d4_catalog_quiver()};
}

Rep thin_module(const Quiver& q, const Ring& R, const std::vector<int>& support) {
  std::vector<Partition> mods(q.vertices());
  for (int v : support) mods[v] = {1};
  std::vector<Mat> maps;
  for (const auto& a : q.arrows()) {
    Mat m(static_cast<int>(mods[a.t].size()), static_cast<int>(mods[a.s].size()));
    if (m.rows && m.cols) m(0, 0) = 1;
    maps.push_back(m);
  }
  return make_rep(q, R, mods, maps);
}

// Indecomposables of mono(q, Z/2^n) where a complete list is available; otherwise a
// representative family (see README).
std::vector<Rep> probes(const Quiver& q, int n, bool* complete) {
  const Ring R(2, n);
  std::vector<Rep> out;
  *complete = true;
  for (int i = 0; i < q.vertices(); ++i) out.push_back(f_shriek(q, R, {n}, i));
  if (n == 1) {
    out.clear();
    for (int i = 0; i < q.vertices(); ++i) out.push_back(f_shriek(q, R, {1}, i));
    return out;
  }
  if (is_a2(q)) {
    out.clear();
    if (n >= 3) {
      for (const auto& e : build_catalog(n, 2)) out.push_back(e.rep);
    } else {
      for (const auto& T : enumerate_irretractable_trees(n, 7)) out.push_back(m_of_t(T, R));
      for (int k = 1; k <= n; ++k) out.push_back(make_rep(q, R, {{}, {k}}, {Mat(1, 0)}));
    }
    return out;
  }
  if (q == d4_catalog_quiver() && n == 2) {
    out.clear();
    for (const auto& e : build_d4_catalog(2)) out.push_back(e.rep);
    return out;
  }
  if (q.vertices() == 3 && n == 2) {
    // A3: Mimo of the interval modules of kQ, plus the injectives
    for (int i = 0; i < 3; ++i)
      for (int j = i; j < 3; ++j) {
        std::vector<int> s;
        for (int v = i; v <= j; ++v) s.push_back(v);
        out.push_back(mimo(thin_module(q, R, s)).rep);
      }
    return out;
  }
  *complete = false;
  std::mt19937_64 rng(977);
  for (int k = 1; k < n; ++k)
    for (int i = 0; i < q.vertices(); ++i) out.push_back(f_shriek(q, R, {k}, i));
  for (int t = 0; t < 12; ++t) out.push_back(mimo(random_rep(rng, q, R, 2)).rep);
  return out;
}

}  // namespace

int main() {
  bool all = true;

  report(1, "catalog counts", [] {
    Outcome o;
    const int want[] = {10, 20, 50};
    std::string d;
    for (int p : {2, 3})
      for (int n = 3; n <= (p == 2 ? 5 : 4); ++n) {
        const auto r = verify_catalog(n, p);
        if (!r.pass()) o.fail("n=" + std::to_string(n) + " p=" + std::to_string(p) + ": " + r.failures.front());
        if (r.classes != want[n - 3] || r.indecomposable != want[n - 3])
          o.fail("n=" + std::to_string(n) + " p=" + std::to_string(p) + ": " + std::to_string(r.classes) + " classes");
        d += (d.empty() ? "" : ", ") + std::to_string(r.classes) + " (n=" + std::to_string(n) + ", p=" + std::to_string(p) + ")";
      }
    if (o.ok) o.detail = d;
    return o;
  }, &all);

  report(2, "irretractable tree enumeration", [] {
    Outcome o;
    const std::size_t want[] = {7, 16, 43};
    std::string d;
    for (int n = 3; n <= 5; ++n) {
      const auto trees = enumerate_irretractable_trees(n, 7);
      int largest = 0;
      for (const auto& T : trees) largest = std::max(largest, T.size());
      if (trees.size() != want[n - 3]) o.fail("n=" + std::to_string(n) + ": " + std::to_string(trees.size()) + " trees");
      if (largest >= 7) o.fail("n=" + std::to_string(n) + ": irretractable tree with 7 nodes");
      if (n == 3) {
        std::vector<std::string> names;
        for (const auto& T : trees) names.push_back(to_string(T));
        if (names != std::vector<std::string>{"0", "1", "2", "10", "20", "21", "210"}) o.fail("n=3 list differs");
      }
      d += (d.empty() ? "" : "/") + std::to_string(trees.size());
    }
    if (o.ok) o.detail = d + " trees, largest has 6 nodes";
    return o;
  }, &all);

  report(3, "tree-to-module agreement", [] {
    Outcome o;
    int checked = 0;
    for (int n = 3; n <= 5; ++n) {
      const Ring R(2, n);
      const auto cat = build_catalog(n, 2);
      for (const auto& T : enumerate_irretractable_trees(n, 7)) {
        const std::string t = to_string(T);
        const Rep M = m_of_t(T, R);
        if (!is_mono(M).mono) o.fail(t + " not mono");
        const auto s = strip_Y(M);
        if (!s.stripped.empty() || total_length(s.residual) != total_length(M)) o.fail(t + " has a summand in Y");
        if (!is_indecomposable(M).indecomposable) o.fail(t + " decomposable");
        const CatalogEntry* e = by_tree(cat, T);
        if (!e)
          o.fail(t + " has no catalog entry");
        else if (!is_isomorphic(M, e->rep))
          o.fail(t + " differs from " + e->name);
        ++checked;
      }
    }
    if (o.ok) o.detail = std::to_string(checked) + " (tree, n) pairs";
    return o;
  }, &all);

  report(4, "hull theorem", [] {
    Outcome o;
    int checked = 0;
    for (int n = 3; n <= 5; ++n) {
      const Ring R(2, n);
      for (const auto& T : enumerate_irretractable_trees(n, 7)) {
        const auto H = tree_hull(T, n);
        const TreeGroup S = s_of_t(T, R), J = s_of_t(H.hull, R);
        if (!is_injective_vg(J.group)) o.fail(to_string(T) + ": hull group not injective");
        if (!is_inflation(S.group, J.group, m_of_t(T, R).maps[0])) o.fail(to_string(T) + ": S(γ) not an inflation");
        ++checked;
      }
    }
    if (o.ok) o.detail = std::to_string(checked) + " hulls";
    return o;
  }, &all);

  report(5, "Mimo contract", [] {
    Outcome o;
    std::mt19937_64 rng(20240501);
    const auto qs = contract_quivers();
    std::map<std::pair<int, int>, std::vector<Rep>> probe_sets;
    std::set<std::string> partial;
    int mono_inputs = 0;
    for (int t = 0; t < 500; ++t) {
      const int qi = t % static_cast<int>(qs.size());
      const int n = 1 + (t / static_cast<int>(qs.size())) % 3;
      const Quiver& q = qs[qi];
      auto key = std::make_pair(qi, n);
      if (!probe_sets.count(key)) {
        bool complete = true;
        probe_sets[key] = probes(q, n, &complete);
        if (!complete) partial.insert("q" + std::to_string(qi) + "/n" + std::to_string(n));
      }
      const Rep M = random_rep(rng, q, Ring(2, n), 2);
      const MimoResult X = mimo(M);
      const std::string tag = "sample " + std::to_string(t);
      if (!is_mono(X.rep).mono) o.fail(tag + ": output not mono");
      if (is_mono(M).mono) {
        ++mono_inputs;
        if (!(X.rep == M) || !(X.projection == identity_morphism(M))) o.fail(tag + ": not the identity on a mono input");
      }
      if (!is_right_approximation(X.rep, M, X.projection, probe_sets[key])) o.fail(tag + ": not a right approximation");
    }
    if (o.ok) {
      o.detail = "500 samples (" + std::to_string(mono_inputs) + " mono inputs); probe sets incomplete for";
      for (const auto& s : partial) o.detail += " " + s;
    }
    return o;
  }, &all);

  report(6, "Mimo inverse round trip", [] {
    Outcome o;
    int checked = 0;
    auto run = [&](const std::vector<CatalogEntry>& cat, const std::string& label) {
      std::vector<std::pair<std::string, Rep>> back;
      for (const auto& e : cat) {
        if (is_injective_object(e.rep)) continue;
        const Rep X = mimo_inverse_roundtrip(e.rep);
        if (!is_isomorphic(X, e.rep)) o.fail(label + " " + e.name + " not recovered");
        back.emplace_back(e.name, X);
        ++checked;
      }
      for (std::size_t i = 0; i < back.size(); ++i)
        for (std::size_t j = i + 1; j < back.size(); ++j)
          if (is_isomorphic(back[i].second, back[j].second)) o.fail(label + " " + back[i].first + " ≅ " + back[j].first + " after round trip");
    };
    for (int n = 3; n <= 5; ++n) run(build_catalog(n, 2), "n=" + std::to_string(n));
    run(build_d4_catalog(2), "D4");
    if (o.ok) o.detail = std::to_string(checked) + " non-injective entries";
    return o;
  }, &all);

  report(7, "non-simply-presented pair", [] {
    Outcome o;
    const Ring R(2, 5);
    const auto cat = build_catalog(5, 2);
    for (const auto& h : hung_data(2)) {
      const CatalogEntry* e = nullptr;
      for (const auto& c : cat)
        if (c.name == h.name) e = &c;
      if (!e) {
        o.fail(h.name + " missing");
        continue;
      }
      const ValuatedGroup B = phi(e->rep);
      const Partition& a = e->rep.modules[0];
      for (const auto& w : h.witnesses) {
        Vec z(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) z[i] = R.reduce(w.cx * h.x[i] + w.cy * h.y[i], a[i]);
        if (valuation(B, z) != w.value) o.fail(h.name + ": v(" + w.label + ") = " + std::to_string(valuation(B, z)));
      }
    }
    const auto trees = enumerate_irretractable_trees(5, 7);
    int compared = 0;
    for (const std::string name : {"M_F", "M_T"})
      for (const auto& c : cat)
        if (c.name == name)
          for (const auto& T : trees) {
            if (vg_iso(c.rep, m_of_t(T, R))) o.fail(name + " ≅ S(" + to_string(T) + ")");
            ++compared;
          }
    if (o.ok) o.detail = "valuations of M_F and M_T match; " + std::to_string(compared) + " tree comparisons negative";
    return o;
  }, &all);

  report(8, "representation-type table", [] {
    Outcome o;
    const std::set<std::pair<int, int>> table{{3, 2}, {4, 2}, {5, 2}, {3, 3}, {3, 4}};
    int checked = 0;
    std::vector<std::string> graphs{"a2", "a3", "a4", "a5", "a6", "d4", "d5", "d6", "e6", "e7", "e8"};
    for (const auto& g : graphs) {
      const Quiver q = Quiver::from_shorthand(g);
      for (int n = 1; n <= 6; ++n) {
        // n = 1: Λ is a field and mono(Q, Λ) is the projective kQ-modules
        const bool want = n <= 2 || (g[0] == 'a' && table.count({n, q.vertices()}) > 0);
        const auto v = rep_type(q, n);
        if (v.finite != want) o.fail(g + " n=" + std::to_string(n));
        ++checked;
      }
    }
    const auto a4 = rep_type(Quiver::a(4), 4);
    if (a4.finite || a4.note != "wild") o.fail("(A4, 4) is not infinite/wild");
    if (o.ok) o.detail = std::to_string(checked) + " (graph, n) pairs; (A4, 4) infinite/wild";
    return o;
  }, &all);

  report(9, "brute-force oracle equivalence", [] {
    Outcome o;
    std::mt19937_64 rng(99);
    int reps = 0, pairs = 0, indec = 0, isos = 0;
    const Quiver q = Quiver::a(2);
    for (int n = 1; n <= 3; ++n) {
      const Ring R(2, n);
      std::vector<Partition> parts;
      partitions(5, n, {}, parts);
      for (const auto& a : parts)
        for (const auto& b : parts) {
          if (total_length(a) + total_length(b) > 5 || (a.empty() && b.empty())) continue;
          // all structure maps when there are few, else a seeded sample
          std::vector<Rep> shape;
          MapSpace S(R, a, b);
          double count = 1;
          for (std::size_t k = 0; k < S.step.size(); ++k) count *= static_cast<double>(S.top[k] / S.step[k]);
          if (count <= 16) {
            std::vector<Int> x(S.step.size(), 0);
            do {
              Mat m(static_cast<int>(b.size()), static_cast<int>(a.size()));
              m.a = x;
              shape.push_back(make_rep(q, R, {a, b}, {m}));
            } while (S.next(x));
          } else {
            for (int t = 0; t < 8; ++t) {
              Mat m(static_cast<int>(b.size()), static_cast<int>(a.size()));
              for (std::size_t k = 0; k < m.a.size(); ++k)
                m.a[k] = S.step[k] * std::uniform_int_distribution<Int>(0, S.top[k] / S.step[k] - 1)(rng);
              shape.push_back(make_rep(q, R, {a, b}, {m}));
            }
          }
          for (const auto& M : shape) {
            const bool bi = brute_indecomposable(M);
            const std::string tag = "n=" + std::to_string(n) + " " + to_string(a) + "->" + to_string(b);
            if (is_indecomposable(M).indecomposable != bi) o.fail(tag + ": indecomposability differs");
            const Decomposition D = decompose(M, reps);
            int count_factors = 0;
            for (const auto& f : D.factors) {
              count_factors += f.multiplicity;
              if (!brute_indecomposable(f.rep)) o.fail(tag + ": factor not indecomposable");
            }
            if ((count_factors == 1) != bi) o.fail(tag + ": factor count " + std::to_string(count_factors));
            if (!brute_iso(D.sum, M)) o.fail(tag + ": sum of factors not isomorphic");
            indec += bi;
            ++reps;
          }
          for (std::size_t i = 0; i + 1 < shape.size(); ++i) {
            const std::size_t j = (i + 1 + rng() % (shape.size() - i - 1));
            const bool want = brute_iso(shape[i], shape[j]);
            if (is_isomorphic(shape[i], shape[j], pairs) != want) o.fail("is_isomorphic differs on a pair");
            isos += want;
            ++pairs;
          }
        }
    }
    if (o.ok)
      o.detail = std::to_string(reps) + " reps (" + std::to_string(indec) + " indecomposable), " + std::to_string(pairs) + " pairs (" +
                 std::to_string(isos) + " isomorphic)";
    return o;
  }, &all);

  std::printf("%s\n", all ? "ALL PASS" : "SOME CRITERIA FAILED");
  return all ? 0 : 1;
}
