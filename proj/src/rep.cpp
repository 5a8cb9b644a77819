#include "monocat/rep.hpp"

#include <algorithm>

namespace monocat {

Rep make_rep(const Quiver& q, const Ring& R, std::vector<Partition> modules, const std::vector<Mat>& maps) {
  if (static_cast<int>(modules.size()) != q.vertices()) fail_input("rep: one module per vertex required");
  if (static_cast<int>(maps.size()) != q.arrow_count()) fail_input("rep: one map per arrow required");
  Rep M{q, R, std::move(modules), {}};
  for (const auto& a : M.modules) check_partition(R, a);
  for (int k = 0; k < q.arrow_count(); ++k) {
    const auto& ar = q.arrows()[k];
    M.maps.push_back(make_map(R, M.modules[ar.s], M.modules[ar.t], maps[k]));
  }
  return M;
}

void check_rep(const Rep& M) {
  if (static_cast<int>(M.modules.size()) != M.quiver.vertices() ||
      static_cast<int>(M.maps.size()) != M.quiver.arrow_count())
    fail_input("rep: shape mismatch with quiver");
  for (int k = 0; k < M.quiver.arrow_count(); ++k) {
    const auto& ar = M.quiver.arrows()[k];
    if (M.maps[k].src != M.modules[ar.s] || M.maps[k].tgt != M.modules[ar.t])
      fail_input("rep: arrow " + std::to_string(k) + " does not match vertex modules");
    check_map(M.ring, M.maps[k]);
  }
}

Rep zero_rep(const Quiver& q, const Ring& R) {
  Rep M{q, R, std::vector<Partition>(q.vertices()), {}};
  for (int k = 0; k < q.arrow_count(); ++k) M.maps.push_back(zero_map({}, {}));
  return M;
}

Rep direct_sum(const Rep& M, const Rep& N) {
  if (!(M.quiver == N.quiver) || !(M.ring == N.ring)) fail_input("direct sum: quiver or ring mismatch");
  Rep S{M.quiver, M.ring, {}, {}};
  for (int v = 0; v < M.quiver.vertices(); ++v) S.modules.push_back(concat(M.modules[v], N.modules[v]));
  for (int k = 0; k < M.quiver.arrow_count(); ++k) S.maps.push_back(block_diag(M.maps[k], N.maps[k]));
  return S;
}

int total_length(const Rep& M) {
  int s = 0;
  for (const auto& a : M.modules) s += total_length(a);
  return s;
}

bool is_zero(const Rep& M) {
  return std::all_of(M.modules.begin(), M.modules.end(), [](const Partition& a) { return a.empty(); });
}

RepMorphism identity_morphism(const Rep& M) {
  RepMorphism f;
  for (const auto& a : M.modules) f.comps.push_back(identity_map(a));
  return f;
}

RepMorphism zero_morphism(const Rep& M, const Rep& N) {
  RepMorphism f;
  for (int v = 0; v < M.quiver.vertices(); ++v) f.comps.push_back(zero_map(M.modules[v], N.modules[v]));
  return f;
}

RepMorphism compose(const Ring& R, const RepMorphism& g, const RepMorphism& f) {
  if (g.comps.size() != f.comps.size()) fail_input("compose: vertex count mismatch");
  RepMorphism h;
  for (std::size_t v = 0; v < f.comps.size(); ++v) h.comps.push_back(compose(R, g.comps[v], f.comps[v]));
  return h;
}

RepMorphism add(const Ring& R, const RepMorphism& f, const RepMorphism& g) {
  RepMorphism h;
  for (std::size_t v = 0; v < f.comps.size(); ++v) h.comps.push_back(add(R, f.comps[v], g.comps[v]));
  return h;
}

RepMorphism sub(const Ring& R, const RepMorphism& f, const RepMorphism& g) {
  RepMorphism h;
  for (std::size_t v = 0; v < f.comps.size(); ++v) h.comps.push_back(sub(R, f.comps[v], g.comps[v]));
  return h;
}

RepMorphism scale(const Ring& R, Int c, const RepMorphism& f) {
  RepMorphism h;
  for (const auto& x : f.comps) h.comps.push_back(scale(R, c, x));
  return h;
}

bool is_zero(const RepMorphism& f) {
  return std::all_of(f.comps.begin(), f.comps.end(), [](const ZpnMatrix& x) { return x.m.is_zero(); });
}

bool is_morphism(const Rep& M, const Rep& N, const RepMorphism& f) {
  if (static_cast<int>(f.comps.size()) != M.quiver.vertices()) return false;
  for (int v = 0; v < M.quiver.vertices(); ++v) {
    if (f.comps[v].src != M.modules[v] || f.comps[v].tgt != N.modules[v]) return false;
    try {
      check_map(M.ring, f.comps[v]);
    } catch (const InputError&) {
      return false;
    }
  }
  for (int k = 0; k < M.quiver.arrow_count(); ++k) {
    const auto& ar = M.quiver.arrows()[k];
    if (!(compose(M.ring, f.comps[ar.t], M.maps[k]) == compose(M.ring, N.maps[k], f.comps[ar.s]))) return false;
  }
  return true;
}

bool is_isomorphism(const Ring& R, const RepMorphism& f) {
  for (const auto& c : f.comps) {
    if (total_length(c.src) != total_length(c.tgt)) return false;
    if (!kernel(R, c).orders.empty()) return false;
  }
  return true;
}

ZpnMatrix assembled_incoming(const Rep& M, int v) {
  Partition src;
  Mat m(static_cast<int>(M.modules[v].size()), 0);
  for (int k : M.quiver.incoming(v)) {
    src = concat(src, M.maps[k].src);
    m = hcat(m, M.maps[k].m);
  }
  return ZpnMatrix{src, M.modules[v], m};
}

MonoResult is_mono(const Rep& M) {
  for (int v = 0; v < M.quiver.vertices(); ++v) {
    auto K = kernel(M.ring, assembled_incoming(M, v));
    if (!K.orders.empty()) return MonoResult{false, v, K.gens.col(0)};
  }
  return {};
}

Vec h0_coords(const Ring& R, const RepMorphism& f) {
  Vec c;
  for (const auto& x : f.comps) {
    Vec part = hom_coords(R, x);
    c.insert(c.end(), part.begin(), part.end());
  }
  return c;
}

RepMorphism from_h0(const Ring& R, const HomGroup& H, const Vec& c) {
  RepMorphism f;
  std::size_t off = 0;
  for (std::size_t v = 0; v < H.src_modules.size(); ++v) {
    const std::size_t len = H.src_modules[v].size() * H.tgt_modules[v].size();
    Vec part(c.begin() + static_cast<std::ptrdiff_t>(off), c.begin() + static_cast<std::ptrdiff_t>(off + len));
    f.comps.push_back(hom_from_coords(R, H.src_modules[v], H.tgt_modules[v], part));
    off += len;
  }
  return f;
}

HomGroup hom_space(const Rep& M, const Rep& N) {
  if (!(M.quiver == N.quiver) || !(M.ring == N.ring)) fail_input("hom: quiver or ring mismatch");
  const Ring& R = M.ring;
  const Quiver& q = M.quiver;
  HomGroup H;
  H.src_modules = M.modules;
  H.tgt_modules = N.modules;

  std::vector<int> off(q.vertices() + 1, 0);
  for (int v = 0; v < q.vertices(); ++v) {
    Partition o = hom_orders(M.modules[v], N.modules[v]);
    H.h0 = concat(H.h0, o);
    off[v + 1] = off[v] + static_cast<int>(o.size());
  }
  Partition cons;
  std::vector<int> coff(q.arrow_count() + 1, 0);
  for (int k = 0; k < q.arrow_count(); ++k) {
    const auto& ar = q.arrows()[k];
    Partition o = hom_orders(M.modules[ar.s], N.modules[ar.t]);
    cons = concat(cons, o);
    coff[k + 1] = coff[k] + static_cast<int>(o.size());
  }

  // constraint map Γ: φ ↦ (φ_t h_α − h'_α φ_s)_α in hom coordinates
  const int d = static_cast<int>(H.h0.size());
  Mat G(static_cast<int>(cons.size()), d);
  for (int v = 0; v < q.vertices(); ++v) {
    auto basis = hom_basis(R, M.modules[v], N.modules[v]);
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const int col = off[v] + static_cast<int>(b);
      for (int k = 0; k < q.arrow_count(); ++k) {
        const auto& ar = q.arrows()[k];
        if (ar.s != v && ar.t != v) continue;
        ZpnMatrix val = zero_map(M.modules[ar.s], N.modules[ar.t]);
        if (ar.t == v) val = add(R, val, compose(R, basis[b], M.maps[k]));
        if (ar.s == v) val = sub(R, val, compose(R, N.maps[k], basis[b]));
        Vec c = hom_coords(R, val);
        for (std::size_t i = 0; i < c.size(); ++i) G(coff[k] + static_cast<int>(i), col) = c[i];
      }
    }
  }
  Submodule K = kernel(R, make_map(R, H.h0, cons, G));
  H.orders = K.orders;
  for (int l = 0; l < K.gens.cols; ++l) H.gens.push_back(from_h0(R, H, K.gens.col(l)));
  H.solver = std::make_shared<const Solver>(R, ZpnMatrix{K.orders, H.h0, K.gens});
  return H;
}

Vec hom_coordinates(const Ring& R, const HomGroup& H, const RepMorphism& f) {
  auto c = H.solver->solve(h0_coords(R, f));
  if (!c) fail_input("hom: morphism is not in the hom group");
  return *c;
}

RepMorphism hom_combination(const Ring& R, const HomGroup& H, const Vec& coeffs) {
  Vec c(H.h0.size(), 0);
  const Mat& B = H.solver->map().m;
  for (int l = 0; l < B.cols; ++l)
    for (int i = 0; i < B.rows; ++i) c[i] = R.reduce(c[i] + R.reduce(coeffs[l]) * B(i, l), H.h0[i]);
  return from_h0(R, H, c);
}

RepMorphism random_morphism(std::mt19937_64& rng, const Ring& R, const HomGroup& H) {
  Vec c(H.orders.size());
  for (std::size_t l = 0; l < c.size(); ++l) c[l] = std::uniform_int_distribution<Int>(0, R.pow(H.orders[l]) - 1)(rng);
  return hom_combination(R, H, c);
}

Rep f_shriek(const Quiver& q, const Ring& R, const Partition& module, int vertex) {
  if (vertex < 0 || vertex >= q.vertices()) fail_input("f_!: vertex out of range");
  check_partition(R, module);
  const auto paths = q.paths_from(vertex);
  Rep M{q, R, std::vector<Partition>(q.vertices()), {}};
  // slot of each path inside its target vertex
  std::vector<int> slot(paths.size());
  std::vector<int> count(q.vertices(), 0);
  for (std::size_t i = 0; i < paths.size(); ++i) {
    slot[i] = count[paths[i].t]++;
    M.modules[paths[i].t] = concat(M.modules[paths[i].t], module);
  }
  const int w = static_cast<int>(module.size());
  for (int k = 0; k < q.arrow_count(); ++k) {
    const auto& ar = q.arrows()[k];
    ZpnMatrix h = zero_map(M.modules[ar.s], M.modules[ar.t]);
    for (std::size_t i = 0; i < paths.size(); ++i) {
      if (paths[i].t != ar.s) continue;
      Path ext = paths[i];
      ext.arrows.push_back(k);
      ext.t = ar.t;
      const auto it = std::find(paths.begin(), paths.end(), ext);
      const int j = static_cast<int>(it - paths.begin());
      for (int c = 0; c < w; ++c) h.m(slot[j] * w + c, slot[i] * w + c) = 1;
    }
    M.maps.push_back(std::move(h));
  }
  return M;
}

bool is_injective_object(const Rep& M) {
  for (const auto& a : M.modules)
    for (int x : a)
      if (x != M.ring.n()) return false;
  return is_mono(M).mono;
}

StableHom stable_hom(const Rep& M, const Rep& N) {
  const Ring& R = M.ring;
  StableHom S{hom_space(M, N), {}, 0};
  std::vector<Vec> comps;
  for (int i = 0; i < M.quiver.vertices(); ++i) {
    Rep E = f_shriek(M.quiver, R, {R.n()}, i);
    HomGroup into = hom_space(M, E);
    HomGroup out = hom_space(E, N);
    for (const auto& h : into.gens)
      for (const auto& g : out.gens) comps.push_back(h0_coords(R, compose(R, g, h)));
  }
  S.ideal = basis_of_span(R, S.hom.h0, from_cols(comps, static_cast<int>(S.hom.h0.size())));
  S.quotient_log = S.hom.log_order() - total_length(S.ideal.orders);
  return S;
}

bool factors_through_injective(const StableHom& S, const Ring& R, const RepMorphism& f) {
  return in_span(R, S.hom.h0, S.ideal.gens, h0_coords(R, f));
}

StableRep stable_restrict(const Rep& M) {
  const int n = M.ring.n();
  std::vector<std::vector<int>> keep(M.quiver.vertices());
  Rep S{M.quiver, M.ring, std::vector<Partition>(M.quiver.vertices()), {}};
  for (int v = 0; v < M.quiver.vertices(); ++v)
    for (int j = 0; j < static_cast<int>(M.modules[v].size()); ++j)
      if (M.modules[v][j] < n) {
        keep[v].push_back(j);
        S.modules[v].push_back(M.modules[v][j]);
      }
  for (int k = 0; k < M.quiver.arrow_count(); ++k) {
    const auto& ar = M.quiver.arrows()[k];
    ZpnMatrix h = zero_map(S.modules[ar.s], S.modules[ar.t]);
    for (int i = 0; i < h.rows(); ++i)
      for (int j = 0; j < h.cols(); ++j) h.m(i, j) = M.maps[k].m(keep[ar.t][i], keep[ar.s][j]);
    S.maps.push_back(std::move(h));
  }
  return StableRep{std::move(S)};
}

Rep hat_lift(const StableRep& S) {
  for (const auto& a : S.rep.modules)
    for (int x : a)
      if (x >= S.rep.ring.n()) fail_input("hat lift: stable representation has an injective part");
  return S.rep;
}

Rep random_rep(std::mt19937_64& rng, const Quiver& q, const Ring& R, int max_parts) {
  std::vector<Partition> mods(q.vertices());
  for (auto& a : mods) {
    a.resize(std::uniform_int_distribution<int>(0, max_parts)(rng));
    for (auto& x : a) x = std::uniform_int_distribution<int>(1, R.n())(rng);
    a = canonical(a);
  }
  std::vector<Mat> maps;
  for (const auto& ar : q.arrows()) {
    const auto& src = mods[ar.s];
    const auto& tgt = mods[ar.t];
    Mat m(static_cast<int>(tgt.size()), static_cast<int>(src.size()));
    for (int i = 0; i < m.rows; ++i)
      for (int j = 0; j < m.cols; ++j) {
        const Int step = R.pow(std::max(0, tgt[i] - src[j]));
        m(i, j) = step * std::uniform_int_distribution<Int>(0, R.pow(tgt[i]) / step - 1)(rng);
      }
    maps.push_back(std::move(m));
  }
  return make_rep(q, R, std::move(mods), maps);
}

}  // namespace monocat
