#include "monocat/mimo.hpp"

#include <random>

#include "monocat/decomp.hpp"

namespace monocat {

EnvelopeData injective_envelope(const Ring& R, const Partition& a) {
  check_partition(R, a);
  EnvelopeData E{a, Partition(a.size(), R.n()), {}};
  Mat m(static_cast<int>(a.size()), static_cast<int>(a.size()));
  for (int j = 0; j < m.rows; ++j) m(j, j) = R.pow(R.n() - a[j]);
  E.embedding = make_map(R, a, E.envelope, m);
  return E;
}

namespace {

/// e: P -> Λ^{#K} with e(G_c) = p^{n-k_c} ε_c, where the columns G_c generate K ⊆ P.
Mat lift_envelope(const Ring& R, const Partition& P, const Submodule& K, std::mt19937_64* rng) {
  const int n = R.n();
  const int m = static_cast<int>(P.size());
  const int k = static_cast<int>(K.orders.size());
  // e[l][·] = p^{n-a_·} y with y ∈ M(P) solving T y = p^{n-k_l} ε_l,  T[c][j] = p^{n-a_j} G[j][c]
  Mat T(k, m);
  for (int c = 0; c < k; ++c)
    for (int j = 0; j < m; ++j) T(c, j) = R.reduce(R.pow(n - P[j]) * K.gens(j, c));
  const ZpnMatrix Tm = make_map(R, P, Partition(k, n), T);
  const Solver sol(R, Tm);
  std::optional<Submodule> free_part;
  if (rng) free_part = kernel(R, Tm);
  Mat E(k, m);
  for (int l = 0; l < k; ++l) {
    Vec b(k, 0);
    b[l] = R.pow(n - K.orders[l]);
    auto y = sol.solve(b);
    if (!y) fail_internal("mimo: no lift of the envelope embedding");
    if (rng)
      for (int g = 0; g < free_part->gens.cols; ++g) {
        const Int c = std::uniform_int_distribution<Int>(0, R.modulus() - 1)(*rng);
        for (int j = 0; j < m; ++j) (*y)[j] = R.reduce((*y)[j] + c * free_part->gens(j, g), P[j]);
      }
    for (int j = 0; j < m; ++j) E(l, j) = R.reduce(R.pow(n - P[j]) * (*y)[j]);
  }
  return E;
}

}  // namespace

MimoResult mimo(const Rep& M, std::optional<std::uint64_t> lift_seed) {
  check_rep(M);
  const Ring& R = M.ring;
  const Quiver& q = M.quiver;
  const int V = q.vertices();
  std::optional<std::mt19937_64> rng;
  if (lift_seed) rng.emplace(*lift_seed);

  std::vector<int> nk(V);
  std::vector<Mat> E(V);  // e_i: ⊕_{t(α)=i} M_{s(α)} -> J_i
  for (int i = 0; i < V; ++i) {
    const ZpnMatrix in = assembled_incoming(M, i);
    const Submodule K = kernel(R, in);
    nk[i] = static_cast<int>(K.orders.size());
    E[i] = lift_envelope(R, in.src, K, rng ? &*rng : nullptr);
  }

  // block layout of M'_i: M_i, then J_{s(p)} for paths p ending at i, in global path order
  const auto& paths = q.paths();
  std::vector<int> offset(paths.size(), 0);
  MimoResult out{Rep{q, R, M.modules, {}}, {}};
  for (std::size_t x = 0; x < paths.size(); ++x) {
    Partition& mod = out.rep.modules[paths[x].t];
    offset[x] = static_cast<int>(mod.size());
    mod.insert(mod.end(), nk[paths[x].s], R.n());
  }

  for (int b = 0; b < q.arrow_count(); ++b) {
    const int i = q.arrows()[b].s, k = q.arrows()[b].t;
    ZpnMatrix h = zero_map(out.rep.modules[i], out.rep.modules[k]);
    const ZpnMatrix& hb = M.maps[b];
    for (int r = 0; r < hb.rows(); ++r)
      for (int c = 0; c < hb.cols(); ++c) h.m(r, c) = hb.m(r, c);
    // M_i -> J_k through the slot of β in the incoming sum at k
    int slot = 0;
    for (int a : q.incoming(k)) {
      if (a == b) break;
      slot += static_cast<int>(M.modules[q.arrows()[a].s].size());
    }
    const int trivial_k = q.path_index(Path{k, k, {}});
    for (int l = 0; l < nk[k]; ++l)
      for (int c = 0; c < static_cast<int>(M.modules[i].size()); ++c)
        h.m(offset[trivial_k] + l, c) = E[k](l, slot + c);
    // J_{s(p)} at p -> J_{s(p)} at βp
    for (std::size_t x = 0; x < paths.size(); ++x) {
      if (paths[x].t != i) continue;
      Path ext = paths[x];
      ext.arrows.push_back(b);
      ext.t = k;
      const int y = q.path_index(ext);
      for (int l = 0; l < nk[paths[x].s]; ++l) h.m(offset[y] + l, offset[x] + l) = 1;
    }
    check_map(R, h);
    out.rep.maps.push_back(std::move(h));
  }
  for (int v = 0; v < V; ++v) {
    ZpnMatrix pr = zero_map(out.rep.modules[v], M.modules[v]);
    for (int r = 0; r < pr.rows(); ++r) pr.m(r, r) = 1;
    out.projection.comps.push_back(std::move(pr));
  }
  if (!is_mono(out.rep).mono) fail_internal("mimo: result is not monomorphic");
  if (!is_morphism(out.rep, M, out.projection)) fail_internal("mimo: projection is not a morphism");
  return out;
}

bool is_right_approximation(const Rep& X, const Rep& M, const RepMorphism& g, const std::vector<Rep>& probes) {
  check_rep(X);
  check_rep(M);
  if (!is_morphism(X, M, g)) fail_input("right approximation: g is not a morphism X -> M");
  const Ring& R = M.ring;
  for (const auto& T : probes) {
    check_rep(T);
    if (!is_mono(T).mono) fail_input("right approximation: probe is not monomorphic");
    const HomGroup H = hom_space(T, M);
    const HomGroup HX = hom_space(T, X);
    std::vector<Vec> cols;
    for (const auto& f : HX.gens) cols.push_back(h0_coords(R, compose(R, g, f)));
    const Solver sol(R, make_map(R, HX.orders, H.h0, from_cols(cols, static_cast<int>(H.h0.size()))));
    for (const auto& h : H.gens)
      if (!sol.solve(h0_coords(R, h))) return false;
  }
  return true;
}

Rep mimo_inverse_roundtrip(const Rep& M) {
  check_rep(M);
  if (!is_mono(M).mono) fail_input("mimo inverse: representation is not monomorphic");
  if (is_injective_object(M)) fail_input("mimo inverse: representation is injective");
  if (!is_indecomposable(M).indecomposable) fail_input("mimo inverse: representation is decomposable");
  return mimo(hat_lift(stable_restrict(M))).rep;
}

}  // namespace monocat
