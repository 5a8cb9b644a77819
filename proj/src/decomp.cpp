#include "monocat/decomp.hpp"

#include <algorithm>
#include <random>

namespace monocat {

EndRing end_ring(const Rep& M) {
  EndRing E{hom_space(M, M), {}};
  const Ring& R = M.ring;
  const int d = static_cast<int>(E.hom.size());
  fp::Algebra& A = E.top;
  A.p = R.p();
  A.dim = d;
  A.mult.assign(static_cast<std::size_t>(d) * d * d, 0);
  auto top = [&](const RepMorphism& f) {
    Vec c = hom_coordinates(R, E.hom, f);
    fp::FVec x(d);
    for (int k = 0; k < d; ++k) x[k] = static_cast<int>(c[k] % R.p());
    return x;
  };
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      const auto x = top(compose(R, E.hom.gens[a], E.hom.gens[b]));
      std::copy(x.begin(), x.end(), A.mult.begin() + (static_cast<std::ptrdiff_t>(a) * d + b) * d);
    }
  A.one = top(identity_morphism(M));
  return E;
}

SubRep subrep_from_generators(const Rep& M, const std::vector<Mat>& gens) {
  const Ring& R = M.ring;
  const Quiver& q = M.quiver;
  std::vector<Submodule> sub;
  SubRep S{Rep{q, R, {}, {}}, {}};
  for (int v = 0; v < q.vertices(); ++v) {
    sub.push_back(basis_of_span(R, M.modules[v], gens[v]));
    S.rep.modules.push_back(sub.back().orders);
    S.inclusion.comps.push_back(sub.back().inclusion());
  }
  for (int k = 0; k < q.arrow_count(); ++k) {
    const auto& ar = q.arrows()[k];
    const Submodule& s = sub[ar.s];
    const Submodule& t = sub[ar.t];
    const Solver sol(R, t.inclusion());
    Mat m(static_cast<int>(t.orders.size()), static_cast<int>(s.orders.size()));
    for (int l = 0; l < m.cols; ++l) {
      auto x = sol.solve(apply(R, M.maps[k], s.gens.col(l)));
      if (!x) fail_internal("subrepresentation generators are not closed under arrow " + std::to_string(k));
      m.set_col(l, *x);
    }
    S.rep.maps.push_back(make_map(R, s.orders, t.orders, m));
  }
  if (!is_morphism(S.rep, M, S.inclusion)) fail_internal("subrepresentation inclusion does not commute");
  return S;
}

namespace {

std::vector<Mat> images(const RepMorphism& f) {
  std::vector<Mat> out;
  for (const auto& c : f.comps) out.push_back(c.m);
  return out;
}

std::vector<Mat> kernels(const Ring& R, const RepMorphism& f) {
  std::vector<Mat> out;
  for (const auto& c : f.comps) out.push_back(kernel(R, c).gens);
  return out;
}

RepMorphism power(const Ring& R, RepMorphism f, int at_least) {
  for (int e = 1; e < at_least; e *= 2) f = compose(R, f, f);
  return f;
}

IndecResult analyze(const Rep& M, const EndRing& E, std::mt19937_64& rng) {
  const Ring& R = M.ring;
  IndecResult out;
  std::optional<fp::FVec> e0;
  out.structure = fp::analyze(E.top, rng, &e0);
  out.indecomposable = out.structure.local;
  if (out.indecomposable) return out;

  Vec coeffs(e0->begin(), e0->end());
  RepMorphism e = hom_combination(R, E.hom, coeffs);
  for (int it = 0;; ++it) {
    const RepMorphism e2 = compose(R, e, e);
    if (e2 == e) break;
    if (it > 64) fail_internal("idempotent lifting did not converge");
    e = sub(R, scale(R, 3, e2), scale(R, 2, compose(R, e2, e)));
  }
  if (is_zero(e) || e == identity_morphism(M)) fail_internal("lifted idempotent is trivial");
  out.idempotent = e;
  return out;
}

struct Leaf {
  Rep rep;
  RepMorphism inc;
  fp::Structure structure;
};

std::vector<Partition> key(const Rep& X) {
  std::vector<Partition> k;
  for (const auto& a : X.modules) k.push_back(canonical(a));
  return k;
}

constexpr int kFittingTries = 4;

}  // namespace

IndecResult is_indecomposable(const Rep& M, std::uint64_t seed) {
  check_rep(M);
  if (is_zero(M)) fail_input("the zero representation is not indecomposable");
  std::mt19937_64 rng(seed);
  return analyze(M, end_ring(M), rng);
}

Decomposition decompose(const Rep& M, std::uint64_t seed) {
  check_rep(M);
  const Ring& R = M.ring;
  std::mt19937_64 rng(seed);
  std::vector<Leaf> leaves;
  std::vector<std::pair<Rep, RepMorphism>> stack{{M, identity_morphism(M)}};
  while (!stack.empty()) {
    auto [X, inc] = std::move(stack.back());
    stack.pop_back();
    if (is_zero(X)) continue;
    const EndRing E = end_ring(X);
    const int len = total_length(X);

    std::optional<std::pair<SubRep, SubRep>> parts;
    // Fitting: a random endomorphism that is neither nilpotent nor invertible splits X.
    for (int t = 0; t < kFittingTries && !parts && E.hom.size() > 1; ++t) {
      const RepMorphism psi = power(R, random_morphism(rng, R, E.hom), len);
      if (is_zero(psi) || is_isomorphism(R, psi)) continue;
      parts.emplace(subrep_from_generators(X, images(psi)), subrep_from_generators(X, kernels(R, psi)));
    }
    fp::Structure st;
    if (!parts) {
      IndecResult res = analyze(X, E, rng);
      st = res.structure;
      if (!res.indecomposable) {
        const RepMorphism& e = *res.idempotent;
        const RepMorphism f = sub(R, identity_morphism(X), e);
        parts.emplace(subrep_from_generators(X, images(e)), subrep_from_generators(X, images(f)));
      }
    }
    if (!parts) {
      leaves.push_back({std::move(X), std::move(inc), st});
      continue;
    }
    stack.emplace_back(parts->second.rep, compose(R, inc, parts->second.inclusion));
    stack.emplace_back(parts->first.rep, compose(R, inc, parts->first.inclusion));
  }

  // group isomorphic leaves
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    bool placed = false;
    for (auto& c : classes)
      if (indecomposables_isomorphic(leaves[c[0]].rep, leaves[i].rep)) {
        c.push_back(i);
        placed = true;
        break;
      }
    if (!placed) classes.push_back({i});
  }
  std::stable_sort(classes.begin(), classes.end(), [&](const auto& x, const auto& y) {
    return key(leaves[x[0]].rep) < key(leaves[y[0]].rep);
  });

  Decomposition D;
  D.seed = seed;
  D.sum = zero_rep(M.quiver, R);
  const int V = M.quiver.vertices();
  std::vector<Mat> inc(V);
  std::vector<Partition> src(V);
  for (int v = 0; v < V; ++v) inc[v] = Mat(static_cast<int>(M.modules[v].size()), 0);
  for (const auto& c : classes) {
    D.factors.push_back({leaves[c[0]].rep, static_cast<int>(c.size()), leaves[c[0]].structure});
    for (std::size_t i : c) {
      D.sum = direct_sum(D.sum, leaves[i].rep);
      for (int v = 0; v < V; ++v) inc[v] = hcat(inc[v], leaves[i].inc.comps[v].m);
    }
  }
  for (int v = 0; v < V; ++v) {
    const ZpnMatrix I{D.sum.modules[v], M.modules[v], inc[v]};
    const Solver sol(R, I);
    Mat inv(static_cast<int>(D.sum.modules[v].size()), static_cast<int>(M.modules[v].size()));
    for (int j = 0; j < inv.cols; ++j) {
      Vec b(M.modules[v].size(), 0);
      b[j] = 1;
      auto x = sol.solve(b);
      if (!x) fail_internal("decomposition: summands do not span M");
      inv.set_col(j, *x);
    }
    D.inclusion.comps.push_back(I);
    D.inverse.comps.push_back(make_map(R, M.modules[v], D.sum.modules[v], inv));
  }
  if (!is_morphism(D.sum, M, D.inclusion) || !is_morphism(M, D.sum, D.inverse) ||
      !(compose(R, D.inclusion, D.inverse) == identity_morphism(M)) ||
      !(compose(R, D.inverse, D.inclusion) == identity_morphism(D.sum)))
    fail_internal("decomposition certificate failed");
  return D;
}

bool indecomposables_isomorphic(const Rep& X, const Rep& Y) {
  if (!(X.quiver == Y.quiver) || !(X.ring == Y.ring)) fail_input("isomorphism: quiver or ring mismatch");
  if (key(X) != key(Y)) return false;
  if (is_zero(X)) return true;
  const Ring& R = X.ring;
  const HomGroup F = hom_space(X, Y);
  const HomGroup G = hom_space(Y, X);
  // End(X) is local, so id = Σ c·g∘f forces some generator composite to be a unit.
  for (const auto& f : F.gens)
    for (const auto& g : G.gens)
      if (is_isomorphism(R, compose(R, g, f))) return true;
  return false;
}

bool is_isomorphic(const Rep& M, const Rep& N, std::uint64_t seed) {
  check_rep(M);
  check_rep(N);
  if (!(M.quiver == N.quiver) || !(M.ring == N.ring)) fail_input("isomorphism: quiver or ring mismatch");
  if (key(M) != key(N)) return false;
  const auto A = decompose(M, seed);
  const auto B = decompose(N, seed);
  if (A.factors.size() != B.factors.size()) return false;
  std::vector<bool> used(B.factors.size(), false);
  for (const auto& f : A.factors) {
    bool found = false;
    for (std::size_t j = 0; j < B.factors.size() && !found; ++j)
      if (!used[j] && B.factors[j].multiplicity == f.multiplicity &&
          indecomposables_isomorphic(f.rep, B.factors[j].rep)) {
        used[j] = true;
        found = true;
      }
    if (!found) return false;
  }
  return true;
}

StripResult strip_Y(const Rep& M, std::uint64_t seed) {
  if (!is_a2(M.quiver)) fail_input("strip_Y: quiver must be A2");
  const int s = M.quiver.arrows()[0].s;
  const int t = M.quiver.arrows()[0].t;
  const auto D = decompose(M, seed);
  StripResult out{zero_rep(M.quiver, M.ring), {}};
  for (const auto& f : D.factors)
    for (int k = 0; k < f.multiplicity; ++k) {
      if (f.rep.modules[s].empty())
        out.stripped = concat(out.stripped, f.rep.modules[t]);
      else
        out.residual = direct_sum(out.residual, f.rep);
    }
  out.stripped = canonical(out.stripped);
  if (out.stripped.empty()) out.residual = M;
  return out;
}

}  // namespace monocat
