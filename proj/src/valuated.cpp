#include "monocat/valuated.hpp"

#include "monocat/decomp.hpp"

namespace monocat {

namespace {

Mat clean(const Ring& R, const Partition& ambient, const Mat& gens) { return basis_of_span(R, ambient, gens).gens; }

Mat image(const Ring& R, const ZpnMatrix& f, const Mat& gens) {
  std::vector<Vec> cols;
  for (int l = 0; l < gens.cols; ++l) cols.push_back(apply(R, f, gens.col(l)));
  return from_cols(cols, static_cast<int>(f.tgt.size()));
}

Mat scaled(const Ring& R, const Partition& a, const Mat& gens, int i) {
  Mat out = gens;
  for (auto& x : out.a) x = R.reduce(x * R.pow(i));
  for (int r = 0; r < out.rows; ++r)
    for (int c = 0; c < out.cols; ++c) out(r, c) = R.reduce(out(r, c), a[r]);
  return out;
}

bool same_span(const Ring& R, const Partition& a, const Mat& x, const Mat& y) {
  return span_contains(R, a, x, y) && span_contains(R, a, y, x);
}

}  // namespace

ValuatedGroup make_valuated_group(const Ring& R, const Partition& ambient, std::vector<Mat> levels) {
  ValuatedGroup B{R, ambient, std::move(levels)};
  check_valuated_group(B);
  return B;
}

void check_valuated_group(const ValuatedGroup& B) {
  const Ring& R = B.ring;
  const int n = R.n();
  check_partition(R, B.ambient);
  if (static_cast<int>(B.levels.size()) != n + 1) fail_input("valuated group: expected n+1 filtration levels");
  for (const auto& L : B.levels)
    if (L.rows != static_cast<int>(B.ambient.size())) fail_input("valuated group: level generators have wrong height");
  if (!span_contains(R, B.ambient, B.levels[0], identity_map(B.ambient).m))
    fail_input("valuated group: B(0) must be the whole group");
  if (!basis_of_span(R, B.ambient, B.levels[n]).orders.empty()) fail_input("valuated group: B(n) must be zero");
  for (int i = 0; i < n; ++i) {
    if (!span_contains(R, B.ambient, B.levels[i], B.levels[i + 1]))
      fail_input("valuated group: levels are not decreasing at " + std::to_string(i + 1));
    if (!span_contains(R, B.ambient, B.levels[i + 1], scaled(R, B.ambient, B.levels[i], 1)))
      fail_input("valuated group: p·B(" + std::to_string(i) + ") is not inside B(" + std::to_string(i + 1) + ")");
  }
}

int valuation(const ValuatedGroup& B, const Vec& x) {
  int v = 0;
  while (v < B.ring.n() && in_span(B.ring, B.ambient, B.levels[v + 1], x)) ++v;
  return v;
}

ValuatedGroup phi(const Rep& M) {
  check_rep(M);
  if (!is_a2(M.quiver)) fail_input("phi: quiver must be A2");
  if (!is_mono(M).mono) fail_input("phi: representation is not monomorphic");
  const Ring& R = M.ring;
  const ZpnMatrix& h = M.maps[0];
  ValuatedGroup B{R, h.src, {}};
  for (int i = 0; i <= R.n(); ++i)
    B.levels.push_back(clean(R, h.src, preimage(R, h, scaled_identity(R, h.tgt, i))));
  check_valuated_group(B);
  return B;
}

void check_vg_morphism(const ValuatedGroup& B, const ValuatedGroup& C, const ZpnMatrix& f) {
  const Ring& R = B.ring;
  if (!(R == C.ring) || f.src != B.ambient || f.tgt != C.ambient) fail_input("valuated morphism: shape mismatch");
  check_map(R, f);
  for (int i = 0; i <= R.n(); ++i)
    if (!span_contains(R, C.ambient, C.levels[i], image(R, f, B.levels[i])))
      fail_input("valuated morphism: lowers valuations at level " + std::to_string(i));
}

bool is_inflation(const ValuatedGroup& B, const ValuatedGroup& C, const ZpnMatrix& f) {
  check_vg_morphism(B, C, f);
  const Ring& R = B.ring;
  if (!kernel(R, f).orders.empty()) return false;
  for (int i = 1; i < R.n(); ++i)
    if (!span_contains(R, B.ambient, B.levels[i], preimage(R, f, C.levels[i]))) return false;
  return true;
}

bool is_deflation(const ValuatedGroup& B, const ValuatedGroup& C, const ZpnMatrix& f) {
  check_vg_morphism(B, C, f);
  const Ring& R = B.ring;
  for (int i = 0; i < R.n(); ++i)
    if (!span_contains(R, C.ambient, image(R, f, B.levels[i]), C.levels[i])) return false;
  return true;
}

bool is_injective_vg(const ValuatedGroup& B) {
  const Ring& R = B.ring;
  for (int i = 1; i < R.n(); ++i)
    if (!same_span(R, B.ambient, B.levels[i], scaled(R, B.ambient, B.levels[0], i))) return false;
  return true;
}

bool same_filtration(const ValuatedGroup& B, const ValuatedGroup& C) {
  if (!(B.ring == C.ring) || B.ambient != C.ambient || B.levels.size() != C.levels.size()) return false;
  for (std::size_t i = 0; i < B.levels.size(); ++i)
    if (!same_span(B.ring, B.ambient, B.levels[i], C.levels[i])) return false;
  return true;
}

bool vg_iso(const Rep& M, const Rep& N) {
  if (!is_mono(M).mono || !is_mono(N).mono) fail_input("vg_iso: realizations must be monomorphic");
  return is_isomorphic(strip_Y(M).residual, strip_Y(N).residual);
}

}  // namespace monocat
