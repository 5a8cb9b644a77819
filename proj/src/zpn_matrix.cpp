#include "monocat/zpn_matrix.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace monocat {

Partition canonical(Partition a) {
  std::sort(a.begin(), a.end(), std::greater<>());
  return a;
}

int total_length(const Partition& a) { return std::accumulate(a.begin(), a.end(), 0); }

void check_partition(const Ring& R, const Partition& a) {
  for (int x : a)
    if (x < 1 || x > R.n()) fail_input("partition: part " + std::to_string(x) + " outside [1, n]");
}

std::string to_string(const Partition& a) {
  std::string s = "[";
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + std::to_string(a[i]);
  return s + "]";
}

Partition concat(const Partition& a, const Partition& b) {
  Partition c = a;
  c.insert(c.end(), b.begin(), b.end());
  return c;
}

ZpnMatrix make_map(const Ring& R, Partition src, Partition tgt, Mat m) {
  check_partition(R, src);
  check_partition(R, tgt);
  if (m.rows != static_cast<int>(tgt.size()) || m.cols != static_cast<int>(src.size()))
    fail_input("map: matrix shape " + std::to_string(m.rows) + "x" + std::to_string(m.cols) +
               " does not match " + to_string(src) + " -> " + to_string(tgt));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) {
      Int x = R.reduce(m(i, j), tgt[i]);
      const int need = std::max(0, tgt[i] - src[j]);
      if (x % R.pow(need) != 0)
        fail_input("map: entry (" + std::to_string(i) + "," + std::to_string(j) +
                   ") is not divisible by p^" + std::to_string(need));
      m(i, j) = x;
    }
  return ZpnMatrix{std::move(src), std::move(tgt), std::move(m)};
}

void check_map(const Ring& R, const ZpnMatrix& f) {
  ZpnMatrix g = make_map(R, f.src, f.tgt, f.m);
  if (!(g.m == f.m)) fail_input("map: entries not in canonical range");
}

ZpnMatrix zero_map(const Partition& src, const Partition& tgt) {
  return ZpnMatrix{src, tgt, Mat(static_cast<int>(tgt.size()), static_cast<int>(src.size()))};
}

ZpnMatrix identity_map(const Partition& a) { return ZpnMatrix{a, a, Mat::identity(static_cast<int>(a.size()))}; }

namespace {
void reduce_rows(const Ring& R, ZpnMatrix& f) {
  for (int i = 0; i < f.m.rows; ++i)
    for (int j = 0; j < f.m.cols; ++j) f.m(i, j) = R.reduce(f.m(i, j), f.tgt[i]);
}
}  // namespace

ZpnMatrix compose(const Ring& R, const ZpnMatrix& g, const ZpnMatrix& f) {
  if (g.src != f.tgt) fail_input("compose: " + to_string(f.tgt) + " vs " + to_string(g.src));
  ZpnMatrix h{f.src, g.tgt, mul(R, g.m, f.m)};
  reduce_rows(R, h);
  return h;
}

ZpnMatrix add(const Ring& R, const ZpnMatrix& f, const ZpnMatrix& g) {
  if (f.src != g.src || f.tgt != g.tgt) fail_input("add: shape mismatch");
  ZpnMatrix h = f;
  for (std::size_t k = 0; k < h.m.a.size(); ++k) h.m.a[k] += g.m.a[k];
  reduce_rows(R, h);
  return h;
}

ZpnMatrix sub(const Ring& R, const ZpnMatrix& f, const ZpnMatrix& g) {
  if (f.src != g.src || f.tgt != g.tgt) fail_input("sub: shape mismatch");
  ZpnMatrix h = f;
  for (std::size_t k = 0; k < h.m.a.size(); ++k) h.m.a[k] -= g.m.a[k];
  reduce_rows(R, h);
  return h;
}

ZpnMatrix scale(const Ring& R, Int c, const ZpnMatrix& f) {
  ZpnMatrix h = f;
  c = R.reduce(c);
  for (auto& x : h.m.a) x = R.reduce(x * c);
  reduce_rows(R, h);
  return h;
}

ZpnMatrix block_diag(const ZpnMatrix& f, const ZpnMatrix& g) {
  ZpnMatrix h{concat(f.src, g.src), concat(f.tgt, g.tgt), Mat(f.rows() + g.rows(), f.cols() + g.cols())};
  for (int i = 0; i < f.rows(); ++i)
    for (int j = 0; j < f.cols(); ++j) h.m(i, j) = f.m(i, j);
  for (int i = 0; i < g.rows(); ++i)
    for (int j = 0; j < g.cols(); ++j) h.m(f.rows() + i, f.cols() + j) = g.m(i, j);
  return h;
}

Vec reduce_elem(const Ring& R, const Partition& a, Vec x) {
  if (x.size() != a.size()) fail_input("element: length mismatch");
  for (std::size_t j = 0; j < a.size(); ++j) x[j] = R.reduce(x[j], a[j]);
  return x;
}

bool is_zero_elem(const Ring& R, const Partition& a, const Vec& x) {
  for (std::size_t j = 0; j < a.size(); ++j)
    if (R.reduce(x[j], a[j]) != 0) return false;
  return true;
}

Vec apply(const Ring& R, const ZpnMatrix& f, const Vec& x) {
  if (static_cast<int>(x.size()) != f.cols()) fail_input("apply: length mismatch");
  Vec y(f.rows(), 0);
  const Int m = R.modulus();
  for (int i = 0; i < f.rows(); ++i) {
    Int s = 0;
    for (int j = 0; j < f.cols(); ++j) s = (s + (f.m(i, j) % m) * R.reduce(x[j])) % m;
    y[i] = R.reduce(s, f.tgt[i]);
  }
  return y;
}

int height(const Ring& R, const Partition& a, const Vec& x) {
  int h = R.n();
  for (std::size_t j = 0; j < a.size(); ++j) {
    const Int c = R.reduce(x[j], a[j]);
    if (c != 0) h = std::min(h, R.valuation(c));
  }
  return h;
}

}  // namespace monocat
