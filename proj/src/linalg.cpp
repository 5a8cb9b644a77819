#include "monocat/linalg.hpp"

#include <algorithm>
#include <utility>

namespace monocat {

namespace {

void axpy(const Ring& R, Vec& y, Int q, const Vec& x) {
  if (q == 0) return;
  const Int m = R.modulus();
  q = R.reduce(q);
  for (std::size_t k = 0; k < y.size(); ++k) y[k] = R.reduce(y[k] - (q * x[k]) % m);
}

void scale_vec(const Ring& R, Vec& y, Int c) {
  for (auto& x : y) x = R.reduce(x * c);
}

bool all_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](Int x) { return x == 0; });
}

HowellForm howell_impl(const Ring& R, const Mat& A, bool track) {
  for (Int x : A.a)
    if (x < 0 || x >= R.modulus()) fail_input("howell: entries must be reduced mod p^n");
  const int r = A.rows, c = A.cols, n = R.n();

  std::vector<Vec> pool_rows, pool_trans;
  for (int i = 0; i < r; ++i) {
    Vec row = A.row(i);
    if (all_zero(row)) continue;
    pool_rows.push_back(std::move(row));
    Vec t;
    if (track) {
      t.assign(r, 0);
      t[i] = 1;
    }
    pool_trans.push_back(std::move(t));
  }

  std::vector<Vec> hr, ht;
  std::vector<int> piv;
  for (int col = 0; col < c && !pool_rows.empty(); ++col) {
    int best = -1, bv = n;
    Int bx = 0;
    for (int k = 0; k < static_cast<int>(pool_rows.size()); ++k) {
      const Int x = pool_rows[k][col];
      if (x == 0) continue;
      const int v = R.valuation(x);
      if (best < 0 || v < bv || (v == bv && x < bx)) {
        best = k;
        bv = v;
        bx = x;
      }
    }
    if (best < 0) continue;

    Vec row = std::move(pool_rows[best]);
    Vec tr = std::move(pool_trans[best]);
    pool_rows.erase(pool_rows.begin() + best);
    pool_trans.erase(pool_trans.begin() + best);

    const Int pk = R.pow(bv);
    const Int inv = R.unit_inverse(row[col] / pk);
    scale_vec(R, row, inv);
    if (track) scale_vec(R, tr, inv);

    for (std::size_t k = 0; k < pool_rows.size(); ++k) {
      const Int x = pool_rows[k][col];
      if (x == 0) continue;
      const Int q = x / pk;
      axpy(R, pool_rows[k], q, row);
      if (track) axpy(R, pool_trans[k], q, tr);
    }
    if (bv > 0) {
      Vec extra = row, et = tr;
      scale_vec(R, extra, R.pow(n - bv));
      if (track) scale_vec(R, et, R.pow(n - bv));
      if (!all_zero(extra)) {
        pool_rows.push_back(std::move(extra));
        pool_trans.push_back(std::move(et));
      }
    }
    // drop rows that became zero
    for (std::size_t k = pool_rows.size(); k-- > 0;)
      if (all_zero(pool_rows[k])) {
        pool_rows.erase(pool_rows.begin() + static_cast<std::ptrdiff_t>(k));
        pool_trans.erase(pool_trans.begin() + static_cast<std::ptrdiff_t>(k));
      }

    hr.push_back(std::move(row));
    ht.push_back(std::move(tr));
    piv.push_back(col);
  }

  // reduce entries above each pivot, pivots left to right
  for (std::size_t i = 0; i < hr.size(); ++i) {
    const int col = piv[i];
    const Int pk = hr[i][col];
    for (std::size_t j = 0; j < i; ++j) {
      const Int q = hr[j][col] / pk;
      if (q == 0) continue;
      axpy(R, hr[j], q, hr[i]);
      if (track) axpy(R, ht[j], q, ht[i]);
    }
  }

  HowellForm out;
  out.H = Mat(static_cast<int>(hr.size()), c);
  out.U = Mat(static_cast<int>(hr.size()), track ? r : 0);
  for (int i = 0; i < out.H.rows; ++i) {
    for (int j = 0; j < c; ++j) out.H(i, j) = hr[i][j];
    if (track)
      for (int j = 0; j < r; ++j) out.U(i, j) = ht[i][j];
  }
  out.pivots = std::move(piv);
  return out;
}

Mat reduced_copy(const Ring& R, Mat A) {
  for (auto& x : A.a) x = R.reduce(x);
  return A;
}

// [C^T | I] where C = [F | diag(p^{b_i})]
Mat solver_matrix(const Ring& R, const ZpnMatrix& f) {
  const int r = f.rows(), c = f.cols(), w = c + r;
  Mat M(w, r + w);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < c; ++j) M(j, i) = R.reduce(f.m(i, j));
    M(c + i, i) = R.reduce(R.pow(f.tgt[i]));
  }
  for (int k = 0; k < w; ++k) M(k, r + k) = 1;
  return M;
}

ZpnMatrix free_map(const Ring& R, const Partition& ambient, const Mat& gens) {
  return make_map(R, Partition(gens.cols, R.n()), ambient, gens);
}

}  // namespace

HowellForm howell_form(const Ring& R, const Mat& A) { return howell_impl(R, A, true); }

Mat left_kernel(const Ring& R, const Mat& A) {
  const int r = A.rows, c = A.cols;
  Mat aug = hcat(reduced_copy(R, A), Mat::identity(r));
  HowellForm h = howell_impl(R, aug, false);
  Mat K(0, r);
  for (int i = 0; i < h.H.rows; ++i) {
    if (h.pivots[i] < c) continue;
    Vec v(r);
    for (int j = 0; j < r; ++j) v[j] = h.H(i, c + j);
    K.append_row(v);
  }
  return K;
}

Mat kernel_rows(const Ring& R, const ZpnMatrix& f) {
  const int r = f.rows(), c = f.cols();
  HowellForm h = howell_impl(R, solver_matrix(R, f), false);
  Mat K(0, c);
  for (int i = 0; i < h.H.rows; ++i) {
    if (h.pivots[i] < r) continue;
    Vec x(c);
    for (int j = 0; j < c; ++j) x[j] = h.H(i, r + j);
    x = reduce_elem(R, f.src, std::move(x));
    if (!all_zero(x)) K.append_row(x);
  }
  return K;
}

Submodule kernel(const Ring& R, const ZpnMatrix& f) {
  return basis_of_span(R, f.src, kernel_rows(R, f).transpose());
}

Diagonalization presentation_to_partition(const Ring& R, const Mat& relations, int k) {
  if (relations.cols != k) fail_input("presentation: relation width differs from generator count");
  Mat W = reduced_copy(R, relations);
  const int r = W.rows, n = R.n();
  Mat Q = Mat::identity(k), Qi = Mat::identity(k);
  std::vector<int> ex(k, n);

  auto swap_rows = [](Mat& M, int a, int b) {
    if (a == b) return;
    for (int j = 0; j < M.cols; ++j) std::swap(M(a, j), M(b, j));
  };
  auto swap_cols = [](Mat& M, int a, int b) {
    if (a == b) return;
    for (int i = 0; i < M.rows; ++i) std::swap(M(i, a), M(i, b));
  };

  for (int t = 0; t < std::min(r, k); ++t) {
    int bi = -1, bj = -1, bv = n;
    Int bx = 0;
    for (int i = t; i < r; ++i)
      for (int j = t; j < k; ++j) {
        const Int x = W(i, j);
        if (x == 0) continue;
        const int v = R.valuation(x);
        if (bi < 0 || v < bv || (v == bv && x < bx)) {
          bi = i;
          bj = j;
          bv = v;
          bx = x;
        }
      }
    if (bi < 0) break;
    swap_rows(W, t, bi);
    swap_cols(W, t, bj);
    swap_cols(Q, t, bj);
    swap_rows(Qi, t, bj);

    const Int pk = R.pow(bv);
    const Int inv = R.unit_inverse(W(t, t) / pk);
    for (int j = 0; j < k; ++j) W(t, j) = R.reduce(W(t, j) * inv);
    for (int i = t + 1; i < r; ++i) {
      const Int q = W(i, t) / pk;
      if (q == 0) continue;
      for (int j = 0; j < k; ++j) W(i, j) = R.reduce(W(i, j) - q * W(t, j));
    }
    for (int j = t + 1; j < k; ++j) {
      const Int q = W(t, j) / pk;
      if (q == 0) continue;
      for (int i = 0; i < r; ++i) W(i, j) = R.reduce(W(i, j) - q * W(i, t));
      for (int i = 0; i < k; ++i) Q(i, j) = R.reduce(Q(i, j) - q * Q(i, t));
      for (int i = 0; i < k; ++i) Qi(t, i) = R.reduce(Qi(t, i) + q * Qi(j, i));
    }
    ex[t] = bv;
  }

  Diagonalization d;
  std::vector<int> keep;
  for (int l = k - 1; l >= 0; --l)
    if (ex[l] > 0) keep.push_back(l);
  d.Q = Mat(k, static_cast<int>(keep.size()));
  d.Qinv = Mat(static_cast<int>(keep.size()), k);
  for (std::size_t s = 0; s < keep.size(); ++s) {
    const int l = keep[s];
    d.parts.push_back(ex[l]);
    for (int j = 0; j < k; ++j) {
      d.Q(j, static_cast<int>(s)) = Q(j, l);
      d.Qinv(static_cast<int>(s), j) = Qi(l, j);
    }
  }
  return d;
}

Submodule basis_of_span(const Ring& R, const Partition& ambient, const Mat& gens) {
  if (gens.rows != static_cast<int>(ambient.size())) fail_input("span: generator length mismatch");
  Submodule s{ambient, Mat(static_cast<int>(ambient.size()), 0), {}};
  if (gens.cols == 0) return s;
  ZpnMatrix g = free_map(R, ambient, gens);
  Mat rel = kernel_rows(R, g);
  Diagonalization d = presentation_to_partition(R, rel, gens.cols);
  s.orders = d.parts;
  s.gens = mul(R, g.m, d.Qinv.transpose());
  for (int i = 0; i < s.gens.rows; ++i)
    for (int j = 0; j < s.gens.cols; ++j) s.gens(i, j) = R.reduce(s.gens(i, j), ambient[i]);
  return s;
}

Solver::Solver(const Ring& R, ZpnMatrix f) : R_(R), f_(std::move(f)) {
  const int r = f_.rows(), c = f_.cols();
  aug_ = howell_impl(R_, solver_matrix(R_, f_), false);
  first_block_ = 0;
  while (first_block_ < aug_.H.rows && aug_.pivots[first_block_] < r) ++first_block_;

  Mat N(0, c);
  for (int i = first_block_; i < aug_.H.rows; ++i) {
    Vec x(c);
    for (int j = 0; j < c; ++j) x[j] = aug_.H(i, r + j);
    x = reduce_elem(R_, f_.src, std::move(x));
    if (!all_zero(x)) N.append_row(x);
  }
  for (int j = 0; j < c; ++j) {
    Vec x(c, 0);
    x[j] = R_.reduce(R_.pow(f_.src[j]));
    if (!all_zero(x)) N.append_row(x);
  }
  null_ = howell_impl(R_, N, false);
}

std::optional<Vec> Solver::solve(const Vec& b) const {
  const int r = f_.rows(), c = f_.cols();
  if (static_cast<int>(b.size()) != r) fail_input("solve: right-hand side length mismatch");
  const int w = c + r;
  Vec v(r + w, 0);
  for (int i = 0; i < r; ++i) v[i] = R_.reduce(b[i], f_.tgt[i]);
  for (int i = 0; i < first_block_; ++i) {
    const int col = aug_.pivots[i];
    const Int pk = aug_.H(i, col);
    if (v[col] % pk != 0) return std::nullopt;
    axpy(R_, v, v[col] / pk, aug_.H.row(i));
  }
  for (int i = 0; i < r; ++i)
    if (v[i] != 0) return std::nullopt;
  Vec x(c);
  for (int j = 0; j < c; ++j) x[j] = R_.reduce(-v[r + j]);
  for (int i = 0; i < null_.H.rows; ++i) {
    const int col = null_.pivots[i];
    const Int q = x[col] / null_.H(i, col);
    axpy(R_, x, q, null_.H.row(i));
  }
  return reduce_elem(R_, f_.src, std::move(x));
}

std::optional<Vec> solve(const Ring& R, const ZpnMatrix& f, const Vec& b) { return Solver(R, f).solve(b); }

Partition hom_orders(const Partition& a, const Partition& b) {
  Partition o;
  for (int bi : b)
    for (int aj : a) o.push_back(std::min(aj, bi));
  return o;
}

std::vector<ZpnMatrix> hom_basis(const Ring& R, const Partition& a, const Partition& b) {
  std::vector<ZpnMatrix> out;
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) {
      ZpnMatrix e = zero_map(a, b);
      e.m(static_cast<int>(i), static_cast<int>(j)) = R.pow(std::max(0, b[i] - a[j]));
      out.push_back(std::move(e));
    }
  return out;
}

Vec hom_coords(const Ring& R, const ZpnMatrix& f) {
  Vec c;
  c.reserve(f.m.a.size());
  for (int i = 0; i < f.rows(); ++i)
    for (int j = 0; j < f.cols(); ++j) {
      const int sh = std::max(0, f.tgt[i] - f.src[j]);
      c.push_back(R.reduce(f.m(i, j), f.tgt[i]) / R.pow(sh));
    }
  return c;
}

ZpnMatrix hom_from_coords(const Ring& R, const Partition& a, const Partition& b, const Vec& c) {
  ZpnMatrix f = zero_map(a, b);
  std::size_t k = 0;
  for (int i = 0; i < f.rows(); ++i)
    for (int j = 0; j < f.cols(); ++j, ++k)
      f.m(i, j) = R.reduce(c[k] * R.pow(std::max(0, b[i] - a[j])), b[i]);
  return f;
}

Mat submodule_intersection(const Ring& R, const Partition& ambient, const Mat& A, const Mat& B) {
  const int m = static_cast<int>(ambient.size());
  Mat negB = B;
  for (auto& x : negB.a) x = R.reduce(-x);
  ZpnMatrix f = free_map(R, ambient, hcat(A, negB));
  Mat K = kernel_rows(R, f);
  Mat Y(A.cols, K.rows);
  for (int i = 0; i < K.rows; ++i)
    for (int j = 0; j < A.cols; ++j) Y(j, i) = K(i, j);
  Mat img = mul(R, reduced_copy(R, A), Y);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < img.cols; ++j) img(i, j) = R.reduce(img(i, j), ambient[i]);
  return basis_of_span(R, ambient, img).gens;
}

bool in_span(const Ring& R, const Partition& ambient, const Mat& gens, const Vec& x) {
  if (gens.cols == 0) return is_zero_elem(R, ambient, x);
  return Solver(R, free_map(R, ambient, gens)).solve(x).has_value();
}

bool span_contains(const Ring& R, const Partition& ambient, const Mat& big, const Mat& small) {
  if (big.cols == 0) {
    for (int j = 0; j < small.cols; ++j)
      if (!is_zero_elem(R, ambient, small.col(j))) return false;
    return true;
  }
  Solver s(R, free_map(R, ambient, big));
  for (int j = 0; j < small.cols; ++j)
    if (!s.solve(small.col(j))) return false;
  return true;
}

Mat preimage(const Ring& R, const ZpnMatrix& f, const Mat& S) {
  Mat negS = S;
  for (auto& x : negS.a) x = R.reduce(-x);
  ZpnMatrix g = make_map(R, concat(f.src, Partition(S.cols, R.n())), f.tgt, hcat(f.m, negS));
  Mat K = kernel_rows(R, g);
  const int c = f.cols();
  std::vector<Vec> cols;
  for (int i = 0; i < K.rows; ++i) {
    Vec x(K.a.begin() + static_cast<std::ptrdiff_t>(i) * K.cols, K.a.begin() + static_cast<std::ptrdiff_t>(i) * K.cols + c);
    x = reduce_elem(R, f.src, std::move(x));
    if (!all_zero(x)) cols.push_back(std::move(x));
  }
  return from_cols(cols, c);
}

Mat scaled_identity(const Ring& R, const Partition& a, int i) {
  std::vector<Vec> cols;
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (i >= a[j]) continue;
    Vec x(a.size(), 0);
    x[j] = R.pow(i);
    cols.push_back(std::move(x));
  }
  return from_cols(cols, static_cast<int>(a.size()));
}

}  // namespace monocat
