#include "monocat/fp_algebra.hpp"

#include <cstdint>
#include <stdexcept>

#include "monocat/ring.hpp"

namespace monocat::fp {

namespace {

int inv_mod(int a, int p) {
  Int r = 1, b = a, e = p - 2;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<int>(r);
}

int md(Int x, int p) { return static_cast<int>(((x % p) + p) % p); }

using IMat = std::vector<std::vector<Int>>;

IMat imul(const IMat& A, const IMat& B, Int m) {
  const std::size_t d = A.size();
  IMat C(d, std::vector<Int>(d, 0));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k) {
      const Int a = A[i][k];
      if (a == 0) continue;
      for (std::size_t j = 0; j < d; ++j) C[i][j] = (C[i][j] + a * B[k][j]) % m;
    }
  return C;
}

IMat ipow(IMat X, Int e, Int m) {
  const std::size_t d = X.size();
  IMat R(d, std::vector<Int>(d, 0));
  for (std::size_t i = 0; i < d; ++i) R[i][i] = 1 % m;
  while (e > 0) {
    if (e & 1) R = imul(R, X, m);
    e >>= 1;
    if (e > 0) X = imul(X, X, m);
  }
  return R;
}

/// Left-regular matrix of x, entries in [0, p): column b holds x·e_b.
IMat regular(const Algebra& A, const FVec& x) {
  const int d = A.dim;
  IMat L(d, std::vector<Int>(d, 0));
  for (int a = 0; a < d; ++a) {
    if (x[a] == 0) continue;
    for (int b = 0; b < d; ++b)
      for (int c = 0; c < d; ++c) L[c][b] += static_cast<Int>(x[a]) * A.c(a, b, c);
  }
  for (auto& row : L)
    for (auto& v : row) v %= A.p;
  return L;
}

}  // namespace

FMat rref(int p, FMat rows, std::vector<int>* pivots) {
  std::vector<int> piv;
  if (rows.empty()) {
    if (pivots) *pivots = piv;
    return rows;
  }
  const int width = static_cast<int>(rows[0].size());
  std::size_t r = 0;
  for (int c = 0; c < width && r < rows.size(); ++c) {
    std::size_t s = r;
    while (s < rows.size() && rows[s][c] % p == 0) ++s;
    if (s == rows.size()) continue;
    std::swap(rows[r], rows[s]);
    const int iv = inv_mod(md(rows[r][c], p), p);
    for (auto& v : rows[r]) v = md(static_cast<Int>(v) * iv, p);
    for (std::size_t t = 0; t < rows.size(); ++t) {
      if (t == r || rows[t][c] % p == 0) continue;
      const Int f = md(rows[t][c], p);
      for (int j = 0; j < width; ++j) rows[t][j] = md(rows[t][j] - f * rows[r][j], p);
    }
    piv.push_back(c);
    ++r;
  }
  rows.resize(r);
  if (pivots) *pivots = piv;
  return rows;
}

int rank(int p, const FMat& rows) { return static_cast<int>(rref(p, rows).size()); }

FMat left_nullspace(int p, const FMat& rows, int width) {
  const int k = static_cast<int>(rows.size());
  FMat aug;
  for (int i = 0; i < k; ++i) {
    FVec r(width + k, 0);
    for (int j = 0; j < width; ++j) r[j] = md(rows[i][j], p);
    r[width + i] = 1;
    aug.push_back(std::move(r));
  }
  std::vector<int> piv;
  aug = rref(p, std::move(aug), &piv);
  FMat out;
  for (std::size_t i = 0; i < aug.size(); ++i)
    if (piv[i] >= width) out.emplace_back(aug[i].begin() + width, aug[i].end());
  return out;
}

bool in_span(int p, const FMat& basis, const std::vector<int>& pivots, FVec x) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const Int f = md(x[pivots[i]], p);
    if (f == 0) continue;
    for (std::size_t j = 0; j < x.size(); ++j) x[j] = md(x[j] - f * basis[i][j], p);
  }
  for (int v : x)
    if (v != 0) return false;
  return true;
}

FVec Algebra::mul(const FVec& x, const FVec& y) const {
  std::vector<Int> z(dim, 0);
  for (int a = 0; a < dim; ++a) {
    if (x[a] == 0) continue;
    for (int b = 0; b < dim; ++b) {
      if (y[b] == 0) continue;
      const Int s = static_cast<Int>(x[a]) * y[b];
      for (int k = 0; k < dim; ++k) z[k] += s * c(a, b, k);
    }
  }
  FVec out(dim);
  for (int k = 0; k < dim; ++k) out[k] = md(z[k], p);
  return out;
}

FVec Algebra::pow(FVec x, std::uint64_t e) const {
  FVec r = one;
  while (e > 0) {
    if (e & 1) r = mul(r, x);
    e >>= 1;
    if (e > 0) x = mul(x, x);
  }
  return r;
}

FVec Algebra::add(const FVec& x, const FVec& y) const {
  FVec z(dim);
  for (int k = 0; k < dim; ++k) z[k] = (x[k] + y[k]) % p;
  return z;
}

FVec Algebra::scale(int s, const FVec& x) const {
  FVec z(dim);
  for (int k = 0; k < dim; ++k) z[k] = md(static_cast<Int>(s) * x[k], p);
  return z;
}

FVec Algebra::unit(int a) const {
  FVec e(dim, 0);
  e[a] = 1;
  return e;
}

bool Algebra::is_zero(const FVec& x) const {
  for (int v : x)
    if (v != 0) return false;
  return true;
}

FMat radical(const Algebra& A) {
  const int d = A.dim;
  const int p = A.p;
  FMat I;
  for (int a = 0; a < d; ++a) I.push_back(A.unit(a));
  Int q = 1;  // p^i
  for (int i = 0; q <= d && !I.empty(); ++i, q *= p) {
    const Int m = q * p;
    FMat G;
    for (const auto& r : I) {
      FVec row(d);
      for (int s = 0; s < d; ++s) {
        const IMat P = ipow(regular(A, A.mul(r, A.unit(s))), q, m);
        Int t = 0;
        for (int c = 0; c < d; ++c) t += P[c][c];
        row[s] = md((t % m) / q, p);
      }
      G.push_back(std::move(row));
    }
    FMat next;
    for (const auto& cvec : left_nullspace(p, G, d)) {
      FVec x(d, 0);
      for (std::size_t k = 0; k < I.size(); ++k)
        if (cvec[k] != 0) x = A.add(x, A.scale(cvec[k], I[k]));
      next.push_back(std::move(x));
    }
    I = rref(p, std::move(next));
  }
  return I;
}

Algebra quotient(const Algebra& A, const FMat& J, const std::vector<int>& pivots, std::vector<int>* complement) {
  std::vector<bool> is_piv(A.dim, false);
  for (int c : pivots) is_piv[c] = true;
  std::vector<int> comp;
  for (int c = 0; c < A.dim; ++c)
    if (!is_piv[c]) comp.push_back(c);
  auto reduce = [&](FVec x) {
    for (std::size_t i = 0; i < J.size(); ++i) {
      const Int f = x[pivots[i]];
      if (f == 0) continue;
      for (int j = 0; j < A.dim; ++j) x[j] = md(x[j] - f * J[i][j], A.p);
    }
    FVec out;
    for (int c : comp) out.push_back(x[c]);
    return out;
  };
  Algebra B;
  B.p = A.p;
  B.dim = static_cast<int>(comp.size());
  B.mult.assign(static_cast<std::size_t>(B.dim) * B.dim * B.dim, 0);
  for (int a = 0; a < B.dim; ++a)
    for (int b = 0; b < B.dim; ++b) {
      const FVec prod = reduce(A.mul(A.unit(comp[a]), A.unit(comp[b])));
      for (int k = 0; k < B.dim; ++k) B.mult[(static_cast<std::size_t>(a) * B.dim + b) * B.dim + k] = prod[k];
    }
  B.one = reduce(A.one);
  if (complement) *complement = comp;
  return B;
}

FMat center(const Algebra& A) {
  const int d = A.dim;
  FMat rows;
  for (int i = 0; i < d; ++i) {
    FVec r(static_cast<std::size_t>(d) * d);
    for (int b = 0; b < d; ++b)
      for (int c = 0; c < d; ++c) r[b * d + c] = md(A.c(i, b, c) - A.c(b, i, c), A.p);
    rows.push_back(std::move(r));
  }
  return rref(A.p, left_nullspace(A.p, rows, d * d));
}

FMat frobenius_fixed(const Algebra& A, const FMat& basis) {
  FMat rows;
  for (const auto& s : basis) rows.push_back(A.add(A.pow(s, A.p), A.scale(A.p - 1, s)));
  FMat out;
  for (const auto& cvec : left_nullspace(A.p, rows, A.dim)) {
    FVec x(A.dim, 0);
    for (std::size_t k = 0; k < basis.size(); ++k)
      if (cvec[k] != 0) x = A.add(x, A.scale(cvec[k], basis[k]));
    out.push_back(std::move(x));
  }
  return rref(A.p, std::move(out));
}

std::optional<FVec> split_idempotent(const Algebra& A, const FVec& z) {
  const int p = A.p;
  for (int lam = 0; lam < p; ++lam) {
    FVec e = A.one;
    for (int mu = 0; mu < p; ++mu) {
      if (mu == lam) continue;
      const FVec f = A.add(z, A.scale(p - mu, A.one));
      e = A.scale(inv_mod(md(lam - mu, p), p), A.mul(e, f));
    }
    if (!A.is_zero(e) && e != A.one) return e;
  }
  return std::nullopt;
}

namespace {

std::optional<FVec> nonscalar(const Algebra& B, const FMat& fixed) {
  for (const auto& z : fixed)
    if (rank(B.p, {B.one, z}) == 2) return z;
  return std::nullopt;
}

}  // namespace

Structure analyze(const Algebra& A, std::mt19937_64& rng, std::optional<FVec>* idempotent) {
  Structure st;
  st.dim = A.dim;
  std::vector<int> piv;
  const FMat J = rref(A.p, radical(A), &piv);
  st.radical_dim = static_cast<int>(J.size());
  std::vector<int> comp;
  const Algebra B = quotient(A, J, piv, &comp);
  const FMat Z = center(B);
  const FMat Zfix = frobenius_fixed(B, Z);
  st.center_dim = static_cast<int>(Z.size());
  st.center_split = static_cast<int>(Zfix.size());
  st.local = B.dim == st.center_dim && st.center_split == 1;
  if (st.local || !idempotent) return st;

  std::optional<FVec> z = nonscalar(B, Zfix);
  std::uniform_int_distribution<int> coef(0, A.p - 1);
  for (int attempt = 0; !z && attempt < 2000; ++attempt) {
    FVec x(B.dim);
    for (auto& v : x) v = coef(rng);
    FMat powers{B.one};
    FVec y = B.one;
    for (;;) {
      y = B.mul(y, x);
      FMat trial = powers;
      trial.push_back(y);
      if (rank(B.p, trial) == static_cast<int>(powers.size())) break;
      powers = std::move(trial);
    }
    z = nonscalar(B, frobenius_fixed(B, powers));
  }
  if (!z) throw InternalError("no splitting element found in a non-local algebra");
  const auto e = split_idempotent(B, *z);
  if (!e) throw InternalError("splitting element gave no idempotent");
  FVec lift(A.dim, 0);
  for (std::size_t k = 0; k < comp.size(); ++k) lift[comp[k]] = (*e)[k];
  *idempotent = lift;
  return st;
}

}  // namespace monocat::fp
