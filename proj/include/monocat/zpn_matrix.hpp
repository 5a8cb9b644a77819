#pragma once

#include <string>
#include <vector>

#include "monocat/matrix.hpp"

namespace monocat {

/// Exponents of a direct sum of cyclic modules Z/p^{a_1} ⊕ ... ⊕ Z/p^{a_m}, in
/// coordinate order. Coordinate order is not required to be sorted; use
/// `canonical` for the isomorphism-type (weakly decreasing) form.
using Partition = std::vector<int>;

Partition canonical(Partition a);
int total_length(const Partition& a);
void check_partition(const Ring& R, const Partition& a);
std::string to_string(const Partition& a);
Partition concat(const Partition& a, const Partition& b);

/// A homomorphism M(src) -> M(tgt) written on the cyclic generators.
/// Entry (i,j) is divisible by p^{max(0, tgt[i]-src[j])} and reduced into [0, p^{tgt[i]}).
struct ZpnMatrix {
  Partition src;
  Partition tgt;
  Mat m;

  int rows() const { return m.rows; }
  int cols() const { return m.cols; }
  Int operator()(int i, int j) const { return m(i, j); }

  friend bool operator==(const ZpnMatrix&, const ZpnMatrix&) = default;
};

/// Reduce the entries into canonical range and validate divisibility.
ZpnMatrix make_map(const Ring& R, Partition src, Partition tgt, Mat m);
/// Validate without modifying: entries must already be canonical.
void check_map(const Ring& R, const ZpnMatrix& f);

ZpnMatrix zero_map(const Partition& src, const Partition& tgt);
ZpnMatrix identity_map(const Partition& a);
ZpnMatrix compose(const Ring& R, const ZpnMatrix& g, const ZpnMatrix& f);  // g ∘ f
ZpnMatrix add(const Ring& R, const ZpnMatrix& f, const ZpnMatrix& g);
ZpnMatrix sub(const Ring& R, const ZpnMatrix& f, const ZpnMatrix& g);
ZpnMatrix scale(const Ring& R, Int c, const ZpnMatrix& f);
ZpnMatrix block_diag(const ZpnMatrix& f, const ZpnMatrix& g);

/// Reduce a raw vector into M(a).
Vec reduce_elem(const Ring& R, const Partition& a, Vec x);
bool is_zero_elem(const Ring& R, const Partition& a, const Vec& x);
Vec apply(const Ring& R, const ZpnMatrix& f, const Vec& x);

/// p-height of an element of M(a) (n for zero).
int height(const Ring& R, const Partition& a, const Vec& x);

}  // namespace monocat
