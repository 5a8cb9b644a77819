#pragma once

#include <optional>
#include <vector>

#include "monocat/zpn_matrix.hpp"

namespace monocat {

struct HowellForm {
  Mat H;                    // nonzero rows only, echelon, pivots p^k
  Mat U;                    // H = U·A  (rows(H) x rows(A))
  std::vector<int> pivots;  // pivot column of each row of H
};

/// Howell normal form of the row span of A over Z/p^n. Entries must be reduced.
HowellForm howell_form(const Ring& R, const Mat& A);

/// Rows x with x·A = 0, spanning the whole left kernel.
Mat left_kernel(const Ring& R, const Mat& A);

/// A finite submodule of an ambient M(a), given by independent cyclic generators.
/// Column l of `gens` has additive order p^{orders[l]}; orders are weakly decreasing.
struct Submodule {
  Partition ambient;
  Mat gens;
  Partition orders;

  /// The inclusion M(orders) -> M(ambient).
  ZpnMatrix inclusion() const { return ZpnMatrix{orders, ambient, gens}; }
};

/// Raw generating vectors (rows) of ker f, reduced into the source module.
Mat kernel_rows(const Ring& R, const ZpnMatrix& f);
Submodule kernel(const Ring& R, const ZpnMatrix& f);

/// Independent cyclic generators for the span of the columns of `gens` inside M(ambient).
Submodule basis_of_span(const Ring& R, const Partition& ambient, const Mat& gens);

/// Result of diagonalizing a presentation: with generators x_1..x_k and relation rows,
/// new generators z_l = Σ_j Qinv[l][j] x_j of order p^{parts[l]}, and x_j = Σ_l Q[j][l] z_l.
/// Generators of trivial order are dropped, so Q is k x m and Qinv is m x k.
struct Diagonalization {
  Partition parts;
  Mat Q;
  Mat Qinv;
};
Diagonalization presentation_to_partition(const Ring& R, const Mat& relations, int generators);

/// Precomputed solver for f(x) = b returning the lexicographically smallest solution.
class Solver {
 public:
  Solver(const Ring& R, ZpnMatrix f);
  std::optional<Vec> solve(const Vec& b) const;
  const ZpnMatrix& map() const { return f_; }

 private:
  Ring R_;
  ZpnMatrix f_;
  HowellForm aug_;   // Howell([C^T | I]) with C = [F | diag(p^{b_i})]
  int first_block_;  // number of pivots lying in the C^T block
  HowellForm null_;  // Howell of ker f ∪ {p^{a_j} e_j}, inside Z/p^n^c
};

std::optional<Vec> solve(const Ring& R, const ZpnMatrix& f, const Vec& b);

/// Coordinate generators of Hom(M(a), M(b)), row-major over (i, j);
/// generator (i,j) has entry p^{max(0,b_i-a_j)} and order p^{min(a_j,b_i)}.
std::vector<ZpnMatrix> hom_basis(const Ring& R, const Partition& a, const Partition& b);
Partition hom_orders(const Partition& a, const Partition& b);
/// Coordinates of f in the hom_basis.
Vec hom_coords(const Ring& R, const ZpnMatrix& f);
ZpnMatrix hom_from_coords(const Ring& R, const Partition& a, const Partition& b, const Vec& c);

/// Generators of the intersection of the column spans of A and B inside M(ambient).
Mat submodule_intersection(const Ring& R, const Partition& ambient, const Mat& A, const Mat& B);

bool in_span(const Ring& R, const Partition& ambient, const Mat& gens, const Vec& x);
bool span_contains(const Ring& R, const Partition& ambient, const Mat& big, const Mat& small);

/// Generators (columns) of {x in M(src) : f(x) in span(S)}, S columns in M(tgt).
Mat preimage(const Ring& R, const ZpnMatrix& f, const Mat& S);

/// Generators p^i e_j of p^i·M(a).
Mat scaled_identity(const Ring& R, const Partition& a, int i);

}  // namespace monocat
