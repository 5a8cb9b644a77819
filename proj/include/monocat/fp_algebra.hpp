#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace monocat::fp {

/// Vectors and matrices over the prime field F_p, entries in [0, p).
using FVec = std::vector<int>;
using FMat = std::vector<FVec>;  // list of rows

/// Row-reduced echelon basis of the span of `rows`; `pivots` receives pivot columns.
FMat rref(int p, FMat rows, std::vector<int>* pivots = nullptr);
int rank(int p, const FMat& rows);
/// Basis of {x : Σ_k x_k rows[k] = 0}.
FMat left_nullspace(int p, const FMat& rows, int width);
bool in_span(int p, const FMat& basis_rref, const std::vector<int>& pivots, FVec x);

/// Finite-dimensional associative unital algebra over F_p given by structure constants:
/// e_a·e_b = Σ_c mult[(a·d + b)·d + c] e_c.
struct Algebra {
  int p = 2;
  int dim = 0;
  std::vector<int> mult;
  FVec one;

  int c(int a, int b, int k) const { return mult[(static_cast<std::size_t>(a) * dim + b) * dim + k]; }
  FVec mul(const FVec& x, const FVec& y) const;
  FVec pow(FVec x, std::uint64_t e) const;
  FVec add(const FVec& x, const FVec& y) const;
  FVec scale(int s, const FVec& x) const;
  FVec unit(int a) const;
  bool is_zero(const FVec& x) const;
};

/// Jacobson radical as an rref basis (trace-form chain over lifted regular representations).
FMat radical(const Algebra& A);
/// A / I for an ideal I (rref basis with pivots); `complement` receives the indices of the
/// standard basis vectors that form the quotient basis.
Algebra quotient(const Algebra& A, const FMat& ideal_rref, const std::vector<int>& pivots,
                 std::vector<int>* complement = nullptr);
FMat center(const Algebra& A);
/// Fixed points of x ↦ x^p inside a commutative subalgebra spanned by `basis`.
FMat frobenius_fixed(const Algebra& A, const FMat& basis);
/// Idempotent from an element z with z^p = z that is not a scalar: indicator of one eigenvalue.
std::optional<FVec> split_idempotent(const Algebra& A, const FVec& z);

struct Structure {
  int dim = 0;
  int radical_dim = 0;
  int center_dim = 0;     // of A/J
  int center_split = 0;   // number of simple factors of the center of A/J
  bool local = false;
};

/// Locality data; when not local and `idempotent` is given, a nontrivial idempotent of A/J
/// written as an element of A (coset representative) is produced.
Structure analyze(const Algebra& A, std::mt19937_64& rng, std::optional<FVec>* idempotent);

}  // namespace monocat::fp
