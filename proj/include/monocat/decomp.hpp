#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "monocat/fp_algebra.hpp"
#include "monocat/rep.hpp"

namespace monocat {

/// End(M) together with its reduction E/pE as an F_p-algebra on the hom generators.
struct EndRing {
  HomGroup hom;
  fp::Algebra top;  // E/pE
};
EndRing end_ring(const Rep& M);

/// A subrepresentation given by per-vertex generators, with its inclusion into M.
struct SubRep {
  Rep rep;
  RepMorphism inclusion;
};
/// Smallest subrepresentation containing the columns of gens[v] at each vertex.
/// The columns must already span a subrepresentation (closed under the arrow maps).
SubRep subrep_from_generators(const Rep& M, const std::vector<Mat>& gens);

struct IndecResult {
  bool indecomposable = false;
  fp::Structure structure;            // locality data of E/pE
  std::optional<RepMorphism> idempotent;  // nontrivial idempotent of End(M) when decomposable
};
/// Exact: End(M) is local iff E/pE modulo its radical is a field.
IndecResult is_indecomposable(const Rep& M, std::uint64_t seed = 0);

struct Factor {
  Rep rep;
  int multiplicity = 1;
  fp::Structure structure;
};

/// M ≅ ⊕ factors (with multiplicity). `inclusion` is an isomorphism from `sum` (the factors
/// expanded in order) onto M and `inverse` is its inverse; both are verified on construction.
struct Decomposition {
  std::vector<Factor> factors;
  Rep sum;
  RepMorphism inclusion;
  RepMorphism inverse;
  std::uint64_t seed = 0;
};
Decomposition decompose(const Rep& M, std::uint64_t seed = 0);

/// Isomorphism test for two indecomposables with the same quiver and ring.
bool indecomposables_isomorphic(const Rep& X, const Rep& Y);
bool is_isomorphic(const Rep& M, const Rep& N, std::uint64_t seed = 0);

/// A2 only: remove summands with zero source module. `stripped` lists the target parts
/// of the removed summands (canonical order); `residual` is M itself if nothing is removed.
struct StripResult {
  Rep residual;
  Partition stripped;
};
StripResult strip_Y(const Rep& M, std::uint64_t seed = 0);

}  // namespace monocat
