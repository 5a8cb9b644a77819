#pragma once

#include <vector>

#include "monocat/rep.hpp"

namespace monocat {

/// A finite p-valuated group of exponent ≤ p^n as a filtration
/// B(0) = M(ambient) ⊇ B(1) ⊇ … ⊇ B(n) = 0 with p·B(i) ⊆ B(i+1).
/// levels[i] holds generator columns of B(i), for i = 0..n.
struct ValuatedGroup {
  Ring ring{2, 1};
  Partition ambient;
  std::vector<Mat> levels;
};

/// Validates the filtration axioms; returns the group unchanged.
ValuatedGroup make_valuated_group(const Ring& R, const Partition& ambient, std::vector<Mat> levels);
void check_valuated_group(const ValuatedGroup& B);

/// v(x) = max{i : x ∈ B(i)}; n stands for ∞ (x = 0).
int valuation(const ValuatedGroup& B, const Vec& x);

/// The functor Φ on a monomorphic A2 representation: ambient is the source module,
/// B(i) = {x : h(x) ∈ p^i·M_target}.
ValuatedGroup phi(const Rep& M);

/// φ: ambient(B) -> ambient(C) must not lower valuations; throws InputError otherwise.
void check_vg_morphism(const ValuatedGroup& B, const ValuatedGroup& C, const ZpnMatrix& f);
/// Injective and valuation-preserving.
bool is_inflation(const ValuatedGroup& B, const ValuatedGroup& C, const ZpnMatrix& f);
/// Every level B(i) maps onto C(i).
bool is_deflation(const ValuatedGroup& B, const ValuatedGroup& C, const ZpnMatrix& f);
/// B(i) = p^i·B(0) for all i (valuation equals height).
bool is_injective_vg(const ValuatedGroup& B);
/// Level-wise equality of spans.
bool same_filtration(const ValuatedGroup& B, const ValuatedGroup& C);

/// Isomorphism of Φ(M) and Φ(N), decided on realizations: compare M and N with their
/// summands of the form (0 -> Y) removed.
bool vg_iso(const Rep& M, const Rep& N);

}  // namespace monocat
