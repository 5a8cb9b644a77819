#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <vector>

#include "monocat/linalg.hpp"
#include "monocat/quiver.hpp"

namespace monocat {

/// A representation of an acyclic quiver over Z/p^n: one module per vertex and one
/// ZpnMatrix per arrow (source/target partitions equal the endpoint modules).
struct Rep {
  Quiver quiver;
  Ring ring{2, 1};
  std::vector<Partition> modules;
  std::vector<ZpnMatrix> maps;

  friend bool operator==(const Rep&, const Rep&) = default;
};

/// Validate shapes and divisibility, reduce entries into canonical range.
Rep make_rep(const Quiver& q, const Ring& R, std::vector<Partition> modules, const std::vector<Mat>& maps);
void check_rep(const Rep& M);
Rep zero_rep(const Quiver& q, const Ring& R);
Rep direct_sum(const Rep& M, const Rep& N);
int total_length(const Rep& M);
bool is_zero(const Rep& M);

/// Per-vertex components φ_i; source and target representations are carried by context.
struct RepMorphism {
  std::vector<ZpnMatrix> comps;
  friend bool operator==(const RepMorphism&, const RepMorphism&) = default;
};

RepMorphism identity_morphism(const Rep& M);
RepMorphism zero_morphism(const Rep& M, const Rep& N);
RepMorphism compose(const Ring& R, const RepMorphism& g, const RepMorphism& f);  // g ∘ f
RepMorphism add(const Ring& R, const RepMorphism& f, const RepMorphism& g);
RepMorphism sub(const Ring& R, const RepMorphism& f, const RepMorphism& g);
RepMorphism scale(const Ring& R, Int c, const RepMorphism& f);
bool is_zero(const RepMorphism& f);
/// Shapes match and every square commutes.
bool is_morphism(const Rep& M, const Rep& N, const RepMorphism& f);
/// Every component is bijective.
bool is_isomorphism(const Ring& R, const RepMorphism& f);

/// ⊕_{α: t(α)=v} M_{s(α)} -> M_v with arrows sorted by (source, index).
ZpnMatrix assembled_incoming(const Rep& M, int v);

struct MonoResult {
  bool mono = true;
  int vertex = -1;
  Vec witness;  // nonzero kernel element of the assembled incoming map
};
MonoResult is_mono(const Rep& M);

/// Hom(M, N) as a finite abelian group with independent cyclic generators.
struct HomGroup {
  std::vector<RepMorphism> gens;
  Partition orders;
  /// Coordinate group ⊕_v Hom_Λ(M_v, N_v) (hom_basis coordinates, vertex by vertex).
  Partition h0;
  std::vector<Partition> src_modules;
  std::vector<Partition> tgt_modules;
  std::shared_ptr<const Solver> solver;  // gens (as columns in h0) -> h0

  int log_order() const { return total_length(orders); }
  std::size_t size() const { return gens.size(); }
};

HomGroup hom_space(const Rep& M, const Rep& N);
Vec h0_coords(const Ring& R, const RepMorphism& f);
RepMorphism from_h0(const Ring& R, const HomGroup& H, const Vec& c);
/// Unique coordinates of f in the generators (coefficient l in [0, p^{orders[l]})).
Vec hom_coordinates(const Ring& R, const HomGroup& H, const RepMorphism& f);
RepMorphism hom_combination(const Ring& R, const HomGroup& H, const Vec& coeffs);
RepMorphism random_morphism(std::mt19937_64& rng, const Ring& R, const HomGroup& H);

/// f_!(module at vertex i): the module repeated once per path starting at i.
Rep f_shriek(const Quiver& q, const Ring& R, const Partition& module, int vertex);
bool is_injective_object(const Rep& M);

struct StableHom {
  HomGroup hom;
  /// Generators of the subgroup of maps factoring through an injective, in h0 coordinates.
  Submodule ideal;
  /// log_p of |Hom / I|.
  int quotient_log = 0;
};
StableHom stable_hom(const Rep& M, const Rep& N);
bool factors_through_injective(const StableHom& S, const Ring& R, const RepMorphism& f);

/// Representation with no part equal to n; arrow maps are chosen representatives.
struct StableRep {
  Rep rep;
};
StableRep stable_restrict(const Rep& M);
Rep hat_lift(const StableRep& S);

/// Random representation with at most `max_parts` cyclic summands per vertex.
Rep random_rep(std::mt19937_64& rng, const Quiver& q, const Ring& R, int max_parts);

}  // namespace monocat
