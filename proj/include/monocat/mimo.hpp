#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "monocat/rep.hpp"

namespace monocat {

/// Injective envelope M(a) -> M(n,...,n), generator j ↦ p^{n-a_j} ε_j.
struct EnvelopeData {
  Partition source;
  Partition envelope;
  ZpnMatrix embedding;
};
EnvelopeData injective_envelope(const Ring& R, const Partition& a);

struct MimoResult {
  Rep rep;
  RepMorphism projection;  // (1 0) onto M
};

/// Minimal right approximation of M by a monomorphic representation.
/// With `lift_seed` set, each lift e_i is perturbed by a random element vanishing on K_i
/// (any lift is valid; the default is the lexicographically smallest).
MimoResult mimo(const Rep& M, std::optional<std::uint64_t> lift_seed = std::nullopt);

/// Every morphism from a probe into M factors through g: X -> M.
/// Probes must be monomorphic.
bool is_right_approximation(const Rep& X, const Rep& M, const RepMorphism& g, const std::vector<Rep>& probes);

/// Stable restriction, hat lift, then Mimo; isomorphic to M for indecomposable
/// non-injective monomorphic M.
Rep mimo_inverse_roundtrip(const Rep& M);

}  // namespace monocat
