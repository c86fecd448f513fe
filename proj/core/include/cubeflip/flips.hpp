#pragma once

#include <optional>
#include <vector>

#include "cubeflip/triangulation.hpp"

namespace cubeflip {

/// A bistellar flip 𝔉(z,T): replace the faces of λ⋆τ by the faces of λ⋆τ',
/// where τ and τ' are the two triangulations of the circuit z and λ is the
/// common link. `removed_side` is the side of z present before the flip;
/// `common_link` holds the maximal faces of λ.
struct FlipMove {
  Circuit circuit;
  Face removed_side;
  std::vector<Face> common_link;

  Face inserted_side() const { return circuit.other_side(removed_side); }

  /// The same flip in the opposite direction (the common link is unchanged).
  FlipMove reversed() const { return {circuit, inserted_side(), common_link}; }

  /// Cells deleted by the flip: ℓ ∪ (z∖{y}) for ℓ ∈ λ, y in the inserted side.
  std::vector<Face> removed_cells() const;
  std::vector<Face> inserted_cells() const;
};

/// Decides whether z can be flipped in T with `removed_side` the present side:
/// every z∖{y} for y in the opposite side must be a face of T, and all of them
/// must have the same link. Absence means not flippable.
std::optional<FlipMove> is_flippable(const Triangulation& T, const Circuit& z, Face removed_side);

/// All flippable moves of T, one per flippable circuit (a circuit has at most
/// one present side), in canonical circuit order.
std::vector<FlipMove> flippable_moves(const Triangulation& T);

/// Applies the flip; re-verifies flippability first (Errc::not_flippable).
Triangulation apply_flip(const Triangulation& T, const FlipMove& move);

}  // namespace cubeflip
