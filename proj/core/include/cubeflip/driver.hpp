#pragma once

#include <vector>

#include "cubeflip/enumeration.hpp"

namespace cubeflip {

/// A replayable flip sequence. Replaying the moves from `start` re-verifies
/// every flip and must reproduce `end` through valid intermediates.
struct FlipPath {
  Triangulation start;
  std::vector<FlipMove> moves;
  Triangulation end;

  int length() const { return static_cast<int>(moves.size()); }
};

/// Replays the path; throws if a move fails to verify, an intermediate fails
/// validation (when validate_each), or the end state differs.
Triangulation replay(const FlipPath& path, bool validate_each = true);

/// Chains two paths; b must start where a ends.
FlipPath concat(FlipPath a, const FlipPath& b);

/// Greedy corner reduction at x: while some circuit z through x is flippable
/// in the contracted link with its contracted negative side present, flip the
/// lexicographically smallest such z in T. Every step must strictly shrink
/// the star volume at x (ParadoxError otherwise); the end link lies in
/// L_x(V_x(T)).
FlipPath greedy_corner_reduce(const Triangulation& T, const Label& x);

/// The U1 escape: conjugate by a cube symmetry g to the frame where the
/// contracted link at x is exactly U1⁻ with apex a (Errc::not_u1 when
/// impossible), secure κ(d) by a greedy reduction there, then flip the
/// circuits g⁻¹{b,c,f,g} and g⁻¹{a,b,e,f} in that order. Afterwards V_x has
/// lost the image of f and every face disjoint from {x, g⁻¹(d), g⁻¹(f)}
/// survives.
FlipPath escape_U1(const Triangulation& T, const Label& x);

/// Flips until κ(x) appears: greedy reduction, then if the link is U1-like an
/// escape and a final greedy pass. Requires V_x(T) to embed isometrically in
/// some S_q (Errc::precondition_failed otherwise); any deviation from the
/// {U0, U1⁻, U1⁺} trichotomy is a ParadoxError.
FlipPath insert_corner(const Triangulation& T, const Label& x);

/// The constructive connectivity procedure: insert corner simplices apex by
/// apex inside a working parity class until the triangulation is corner-cut.
/// The class starts opposite any σ₄ edge and switches at most once, mirroring
/// the two-phase argument; the number of corner simplices in the working
/// class never decreases.
FlipPath flip_to_corner_cut(const Triangulation& T);

}  // namespace cubeflip
