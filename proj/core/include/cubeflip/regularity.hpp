#pragma once

#include <optional>
#include <vector>

#include "cubeflip/triangulation.hpp"

namespace cubeflip {

/// One height per config point, indexed by label position.
using HeightFunction = std::vector<Rational>;

/// Lemma-1-style heights for a corner-cut triangulation: the diagonal at 0,
/// the rest of the class at 1, the opposite class at 2.
HeightFunction corner_cut_heights(const Config& cube4, CubeClass s, Face diagonal);

/// True iff w certifies T regular: for every maximal t ∈ T, the unique affine
/// map agreeing with w on t is strictly below w on every other config point.
/// Exact solve, exact comparisons. Throws Errc::singular_face on degenerate
/// cells (impossible for a valid T).
bool verify_certificate(const Triangulation& T, const HeightFunction& w);

/// Decides regularity by an exact rational LP: find heights whose local
/// lifts are strictly below w off each cell, strictness handled by slack
/// normalization (all slacks >= 1). Returns a witness that passes
/// verify_certificate, or nullopt iff no height function exists.
std::optional<HeightFunction> is_regular(const Triangulation& T);

}  // namespace cubeflip
