#pragma once

#include <vector>

#include "cubeflip/contraction.hpp"

namespace cubeflip {

// The three distinguished triangulations of contracted corner configurations:
// U0, the single-cell triangulation of κ(x)∖{x}, and the exceptional pair
// U1⁻ / U1⁺ that survives the corner-reduction scan besides it.

/// U0 over the context's target: one cell, the contracted corner base.
Triangulation u0(const ContractionContext& ctx);

/// The nine tetrahedra of U1⁻ as faces of the 4-cube with the apex a dropped
/// ({b,c,f,l}, {b,f,l,m}, ...). Source-label form used by the driver.
const std::vector<Face>& u1_minus_lifted(const Config& cube4);

/// U1⁻ over the context's target (apex must contract a corner whose base
/// holds the eight vertices b,c,e,f,g,i,l,m; in practice the apex is a).
Triangulation u1_minus(const ContractionContext& ctx);

/// U1⁺: the image of U1⁻ under flipping the circuits {b,c,f,g}/a,
/// {b,f,i,m}/a and {c,g,i,m}/a, computed by performing those flips.
Triangulation u1_plus(const ContractionContext& ctx);

}  // namespace cubeflip
