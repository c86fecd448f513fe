#pragma once

#include <optional>
#include <vector>

#include "cubeflip/triangulation.hpp"

namespace cubeflip {

/// Homogeneous contraction of a 0/1-cube configuration at a vertex x: every
/// kept point y maps to the central projection of y from x onto a hyperplane
/// parallel to the affine hull of κ(x)∖{x}. The map is a bijection from the
/// kept labels onto the target config; target labels read "y/x".
struct ContractionContext {
  ConfigPtr source;
  ConfigPtr target;
  int apex = -1;          // index in source
  Face kept;              // source labels, apex excluded
  std::vector<int> fwd;   // source index -> target index (-1 if not kept)
  std::vector<int> inv;   // target index -> source index

  Face to_target(Face source_face) const;  // Errc::out_of_scope if not kept
  Face to_source(Face target_face) const;
};

/// The projection y/x = x + [d/((y−x)·(1−2x))](y−x) for the d-cube, exact.
/// Throws Errc::same_label when x == y.
Point contract_point(const Config& cube, int x, int y);

/// Contraction of the kept subset (which must contain κ(x)∖{x}, else
/// Errc::missing_corner_base). `target_name` defaults to "<source>/<x>".
ContractionContext contract_config(ConfigPtr cube, const Label& x, Face keep,
                                   const std::string& target_name = "");

/// Full contraction at x (keep = everything but x), cached per (config, x).
const ContractionContext& full_contraction(const ConfigPtr& cube, int x);

/// Lemma-4 transport: the contraction of a circuit z through x (x ∈ z.neg) is
/// a circuit of the target whose Radon partition is the contracted partition.
/// Computed structurally; Errc::out_of_scope if z has vertices not kept.
Circuit contract_circuit(const ContractionContext& ctx, const Circuit& z);

/// Maximal faces of link_T({x}) as source-label faces (cells containing x,
/// with x dropped). Errc::not_a_vertex when {x} is not a face of T.
std::vector<Face> link_cells_at(const Triangulation& T, int x);

/// The triangulation link_T({x})/x of the contracted vertex set V_x(T).
Triangulation contract_link(const Triangulation& T, const Label& x);

/// V_x(T): the vertex set of link_T({x})/x, lifted back to source labels.
Face vertex_set_V(const Triangulation& T, const Label& x);
Face vertex_set_V(const Triangulation& T, int x);

/// Total |volume| of the cells containing x — the domain volume of
/// star_T({x}), a star being simplicial.
Rational star_volume_D(const Triangulation& T, const Label& x);
Rational star_volume_D(const Triangulation& T, int x);

}  // namespace cubeflip
