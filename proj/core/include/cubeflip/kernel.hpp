#pragma once

#include <optional>
#include <span>
#include <vector>

#include "cubeflip/config.hpp"

namespace cubeflip {

/// A circuit: a minimal affinely dependent subset of a config, together with
/// its Radon partition. The two sides are disjoint, cover the support, and
/// have intersecting convex hulls.
///
/// Orientation convention: when no point is distinguished, `neg` is the
/// lexicographically smaller side. `circuits_through` reorients copies so
/// that `neg` is the side containing the distinguished point.
struct Circuit {
  Face support;
  Face neg;
  Face pos;

  Face other_side(Face side) const { return side == neg ? pos : neg; }

  bool operator==(const Circuit&) const = default;

  // Canonical order: support size, then support lexicographically.
  bool operator<(const Circuit& z) const {
    if (support.size() != z.support.size()) return support.size() < z.support.size();
    if (!(support == z.support)) return support < z.support;
    return neg < z.neg;
  }
};

/// Number of affinely independent points among `labels` (affine hull
/// dimension plus one). The empty face has rank 0.
int affine_rank(Face labels, const Config& cfg);

/// Signed volume of a full-dimensional simplex, evaluated in config label
/// order, in the config's frame units (det / d!). Zero iff degenerate.
/// Throws Errc::wrong_cardinality unless |simplex| == affine_dim + 1.
Rational signed_volume(Face simplex, const Config& cfg);

/// Same, but in the given vertex order; swapping two vertices negates it.
Rational signed_volume_ordered(std::span<const int> vertices, const Config& cfg);

/// The Radon partition of `support`, if it is a circuit.
std::optional<Circuit> try_radon_partition(Face support, const Config& cfg);

/// As above but throws Errc::not_a_circuit when `support` is independent or
/// has a dependent proper subset.
Circuit radon_partition(Face support, const Config& cfg);

/// All circuits of the config, each exactly once, canonically sorted. Found
/// by scanning subsets of size 3..affine_dim+2. Cached per config.
const std::vector<Circuit>& enumerate_circuits(const Config& cfg);

/// The circuits whose support contains x, reoriented so x ∈ neg.
std::vector<Circuit> circuits_through(const Config& cfg, int x);
std::vector<Circuit> circuits_through(const Config& cfg, const Label& x);

/// Exact squared Euclidean distance between two points.
Rational squared_distance(const Point& a, const Point& b);

}  // namespace cubeflip
