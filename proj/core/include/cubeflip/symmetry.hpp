#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cubeflip/triangulation.hpp"

namespace cubeflip {

/// The 384 isometries of the 4-cube vertex set (coordinate permutations
/// composed with reflections), as label maps on the cube4 preset. Sorted,
/// identity first.
const std::vector<SymMap>& cube_group();

/// Full isometry group of an arbitrary config: all label bijections
/// preserving the squared-distance matrix, found by backtracking. Equivalent
/// to cfg.automorphisms().
std::vector<SymMap> automorphisms(const Config& cfg);

/// Group-minimal byte encoding of a triangulation: the cell masks of g·T,
/// sorted and serialized, minimized lexicographically over g ∈ G. Two
/// triangulations get the same form iff some g ∈ G maps one onto the other.
std::string canonical_form(const Triangulation& T, const std::vector<SymMap>& group);

/// Encoding of T itself (canonical_form under the trivial group).
std::string encode_cells(const std::vector<Face>& sorted_cells);
std::vector<Face> decode_cells(const std::string& form);
Triangulation decode_triangulation(ConfigPtr cfg, const std::string& form);

/// Size of the orbit of T under the group (|G| / |stabilizer|).
std::uint64_t orbit_size(const Triangulation& T, const std::vector<SymMap>& group);

Triangulation apply_sym(const SymMap& g, const Triangulation& T);
Circuit apply_sym(const SymMap& g, const Circuit& z);

/// A distance-preserving injection of the points of `subset_a` (in cfg_a)
/// into the points of `subset_b` (in cfg_b), as index pairs sorted by the
/// first component; nullopt when none exists.
std::optional<std::vector<std::pair<int, int>>> isometric_subset_embedding(
    const Config& cfg_a, Face subset_a, const Config& cfg_b, Face subset_b);

std::uint64_t group_hash(const std::vector<SymMap>& group);

}  // namespace cubeflip
