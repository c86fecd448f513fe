#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cubeflip/contraction.hpp"
#include "cubeflip/flips.hpp"
#include "cubeflip/symmetry.hpp"

namespace cubeflip {

struct EnumerationReport {
  std::uint64_t total_triangulations = 0;
  std::uint64_t symmetry_classes = 0;
  std::uint64_t flips_traversed = 0;
  std::uint64_t max_frontier = 0;
  std::uint64_t levels = 0;
  std::optional<std::string> checkpoint_ref;
  bool complete = false;
};

struct ExploreOptions {
  bool mod_symmetry = false;
  int workers = 1;
  /// Checkpoint file, written every `checkpoint_every` levels and loaded on
  /// start when it exists (Errc::checkpoint_mismatch if it belongs to another
  /// config or group).
  std::string checkpoint_path;
  int checkpoint_every = 1;
  /// Stop after this many BFS levels (0 = run to completion). A stopped run
  /// with a checkpoint can be resumed and ends in the same final report.
  std::uint64_t max_levels = 0;
  /// Above this in-memory size the visited set spills to sorted runs on disk
  /// (under tmp_dir, CUBEFLIP_TMPDIR, or the system temp directory).
  std::size_t memory_budget_bytes = std::size_t(512) << 20;
  std::string tmp_dir;
  std::function<void(const EnumerationReport&)> on_level;
};

/// Breadth-first exploration of the flip-graph component of `seed`,
/// deduplicating by canonical form (under the config's full isometry group
/// when mod_symmetry, else exact cell sets). Totals count the component —
/// for a connected flip-graph, all triangulations of the config. Reports are
/// deterministic functions of (config, seed, options), never of scheduling.
EnumerationReport explore_flip_graph(const Triangulation& seed, const ExploreOptions& options = {});

/// Exhaustive enumeration by extension backtracking across open facets,
/// independent of flip connectivity; the oracle for explore_flip_graph.
/// Guarded (Errc::too_large) beyond 12 points in dimension 3 / 8 points in
/// dimension 4 unless forced.
std::vector<Triangulation> enumerate_all_triangulations(ConfigPtr cfg, bool force = false);

/// First completion (in lexicographic cell order) of a partial set of cells
/// into a full triangulation, if one exists.
std::optional<Triangulation> complete_triangulation(ConfigPtr cfg, const std::vector<Face>& partial);

/// Algorithm 1: the triangulations T of ctx.target such that no circuit z
/// through the apex (supported in the kept set) has z/x flippable in T with
/// ε⁻(z)/x a face of T. With `native_circuits` the scan is driven by the
/// circuits of the target config lifted through the contraction instead of
/// the contractions of cube circuits; the two scans test identical circuits.
std::vector<Triangulation> algorithm1_Lx(const ContractionContext& ctx,
                                         const std::vector<Triangulation>& trias,
                                         bool native_circuits = false);

/// Precomputed scan data for algorithm1_Lx / the greedy driver: contracted
/// circuits in source labels, so the scan itself is pure bitmask work.
struct ContractedCircuit {
  Face support;  // z ∖ {apex}, source labels
  Face neg;      // ε⁻(z) ∖ {apex}
  Face pos;      // ε⁺(z)
};
std::vector<ContractedCircuit> contracted_circuits(const Config& cube, int apex, Face kept);

/// True iff some contracted circuit is flippable in the link complex with its
/// negative side present (the f2 flag of Algorithm 1). `link_cells` are the
/// maximal faces of the link in source labels.
bool lx_violation(const std::vector<ContractedCircuit>& circuits,
                  const std::vector<Face>& link_cells,
                  ContractedCircuit* witness = nullptr);

/// Deterministic uniform random walk in the flip-graph.
Triangulation random_walk(const Triangulation& start, int steps, std::uint64_t seed);

}  // namespace cubeflip
