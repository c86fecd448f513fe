#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cubeflip/config.hpp"
#include "cubeflip/kernel.hpp"

namespace cubeflip {

/// A triangulation stored by its maximal faces (every maximal face of a
/// triangulation of a point configuration is full-dimensional). The cell list
/// is sorted, so equality is structural. Construction does not validate;
/// call validate() when the cell set is not correct by construction.
class Triangulation {
 public:
  Triangulation() = default;
  static Triangulation from_cells(ConfigPtr cfg, std::vector<Face> cells);

  const ConfigPtr& config() const { return cfg_; }
  const std::vector<Face>& cells() const { return cells_; }
  int cell_count() const { return static_cast<int>(cells_.size()); }
  Face vertex_support() const;
  bool contains_cell(Face c) const;

  bool operator==(const Triangulation& other) const {
    return cfg_.get() == other.cfg_.get() && cells_ == other.cells_;
  }
  bool operator<(const Triangulation& other) const { return cells_ < other.cells_; }

 private:
  ConfigPtr cfg_;
  std::vector<Face> cells_;
};

/// True iff f is a subset of some maximal face (the empty face always is).
bool has_face(const Triangulation& T, Face f);

/// Maximal faces of link_T(t) = { s : s ∪ t ∈ T, s ∩ t = ∅ }, i.e. the cells
/// containing t with t removed. Throws Errc::not_a_face if t ∉ T.
std::vector<Face> link(const Triangulation& T, Face t);

/// Maximal faces of T containing t (the maximal faces of star_T(t)).
std::vector<Face> star(const Triangulation& T, Face t);

struct SigmaGraph {
  int q = 0;
  std::vector<Face> edges;  // 2-element faces, sorted

  int degree(int vertex) const;
  bool isolated(int vertex) const { return degree(vertex) == 0; }
};

/// Edges of T's 1-skeleton whose squared length is exactly q. For the 4-cube
/// q ranges over 1..4.
SigmaGraph sigma_graph(const Triangulation& T, int q);

/// All edges of the 1-skeleton of T.
std::vector<Face> skeleton_edges(const Triangulation& T);

/// κ(x): the vertex x together with its neighbors at squared distance 1.
Face corner_simplex(const Config& cfg, int x);
Face corner_simplex(const Config& cfg, const Label& x);

/// The two parity classes of the 4-cube. Each spans a cross polytope.
enum class CubeClass { E, O };
const char* cube_class_name(CubeClass s);
CubeClass opposite_class(CubeClass s);

/// Members of E = {a,d,f,g,j,k,m,p} or O = {b,c,e,h,i,l,n,o} as a face of the
/// given 4-cube config.
Face cube_class_members(const Config& cube4, CubeClass s);
CubeClass cube_class_of(const Config& cube4, int vertex);

/// The four long diagonals of conv(s), sorted.
std::vector<Face> cube_class_diagonals(const Config& cube4, CubeClass s);

/// The corner-cut triangulation determined by the class s and one of the four
/// diagonals of conv(s): the eight corner simplices with apex outside s plus
/// the eight cross-polytope cells containing the diagonal. Throws
/// Errc::bad_diagonal when `diagonal` is not a diagonal of conv(s).
Triangulation make_corner_cut(ConfigPtr cube4, CubeClass s, Face diagonal);

/// All eight corner-cut triangulations of the config, sorted.
const std::vector<Triangulation>& all_corner_cuts(const ConfigPtr& cube4);

/// Identifies T as make_corner_cut(s, diagonal), if it is one of the eight.
std::optional<std::pair<CubeClass, Face>> is_corner_cut(const Triangulation& T);

struct ValidationError {
  enum class Kind { bad_cell, improper_pair, volume } kind;
  Face a;       // offending cell
  Face b;       // second cell for improper_pair
  Rational got;
  Rational expected;
  std::string message;
};

/// Checks that T is a triangulation of its config: every cell is
/// full-dimensional and affinely independent, every pair of cells intersects
/// properly, and the cell volumes add up to the hull volume. Returns nullopt
/// when all three hold.
std::optional<ValidationError> validate(const Triangulation& T);
void validate_or_throw(const Triangulation& T);

/// Combinatorial proper-intersection test: A and B intersect improperly iff
/// some circuit has one side inside A and the other inside B.
bool improper_pair(Face a, Face b, const Config& cfg);

/// Deterministic incremental placing construction in label order: points are
/// inserted one by one, each visible boundary facet spawning a cell; points
/// interior to the current hull are skipped. Defines the hull volume used by
/// validate() and seeds the flip-graph exploration.
Triangulation placing_triangulation(ConfigPtr cfg);

}  // namespace cubeflip
