#include "cubeflip/flips.hpp"

#include <algorithm>

#include "cubeflip/errors.hpp"

namespace cubeflip {

std::vector<Face> FlipMove::removed_cells() const {
  std::vector<Face> out;
  for (Face ell : common_link)
    for (int y : inserted_side().indices()) out.push_back(ell | circuit.support.without(y));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Face> FlipMove::inserted_cells() const {
  std::vector<Face> out;
  for (Face ell : common_link)
    for (int y : removed_side.indices()) out.push_back(ell | circuit.support.without(y));
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<FlipMove> is_flippable(const Triangulation& T, const Circuit& z, Face removed_side) {
  if (!(removed_side == z.neg) && !(removed_side == z.pos))
    fail(Errc::precondition_failed, "removed_side is not a side of the circuit");

  // The maximal faces of the triangulation of z containing removed_side are
  // z∖{y} for y in the opposite side; they must all be faces of T with one
  // common link.
  FlipMove move{z, removed_side, {}};
  bool first = true;
  for (int y : z.other_side(removed_side).indices()) {
    Face t = z.support.without(y);
    std::vector<Face> lk;
    for (Face c : T.cells())
      if (t.subset_of(c)) lk.push_back(c - t);
    if (lk.empty()) return std::nullopt;  // z∖{y} not a face
    std::sort(lk.begin(), lk.end());
    if (first) {
      move.common_link = std::move(lk);
      first = false;
    } else if (lk != move.common_link) {
      return std::nullopt;
    }
  }
  return move;
}

std::vector<FlipMove> flippable_moves(const Triangulation& T) {
  std::vector<FlipMove> out;
  Face support = T.vertex_support();
  for (const Circuit& z : T.config()->circuits()) {
    // Cheap prefilter: every vertex of a present side's faces must be a
    // vertex of T; the full support except possibly one inserted vertex.
    if (!z.neg.subset_of(support) && !z.pos.subset_of(support)) continue;
    std::optional<FlipMove> move;
    if (z.neg.subset_of(support)) move = is_flippable(T, z, z.neg);
    if (!move && z.pos.subset_of(support)) move = is_flippable(T, z, z.pos);
    if (move) out.push_back(std::move(*move));
  }
  return out;
}

Triangulation apply_flip(const Triangulation& T, const FlipMove& move) {
  auto verified = is_flippable(T, move.circuit, move.removed_side);
  if (!verified || verified->common_link != move.common_link)
    fail(Errc::not_flippable,
         "circuit {" + T.config()->face_str(move.circuit.support) + "} removing {" +
             T.config()->face_str(move.removed_side) + "}");

  std::vector<Face> cells = T.cells();
  for (Face dead : verified->removed_cells())
    cells.erase(std::remove(cells.begin(), cells.end(), dead), cells.end());
  for (Face born : verified->inserted_cells()) cells.push_back(born);
  return Triangulation::from_cells(T.config(), std::move(cells));
}

}  // namespace cubeflip
