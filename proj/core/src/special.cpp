#include "cubeflip/special.hpp"

#include <array>

#include "cubeflip/errors.hpp"
#include "cubeflip/flips.hpp"

namespace cubeflip {

Triangulation u0(const ContractionContext& ctx) {
  Face base = corner_simplex(*ctx.source, ctx.apex).without(ctx.apex);
  return Triangulation::from_cells(ctx.target, {ctx.to_target(base)});
}

const std::vector<Face>& u1_minus_lifted(const Config& cube4) {
  static const std::array<std::array<const char*, 4>, 9> kTetrahedra = {{
      {"b", "c", "f", "l"},
      {"b", "f", "l", "m"},
      {"b", "i", "l", "m"},
      {"c", "f", "g", "l"},
      {"c", "g", "i", "l"},
      {"e", "f", "g", "l"},
      {"e", "f", "l", "m"},
      {"e", "g", "l", "m"},
      {"g", "i", "l", "m"},
  }};
  static const std::vector<Face> faces = [&cube4] {
    std::vector<Face> out;
    for (const auto& tet : kTetrahedra) {
      Face f;
      for (const char* l : tet) f = f.with(cube4.index(l));
      out.push_back(f);
    }
    std::sort(out.begin(), out.end());
    return out;
  }();
  return faces;
}

Triangulation u1_minus(const ContractionContext& ctx) {
  std::vector<Face> cells;
  for (Face f : u1_minus_lifted(*ctx.source)) cells.push_back(ctx.to_target(f));
  return Triangulation::from_cells(ctx.target, std::move(cells));
}

Triangulation u1_plus(const ContractionContext& ctx) {
  Triangulation T = u1_minus(ctx);
  const Config& src = *ctx.source;
  for (const auto& labels :
       {std::array<const char*, 4>{"b", "c", "f", "g"},
        std::array<const char*, 4>{"b", "f", "i", "m"},
        std::array<const char*, 4>{"c", "g", "i", "m"}}) {
    Face support;
    for (const char* l : labels) support = support.with(src.index(l));
    Circuit z = radon_partition(ctx.to_target(support), *ctx.target);
    std::optional<FlipMove> move = is_flippable(T, z, z.neg);
    if (!move) move = is_flippable(T, z, z.pos);
    if (!move)
      throw ParadoxError("circuit {" + src.face_str(support) + "}/a not flippable in U1-");
    T = apply_flip(T, *move);
  }
  return T;
}

}  // namespace cubeflip
