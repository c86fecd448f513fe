#include "cubeflip/contraction.hpp"

#include <map>
#include <mutex>

#include "cubeflip/errors.hpp"

namespace cubeflip {

Face ContractionContext::to_target(Face source_face) const {
  if (!source_face.subset_of(kept))
    fail(Errc::out_of_scope, "face {" + source->face_str(source_face) + "} not kept by contraction");
  Face out;
  for (int i : source_face.indices()) out = out.with(fwd[static_cast<std::size_t>(i)]);
  return out;
}

Face ContractionContext::to_source(Face target_face) const {
  Face out;
  for (int i : target_face.indices()) out = out.with(inv[static_cast<std::size_t>(i)]);
  return out;
}

Point contract_point(const Config& cube, int x, int y) {
  if (x == y) fail(Errc::same_label, "cannot contract a point at itself");
  const int d = cube.ambient_dim();
  const Point& px = cube.point(x);
  const Point& py = cube.point(y);
  for (const Rational& c : px.coords)
    if (c != 0 && c != 1) fail(Errc::precondition_failed, "contraction needs 0/1 coordinates");

  // (y−x)·(1−2x) counts the coordinates where x and y differ.
  Rational dot = 0;
  for (int c = 0; c < d; ++c) {
    Rational diff = py.coords[static_cast<std::size_t>(c)] - px.coords[static_cast<std::size_t>(c)];
    dot += diff * (Rational(1) - 2 * px.coords[static_cast<std::size_t>(c)]);
  }
  Rational scale = Rational(d) / dot;
  Point out;
  out.coords.resize(static_cast<std::size_t>(d));
  for (int c = 0; c < d; ++c) {
    out.coords[static_cast<std::size_t>(c)] =
        px.coords[static_cast<std::size_t>(c)] +
        scale * (py.coords[static_cast<std::size_t>(c)] - px.coords[static_cast<std::size_t>(c)]);
  }
  return out;
}

ContractionContext contract_config(ConfigPtr cube, const Label& x, Face keep,
                                   const std::string& target_name) {
  const Config& cfg = *cube;
  const int xi = cfg.index(x);
  if (keep.contains(xi)) fail(Errc::precondition_failed, "apex cannot be kept");
  Face base = corner_simplex(cfg, xi).without(xi);
  if (!base.subset_of(keep))
    fail(Errc::missing_corner_base,
         "kept set must contain the corner base {" + cfg.face_str(base) + "}");

  ContractionContext ctx;
  ctx.source = cube;
  ctx.apex = xi;
  ctx.kept = keep;
  ctx.fwd.assign(static_cast<std::size_t>(cfg.size()), -1);

  std::vector<std::pair<Label, Point>> points;
  for (int y : keep.indices()) {
    ctx.fwd[static_cast<std::size_t>(y)] = static_cast<int>(points.size());
    ctx.inv.push_back(y);
    points.emplace_back(cfg.label(y) + "/" + x, contract_point(cfg, xi, y));
  }
  std::string name = target_name.empty() ? cfg.name() + "/" + x : target_name;
  ctx.target = Config::make(std::move(name), cfg.ambient_dim(), std::move(points));
  return ctx;
}

const ContractionContext& full_contraction(const ConfigPtr& cube, int x) {
  static std::mutex mu;
  static std::map<std::pair<std::uint64_t, int>, ContractionContext> cache;
  std::scoped_lock lock(mu);
  auto key = std::make_pair(cube->identity_hash(), x);
  auto it = cache.find(key);
  if (it == cache.end()) {
    Face keep = cube->full_face().without(x);
    it = cache.emplace(key, contract_config(cube, cube->label(x), keep)).first;
  }
  return it->second;
}

Circuit contract_circuit(const ContractionContext& ctx, const Circuit& z) {
  if (!z.neg.contains(ctx.apex))
    fail(Errc::precondition_failed, "circuit does not pass through the apex on its negative side");
  Circuit out;
  out.neg = ctx.to_target(z.neg.without(ctx.apex));
  out.pos = ctx.to_target(z.pos);
  out.support = out.neg | out.pos;
  return out;
}

std::vector<Face> link_cells_at(const Triangulation& T, int x) {
  std::vector<Face> out;
  for (Face c : T.cells())
    if (c.contains(x)) out.push_back(c.without(x));
  if (out.empty())
    fail(Errc::not_a_vertex, "'" + T.config()->label(x) + "' is not a vertex of the triangulation");
  return out;
}

Triangulation contract_link(const Triangulation& T, const Label& x) {
  const Config& cfg = *T.config();
  const int xi = cfg.index(x);
  std::vector<Face> lifted = link_cells_at(T, xi);
  Face support;
  for (Face f : lifted) support = support | f;

  ContractionContext ctx = contract_config(T.config(), x, support);
  std::vector<Face> cells;
  cells.reserve(lifted.size());
  for (Face f : lifted) cells.push_back(ctx.to_target(f));
  return Triangulation::from_cells(ctx.target, std::move(cells));
}

Face vertex_set_V(const Triangulation& T, int x) {
  Face support;
  for (Face f : link_cells_at(T, x)) support = support | f;
  return support;
}

Face vertex_set_V(const Triangulation& T, const Label& x) {
  return vertex_set_V(T, T.config()->index(x));
}

Rational star_volume_D(const Triangulation& T, int x) {
  Rational total = 0;
  bool vertex = false;
  for (Face c : T.cells()) {
    if (!c.contains(x)) continue;
    vertex = true;
    total += abs(signed_volume(c, *T.config()));
  }
  if (!vertex)
    fail(Errc::not_a_vertex, "'" + T.config()->label(x) + "' is not a vertex of the triangulation");
  return total;
}

Rational star_volume_D(const Triangulation& T, const Label& x) {
  return star_volume_D(T, T.config()->index(x));
}

}  // namespace cubeflip
