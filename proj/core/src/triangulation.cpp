#include "cubeflip/triangulation.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

#include "cubeflip/errors.hpp"

namespace cubeflip {

Triangulation Triangulation::from_cells(ConfigPtr cfg, std::vector<Face> cells) {
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  Triangulation T;
  T.cfg_ = std::move(cfg);
  T.cells_ = std::move(cells);
  return T;
}

Face Triangulation::vertex_support() const {
  Face out;
  for (Face c : cells_) out = out | c;
  return out;
}

bool Triangulation::contains_cell(Face c) const {
  return std::binary_search(cells_.begin(), cells_.end(), c);
}

bool has_face(const Triangulation& T, Face f) {
  for (Face c : T.cells())
    if (f.subset_of(c)) return true;
  return f.empty() && !T.cells().empty();
}

std::vector<Face> star(const Triangulation& T, Face t) {
  std::vector<Face> out;
  for (Face c : T.cells())
    if (t.subset_of(c)) out.push_back(c);
  if (out.empty()) fail(Errc::not_a_face, "{" + T.config()->face_str(t) + "} is not a face");
  return out;
}

std::vector<Face> link(const Triangulation& T, Face t) {
  std::vector<Face> out;
  for (Face c : T.cells())
    if (t.subset_of(c)) out.push_back(c - t);
  if (out.empty()) fail(Errc::not_a_face, "{" + T.config()->face_str(t) + "} is not a face");
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Face> skeleton_edges(const Triangulation& T) {
  std::set<Face> edges;
  for (Face c : T.cells()) {
    std::vector<int> v = c.indices();
    for (std::size_t i = 0; i < v.size(); ++i)
      for (std::size_t j = i + 1; j < v.size(); ++j)
        edges.insert(Face::of({v[i], v[j]}));
  }
  return {edges.begin(), edges.end()};
}

int SigmaGraph::degree(int vertex) const {
  int deg = 0;
  for (Face e : edges)
    if (e.contains(vertex)) ++deg;
  return deg;
}

SigmaGraph sigma_graph(const Triangulation& T, int q) {
  if (q < 1 || q > 4) fail(Errc::precondition_failed, "sigma graph q must be in 1..4");
  const Config& cfg = *T.config();
  SigmaGraph g;
  g.q = q;
  for (Face e : skeleton_edges(T)) {
    std::vector<int> v = e.indices();
    if (cfg.sqdist(v[0], v[1]) == q) g.edges.push_back(e);
  }
  return g;
}

Face corner_simplex(const Config& cfg, int x) {
  if (x < 0 || x >= cfg.size()) fail(Errc::unknown_label, "bad index");
  Face f = Face().with(x);
  for (int y = 0; y < cfg.size(); ++y)
    if (y != x && cfg.sqdist(x, y) == 1) f = f.with(y);
  return f;
}

Face corner_simplex(const Config& cfg, const Label& x) {
  return corner_simplex(cfg, cfg.index(x));
}

const char* cube_class_name(CubeClass s) { return s == CubeClass::E ? "E" : "O"; }

CubeClass opposite_class(CubeClass s) {
  return s == CubeClass::E ? CubeClass::O : CubeClass::E;
}

Face cube_class_members(const Config& cube4, CubeClass s) {
  Face out;
  for (int i = 0; i < cube4.size(); ++i) {
    Rational sum = 0;
    for (const Rational& c : cube4.point(i).coords) sum += c;
    bool even = rat_num(sum) % 2 == 0;
    if (even == (s == CubeClass::E)) out = out.with(i);
  }
  return out;
}

CubeClass cube_class_of(const Config& cube4, int vertex) {
  return cube_class_members(cube4, CubeClass::E).contains(vertex) ? CubeClass::E : CubeClass::O;
}

std::vector<Face> cube_class_diagonals(const Config& cube4, CubeClass s) {
  Face members = cube_class_members(cube4, s);
  std::vector<Face> out;
  std::vector<int> v = members.indices();
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (cube4.sqdist(v[i], v[j]) == 4) out.push_back(Face::of({v[i], v[j]}));
  std::sort(out.begin(), out.end());
  return out;
}

Triangulation make_corner_cut(ConfigPtr cube4, CubeClass s, Face diagonal) {
  const Config& cfg = *cube4;
  std::vector<Face> diagonals = cube_class_diagonals(cfg, s);
  if (std::find(diagonals.begin(), diagonals.end(), diagonal) == diagonals.end())
    fail(Errc::bad_diagonal, "{" + cfg.face_str(diagonal) + "} is not a diagonal of conv(" +
                                 cube_class_name(s) + ")");

  std::vector<Face> cells;
  Face members = cube_class_members(cfg, s);
  for (int x = 0; x < cfg.size(); ++x)
    if (!members.contains(x)) cells.push_back(corner_simplex(cfg, x));

  // Cross-polytope cells: the diagonal plus one endpoint of each other
  // diagonal of conv(s).
  std::vector<Face> others;
  for (Face d : diagonals)
    if (!(d == diagonal)) others.push_back(d);
  const std::size_t k = others.size();
  for (std::uint32_t pick = 0; pick < (1u << k); ++pick) {
    Face cell = diagonal;
    for (std::size_t i = 0; i < k; ++i) {
      std::vector<int> ends = others[i].indices();
      cell = cell.with(ends[(pick >> i) & 1u]);
    }
    cells.push_back(cell);
  }
  return Triangulation::from_cells(std::move(cube4), std::move(cells));
}

const std::vector<Triangulation>& all_corner_cuts(const ConfigPtr& cube4) {
  static std::mutex mu;
  static std::map<std::uint64_t, std::vector<Triangulation>> cache;
  std::scoped_lock lock(mu);
  auto [it, inserted] = cache.try_emplace(cube4->identity_hash());
  if (inserted) {
    for (CubeClass s : {CubeClass::E, CubeClass::O})
      for (Face d : cube_class_diagonals(*cube4, s))
        it->second.push_back(make_corner_cut(cube4, s, d));
    std::sort(it->second.begin(), it->second.end());
  }
  return it->second;
}

std::optional<std::pair<CubeClass, Face>> is_corner_cut(const Triangulation& T) {
  for (CubeClass s : {CubeClass::E, CubeClass::O}) {
    for (Face d : cube_class_diagonals(*T.config(), s)) {
      if (T.cells() == make_corner_cut(T.config(), s, d).cells())
        return std::make_pair(s, d);
    }
  }
  return std::nullopt;
}

bool improper_pair(Face a, Face b, const Config& cfg) {
  Face joint = a | b;
  for (const Circuit& z : cfg.circuits()) {
    if (!z.support.subset_of(joint)) continue;
    if ((z.neg.subset_of(a) && z.pos.subset_of(b)) ||
        (z.neg.subset_of(b) && z.pos.subset_of(a)))
      return true;
  }
  return false;
}

std::optional<ValidationError> validate(const Triangulation& T) {
  const Config& cfg = *T.config();
  const int d = cfg.affine_dim();
  ValidationError err;

  Rational total = 0;
  for (Face c : T.cells()) {
    if (c.size() != d + 1) {
      err.kind = ValidationError::Kind::bad_cell;
      err.a = c;
      err.message = "cell {" + cfg.face_str(c) + "} is not full-dimensional";
      return err;
    }
    Rational vol = signed_volume(c, cfg);
    if (vol == 0) {
      err.kind = ValidationError::Kind::bad_cell;
      err.a = c;
      err.message = "cell {" + cfg.face_str(c) + "} is degenerate";
      return err;
    }
    total += abs(vol);
  }

  const auto& cells = T.cells();
  for (std::size_t i = 0; i < cells.size(); ++i) {
    for (std::size_t j = i + 1; j < cells.size(); ++j) {
      if (improper_pair(cells[i], cells[j], cfg)) {
        err.kind = ValidationError::Kind::improper_pair;
        err.a = cells[i];
        err.b = cells[j];
        err.message = "cells {" + cfg.face_str(cells[i]) + "} and {" + cfg.face_str(cells[j]) +
                      "} intersect improperly";
        return err;
      }
    }
  }

  if (total != cfg.hull_volume()) {
    err.kind = ValidationError::Kind::volume;
    err.got = total;
    err.expected = cfg.hull_volume();
    err.message = "cell volumes add to " + rat_str(total) + ", hull volume is " +
                  rat_str(cfg.hull_volume());
    return err;
  }
  return std::nullopt;
}

void validate_or_throw(const Triangulation& T) {
  if (auto err = validate(T)) fail(Errc::validation, err->message);
}

namespace {

// Sign of the orientation of point q against the hyperplane of facet f,
// evaluated as the signed volume of f followed by q. Facet order is the
// sorted index order.
int orientation_sign(const Config& cfg, Face facet, int q) {
  std::vector<int> order = facet.indices();
  order.push_back(q);
  Rational vol = signed_volume_ordered(order, cfg);
  if (vol > 0) return 1;
  if (vol < 0) return -1;
  return 0;
}

}  // namespace

Triangulation placing_triangulation(ConfigPtr cfg_ptr) {
  const Config& cfg = *cfg_ptr;
  const int d = cfg.affine_dim();
  const int n = cfg.size();
  if (d < 1) fail(Errc::degenerate_config, "affine dimension of " + cfg.name() + " is zero");

  // Seed: the first d+1 points (in label order) that are affinely independent.
  std::vector<int> seed;
  for (int i = 0; i < n && static_cast<int>(seed.size()) < d + 1; ++i) {
    Face probe;
    for (int s : seed) probe = probe.with(s);
    probe = probe.with(i);
    if (affine_rank(probe, cfg) == static_cast<int>(seed.size()) + 1) seed.push_back(i);
  }
  if (static_cast<int>(seed.size()) != d + 1)
    fail(Errc::degenerate_config, "cannot seed placing triangulation of " + cfg.name());

  Face seed_cell;
  for (int s : seed) seed_cell = seed_cell.with(s);
  std::vector<Face> cells = {seed_cell};

  for (int q = 0; q < n; ++q) {
    if (seed_cell.contains(q)) continue;

    // Boundary facets of the current complex: facets used by exactly one cell.
    std::map<Face, std::vector<Face>> facet_cells;
    for (Face c : cells)
      for (int v : c.indices()) facet_cells[c.without(v)].push_back(c);

    std::vector<Face> grown;
    for (const auto& [facet, owners] : facet_cells) {
      if (owners.size() != 1) continue;
      int apex = (owners[0] - facet).lowest();
      int apex_side = orientation_sign(cfg, facet, apex);
      int q_side = orientation_sign(cfg, facet, q);
      if (q_side != 0 && q_side != apex_side) grown.push_back(facet.with(q));
    }
    cells.insert(cells.end(), grown.begin(), grown.end());
  }
  return Triangulation::from_cells(std::move(cfg_ptr), std::move(cells));
}

}  // namespace cubeflip
