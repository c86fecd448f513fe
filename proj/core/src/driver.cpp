#include "cubeflip/driver.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "cubeflip/errors.hpp"
#include "cubeflip/special.hpp"

namespace cubeflip {

namespace {

constexpr int kMaxGreedySteps = 4096;
constexpr int kMaxOuterLoops = 64;

struct DriverCircuit {
  Circuit source;        // oriented with x ∈ neg
  ContractedCircuit c;   // in source labels, apex dropped
};

// Circuits through x with their contracted masks, cached per (config, x).
const std::vector<DriverCircuit>& driver_circuits(const ConfigPtr& cfg, int x) {
  static std::mutex mu;
  static std::map<std::pair<std::uint64_t, int>, std::vector<DriverCircuit>> cache;
  std::scoped_lock lock(mu);
  auto key = std::make_pair(cfg->identity_hash(), x);
  auto it = cache.find(key);
  if (it == cache.end()) {
    std::vector<DriverCircuit> list;
    for (const Circuit& z : circuits_through(*cfg, x))
      list.push_back({z, {z.support.without(x), z.neg.without(x), z.pos}});
    it = cache.emplace(key, std::move(list)).first;
  }
  return it->second;
}

bool contracted_flippable(const ContractedCircuit& z, const std::vector<Face>& link_cells) {
  std::vector<ContractedCircuit> one = {z};
  return lx_violation(one, link_cells);
}

Face face_from_labels(const Config& cfg, std::initializer_list<const char*> labels) {
  Face f;
  for (const char* l : labels) f = f.with(cfg.index(l));
  return f;
}

}  // namespace

Triangulation replay(const FlipPath& path, bool validate_each) {
  Triangulation T = path.start;
  if (validate_each) validate_or_throw(T);
  for (const FlipMove& move : path.moves) {
    T = apply_flip(T, move);  // re-verifies flippability
    if (validate_each) validate_or_throw(T);
  }
  if (!(T == path.end)) fail(Errc::validation, "replayed path does not reach its end state");
  return T;
}

FlipPath concat(FlipPath a, const FlipPath& b) {
  if (!(a.end == b.start)) fail(Errc::precondition_failed, "paths do not chain");
  a.moves.insert(a.moves.end(), b.moves.begin(), b.moves.end());
  a.end = b.end;
  return a;
}

FlipPath greedy_corner_reduce(const Triangulation& T, const Label& x) {
  const ConfigPtr& cfg = T.config();
  const int xi = cfg->index(x);
  const auto& circuits = driver_circuits(cfg, xi);

  FlipPath path{T, {}, T};
  for (int step = 0; step < kMaxGreedySteps; ++step) {
    std::vector<Face> lk = link_cells_at(path.end, xi);
    const DriverCircuit* found = nullptr;
    for (const DriverCircuit& dz : circuits) {
      if (contracted_flippable(dz.c, lk)) {
        found = &dz;
        break;  // circuits are canonically ordered
      }
    }
    if (!found) return path;

    // Theorem 1 lifts the contracted flip: z must be flippable in T with the
    // side through x present.
    std::optional<FlipMove> move = is_flippable(path.end, found->source, found->source.neg);
    if (!move)
      throw ParadoxError("flippable contracted circuit {" +
                         cfg->face_str(found->source.support) +
                         "} does not lift (contradicts the corner flip theorem)");
    Rational before = star_volume_D(path.end, xi);
    Triangulation next = apply_flip(path.end, *move);
    Rational after = star_volume_D(next, xi);
    if (!(after < before))
      throw ParadoxError("star volume did not decrease under a corner flip");
    path.moves.push_back(*move);
    path.end = std::move(next);
  }
  throw ParadoxError("greedy corner reduction did not terminate");
}

FlipPath escape_U1(const Triangulation& T, const Label& x) {
  const ConfigPtr& cfg = T.config();
  const int xi = cfg->index(x);
  const int ai = cfg->index("a");

  // Conjugating symmetry: the lexicographically smallest g with g(x) = a
  // mapping the lifted link cells exactly onto U1⁻.
  std::vector<Face> lk = link_cells_at(T, xi);
  std::sort(lk.begin(), lk.end());
  const std::vector<Face>& u1 = u1_minus_lifted(*cfg);
  const SymMap* conjugation = nullptr;
  std::vector<Face> mapped;
  for (const SymMap& g : cube_group()) {
    if (g(xi) != ai) continue;
    mapped.clear();
    for (Face f : lk) mapped.push_back(g.apply(f));
    std::sort(mapped.begin(), mapped.end());
    if (mapped == u1) {
      conjugation = &g;
      break;
    }
  }
  if (!conjugation)
    fail(Errc::not_u1, "link of '" + x + "' is not isometric to U1- or U1+");
  const SymMap& g = *conjugation;
  const SymMap ginv = g.inverse();

  // Work in the canonical frame: apex a, link exactly U1⁻.
  Triangulation Tc = apply_sym(g, T);
  Face af = vertex_set_V(Tc, ai);

  // Theorem 3: d is isolated in σ₃ and σ₄ here, so its vertex set embeds in
  // S1 ∖ {l/a} and the greedy reduction must end with κ(d) present.
  FlipPath sub = greedy_corner_reduce(Tc, "d");
  const int di = cfg->index("d");
  if (!sub.end.contains_cell(corner_simplex(*cfg, di)))
    throw ParadoxError("greedy reduction at d did not produce the corner simplex");
  {
    std::vector<Face> check = link_cells_at(sub.end, ai);
    std::sort(check.begin(), check.end());
    if (check != u1)
      throw ParadoxError("securing the corner at d disturbed the U1- link at a");
  }

  // The Lemma 6 flips, in order: z1 = {b,c,f,g}, then z2 = {a,b,e,f}, each
  // removing its currently present side.
  for (Face support : {face_from_labels(*cfg, {"b", "c", "f", "g"}),
                       face_from_labels(*cfg, {"a", "b", "e", "f"})}) {
    Circuit z = radon_partition(support, *cfg);
    Face present;
    if (has_face(sub.end, z.neg) && !has_face(sub.end, z.pos))
      present = z.neg;
    else if (has_face(sub.end, z.pos) && !has_face(sub.end, z.neg))
      present = z.pos;
    else
      throw ParadoxError("circuit {" + cfg->face_str(support) +
                         "} has no unique present side in the U1 escape");
    std::optional<FlipMove> move = is_flippable(sub.end, z, present);
    if (!move)
      throw ParadoxError("Lemma 6 flip {" + cfg->face_str(support) + "} is not flippable");
    sub.moves.push_back(*move);
    sub.end = apply_flip(sub.end, *move);
  }

  const int fi = cfg->index("f");
  if (!(vertex_set_V(sub.end, ai) == af.without(fi)))
    throw ParadoxError("U1 escape did not remove exactly f from the link vertex set");

  // Conjugate the move sequence back and replay it on the original frame.
  FlipPath path{T, {}, T};
  for (const FlipMove& move : sub.moves) {
    FlipMove back;
    back.circuit = apply_sym(ginv, move.circuit);
    back.removed_side = ginv.apply(move.removed_side);
    for (Face ell : move.common_link) back.common_link.push_back(ginv.apply(ell));
    std::sort(back.common_link.begin(), back.common_link.end());
    // Keep the circuit oriented with the removed side as stored.
    if (!(back.removed_side == back.circuit.neg) && !(back.removed_side == back.circuit.pos))
      throw ParadoxError("conjugated move lost its side orientation");
    path.end = apply_flip(path.end, back);
    path.moves.push_back(back);
  }

  // Everything removed contained x, g⁻¹(d) or g⁻¹(f) (all in the class of x).
  Face touched = Face::of({xi, ginv(di), ginv(fi)});
  for (Face cell : T.cells()) {
    if (!cell.intersects(touched) && !path.end.contains_cell(cell))
      throw ParadoxError("U1 escape removed a face disjoint from {x, d, f} images");
  }
  return path;
}

FlipPath insert_corner(const Triangulation& T, const Label& x) {
  const ConfigPtr& cfg = T.config();
  const int xi = cfg->index(x);
  const Face kappa = corner_simplex(*cfg, xi);

  {
    const ContractionContext& ctx = full_contraction(cfg, xi);
    Face v_target = ctx.to_target(vertex_set_V(T, xi));
    bool embeds = false;
    for (const char* sq : {"s1", "s2", "s3"}) {
      ConfigPtr target = Config::preset(sq);
      if (isometric_subset_embedding(*ctx.target, v_target, *target, target->full_face())) {
        embeds = true;
        break;
      }
    }
    if (!embeds)
      fail(Errc::precondition_failed,
           "vertex set at '" + x + "' does not embed into S1, S2 or S3");
  }

  Face members = cube_class_members(*cfg, cube_class_of(*cfg, xi));
  std::vector<int> present_before;
  for (int y : members.indices())
    if (y != xi && T.contains_cell(corner_simplex(*cfg, y))) present_before.push_back(y);

  FlipPath path = greedy_corner_reduce(T, x);
  if (!path.end.contains_cell(kappa)) {
    FlipPath escape;
    try {
      escape = escape_U1(path.end, x);
    } catch (const Error& e) {
      if (e.code() == Errc::not_u1)
        throw ParadoxError(
            "link after greedy reduction is neither the corner base nor U1 "
            "(contradicts the L_x trichotomy)");
      throw;
    }
    path = concat(std::move(path), escape);
    path = concat(std::move(path), greedy_corner_reduce(path.end, x));
    if (!path.end.contains_cell(kappa))
      throw ParadoxError("second greedy reduction did not reach the corner at '" + x + "'");
  }

  for (int y : present_before)
    if (!path.end.contains_cell(corner_simplex(*cfg, y)))
      throw ParadoxError("corner insertion removed a previously present corner simplex");
  return path;
}

FlipPath flip_to_corner_cut(const Triangulation& T) {
  const ConfigPtr& cfg = T.config();
  FlipPath path{T, {}, T};

  auto sigma4_edge = [&](const Triangulation& t) -> std::optional<Face> {
    SigmaGraph s4 = sigma_graph(t, 4);
    if (s4.edges.empty()) return std::nullopt;
    return s4.edges.front();  // Prop 2: at most one
  };

  CubeClass working = CubeClass::E;
  if (auto edge = sigma4_edge(T))
    working = opposite_class(cube_class_of(*cfg, edge->lowest()));

  auto corner_count = [&](const Triangulation& t, CubeClass s) {
    int count = 0;
    for (int y : cube_class_members(*cfg, s).indices())
      if (t.contains_cell(corner_simplex(*cfg, y))) ++count;
    return count;
  };

  bool switched = false;
  for (int iter = 0; iter < kMaxOuterLoops; ++iter) {
    if (is_corner_cut(path.end)) return path;

    // A σ₄ edge inside the working class forces the switch of Theorem 4's
    // two-phase argument; the edge is disjoint from the new class and
    // survives every later step, so this happens at most once.
    if (auto edge = sigma4_edge(path.end)) {
      if (edge->subset_of(cube_class_members(*cfg, working))) {
        if (switched) throw ParadoxError("working class forced to switch twice");
        working = opposite_class(working);
        switched = true;
      }
    }

    int before = corner_count(path.end, working);
    int chosen = -1;
    for (int y : cube_class_members(*cfg, working).indices()) {
      if (path.end.contains_cell(corner_simplex(*cfg, y))) continue;
      const ContractionContext& ctx = full_contraction(cfg, y);
      Face v_target = ctx.to_target(vertex_set_V(path.end, y));
      for (const char* sq : {"s1", "s2", "s3"}) {
        ConfigPtr target = Config::preset(sq);
        if (isometric_subset_embedding(*ctx.target, v_target, *target, target->full_face())) {
          chosen = y;
          break;
        }
      }
      if (chosen >= 0) break;
    }
    if (chosen < 0)
      throw ParadoxError(
          "no corner-free vertex of the working class embeds into an S_q "
          "(contradicts the existence lemma)");

    path = concat(std::move(path), insert_corner(path.end, cfg->label(chosen)));
    if (corner_count(path.end, working) <= before)
      throw ParadoxError("corner count did not increase in the working class");
  }
  throw ParadoxError("corner-cut procedure did not terminate");
}

}  // namespace cubeflip
