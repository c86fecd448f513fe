#include "cubeflip/regularity.hpp"

#include "cubeflip/errors.hpp"
#include "linalg.hpp"
#include "lp.hpp"

namespace cubeflip {

namespace {

// Affine (barycentric) coordinates of point p with respect to cell t: the
// unique μ with Σ μ_i = 1 and Σ μ_i v_i = p, in frame coordinates.
std::vector<Rational> affine_coords(const Config& cfg, const std::vector<int>& cell, int p) {
  const int k = static_cast<int>(cell.size());
  linalg::Matrix m(static_cast<std::size_t>(k), std::vector<Rational>(static_cast<std::size_t>(k)));
  std::vector<Rational> rhs(static_cast<std::size_t>(k));
  // Rows: affine_dim coordinate equations plus the Σμ = 1 row.
  for (int r = 0; r + 1 < k; ++r) {
    for (int c = 0; c < k; ++c)
      m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
          cfg.frame_coord(cell[static_cast<std::size_t>(c)])[static_cast<std::size_t>(r)];
    rhs[static_cast<std::size_t>(r)] = cfg.frame_coord(p)[static_cast<std::size_t>(r)];
  }
  for (int c = 0; c < k; ++c) m[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(c)] = 1;
  rhs[static_cast<std::size_t>(k - 1)] = 1;

  auto sol = linalg::solve(std::move(m), std::move(rhs));
  if (!sol) fail(Errc::singular_face, "degenerate cell in certificate check");
  return *sol;
}

}  // namespace

HeightFunction corner_cut_heights(const Config& cube4, CubeClass s, Face diagonal) {
  Face members = cube_class_members(cube4, s);
  HeightFunction w(static_cast<std::size_t>(cube4.size()));
  for (int i = 0; i < cube4.size(); ++i) {
    if (diagonal.contains(i))
      w[static_cast<std::size_t>(i)] = 0;
    else if (members.contains(i))
      w[static_cast<std::size_t>(i)] = 1;
    else
      w[static_cast<std::size_t>(i)] = 2;
  }
  return w;
}

bool verify_certificate(const Triangulation& T, const HeightFunction& w) {
  const Config& cfg = *T.config();
  if (static_cast<int>(w.size()) != cfg.size())
    fail(Errc::wrong_cardinality, "height function must be total on the config");

  for (Face cell : T.cells()) {
    std::vector<int> vs = cell.indices();
    for (int p = 0; p < cfg.size(); ++p) {
      if (cell.contains(p)) continue;
      std::vector<Rational> mu = affine_coords(cfg, vs, p);
      Rational lift = 0;
      for (std::size_t i = 0; i < vs.size(); ++i)
        lift += mu[i] * w[static_cast<std::size_t>(vs[i])];
      if (!(lift < w[static_cast<std::size_t>(p)])) return false;
    }
  }
  return true;
}

std::optional<HeightFunction> is_regular(const Triangulation& T) {
  const Config& cfg = *T.config();
  const int n = cfg.size();
  if (T.cells().empty()) return std::nullopt;

  // Gauge: pin the heights of the first cell to zero (a witness can always be
  // shifted by the global affine map agreeing with it there), then ask for
  // every strict inequality to hold with slack at least 1.
  Face pinned = T.cells().front();
  std::vector<int> column_of(static_cast<std::size_t>(n), -1);
  int free_vars = 0;
  for (int i = 0; i < n; ++i)
    if (!pinned.contains(i)) column_of[static_cast<std::size_t>(i)] = free_vars++;

  std::vector<std::vector<Rational>> A;
  std::vector<Rational> b;
  for (Face cell : T.cells()) {
    std::vector<int> vs = cell.indices();
    for (int p = 0; p < n; ++p) {
      if (cell.contains(p)) continue;
      std::vector<Rational> row(static_cast<std::size_t>(free_vars), Rational(0));
      if (column_of[static_cast<std::size_t>(p)] >= 0)
        row[static_cast<std::size_t>(column_of[static_cast<std::size_t>(p)])] += 1;
      std::vector<Rational> mu = affine_coords(cfg, vs, p);
      for (std::size_t i = 0; i < vs.size(); ++i) {
        int col = column_of[static_cast<std::size_t>(vs[i])];
        if (col >= 0) row[static_cast<std::size_t>(col)] -= mu[i];
      }
      A.push_back(std::move(row));
      b.push_back(Rational(1));
    }
  }

  lp::Feasibility result = lp::solve_feasibility(A, b);
  if (!result.feasible) return std::nullopt;

  HeightFunction w(static_cast<std::size_t>(n), Rational(0));
  for (int i = 0; i < n; ++i) {
    int col = column_of[static_cast<std::size_t>(i)];
    if (col >= 0) w[static_cast<std::size_t>(i)] = result.witness[static_cast<std::size_t>(col)];
  }
  if (!verify_certificate(T, w))
    throw ParadoxError("LP witness fails the certificate check");
  return w;
}

}  // namespace cubeflip
