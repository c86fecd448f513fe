#include "cubeflip/kernel.hpp"

#include <algorithm>

#include "cubeflip/errors.hpp"
#include "linalg.hpp"

namespace cubeflip {

namespace {

// Homogenized frame coordinates of one point: (frame(p), 1).
std::vector<Rational> homogenized(const Config& cfg, int i) {
  std::vector<Rational> row = cfg.frame_coord(i);
  row.push_back(Rational(1));
  return row;
}

}  // namespace

Rational squared_distance(const Point& a, const Point& b) {
  Rational acc = 0;
  for (std::size_t c = 0; c < a.coords.size(); ++c) {
    Rational d = a.coords[c] - b.coords[c];
    acc += d * d;
  }
  return acc;
}

int affine_rank(Face labels, const Config& cfg) {
  if (!labels.subset_of(cfg.full_face()))
    fail(Errc::unknown_label, "face uses labels outside config " + cfg.name());
  if (labels.empty()) return 0;
  linalg::Matrix m;
  for (int i : labels.indices()) m.push_back(homogenized(cfg, i));
  return linalg::rank(std::move(m));
}

Rational signed_volume_ordered(std::span<const int> vertices, const Config& cfg) {
  const int d = cfg.affine_dim();
  if (static_cast<int>(vertices.size()) != d + 1)
    fail(Errc::wrong_cardinality, "simplex needs " + std::to_string(d + 1) + " vertices, got " +
                                      std::to_string(vertices.size()));
  linalg::Matrix m(static_cast<std::size_t>(d), std::vector<Rational>(static_cast<std::size_t>(d)));
  const std::vector<Rational>& origin = cfg.frame_coord(vertices[0]);
  for (int r = 0; r < d; ++r) {
    const std::vector<Rational>& v = cfg.frame_coord(vertices[static_cast<std::size_t>(r) + 1]);
    for (int c = 0; c < d; ++c)
      m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
          v[static_cast<std::size_t>(c)] - origin[static_cast<std::size_t>(c)];
  }
  Rational det = linalg::det(std::move(m));
  BigInt factorial = 1;
  for (int k = 2; k <= d; ++k) factorial *= k;
  return det / Rational(factorial);
}

Rational signed_volume(Face simplex, const Config& cfg) {
  std::vector<int> order = simplex.indices();
  return signed_volume_ordered(order, cfg);
}

std::optional<Circuit> try_radon_partition(Face support, const Config& cfg) {
  const int k = support.size();
  if (k < 2) return std::nullopt;
  std::vector<int> pts = support.indices();

  // Columns are the homogenized points; a circuit has a one-dimensional
  // kernel whose generator has no zero entry (a zero entry would make the
  // remaining points affinely dependent).
  const int rows = cfg.affine_dim() + 1;
  linalg::Matrix m(static_cast<std::size_t>(rows), std::vector<Rational>(static_cast<std::size_t>(k)));
  for (int c = 0; c < k; ++c) {
    std::vector<Rational> h = homogenized(cfg, pts[static_cast<std::size_t>(c)]);
    for (int r = 0; r < rows; ++r)
      m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = h[static_cast<std::size_t>(r)];
  }
  auto lambda = linalg::kernel_if_1d(std::move(m), k);
  if (!lambda) return std::nullopt;

  Circuit z;
  z.support = support;
  for (int c = 0; c < k; ++c) {
    const Rational& coeff = (*lambda)[static_cast<std::size_t>(c)];
    if (coeff == 0) return std::nullopt;
    if (coeff > 0)
      z.neg = z.neg.with(pts[static_cast<std::size_t>(c)]);
    else
      z.pos = z.pos.with(pts[static_cast<std::size_t>(c)]);
  }
  if (z.neg.empty() || z.pos.empty()) return std::nullopt;  // cannot happen: both sums vanish
  if (z.pos < z.neg) std::swap(z.neg, z.pos);
  return z;
}

Circuit radon_partition(Face support, const Config& cfg) {
  if (!support.subset_of(cfg.full_face()))
    fail(Errc::unknown_label, "support uses labels outside config " + cfg.name());
  auto z = try_radon_partition(support, cfg);
  if (!z) fail(Errc::not_a_circuit, "{" + cfg.face_str(support) + "} in " + cfg.name());
  return *z;
}

const std::vector<Circuit>& enumerate_circuits(const Config& cfg) { return cfg.circuits(); }

std::vector<Circuit> circuits_through(const Config& cfg, int x) {
  if (x < 0 || x >= cfg.size()) fail(Errc::unknown_label, "bad index");
  std::vector<Circuit> out;
  for (const Circuit& z : cfg.circuits()) {
    if (!z.support.contains(x)) continue;
    Circuit oriented = z;
    if (oriented.pos.contains(x)) std::swap(oriented.neg, oriented.pos);
    out.push_back(oriented);
  }
  return out;
}

std::vector<Circuit> circuits_through(const Config& cfg, const Label& x) {
  return circuits_through(cfg, cfg.index(x));
}

}  // namespace cubeflip
