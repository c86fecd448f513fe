#include "cubeflip/config.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <sstream>

#include "cubeflip/errors.hpp"
#include "cubeflip/kernel.hpp"
#include "cubeflip/symmetry.hpp"
#include "cubeflip/triangulation.hpp"
#include "linalg.hpp"

namespace cubeflip {

SymMap SymMap::inverse() const {
  SymMap out;
  out.perm.resize(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) out.perm[perm[i]] = static_cast<std::uint8_t>(i);
  return out;
}

SymMap SymMap::compose(const SymMap& outer, const SymMap& inner) {
  SymMap out;
  out.perm.resize(inner.perm.size());
  for (std::size_t i = 0; i < inner.perm.size(); ++i) out.perm[i] = outer.perm[inner.perm[i]];
  return out;
}

SymMap SymMap::identity(int n) {
  SymMap out;
  out.perm.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out.perm[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
  return out;
}

bool SymMap::is_identity() const {
  for (std::size_t i = 0; i < perm.size(); ++i)
    if (perm[i] != i) return false;
  return true;
}

struct Config::Caches {
  std::once_flag circuits_once, volume_once, autos_once;
  std::vector<Circuit> circuits;
  Rational hull_volume;
  std::vector<SymMap> automorphisms;
};

Config::~Config() = default;

ConfigPtr Config::make(std::string name, int ambient_dim,
                       std::vector<std::pair<Label, Point>> points) {
  if (points.empty()) fail(Errc::degenerate_config, "empty configuration");
  if (points.size() > 32) fail(Errc::too_large, "more than 32 points");

  auto cfg = std::shared_ptr<Config>(new Config());
  cfg->name_ = std::move(name);
  cfg->ambient_dim_ = ambient_dim;
  cfg->caches_ = std::make_unique<Caches>();

  std::set<Label> seen_labels;
  for (auto& [label, point] : points) {
    if (static_cast<int>(point.coords.size()) != ambient_dim)
      fail(Errc::wrong_cardinality, "point '" + label + "' has wrong dimension");
    if (!seen_labels.insert(label).second)
      fail(Errc::parse, "duplicate label '" + label + "'");
    cfg->labels_.push_back(label);
    cfg->points_.push_back(std::move(point));
  }
  for (std::size_t i = 0; i < cfg->points_.size(); ++i)
    for (std::size_t j = i + 1; j < cfg->points_.size(); ++j)
      if (cfg->points_[i] == cfg->points_[j])
        fail(Errc::parse, "points '" + cfg->labels_[i] + "' and '" + cfg->labels_[j] +
                              "' coincide");

  const std::size_t n = cfg->labels_.size();
  cfg->sqdist_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      cfg->sqdist_[i * n + j] = squared_distance(cfg->points_[i], cfg->points_[j]);

  cfg->build_frame();
  return cfg;
}

// Affine frame: origin = first point; basis = difference vectors of the first
// points that increase the rank, scanned in label order. Frame coordinates of
// every point are obtained by solving against that basis, so they are exact
// and every volume downstream is measured in the same units.
void Config::build_frame() {
  const int n = size();
  std::vector<int> basis;  // point indices whose difference to point 0 is a basis vector
  linalg::Matrix rows;     // current independent difference vectors
  for (int i = 1; i < n; ++i) {
    std::vector<Rational> diff(static_cast<std::size_t>(ambient_dim_));
    for (int c = 0; c < ambient_dim_; ++c)
      diff[static_cast<std::size_t>(c)] =
          points_[static_cast<std::size_t>(i)].coords[static_cast<std::size_t>(c)] -
          points_[0].coords[static_cast<std::size_t>(c)];
    rows.push_back(diff);
    if (linalg::rank(rows) == static_cast<int>(rows.size())) {
      basis.push_back(i);
    } else {
      rows.pop_back();
    }
  }
  affine_dim_ = static_cast<int>(basis.size());

  // Solve basisᵀ·x = diff in the least-dimension sense: the system is
  // consistent by construction, so use the square system on independent
  // coordinate rows. Pick coordinate rows that make the basis matrix square
  // and invertible.
  const int d = affine_dim_;
  std::vector<int> coord_rows;
  {
    linalg::Matrix probe;
    for (int c = 0; c < ambient_dim_ && static_cast<int>(coord_rows.size()) < d; ++c) {
      std::vector<Rational> row(static_cast<std::size_t>(d));
      for (int k = 0; k < d; ++k)
        row[static_cast<std::size_t>(k)] =
            points_[static_cast<std::size_t>(basis[static_cast<std::size_t>(k)])]
                .coords[static_cast<std::size_t>(c)] -
            points_[0].coords[static_cast<std::size_t>(c)];
      probe.push_back(row);
      if (linalg::rank(probe) == static_cast<int>(probe.size())) {
        coord_rows.push_back(c);
      } else {
        probe.pop_back();
      }
    }
  }

  linalg::Matrix square(static_cast<std::size_t>(d), std::vector<Rational>(static_cast<std::size_t>(d)));
  for (int r = 0; r < d; ++r)
    for (int k = 0; k < d; ++k)
      square[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)] =
          points_[static_cast<std::size_t>(basis[static_cast<std::size_t>(k)])]
              .coords[static_cast<std::size_t>(coord_rows[static_cast<std::size_t>(r)])] -
          points_[0].coords[static_cast<std::size_t>(coord_rows[static_cast<std::size_t>(r)])];

  frame_.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    std::vector<Rational> rhs(static_cast<std::size_t>(d));
    for (int r = 0; r < d; ++r)
      rhs[static_cast<std::size_t>(r)] =
          points_[static_cast<std::size_t>(i)]
              .coords[static_cast<std::size_t>(coord_rows[static_cast<std::size_t>(r)])] -
          points_[0].coords[static_cast<std::size_t>(coord_rows[static_cast<std::size_t>(r)])];
    auto sol = linalg::solve(square, std::move(rhs));
    if (!sol) fail(Errc::degenerate_config, "frame solve failed");
    frame_[static_cast<std::size_t>(i)] = std::move(*sol);
  }
}

int Config::index(const Label& l) const {
  auto found = find(l);
  if (!found) fail(Errc::unknown_label, "label '" + l + "' not in config " + name_);
  return *found;
}

std::optional<int> Config::find(const Label& l) const {
  for (int i = 0; i < size(); ++i)
    if (labels_[static_cast<std::size_t>(i)] == l) return i;
  return std::nullopt;
}

Face Config::face_of(const std::vector<Label>& labels) const {
  Face f;
  for (const Label& l : labels) f = f.with(index(l));
  return f;
}

std::vector<Label> Config::labels_of(Face f) const {
  std::vector<Label> out;
  for (int i : f.indices()) out.push_back(label(i));
  return out;
}

std::string Config::face_str(Face f) const {
  std::string out;
  for (int i : f.indices()) {
    if (!out.empty()) out += ' ';
    out += label(i);
  }
  return out;
}

const std::vector<Circuit>& Config::circuits() const {
  std::call_once(caches_->circuits_once, [this] {
    caches_->circuits = [this] {
      std::vector<Circuit> out;
      const int n = size();
      const int max_size = affine_dim_ + 2;
      std::vector<int> subset;
      // Depth-first subset scan of sizes 3..affine_dim+2.
      auto scan = [&](auto&& self, int first) -> void {
        int k = static_cast<int>(subset.size());
        if (k >= 3) {
          Face support;
          for (int i : subset) support = support.with(i);
          if (auto z = try_radon_partition(support, *this)) out.push_back(*z);
        }
        if (k == max_size) return;
        for (int i = first; i < n; ++i) {
          subset.push_back(i);
          self(self, i + 1);
          subset.pop_back();
        }
      };
      scan(scan, 0);
      std::sort(out.begin(), out.end());
      return out;
    }();
  });
  return caches_->circuits;
}

const Rational& Config::hull_volume() const {
  std::call_once(caches_->volume_once, [this] {
    Triangulation placed = placing_triangulation(shared_from_this());
    Rational total = 0;
    for (Face cell : placed.cells()) total += abs(signed_volume(cell, *this));
    caches_->hull_volume = total;
  });
  return caches_->hull_volume;
}

const std::vector<SymMap>& Config::automorphisms() const {
  std::call_once(caches_->autos_once,
                 [this] { caches_->automorphisms = cubeflip::automorphisms(*this); });
  return caches_->automorphisms;
}

std::uint64_t Config::identity_hash() const {
  std::ostringstream os;
  os << ambient_dim_ << ';';
  for (int i = 0; i < size(); ++i) {
    os << labels_[static_cast<std::size_t>(i)];
    for (const Rational& c : points_[static_cast<std::size_t>(i)].coords) os << ' ' << rat_str(c);
    os << ';';
  }
  std::uint64_t h = 1469598103934665603ull;
  for (char ch : os.str()) {
    h ^= static_cast<unsigned char>(ch);
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace cubeflip
