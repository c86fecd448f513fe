#include "cubeflip/symmetry.hpp"

#include <algorithm>
#include <map>

#include "cubeflip/errors.hpp"

namespace cubeflip {

const std::vector<SymMap>& cube_group() {
  static const std::vector<SymMap> group = [] {
    ConfigPtr cube4 = Config::preset("cube4");
    // Hyperoctahedral group: permute the four coordinates, then flip any
    // subset of them. On vertex indices: bit k of the image is bit perm[k]
    // of the argument, XORed with the flip mask.
    std::vector<SymMap> out;
    std::array<int, 4> coord = {0, 1, 2, 3};
    do {
      for (int mask = 0; mask < 16; ++mask) {
        SymMap g;
        g.perm.resize(16);
        for (int v = 0; v < 16; ++v) {
          int image = 0;
          for (int k = 0; k < 4; ++k)
            image |= ((v >> coord[static_cast<std::size_t>(k)]) & 1) << k;
          g.perm[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(image ^ mask);
        }
        out.push_back(std::move(g));
      }
    } while (std::next_permutation(coord.begin(), coord.end()));
    std::sort(out.begin(), out.end());

    // Sanity: distinct and distance preserving.
    for (std::size_t i = 1; i < out.size(); ++i)
      if (out[i] == out[i - 1]) throw ParadoxError("cube group has a repeated element");
    for (const SymMap& g : out)
      for (int i = 0; i < 16; ++i)
        for (int j = i + 1; j < 16; ++j)
          if (cube4->sqdist(i, j) != cube4->sqdist(g(i), g(j)))
            throw ParadoxError("cube group map does not preserve distances");
    return out;
  }();
  return group;
}

// Distance-matrix-preserving bijections by backtracking: assign images in
// index order; a candidate must reproduce every squared distance to the
// points already assigned.
std::vector<SymMap> automorphisms(const Config& cfg) {
  const int n = cfg.size();
  std::vector<SymMap> out;
  std::vector<int> image(static_cast<std::size_t>(n), -1);
  std::vector<bool> used(static_cast<std::size_t>(n), false);

  auto extend = [&](auto&& self, int i) -> void {
    if (i == n) {
      std::vector<std::uint8_t> perm(image.begin(), image.end());
      out.push_back(SymMap{std::move(perm)});
      return;
    }
    for (int cand = 0; cand < n; ++cand) {
      if (used[static_cast<std::size_t>(cand)]) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j)
        ok = cfg.sqdist(i, j) == cfg.sqdist(cand, image[static_cast<std::size_t>(j)]);
      if (!ok) continue;
      image[static_cast<std::size_t>(i)] = cand;
      used[static_cast<std::size_t>(cand)] = true;
      self(self, i + 1);
      used[static_cast<std::size_t>(cand)] = false;
      image[static_cast<std::size_t>(i)] = -1;
    }
  };
  extend(extend, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::string encode_cells(const std::vector<Face>& sorted_cells) {
  std::string out;
  out.reserve(sorted_cells.size() * 2);
  for (Face c : sorted_cells) {
    std::uint32_t bits = c.bits();
    out.push_back(static_cast<char>((bits >> 8) & 0xff));
    out.push_back(static_cast<char>(bits & 0xff));
  }
  return out;
}

std::vector<Face> decode_cells(const std::string& form) {
  std::vector<Face> cells;
  cells.reserve(form.size() / 2);
  for (std::size_t i = 0; i + 1 < form.size(); i += 2) {
    std::uint32_t hi = static_cast<unsigned char>(form[i]);
    std::uint32_t lo = static_cast<unsigned char>(form[i + 1]);
    cells.push_back(Face((hi << 8) | lo));
  }
  return cells;
}

Triangulation decode_triangulation(ConfigPtr cfg, const std::string& form) {
  return Triangulation::from_cells(std::move(cfg), decode_cells(form));
}

namespace {

// Sorted image of the cell masks under g. Cells of a triangulation all have
// the same cardinality, so sorting by mask-lex equals the Face order.
void mapped_cells(const SymMap& g, const std::vector<Face>& cells, std::vector<Face>& out) {
  out.clear();
  for (Face c : cells) out.push_back(g.apply(c));
  std::sort(out.begin(), out.end());
}

}  // namespace

std::string canonical_form(const Triangulation& T, const std::vector<SymMap>& group) {
  if (group.empty()) return encode_cells(T.cells());
  std::vector<Face> best, scratch;
  bool have = false;
  for (const SymMap& g : group) {
    mapped_cells(g, T.cells(), scratch);
    if (!have || scratch < best) {
      best = scratch;
      have = true;
    }
  }
  return encode_cells(best);
}

std::uint64_t orbit_size(const Triangulation& T, const std::vector<SymMap>& group) {
  if (group.empty()) return 1;
  std::vector<Face> scratch;
  std::uint64_t stabilizer = 0;
  for (const SymMap& g : group) {
    mapped_cells(g, T.cells(), scratch);
    if (scratch == T.cells()) ++stabilizer;
  }
  return group.size() / stabilizer;
}

Triangulation apply_sym(const SymMap& g, const Triangulation& T) {
  std::vector<Face> cells;
  cells.reserve(T.cells().size());
  for (Face c : T.cells()) cells.push_back(g.apply(c));
  return Triangulation::from_cells(T.config(), std::move(cells));
}

Circuit apply_sym(const SymMap& g, const Circuit& z) {
  Circuit out;
  out.support = g.apply(z.support);
  out.neg = g.apply(z.neg);
  out.pos = g.apply(z.pos);
  if (out.pos < out.neg) std::swap(out.neg, out.pos);
  return out;
}

std::optional<std::vector<std::pair<int, int>>> isometric_subset_embedding(
    const Config& cfg_a, Face subset_a, const Config& cfg_b, Face subset_b) {
  std::vector<int> from = subset_a.indices();
  std::vector<int> to = subset_b.indices();
  if (from.size() > to.size()) return std::nullopt;

  std::vector<int> image(from.size(), -1);
  std::vector<bool> used(to.size(), false);
  auto extend = [&](auto&& self, std::size_t i) -> bool {
    if (i == from.size()) return true;
    for (std::size_t c = 0; c < to.size(); ++c) {
      if (used[c]) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j)
        ok = cfg_a.sqdist(from[i], from[j]) ==
             cfg_b.sqdist(to[c], to[static_cast<std::size_t>(image[j])]);
      if (!ok) continue;
      image[i] = static_cast<int>(c);
      used[c] = true;
      if (self(self, i + 1)) return true;
      used[c] = false;
      image[i] = -1;
    }
    return false;
  };
  if (!extend(extend, 0)) return std::nullopt;

  std::vector<std::pair<int, int>> out;
  for (std::size_t i = 0; i < from.size(); ++i)
    out.emplace_back(from[i], to[static_cast<std::size_t>(image[i])]);
  return out;
}

std::uint64_t group_hash(const std::vector<SymMap>& group) {
  std::uint64_t h = 1469598103934665603ull;
  for (const SymMap& g : group) {
    for (std::uint8_t v : g.perm) {
      h ^= v;
      h *= 1099511628211ull;
    }
    h ^= 0xff;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace cubeflip
