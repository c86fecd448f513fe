#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cubeflip/rational.hpp"

namespace cubeflip {

using Label = std::string;

struct Point {
  std::vector<Rational> coords;

  bool operator==(const Point& other) const = default;
};

/// A face: a sorted set of labels, stored as a bitmask over the owning
/// config's label order. Equality is structural; subset, union and
/// intersection are single-word operations. Configs are capped at 32 points
/// (the cube needs 16).
class Face {
 public:
  constexpr Face() = default;
  constexpr explicit Face(std::uint32_t bits) : bits_(bits) {}

  static Face of(std::initializer_list<int> indices) {
    Face f;
    for (int i : indices) f = f.with(i);
    return f;
  }

  constexpr std::uint32_t bits() const { return bits_; }
  int size() const { return __builtin_popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int i) const { return (bits_ >> i) & 1u; }
  constexpr bool subset_of(Face g) const { return (bits_ & ~g.bits_) == 0; }
  constexpr bool intersects(Face g) const { return (bits_ & g.bits_) != 0; }

  constexpr Face with(int i) const { return Face(bits_ | (1u << i)); }
  constexpr Face without(int i) const { return Face(bits_ & ~(1u << i)); }

  friend constexpr Face operator|(Face a, Face b) { return Face(a.bits_ | b.bits_); }
  friend constexpr Face operator&(Face a, Face b) { return Face(a.bits_ & b.bits_); }
  friend constexpr Face operator-(Face a, Face b) { return Face(a.bits_ & ~b.bits_); }

  int lowest() const { return __builtin_ctz(bits_); }  // undefined on empty

  std::vector<int> indices() const {
    std::vector<int> out;
    out.reserve(size());
    for (std::uint32_t b = bits_; b != 0; b &= b - 1) out.push_back(__builtin_ctz(b));
    return out;
  }

  bool operator==(const Face&) const = default;

  // Lexicographic order on the sorted index sequence, a proper prefix being
  // smaller. (Not plain numeric order on the mask.)
  bool operator<(Face g) const {
    std::uint32_t d = bits_ ^ g.bits_;
    if (d == 0) return false;
    int t = __builtin_ctz(d);
    if ((bits_ >> t) & 1u) return (g.bits_ >> t) != 0;
    return (bits_ >> t) == 0;
  }

 private:
  std::uint32_t bits_ = 0;
};

/// A label bijection of a config preserving all pairwise squared distances.
struct SymMap {
  std::vector<std::uint8_t> perm;  // index -> index

  int operator()(int i) const { return perm[static_cast<std::size_t>(i)]; }

  Face apply(Face f) const {
    Face out;
    for (std::uint32_t b = f.bits(); b != 0; b &= b - 1)
      out = out.with(perm[static_cast<std::size_t>(__builtin_ctz(b))]);
    return out;
  }

  SymMap inverse() const;
  static SymMap compose(const SymMap& outer, const SymMap& inner);  // outer∘inner
  static SymMap identity(int n);
  bool is_identity() const;

  bool operator==(const SymMap&) const = default;
  bool operator<(const SymMap& other) const { return perm < other.perm; }
};

struct Circuit;  // kernel.hpp
class Config;
using ConfigPtr = std::shared_ptr<const Config>;

/// An immutable labeled point configuration with exact rational coordinates.
///
/// Besides the raw data the config owns the derived structures every other
/// module leans on: an affine frame (so volumes of lower-dimensional
/// configurations are well defined without irrational normalization), the
/// squared-distance matrix, and lazily computed circuit / automorphism /
/// hull-volume caches. Everything is safe to share across threads.
class Config : public std::enable_shared_from_this<Config> {
 public:
  static ConfigPtr make(std::string name, int ambient_dim,
                        std::vector<std::pair<Label, Point>> points);

  /// Built-in presets: "cube3", "cube4", "s1", "s2", "s3" (case-insensitive).
  static ConfigPtr preset(const std::string& name);
  static const std::vector<std::string>& preset_names();

  ~Config();

  const std::string& name() const { return name_; }
  int ambient_dim() const { return ambient_dim_; }
  int affine_dim() const { return affine_dim_; }
  int size() const { return static_cast<int>(labels_.size()); }

  const Label& label(int i) const { return labels_[static_cast<std::size_t>(i)]; }
  const std::vector<Label>& labels() const { return labels_; }
  int index(const Label& l) const;                 // throws Errc::unknown_label
  std::optional<int> find(const Label& l) const;
  const Point& point(int i) const { return points_[static_cast<std::size_t>(i)]; }

  Face full_face() const { return Face((size() == 32) ? ~0u : ((1u << size()) - 1u)); }
  Face face_of(const std::vector<Label>& labels) const;
  std::vector<Label> labels_of(Face f) const;
  std::string face_str(Face f) const;  // labels space-separated

  const Rational& sqdist(int i, int j) const {
    return sqdist_[static_cast<std::size_t>(i) * labels_.size() + static_cast<std::size_t>(j)];
  }

  /// Coordinates of point i in the config's own affine frame (origin = first
  /// point, basis = first affinely independent difference vectors, in label
  /// order). Length affine_dim(). All volume computations use these, so they
  /// are consistent within a config regardless of the ambient embedding.
  const std::vector<Rational>& frame_coord(int i) const {
    return frame_[static_cast<std::size_t>(i)];
  }

  const std::vector<Circuit>& circuits() const;          // cached, canonical order
  const Rational& hull_volume() const;                   // cached, frame units
  const std::vector<SymMap>& automorphisms() const;      // cached, sorted

  /// FNV-1a over the printed labels and coordinates; identifies the config
  /// in checkpoint files.
  std::uint64_t identity_hash() const;

 private:
  Config() = default;
  void build_frame();

  std::string name_;
  int ambient_dim_ = 0;
  int affine_dim_ = 0;
  std::vector<Label> labels_;
  std::vector<Point> points_;
  std::vector<Rational> sqdist_;
  std::vector<std::vector<Rational>> frame_;

  struct Caches;
  std::unique_ptr<Caches> caches_;
};

}  // namespace cubeflip
