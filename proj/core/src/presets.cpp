#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>

#include "cubeflip/config.hpp"
#include "cubeflip/contraction.hpp"
#include "cubeflip/errors.hpp"

namespace cubeflip {

namespace {

// Vertices of {0,1}^d labeled in binary-counter order; for d = 4 this is the
// a..p column matrix (bit k of the index is the coordinate along u_{k+1}).
ConfigPtr make_cube(const std::string& name, int d) {
  std::vector<std::pair<Label, Point>> points;
  for (int v = 0; v < (1 << d); ++v) {
    Point pt;
    pt.coords.resize(static_cast<std::size_t>(d));
    for (int c = 0; c < d; ++c) pt.coords[static_cast<std::size_t>(c)] = (v >> c) & 1;
    points.emplace_back(std::string(1, static_cast<char>('a' + v)), std::move(pt));
  }
  return Config::make(name, d, std::move(points));
}

// S_q presets: contractions of the 4-cube at a with the §5 label subsets
// removed (S1 drops h,n,o,p; S2 drops d,j,k,p; S3 drops f,g,j,k,p).
ConfigPtr make_s_config(const std::string& name, const std::vector<Label>& removed) {
  ConfigPtr cube4 = Config::preset("cube4");
  Face keep = cube4->full_face().without(cube4->index("a"));
  for (const Label& l : removed) keep = keep.without(cube4->index(l));
  return contract_config(cube4, "a", keep, name).target;
}

}  // namespace

ConfigPtr Config::preset(const std::string& name) {
  std::string key;
  for (char c : name) key += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));

  static std::mutex mu;
  static std::map<std::string, ConfigPtr> cache;
  std::scoped_lock lock(mu);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  ConfigPtr cfg;
  if (key == "cube3") {
    cfg = make_cube("cube3", 3);
  } else if (key == "cube4") {
    cfg = make_cube("cube4", 4);
  } else if (key == "s1") {
    cfg = make_s_config("S1", {"h", "n", "o", "p"});
  } else if (key == "s2") {
    cfg = make_s_config("S2", {"d", "j", "k", "p"});
  } else if (key == "s3") {
    cfg = make_s_config("S3", {"f", "g", "j", "k", "p"});
  } else {
    fail(Errc::parse, "unknown preset '" + name + "'");
  }
  cache.emplace(key, cfg);
  return cfg;
}

const std::vector<std::string>& Config::preset_names() {
  static const std::vector<std::string> names = {"cube3", "cube4", "s1", "s2", "s3"};
  return names;
}

}  // namespace cubeflip
