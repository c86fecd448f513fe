#include "cubeflip/enumeration.hpp"

#include <unistd.h>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "cubeflip/errors.hpp"
#include "visited_store.hpp"

namespace cubeflip {

namespace {

std::string to_hex(const std::string& bytes) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char c : bytes) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 0xf]);
  }
  return out;
}

std::string from_hex(const std::string& hex) {
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    return -1;
  };
  if (hex.size() % 2 != 0) fail(Errc::parse, "odd hex string");
  std::string out;
  out.reserve(hex.size() / 2);
  for (std::size_t i = 0; i < hex.size(); i += 2) {
    int hi = nibble(hex[i]), lo = nibble(hex[i + 1]);
    if (hi < 0 || lo < 0) fail(Errc::parse, "bad hex digit");
    out.push_back(static_cast<char>((hi << 4) | lo));
  }
  return out;
}

std::filesystem::path pick_tmp_dir(const std::string& requested) {
  if (!requested.empty()) return requested;
  if (const char* env = std::getenv("CUBEFLIP_TMPDIR")) return env;
  return std::filesystem::temp_directory_path();
}

std::filesystem::path unique_spill_dir(const std::filesystem::path& base) {
  static std::atomic<int> counter{0};
  return base / ("cubeflip-store-" + std::to_string(::getpid()) + "-" +
                 std::to_string(counter.fetch_add(1)));
}

struct CheckpointState {
  std::uint64_t level = 0, flips = 0, max_frontier = 0;
  std::vector<std::string> visited;   // sorted
  std::vector<std::string> frontier;  // sorted
};

void write_checkpoint(const std::string& path, std::uint64_t config_hash,
                      std::uint64_t group_h, std::uint64_t level, std::uint64_t flips,
                      std::uint64_t max_frontier, const VisitedStore& visited,
                      const std::vector<std::string>& frontier) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) fail(Errc::parse, "cannot write checkpoint " + path);
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(config_hash));
    out << "cubeflip-checkpoint v1\n" << "config " << buf << "\n";
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(group_h));
    out << "group " << buf << "\n";
    out << "level " << level << "\n";
    out << "flips " << flips << "\n";
    out << "maxfrontier " << max_frontier << "\n";
    out << "visited " << visited.size() << "\n";
    visited.for_each([&out](const std::string& key) { out << to_hex(key) << "\n"; });
    out << "frontier " << frontier.size() << "\n";
    for (const auto& key : frontier) out << to_hex(key) << "\n";
  }
  std::filesystem::rename(tmp, path);
}

CheckpointState load_checkpoint(const std::string& path, std::uint64_t config_hash,
                                std::uint64_t group_h) {
  std::ifstream in(path);
  if (!in) fail(Errc::parse, "cannot read checkpoint " + path);
  std::string line;
  auto next = [&]() -> std::string {
    if (!std::getline(in, line)) fail(Errc::parse, "truncated checkpoint " + path);
    return line;
  };
  if (next() != "cubeflip-checkpoint v1") fail(Errc::parse, "bad checkpoint header");

  auto expect_field = [&](const std::string& name) -> std::string {
    std::istringstream is(next());
    std::string key, value;
    is >> key >> value;
    if (key != name) fail(Errc::parse, "expected checkpoint field '" + name + "'");
    return value;
  };
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(config_hash));
  if (expect_field("config") != buf)
    fail(Errc::checkpoint_mismatch, "checkpoint belongs to a different config");
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(group_h));
  if (expect_field("group") != buf)
    fail(Errc::checkpoint_mismatch, "checkpoint belongs to a different group");

  CheckpointState state;
  state.level = std::stoull(expect_field("level"));
  state.flips = std::stoull(expect_field("flips"));
  state.max_frontier = std::stoull(expect_field("maxfrontier"));
  std::uint64_t visited_count = std::stoull(expect_field("visited"));
  state.visited.reserve(visited_count);
  for (std::uint64_t i = 0; i < visited_count; ++i) state.visited.push_back(from_hex(next()));
  std::uint64_t frontier_count = std::stoull(expect_field("frontier"));
  state.frontier.reserve(frontier_count);
  for (std::uint64_t i = 0; i < frontier_count; ++i) state.frontier.push_back(from_hex(next()));
  if (!std::is_sorted(state.visited.begin(), state.visited.end()) ||
      !std::is_sorted(state.frontier.begin(), state.frontier.end()))
    fail(Errc::parse, "checkpoint keys not sorted");
  return state;
}

// Expands one slice of the frontier; appends canonical forms of all flip
// neighbors to `out` and counts the moves.
void expand_slice(const ConfigPtr& cfg, const std::vector<SymMap>& group,
                  const std::vector<std::string>& frontier, std::size_t begin, std::size_t end,
                  std::vector<std::string>& out, std::uint64_t& flips) {
  for (std::size_t i = begin; i < end; ++i) {
    Triangulation T = decode_triangulation(cfg, frontier[i]);
    std::vector<FlipMove> moves = flippable_moves(T);
    flips += moves.size();
    for (const FlipMove& m : moves)
      out.push_back(canonical_form(apply_flip(T, m), group));
  }
}

}  // namespace

EnumerationReport explore_flip_graph(const Triangulation& seed, const ExploreOptions& options) {
  const ConfigPtr& cfg = seed.config();
  validate_or_throw(seed);

  const std::vector<SymMap> trivial_group;
  const std::vector<SymMap>& group = options.mod_symmetry ? cfg->automorphisms() : trivial_group;
  const std::uint64_t ghash = group_hash(group);

  VisitedStore visited(options.memory_budget_bytes,
                       unique_spill_dir(pick_tmp_dir(options.tmp_dir)));
  std::vector<std::string> frontier;

  EnumerationReport report;
  std::uint64_t flips = 0, level = 0, max_frontier = 0;

  const bool have_checkpoint =
      !options.checkpoint_path.empty() && std::filesystem::exists(options.checkpoint_path);
  if (have_checkpoint) {
    CheckpointState state = load_checkpoint(options.checkpoint_path, cfg->identity_hash(), ghash);
    level = state.level;
    flips = state.flips;
    max_frontier = state.max_frontier;
    visited.insert(std::move(state.visited));
    frontier = std::move(state.frontier);
  } else {
    std::string form = canonical_form(seed, group);
    visited.insert({form});
    frontier = {form};
    max_frontier = 1;
  }

  const int workers = std::max(1, options.workers);
  while (!frontier.empty() && (options.max_levels == 0 || level < options.max_levels)) {
    std::vector<std::string> candidates;
    if (workers == 1 || frontier.size() < 64) {
      expand_slice(cfg, group, frontier, 0, frontier.size(), candidates, flips);
    } else {
      std::vector<std::vector<std::string>> chunk_out(static_cast<std::size_t>(workers));
      std::vector<std::uint64_t> chunk_flips(static_cast<std::size_t>(workers), 0);
      std::vector<std::thread> pool;
      const std::size_t step = (frontier.size() + workers - 1) / workers;
      for (int w = 0; w < workers; ++w) {
        std::size_t begin = std::min(frontier.size(), w * step);
        std::size_t end = std::min(frontier.size(), begin + step);
        pool.emplace_back(expand_slice, std::cref(cfg), std::cref(group), std::cref(frontier),
                          begin, end, std::ref(chunk_out[static_cast<std::size_t>(w)]),
                          std::ref(chunk_flips[static_cast<std::size_t>(w)]));
      }
      for (auto& t : pool) t.join();
      std::size_t total = 0;
      for (const auto& c : chunk_out) total += c.size();
      candidates.reserve(total);
      for (int w = 0; w < workers; ++w) {
        auto& c = chunk_out[static_cast<std::size_t>(w)];
        candidates.insert(candidates.end(), std::make_move_iterator(c.begin()),
                          std::make_move_iterator(c.end()));
        flips += chunk_flips[static_cast<std::size_t>(w)];
      }
    }

    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    std::vector<std::string> fresh = visited.filter_new(std::move(candidates));
    ++level;
    max_frontier = std::max<std::uint64_t>(max_frontier, fresh.size());
    frontier = fresh;
    visited.insert(std::move(fresh));

    if (!options.checkpoint_path.empty() &&
        (level % static_cast<std::uint64_t>(std::max(1, options.checkpoint_every)) == 0 ||
         frontier.empty())) {
      write_checkpoint(options.checkpoint_path, cfg->identity_hash(), ghash, level, flips,
                       max_frontier, visited, frontier);
      report.checkpoint_ref = options.checkpoint_path;
    }
    if (options.on_level) {
      EnumerationReport partial;
      partial.symmetry_classes = visited.size();
      partial.flips_traversed = flips;
      partial.levels = level;
      partial.max_frontier = max_frontier;
      options.on_level(partial);
    }
  }

  if (!options.checkpoint_path.empty() && !frontier.empty()) {
    // Interrupted by max_levels: leave a resumable checkpoint.
    write_checkpoint(options.checkpoint_path, cfg->identity_hash(), ghash, level, flips,
                     max_frontier, visited, frontier);
    report.checkpoint_ref = options.checkpoint_path;
  }

  report.flips_traversed = flips;
  report.levels = level;
  report.max_frontier = max_frontier;
  report.complete = frontier.empty();
  report.symmetry_classes = visited.size();
  if (options.mod_symmetry) {
    std::uint64_t total = 0;
    visited.for_each([&](const std::string& key) {
      total += orbit_size(decode_triangulation(cfg, key), group);
    });
    report.total_triangulations = total;
  } else {
    report.total_triangulations = visited.size();
    // Classes under the full isometry group, for reporting parity with the
    // mod-symmetry run. Affordable at the cardinalities the plain mode is
    // used for.
    std::vector<std::string> classes;
    classes.reserve(visited.size());
    const auto& autos = cfg->automorphisms();
    visited.for_each([&](const std::string& key) {
      classes.push_back(canonical_form(decode_triangulation(cfg, key), autos));
    });
    std::sort(classes.begin(), classes.end());
    classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
    report.symmetry_classes = classes.size();
  }
  return report;
}

// ---------------------------------------------------------------------------
// Exhaustive enumeration.

namespace {

struct CellUniverse {
  ConfigPtr cfg;
  std::vector<Face> cells;       // all full-dimensional independent subsets, sorted
  std::vector<Rational> volume;  // |signed volume| per cell

  struct FacetInfo {
    std::vector<int> plus, minus;  // cells by apex orientation sign
    bool boundary_plus = false;    // all outside points weakly on + side
    bool boundary_minus = false;
  };
  std::map<Face, FacetInfo> facets;

  mutable std::unordered_map<std::uint64_t, bool> compat_memo;

  bool compatible(int a, int b) const {
    std::uint64_t key = (static_cast<std::uint64_t>(std::min(a, b)) << 32) |
                        static_cast<std::uint64_t>(std::max(a, b));
    auto it = compat_memo.find(key);
    if (it != compat_memo.end()) return it->second;
    bool ok = !improper_pair(cells[static_cast<std::size_t>(a)],
                             cells[static_cast<std::size_t>(b)], *cfg);
    compat_memo.emplace(key, ok);
    return ok;
  }
};

int orientation_sign_of(const Config& cfg, Face facet, int apex) {
  std::vector<int> order = facet.indices();
  order.push_back(apex);
  Rational vol = signed_volume_ordered(order, cfg);
  return vol > 0 ? 1 : (vol < 0 ? -1 : 0);
}

CellUniverse build_universe(ConfigPtr cfg_ptr) {
  const Config& cfg = *cfg_ptr;
  CellUniverse u;
  u.cfg = cfg_ptr;
  const int n = cfg.size();
  const int d = cfg.affine_dim();

  std::vector<int> subset;
  auto scan = [&](auto&& self, int first) -> void {
    if (static_cast<int>(subset.size()) == d + 1) {
      Face cell;
      for (int i : subset) cell = cell.with(i);
      if (signed_volume(cell, cfg) != 0) {
        u.cells.push_back(cell);
        u.volume.push_back(abs(signed_volume(cell, cfg)));
      }
      return;
    }
    for (int i = first; i < n; ++i) {
      subset.push_back(i);
      self(self, i + 1);
      subset.pop_back();
    }
  };
  scan(scan, 0);
  // Cells arrive in lexicographic order already; keep volumes aligned.

  for (std::size_t ci = 0; ci < u.cells.size(); ++ci) {
    Face cell = u.cells[ci];
    for (int v : cell.indices()) {
      Face facet = cell.without(v);
      int sign = orientation_sign_of(cfg, facet, v);
      auto& info = u.facets[facet];
      (sign > 0 ? info.plus : info.minus).push_back(static_cast<int>(ci));
    }
  }
  for (auto& [facet, info] : u.facets) {
    bool any_plus = false, any_minus = false;
    for (int p = 0; p < n; ++p) {
      if (facet.contains(p)) continue;
      int sign = orientation_sign_of(cfg, facet, p);
      if (sign > 0) any_plus = true;
      if (sign < 0) any_minus = true;
    }
    info.boundary_plus = !any_minus;   // nothing strictly on the minus side
    info.boundary_minus = !any_plus;
  }
  return u;
}

class ExtensionSearch {
 public:
  ExtensionSearch(const CellUniverse& u, std::function<bool(const std::vector<int>&)> emit)
      : u_(u), emit_(std::move(emit)), target_(u.cfg->hull_volume()) {}

  // Enumerate all triangulations whose minimal cell index is >= min_cell and
  // that extend `chosen`. Returns false when the emit callback stops the run.
  bool run(std::vector<int> chosen, int min_cell) {
    chosen_ = std::move(chosen);
    min_cell_ = min_cell;
    volume_ = 0;
    facet_use_.clear();
    for (int c : chosen_) {
      volume_ += u_.volume[static_cast<std::size_t>(c)];
      mark(c, +1);
    }
    return recurse();
  }

 private:
  struct Use {
    int plus = 0, minus = 0;
  };

  void mark(int cell, int delta) {
    Face f = u_.cells[static_cast<std::size_t>(cell)];
    for (int v : f.indices()) {
      Face facet = f.without(v);
      int sign = orientation_sign_of(*u_.cfg, facet, v);
      Use& use = facet_use_[facet];
      (sign > 0 ? use.plus : use.minus) += delta;
    }
  }

  bool recurse() {
    // The smallest interior facet covered on exactly one side drives the
    // branching; a completion must pair it.
    const std::map<Face, CellUniverse::FacetInfo>& all = u_.facets;
    Face open;
    bool need_plus = false;
    bool found = false;
    for (const auto& [facet, use] : facet_use_) {
      if (use.plus == 0 && use.minus == 0) continue;
      const auto& info = all.at(facet);
      if (use.plus == 0 && !info.boundary_plus) {
        open = facet;
        need_plus = true;
        found = true;
        break;
      }
      if (use.minus == 0 && !info.boundary_minus) {
        open = facet;
        need_plus = false;
        found = true;
        break;
      }
    }

    if (!found) {
      if (volume_ == target_) return emit_(chosen_);
      return true;
    }

    const auto& info = all.at(open);
    for (int cand : (need_plus ? info.plus : info.minus)) {
      if (cand < min_cell_) continue;
      if (std::find(chosen_.begin(), chosen_.end(), cand) != chosen_.end()) continue;
      bool ok = true;
      for (int c : chosen_) {
        if (!u_.compatible(c, cand)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      chosen_.push_back(cand);
      volume_ += u_.volume[static_cast<std::size_t>(cand)];
      mark(cand, +1);
      bool keep_going = recurse();
      mark(cand, -1);
      volume_ -= u_.volume[static_cast<std::size_t>(cand)];
      chosen_.pop_back();
      if (!keep_going) return false;
    }
    return true;
  }

  const CellUniverse& u_;
  std::function<bool(const std::vector<int>&)> emit_;
  Rational target_;
  std::vector<int> chosen_;
  int min_cell_ = 0;
  Rational volume_;
  std::map<Face, Use> facet_use_;
};

}  // namespace

std::vector<Triangulation> enumerate_all_triangulations(ConfigPtr cfg, bool force) {
  const int n = cfg->size();
  const int d = cfg->affine_dim();
  bool small = (d <= 3 && n <= 12) || (d <= 4 && n <= 8);
  if (!small && !force)
    fail(Errc::too_large, "exhaustive enumeration guarded for " + cfg->name() +
                              " (" + std::to_string(n) + " points, dimension " +
                              std::to_string(d) + "); pass force to override");

  CellUniverse u = build_universe(cfg);
  std::vector<Triangulation> out;
  ExtensionSearch search(u, [&](const std::vector<int>& chosen) {
    std::vector<Face> cells;
    cells.reserve(chosen.size());
    for (int c : chosen) cells.push_back(u.cells[static_cast<std::size_t>(c)]);
    out.push_back(Triangulation::from_cells(cfg, std::move(cells)));
    return true;
  });
  for (int c0 = 0; c0 < static_cast<int>(u.cells.size()); ++c0) search.run({c0}, c0);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Triangulation> complete_triangulation(ConfigPtr cfg,
                                                    const std::vector<Face>& partial) {
  CellUniverse u = build_universe(cfg);
  std::vector<int> chosen;
  for (Face f : partial) {
    auto it = std::lower_bound(u.cells.begin(), u.cells.end(), f);
    if (it == u.cells.end() || !(*it == f)) return std::nullopt;
    chosen.push_back(static_cast<int>(it - u.cells.begin()));
  }
  for (std::size_t i = 0; i < chosen.size(); ++i)
    for (std::size_t j = i + 1; j < chosen.size(); ++j)
      if (!u.compatible(chosen[i], chosen[j])) return std::nullopt;

  std::optional<Triangulation> result;
  ExtensionSearch search(u, [&](const std::vector<int>& cells_idx) {
    std::vector<Face> cells;
    for (int c : cells_idx) cells.push_back(u.cells[static_cast<std::size_t>(c)]);
    result = Triangulation::from_cells(cfg, std::move(cells));
    return false;  // stop at the first completion
  });
  search.run(chosen, 0);
  return result;
}

// ---------------------------------------------------------------------------
// Algorithm 1.

std::vector<ContractedCircuit> contracted_circuits(const Config& cube, int apex, Face kept) {
  std::vector<ContractedCircuit> out;
  for (const Circuit& z : circuits_through(cube, apex)) {
    Face rest = z.support.without(apex);
    if (!rest.subset_of(kept)) continue;
    out.push_back({rest, z.neg.without(apex), z.pos});
  }
  return out;
}

bool lx_violation(const std::vector<ContractedCircuit>& circuits,
                  const std::vector<Face>& link_cells, ContractedCircuit* witness) {
  std::vector<Face> lambda, probe;
  for (const ContractedCircuit& z : circuits) {
    bool flippable = true;
    bool first = true;
    lambda.clear();
    for (int y : z.pos.indices()) {
      Face t = z.support.without(y);
      probe.clear();
      for (Face c : link_cells)
        if (t.subset_of(c)) probe.push_back(c - t);
      if (probe.empty()) {
        flippable = false;
        break;
      }
      std::sort(probe.begin(), probe.end());
      if (first) {
        lambda = probe;
        first = false;
      } else if (probe != lambda) {
        flippable = false;
        break;
      }
    }
    if (flippable) {
      if (witness) *witness = z;
      return true;
    }
  }
  return false;
}

std::vector<Triangulation> algorithm1_Lx(const ContractionContext& ctx,
                                         const std::vector<Triangulation>& trias,
                                         bool native_circuits) {
  std::vector<ContractedCircuit> scan;
  if (!native_circuits) {
    scan = contracted_circuits(*ctx.source, ctx.apex, ctx.kept);
  } else {
    // The same circuits recovered from the target config: every circuit of
    // the target whose lift through the apex is a circuit of the cube.
    for (const Circuit& c : enumerate_circuits(*ctx.target)) {
      Face lift = ctx.to_source(c.support).with(ctx.apex);
      auto z = try_radon_partition(lift, *ctx.source);
      if (!z) continue;
      if (z->pos.contains(ctx.apex)) std::swap(z->neg, z->pos);
      scan.push_back({z->support.without(ctx.apex), z->neg.without(ctx.apex), z->pos});
    }
  }

  std::vector<Triangulation> members;
  std::vector<Face> lifted;
  for (const Triangulation& T : trias) {
    lifted.clear();
    for (Face c : T.cells()) lifted.push_back(ctx.to_source(c));
    if (!lx_violation(scan, lifted)) members.push_back(T);
  }
  return members;
}

Triangulation random_walk(const Triangulation& start, int steps, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Triangulation T = start;
  for (int s = 0; s < steps; ++s) {
    std::vector<FlipMove> moves = flippable_moves(T);
    if (moves.empty())
      throw ParadoxError("random walk reached a triangulation with no flips");
    std::uniform_int_distribution<std::size_t> pick(0, moves.size() - 1);
    T = apply_flip(T, moves[pick(rng)]);
  }
  return T;
}

}  // namespace cubeflip
