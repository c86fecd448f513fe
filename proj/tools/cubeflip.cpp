// cubeflip: exact flip-graph engine for the vertex set of the 4-cube.
//
// Exit codes: 0 success/verified, 1 verification mismatch, 2 input error,
// 3 paradox (a computation contradicted a proven statement — a bug).

#include <algorithm>
#include <cctype>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "cubeflip/driver.hpp"
#include "cubeflip/io.hpp"
#include "cubeflip/regularity.hpp"
#include "cubeflip/special.hpp"

namespace cf = cubeflip;

namespace {

using KV = std::vector<std::pair<std::string, std::string>>;

cf::ConfigPtr resolve_config(const std::string& arg) {
  const auto& names = cf::Config::preset_names();
  std::string lower;
  for (char c : arg) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (std::find(names.begin(), names.end(), lower) != names.end())
    return cf::Config::preset(lower);
  return cf::parse_config(cf::read_file(arg), arg);
}

void emit(const KV& kv) { std::cout << cf::print_report(kv); }

int cmd_config_dump(const std::string& name) {
  std::cout << cf::print_config(*resolve_config(name));
  return 0;
}

int cmd_circuits(const std::string& config_arg, const std::string& through) {
  cf::ConfigPtr cfg = resolve_config(config_arg);
  std::vector<cf::Circuit> circuits;
  if (through.empty()) {
    circuits = cf::enumerate_circuits(*cfg);
  } else {
    circuits = cf::circuits_through(*cfg, through);
  }
  for (const cf::Circuit& z : circuits)
    std::cout << cfg->face_str(z.support) << " | " << cfg->face_str(z.neg) << " / "
              << cfg->face_str(z.pos) << "\n";
  emit({{"config", cfg->name()}, {"circuits", std::to_string(circuits.size())}});
  return 0;
}

int cmd_enumerate(const std::string& config_arg, bool mod_symmetry, bool oracle,
                  const std::string& checkpoint, int workers, std::uint64_t max_levels,
                  std::size_t budget_mb, const std::string& report_file, bool quiet) {
  cf::ConfigPtr cfg = resolve_config(config_arg);
  KV kv;
  kv.emplace_back("config", cfg->name());
  if (oracle) {
    std::vector<cf::Triangulation> all = cf::enumerate_all_triangulations(cfg);
    std::set<std::string> classes;
    for (const cf::Triangulation& T : all)
      classes.insert(cf::canonical_form(T, cfg->automorphisms()));
    kv.emplace_back("mode", "oracle");
    kv.emplace_back("triangulations", std::to_string(all.size()));
    kv.emplace_back("classes", std::to_string(classes.size()));
    kv.emplace_back("complete", "true");
  } else {
    cf::ExploreOptions options;
    options.mod_symmetry = mod_symmetry;
    options.workers = workers;
    options.checkpoint_path = checkpoint;
    options.max_levels = max_levels;
    options.memory_budget_bytes = budget_mb << 20;
    if (!quiet) {
      options.on_level = [](const cf::EnumerationReport& r) {
        std::cerr << "level " << r.levels << ": classes=" << r.symmetry_classes
                  << " frontier_max=" << r.max_frontier << " flips=" << r.flips_traversed
                  << "\n";
      };
    }
    cf::EnumerationReport report =
        cf::explore_flip_graph(cf::placing_triangulation(cfg), options);
    kv.emplace_back("mode", mod_symmetry ? "flip-graph-mod-symmetry" : "flip-graph");
    if (mod_symmetry) {
      kv.emplace_back("classes", std::to_string(report.symmetry_classes));
      kv.emplace_back("total", std::to_string(report.total_triangulations));
    } else {
      kv.emplace_back("triangulations", std::to_string(report.total_triangulations));
      kv.emplace_back("classes", std::to_string(report.symmetry_classes));
    }
    kv.emplace_back("flips", std::to_string(report.flips_traversed));
    kv.emplace_back("levels", std::to_string(report.levels));
    kv.emplace_back("max_frontier", std::to_string(report.max_frontier));
    kv.emplace_back("complete", report.complete ? "true" : "false");
    if (report.checkpoint_ref) kv.emplace_back("checkpoint", *report.checkpoint_ref);
  }
  emit(kv);
  if (!report_file.empty()) cf::write_file(report_file, cf::print_report(kv));
  return 0;
}

// Names a member of an L_a(S_q) result against {U0, U1-, U1+}.
std::string classify_l_member(const cf::Triangulation& T, const cf::ContractionContext& ctx) {
  if (T == cf::u0(ctx)) return "U0";
  if (T == cf::u1_minus(ctx)) return "U1-";
  if (T == cf::u1_plus(ctx)) return "U1+";
  return "?";
}

// All triangulations of a small config by in-memory flip-graph search.
std::vector<cf::Triangulation> all_by_flips(const cf::ConfigPtr& cfg) {
  std::set<std::string> seen;
  std::vector<cf::Triangulation> all = {cf::placing_triangulation(cfg)};
  seen.insert(cf::canonical_form(all.front(), {}));
  std::vector<cf::Triangulation> frontier = all;
  while (!frontier.empty()) {
    std::vector<cf::Triangulation> next;
    for (const cf::Triangulation& T : frontier) {
      for (const cf::FlipMove& m : cf::flippable_moves(T)) {
        cf::Triangulation T2 = cf::apply_flip(T, m);
        if (seen.insert(cf::canonical_form(T2, {})).second) {
          next.push_back(T2);
          all.push_back(T2);
        }
      }
    }
    frontier = std::move(next);
  }
  return all;
}

int cmd_prop5(bool native, const std::string& expect_file) {
  cf::ConfigPtr cube4 = cf::Config::preset("cube4");
  std::map<std::string, std::vector<std::string>> expected = {
      {"S1", {"U0", "U1+", "U1-"}}, {"S2", {"U0", "U1+", "U1-"}}, {"S3", {"U0"}}};
  if (!expect_file.empty()) {
    expected.clear();
    std::istringstream in(cf::read_file(expect_file));
    std::string line;
    while (std::getline(in, line)) {
      std::istringstream ls(line);
      std::string name, tok;
      if (!(ls >> name)) continue;
      auto& list = expected[name];
      while (ls >> tok) list.push_back(tok);
      std::sort(list.begin(), list.end());
    }
  }

  bool all_ok = true;
  KV kv;
  for (const std::string& name : {std::string("S1"), std::string("S2"), std::string("S3")}) {
    cf::ConfigPtr target = cf::Config::preset(name);
    cf::Face keep;
    for (int i = 0; i < target->size(); ++i) {
      // Target labels are "y/a"; recover the kept source labels.
      std::string l = target->label(i);
      keep = keep.with(cube4->index(l.substr(0, l.find('/'))));
    }
    cf::ContractionContext ctx = cf::contract_config(cube4, "a", keep, name);

    std::vector<cf::Triangulation> all = all_by_flips(ctx.target);
    std::vector<cf::Triangulation> members = cf::algorithm1_Lx(ctx, all, native);
    std::vector<std::string> got;
    for (const cf::Triangulation& T : members) got.push_back(classify_l_member(T, ctx));
    std::sort(got.begin(), got.end());

    bool ok = got == expected[name];
    all_ok = all_ok && ok;
    std::cout << "L_a(" << name << ")={";
    for (std::size_t i = 0; i < got.size(); ++i) std::cout << (i ? "," : "") << got[i];
    std::cout << "} " << (ok ? "OK" : "MISMATCH") << " (triangulations=" << all.size() << ")\n";
    kv.emplace_back("L_" + name, ok ? "ok" : "mismatch");

    if (name == "S1")
      std::cout << "U1- tetrahedra:\n" << cf::print_triangulation(cf::u1_minus(ctx));
  }
  kv.emplace_back("native_circuits", native ? "true" : "false");
  kv.emplace_back("verified", all_ok ? "true" : "false");
  emit(kv);
  return all_ok ? 0 : 1;
}

int cmd_connect(const std::string& file, const std::string& config_name,
                const std::string& out_file) {
  cf::ConfigPtr cfg = resolve_config(config_name);
  cf::Triangulation T = cf::parse_triangulation(cfg, cf::read_file(file));
  if (auto err = cf::validate(T)) {
    std::cerr << "input does not validate: " << err->message << "\n";
    return 2;
  }
  cf::FlipPath path = cf::flip_to_corner_cut(T);
  std::string printed = cf::print_path(path);
  if (!out_file.empty()) cf::write_file(out_file, printed);

  // Verify by replaying the printed form.
  cf::FlipPath replayed = cf::parse_path(cfg, printed);
  cf::replay(replayed);
  auto cut = cf::is_corner_cut(replayed.end);
  bool ok = cut.has_value() && replayed.end == path.end;

  std::cout << "path length " << path.length() << "\n";
  KV kv{{"config", cfg->name()},
        {"path_length", std::to_string(path.length())},
        {"end_corner_cut", ok ? "true" : "false"}};
  if (cut) {
    kv.emplace_back("class", cf::cube_class_name(cut->first));
    kv.emplace_back("diagonal", cfg->face_str(cut->second));
  }
  if (!out_file.empty()) kv.emplace_back("path_file", out_file);
  emit(kv);
  return ok ? 0 : 1;
}

int cmd_regularity(const std::string& file, const std::string& config_name,
                   const std::string& certificate, const std::string& all_preset) {
  if (!all_preset.empty()) {
    cf::ConfigPtr cfg = resolve_config(all_preset);
    std::vector<cf::Triangulation> all = cf::enumerate_all_triangulations(cfg);
    std::size_t regular = 0;
    for (const cf::Triangulation& T : all)
      if (cf::is_regular(T)) ++regular;
    std::cout << regular << "/" << all.size() << " regular\n";
    emit({{"config", cfg->name()},
          {"total", std::to_string(all.size())},
          {"regular", std::to_string(regular)}});
    return regular == all.size() ? 0 : 1;
  }

  cf::ConfigPtr cfg = resolve_config(config_name);
  cf::Triangulation T = cf::parse_triangulation(cfg, cf::read_file(file));
  if (auto err = cf::validate(T)) {
    std::cerr << "input does not validate: " << err->message << "\n";
    return 2;
  }
  if (!certificate.empty()) {
    cf::HeightFunction w = cf::parse_heights(*cfg, cf::read_file(certificate));
    bool ok = cf::verify_certificate(T, w);
    std::cout << (ok ? "certificate OK" : "certificate REJECTED") << "\n";
    emit({{"config", cfg->name()}, {"certificate", ok ? "ok" : "rejected"}});
    return ok ? 0 : 1;
  }
  auto w = cf::is_regular(T);
  if (w) {
    std::cout << "regular\n" << cf::print_heights(*cfg, *w);
    emit({{"config", cfg->name()}, {"regular", "true"}});
  } else {
    std::cout << "non-regular (LP infeasible)\n";
    emit({{"config", cfg->name()}, {"regular", "false"}});
  }
  return 0;
}

int cmd_walk(const std::string& config_arg, int steps, std::uint64_t seed,
             const std::string& start, const std::string& out_file) {
  cf::ConfigPtr cfg = resolve_config(config_arg);
  cf::Triangulation T;
  if (start == "placing") {
    T = cf::placing_triangulation(cfg);
  } else {
    T = cf::all_corner_cuts(cfg).front();
  }
  T = cf::random_walk(T, steps, seed);
  std::string printed = cf::print_triangulation(T);
  if (out_file.empty())
    std::cout << printed;
  else
    cf::write_file(out_file, printed);
  emit({{"config", cfg->name()},
        {"steps", std::to_string(steps)},
        {"seed", std::to_string(seed)},
        {"cells", std::to_string(T.cell_count())}});
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact flip-graph engine for triangulations of the 4-cube vertex set"};
  app.require_subcommand(1);

  auto* config_cmd = app.add_subcommand("config", "Configuration utilities");
  config_cmd->require_subcommand(1);
  auto* dump = config_cmd->add_subcommand("dump", "Print a preset in config-file format");
  std::string dump_name;
  dump->add_option("preset", dump_name, "cube3, cube4, s1, s2, s3")->required();

  auto* circuits = app.add_subcommand("circuits", "Print all circuits with Radon partitions");
  std::string circuits_config, circuits_through;
  circuits->add_option("config", circuits_config, "preset name or config file")->required();
  circuits->add_option("--through", circuits_through, "only circuits through this label");

  auto* enumerate = app.add_subcommand("enumerate", "Explore the flip-graph (or run the oracle)");
  std::string enum_config, enum_checkpoint, enum_report;
  bool enum_mod = false, enum_oracle = false, enum_quiet = false;
  int enum_workers = 1;
  std::uint64_t enum_max_levels = 0;
  std::size_t enum_budget_mb = 512;
  enumerate->add_option("config", enum_config)->required();
  enumerate->add_flag("--mod-symmetry", enum_mod, "deduplicate by the isometry group");
  enumerate->add_flag("--oracle", enum_oracle, "exhaustive backtracking enumeration");
  enumerate->add_option("--checkpoint", enum_checkpoint, "checkpoint file (resumes if present)");
  enumerate->add_option("--workers", enum_workers, "worker threads");
  enumerate->add_option("--max-levels", enum_max_levels, "stop after N BFS levels");
  enumerate->add_option("--budget-mb", enum_budget_mb, "visited-store memory budget");
  enumerate->add_option("--report", enum_report, "also write the KEY=VALUE block here");
  enumerate->add_flag("--quiet", enum_quiet, "suppress per-level progress on stderr");

  auto* prop5 = app.add_subcommand("prop5", "Reproduce the L_a(S_q) computation");
  bool prop5_native = false;
  std::string prop5_expect;
  prop5->add_flag("--native-circuits", prop5_native,
                  "drive the scan by circuits of the target configs");
  prop5->add_option("--expect-file", prop5_expect, "override the expected sets (testing)");

  auto* connect = app.add_subcommand("connect", "Flip a triangulation to a corner-cut one");
  std::string connect_file, connect_config = "cube4", connect_out;
  connect->add_option("triangulation", connect_file, "triangulation file")->required();
  connect->add_option("--config", connect_config, "config preset or file (default cube4)");
  connect->add_option("--out", connect_out, "write the flip path here");

  auto* regularity = app.add_subcommand("regularity", "Verify certificates / decide regularity");
  std::string reg_file, reg_config = "cube4", reg_cert, reg_all;
  regularity->add_option("triangulation", reg_file, "triangulation file");
  regularity->add_option("--config", reg_config, "config preset or file (default cube4)");
  regularity->add_option("--certificate", reg_cert, "height file to verify");
  regularity->add_option("--all", reg_all, "decide every triangulation of a preset");

  auto* walk = app.add_subcommand("walk", "Random flip walk (fixture generator)");
  std::string walk_config, walk_out, walk_start = "corner-cut";
  int walk_steps = 200;
  std::uint64_t walk_seed = 1;
  walk->add_option("config", walk_config)->required();
  walk->add_option("--steps", walk_steps);
  walk->add_option("--seed", walk_seed);
  walk->add_option("--start", walk_start, "corner-cut or placing");
  walk->add_option("--out", walk_out, "output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (dump->parsed()) return cmd_config_dump(dump_name);
    if (circuits->parsed()) return cmd_circuits(circuits_config, circuits_through);
    if (enumerate->parsed())
      return cmd_enumerate(enum_config, enum_mod, enum_oracle, enum_checkpoint, enum_workers,
                           enum_max_levels, enum_budget_mb, enum_report, enum_quiet);
    if (prop5->parsed()) return cmd_prop5(prop5_native, prop5_expect);
    if (connect->parsed()) return cmd_connect(connect_file, connect_config, connect_out);
    if (regularity->parsed()) {
      if (reg_all.empty() && reg_file.empty()) {
        std::cerr << "regularity needs a triangulation file or --all\n";
        return 2;
      }
      return cmd_regularity(reg_file, reg_config, reg_cert, reg_all);
    }
    if (walk->parsed()) return cmd_walk(walk_config, walk_steps, walk_seed, walk_start, walk_out);
    std::cerr << "no subcommand\n";
    return 2;
  } catch (const cf::ParadoxError& e) {
    std::cerr << e.what() << "\n";
    return 3;
  } catch (const cf::Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
