#include "cubeflip/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "cubeflip/errors.hpp"

namespace cubeflip {

namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

// Tokenized non-empty lines with comments stripped.
std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    Line line{number, {}};
    std::string tok;
    while (ls >> tok) line.tokens.push_back(tok);
    if (!line.tokens.empty()) out.push_back(std::move(line));
  }
  return out;
}

[[noreturn]] void parse_fail(int line, const std::string& what) {
  fail(Errc::parse, "line " + std::to_string(line) + ": " + what);
}

Face face_from_tokens(const Config& cfg, const Line& line, std::size_t begin, std::size_t end) {
  Face f;
  for (std::size_t i = begin; i < end; ++i) {
    auto idx = cfg.find(line.tokens[i]);
    if (!idx) parse_fail(line.number, "unknown label '" + line.tokens[i] + "'");
    f = f.with(*idx);
  }
  return f;
}

}  // namespace

std::string print_config(const Config& cfg) {
  std::ostringstream out;
  out << "dim " << cfg.ambient_dim() << " points " << cfg.size() << "\n";
  for (int i = 0; i < cfg.size(); ++i) {
    out << cfg.label(i);
    for (const Rational& c : cfg.point(i).coords) out << ' ' << rat_str(c);
    out << "\n";
  }
  return out.str();
}

ConfigPtr parse_config(const std::string& text, const std::string& name) {
  std::vector<Line> lines = tokenize(text);
  if (lines.empty()) fail(Errc::parse, "empty config file");
  const Line& head = lines.front();
  if (head.tokens.size() != 4 || head.tokens[0] != "dim" || head.tokens[2] != "points")
    parse_fail(head.number, "expected 'dim <d> points <n>'");
  int dim = 0, count = 0;
  try {
    dim = std::stoi(head.tokens[1]);
    count = std::stoi(head.tokens[3]);
  } catch (const std::exception&) {
    parse_fail(head.number, "bad dimension or point count");
  }
  if (static_cast<int>(lines.size()) - 1 != count)
    parse_fail(head.number, "expected " + std::to_string(count) + " point lines, found " +
                                std::to_string(lines.size() - 1));

  std::vector<std::pair<Label, Point>> points;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (static_cast<int>(line.tokens.size()) != dim + 1)
      parse_fail(line.number, "expected a label and " + std::to_string(dim) + " coordinates");
    Point p;
    for (int c = 0; c < dim; ++c) {
      try {
        p.coords.push_back(parse_rational(line.tokens[static_cast<std::size_t>(c) + 1]));
      } catch (const Error&) {
        parse_fail(line.number, "bad coordinate '" + line.tokens[static_cast<std::size_t>(c) + 1] + "'");
      }
    }
    points.emplace_back(line.tokens[0], std::move(p));
  }
  return Config::make(name, dim, std::move(points));
}

std::string print_triangulation(const Triangulation& T) {
  std::ostringstream out;
  for (Face c : T.cells()) out << T.config()->face_str(c) << "\n";
  return out.str();
}

Triangulation parse_triangulation(ConfigPtr cfg, const std::string& text) {
  std::vector<Face> cells;
  for (const Line& line : tokenize(text))
    cells.push_back(face_from_tokens(*cfg, line, 0, line.tokens.size()));
  if (cells.empty()) fail(Errc::parse, "no faces in triangulation file");
  return Triangulation::from_cells(std::move(cfg), std::move(cells));
}

std::string print_path(const FlipPath& path) {
  std::ostringstream out;
  out << "# start triangulation\n" << print_triangulation(path.start);
  const Config& cfg = *path.start.config();
  for (const FlipMove& move : path.moves)
    out << "flip " << cfg.face_str(move.circuit.support) << " remove "
        << cfg.face_str(move.removed_side) << "\n";
  return out.str();
}

FlipPath parse_path(ConfigPtr cfg, const std::string& text) {
  std::vector<Face> cells;
  std::vector<std::pair<Face, Face>> raw_moves;  // (support, removed side)
  for (const Line& line : tokenize(text)) {
    if (line.tokens.front() == "flip") {
      auto remove_kw = std::find(line.tokens.begin(), line.tokens.end(), "remove");
      if (remove_kw == line.tokens.end())
        parse_fail(line.number, "flip line missing 'remove'");
      std::size_t split = static_cast<std::size_t>(remove_kw - line.tokens.begin());
      Face support = face_from_tokens(*cfg, line, 1, split);
      Face removed = face_from_tokens(*cfg, line, split + 1, line.tokens.size());
      if (support.empty() || removed.empty() || !removed.subset_of(support))
        parse_fail(line.number, "removed side must be a nonempty subset of the circuit");
      raw_moves.emplace_back(support, removed);
    } else {
      if (!raw_moves.empty()) parse_fail(line.number, "face line after flip lines");
      cells.push_back(face_from_tokens(*cfg, line, 0, line.tokens.size()));
    }
  }
  if (cells.empty()) fail(Errc::parse, "path file has no start triangulation");

  FlipPath path;
  path.start = Triangulation::from_cells(cfg, std::move(cells));
  path.end = path.start;
  for (auto& [support, removed] : raw_moves) {
    Circuit z = radon_partition(support, *cfg);
    if (!(removed == z.neg) && !(removed == z.pos))
      fail(Errc::parse, "removed side {" + cfg->face_str(removed) +
                            "} is not a side of circuit {" + cfg->face_str(support) + "}");
    auto move = is_flippable(path.end, z, removed);
    if (!move)
      fail(Errc::not_flippable, "path move on circuit {" + cfg->face_str(support) +
                                    "} does not apply during replay");
    path.end = apply_flip(path.end, *move);
    path.moves.push_back(std::move(*move));
  }
  return path;
}

std::string print_heights(const Config& cfg, const HeightFunction& w) {
  std::ostringstream out;
  for (int i = 0; i < cfg.size(); ++i) out << cfg.label(i) << ' ' << rat_str(w[static_cast<std::size_t>(i)]) << "\n";
  return out.str();
}

HeightFunction parse_heights(const Config& cfg, const std::string& text) {
  HeightFunction w(static_cast<std::size_t>(cfg.size()));
  std::vector<bool> seen(static_cast<std::size_t>(cfg.size()), false);
  for (const Line& line : tokenize(text)) {
    if (line.tokens.size() != 2) parse_fail(line.number, "expected '<label> <num>/<den>'");
    auto idx = cfg.find(line.tokens[0]);
    if (!idx) parse_fail(line.number, "unknown label '" + line.tokens[0] + "'");
    try {
      w[static_cast<std::size_t>(*idx)] = parse_rational(line.tokens[1]);
    } catch (const Error&) {
      parse_fail(line.number, "bad height '" + line.tokens[1] + "'");
    }
    seen[static_cast<std::size_t>(*idx)] = true;
  }
  for (int i = 0; i < cfg.size(); ++i)
    if (!seen[static_cast<std::size_t>(i)])
      fail(Errc::parse, "height function misses label '" + cfg.label(i) + "'");
  return w;
}

std::string print_report(const std::vector<std::pair<std::string, std::string>>& entries) {
  std::ostringstream out;
  for (const auto& [key, value] : entries) out << key << '=' << value << "\n";
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::parse, "cannot open '" + path + "'");
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(Errc::parse, "cannot write '" + path + "'");
  out << content;
}

}  // namespace cubeflip
