#pragma once

#include <string>
#include <vector>

#include "cubeflip/driver.hpp"
#include "cubeflip/regularity.hpp"

namespace cubeflip {

// Line-oriented ASCII formats, round-trip stable. '#' starts a comment;
// blank lines are ignored on input. Parse errors carry line numbers.

/// "dim <d> points <n>" header, then "<label> <num>/<den> ... <num>/<den>".
std::string print_config(const Config& cfg);
ConfigPtr parse_config(const std::string& text, const std::string& name = "parsed");

/// One maximal face per line, labels space-separated, faces sorted.
std::string print_triangulation(const Triangulation& T);
Triangulation parse_triangulation(ConfigPtr cfg, const std::string& text);

/// The start triangulation block, then one move per line:
/// "flip <circuit labels> remove <side labels>".
std::string print_path(const FlipPath& path);
FlipPath parse_path(ConfigPtr cfg, const std::string& text);

/// "<label> <num>/<den>" per line.
std::string print_heights(const Config& cfg, const HeightFunction& w);
HeightFunction parse_heights(const Config& cfg, const std::string& text);

/// The machine-parsable KEY=VALUE block every CLI command ends with.
std::string print_report(const std::vector<std::pair<std::string, std::string>>& entries);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace cubeflip
