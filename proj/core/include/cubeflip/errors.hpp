#pragma once

#include <stdexcept>
#include <string>

namespace cubeflip {

enum class Errc {
  unknown_label,
  wrong_cardinality,
  not_a_circuit,
  not_a_face,
  not_a_vertex,
  bad_diagonal,
  degenerate_config,
  not_flippable,
  same_label,
  missing_corner_base,
  out_of_scope,
  singular_face,
  checkpoint_mismatch,
  too_large,
  not_u1,
  precondition_failed,
  validation,
  parse,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Thrown when a computation contradicts a proven statement about the 4-cube.
/// Always an implementation bug, never bad input; the CLI maps it to exit 3.
class ParadoxError : public std::runtime_error {
 public:
  explicit ParadoxError(const std::string& what);
};

[[noreturn]] void fail(Errc code, const std::string& what);

}  // namespace cubeflip
