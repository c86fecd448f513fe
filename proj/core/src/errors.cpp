#include "cubeflip/errors.hpp"

namespace cubeflip {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::unknown_label: return "UnknownLabel";
    case Errc::wrong_cardinality: return "WrongCardinality";
    case Errc::not_a_circuit: return "NotACircuit";
    case Errc::not_a_face: return "NotAFace";
    case Errc::not_a_vertex: return "NotAVertex";
    case Errc::bad_diagonal: return "BadDiagonal";
    case Errc::degenerate_config: return "DegenerateConfig";
    case Errc::not_flippable: return "NotFlippable";
    case Errc::same_label: return "SameLabel";
    case Errc::missing_corner_base: return "MissingCornerBase";
    case Errc::out_of_scope: return "OutOfScope";
    case Errc::singular_face: return "SingularFace";
    case Errc::checkpoint_mismatch: return "CheckpointMismatch";
    case Errc::too_large: return "TooLarge";
    case Errc::not_u1: return "NotU1";
    case Errc::precondition_failed: return "PreconditionFailed";
    case Errc::validation: return "ValidationError";
    case Errc::parse: return "ParseError";
  }
  return "Error";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

ParadoxError::ParadoxError(const std::string& what)
    : std::runtime_error("ParadoxError: " + what) {}

void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace cubeflip
