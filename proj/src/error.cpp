#include "shortcycles/error.hpp"

namespace shortcycles {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::loop_edge: return "LoopEdge";
    case ErrorKind::parallel_edge: return "ParallelEdge";
    case ErrorKind::endpoint_out_of_range: return "EndpointOutOfRange";
    case ErrorKind::root_out_of_range: return "RootOutOfRange";
    case ErrorKind::vertex_out_of_range: return "VertexOutOfRange";
    case ErrorKind::bad_rotation: return "BadRotation";
    case ErrorKind::missing_signature: return "MissingSignature";
    case ErrorKind::bad_signature_value: return "BadSignatureValue";
    case ErrorKind::missing_rotation: return "MissingRotation";
    case ErrorKind::edge_in_tree: return "EdgeInTree";
    case ErrorKind::not_connected: return "NotConnected";
    case ErrorKind::not_projective_plane: return "NotProjectivePlane";
    case ErrorKind::cycle_cap_exceeded: return "CycleCapExceeded";
    case ErrorKind::too_many_edges: return "TooManyEdges";
    case ErrorKind::bad_parameter: return "BadParameter";
    case ErrorKind::syntax_error: return "SyntaxError";
    case ErrorKind::id_mismatch: return "IdMismatch";
  }
  return "Unknown";
}

namespace {

std::string decorate(ErrorKind kind, const std::string& message, std::optional<std::int64_t> index) {
  std::string out(to_string(kind));
  if (index) out += "(" + std::to_string(*index) + ")";
  if (!message.empty()) out += ": " + message;
  return out;
}

}  // namespace

Error::Error(ErrorKind kind, std::string message, std::optional<std::int64_t> index)
    : std::runtime_error(decorate(kind, message, index)), kind_(kind), index_(index) {}

Error Error::at_line(std::size_t line) const {
  Error copy(*this);
  static_cast<std::runtime_error&>(copy) =
      std::runtime_error("line " + std::to_string(line) + ": " + what());
  copy.line_ = line;
  return copy;
}

}  // namespace shortcycles
