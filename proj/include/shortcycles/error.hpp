#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace shortcycles {

enum class ErrorKind {
  loop_edge,
  parallel_edge,
  endpoint_out_of_range,
  root_out_of_range,
  vertex_out_of_range,
  bad_rotation,
  missing_signature,
  bad_signature_value,
  missing_rotation,
  edge_in_tree,
  not_connected,
  not_projective_plane,
  cycle_cap_exceeded,
  too_many_edges,
  bad_parameter,
  syntax_error,
  id_mismatch,
};

std::string_view to_string(ErrorKind kind);

// Every failure in the library surfaces as this exception. `index` names the
// offending edge, vertex, or cap value when the error kind has one; `line`
// is set by the instance parser.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message, std::optional<std::int64_t> index = std::nullopt);

  ErrorKind kind() const noexcept { return kind_; }
  std::optional<std::int64_t> index() const noexcept { return index_; }
  std::optional<std::size_t> line() const noexcept { return line_; }

  // Returns a copy annotated with a 1-based input line number.
  Error at_line(std::size_t line) const;

 private:
  ErrorKind kind_;
  std::optional<std::int64_t> index_;
  std::optional<std::size_t> line_;
};

}  // namespace shortcycles
