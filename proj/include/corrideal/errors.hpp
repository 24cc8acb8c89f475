#pragma once

#include <stdexcept>
#include <string>

namespace corrideal {

/// Failure categories surfaced by the library. The names double as the
/// stable identifiers printed by the CLI.
enum class errc {
  duplicate_label,
  unknown_label,
  fullness_violation,
  malformed_number,
  unknown_vertex,
  not_positively_invariant,
  not_t_pair,
  not_o_pair,
  not_a_bimodule,
  not_compactly_acting,
  not_row_finite,
  not_acyclic,
  size_limit,
  schema_error,
  parse_error,
  io_error,
  overflow,
};

const char* errc_name(errc code);

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  errc code() const { return code_; }
  const char* code_name() const { return errc_name(code_); }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
  throw error(code, message);
}

}  // namespace corrideal
