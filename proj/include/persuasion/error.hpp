#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace persuasion {

enum class Errc {
  length_mismatch,
  negative_weight,
  weights_not_summing_to_one,
  duplicate_label,
  universe_mismatch,
  threshold_out_of_range,
  index_out_of_range,
  syntax_error,
  semantic_error,
  instance_too_large,
  bounds_too_large,
  bad_params,
};

const char* errc_name(Errc code) noexcept;

// All library failures are reported through this type; code() identifies the
// contract that was violated.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

// Malformed instance text. Line and column are 1-based.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t line, std::size_t column, const std::string& what)
      : Error(Errc::syntax_error, "line " + std::to_string(line) + ", column " +
                                      std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace persuasion
