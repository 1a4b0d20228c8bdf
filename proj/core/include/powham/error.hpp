#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace powham {

enum class ErrorCode {
  self_loop,
  vertex_out_of_range,
  duplicate_edge,
  vertex_cap_exceeded,
  bad_params,
  base_invalid,
  not_a_permutation,
  not_a_tournament,
  bad_length,
  precondition_violated,
  infeasible_scan,
  retries_exhausted,
  parse_error,
  io_error,
};

std::string_view to_string(ErrorCode code);

/// Every precondition failure in the library surfaces as this exception.
/// Search outcomes (absence, budget, stuck greedy descent) are values, not
/// errors.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what,
        std::optional<std::size_t> line = std::nullopt)
      : std::runtime_error(what), code_(code), line_(line) {}

  ErrorCode code() const noexcept { return code_; }
  /// 1-based source line for parse-time errors.
  std::optional<std::size_t> line() const noexcept { return line_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> line_;
};

}  // namespace powham
