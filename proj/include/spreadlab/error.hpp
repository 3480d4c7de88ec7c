#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace spreadlab {

enum class ErrorCode {
  invalid_argument,
  invalid_graph,
  parse_error,
  precondition_violated,
  solver_limit_exceeded,
  budget_exhausted,
  verification_failed,
  io_error,
};

/// Stable machine-readable name, used in JSON error reports.
std::string_view error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace spreadlab
