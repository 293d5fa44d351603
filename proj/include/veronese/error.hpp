#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace veronese {

enum class ErrorCode {
  dimension,
  index,
  invalid_chart,
  point_at_infinity,
  arity,
  invalid_instance,
  invalid_decomposition,
  underdetermined,
  domain,
  degenerate_complex,
  precondition,
  parse,
};

std::string_view to_string(ErrorCode code);

/// Exception carrying a machine-readable code; the CLI maps it to exit status 2.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace veronese
