#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ilan {

enum class ErrorCode {
  invalid_argument,
  branch_point_at_origin,
  order_overflow,
  singular_m0,
  size_cap_exceeded,
  breakdown_omega,
  strategy_structure_mismatch,
  dep_structure_violation,
  untagged_term,
  degenerate_point,
  zero_subspace,
  singular_omega,
  projected_m0_singular,
  numerical_overflow,
  singular_leading_coefficient,
  file_format,
  dimension_mismatch,
  io_error,
  config_error,
};

std::string_view to_string(ErrorCode code);

/// Library error carrying a stable machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ilan
