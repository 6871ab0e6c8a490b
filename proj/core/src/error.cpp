#include "ilan/error.hpp"

namespace ilan {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument: return "invalid-argument";
    case ErrorCode::branch_point_at_origin: return "branch-point-at-origin";
    case ErrorCode::order_overflow: return "order-overflow";
    case ErrorCode::singular_m0: return "singular-M0";
    case ErrorCode::size_cap_exceeded: return "size-cap-exceeded";
    case ErrorCode::breakdown_omega: return "breakdown-omega";
    case ErrorCode::strategy_structure_mismatch: return "strategy-structure-mismatch";
    case ErrorCode::dep_structure_violation: return "dep-structure-violation";
    case ErrorCode::untagged_term: return "untagged-term";
    case ErrorCode::degenerate_point: return "degenerate-point";
    case ErrorCode::zero_subspace: return "zero-subspace";
    case ErrorCode::singular_omega: return "singular-omega";
    case ErrorCode::projected_m0_singular: return "projected-M0-singular";
    case ErrorCode::numerical_overflow: return "numerical-overflow";
    case ErrorCode::singular_leading_coefficient: return "singular-leading-coefficient";
    case ErrorCode::file_format: return "file-format";
    case ErrorCode::dimension_mismatch: return "dimension-mismatch";
    case ErrorCode::io_error: return "io-error";
    case ErrorCode::config_error: return "config-error";
  }
  return "unknown";
}

}  // namespace ilan
