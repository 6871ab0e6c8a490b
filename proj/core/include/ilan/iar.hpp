#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ilan/extraction.hpp"
#include "ilan/spmf_nep.hpp"

namespace ilan {

/// Iteration cap floor; tiny projected problems still need a Krylov space
/// large enough to resolve the nonlinearity.
inline constexpr int kIarMinCap = 40;

struct IarOptions {
  /// Capped at max(2 * problem size, kIarMinCap).
  int maxiter = 150;
  std::optional<Disk> target;
  /// Residual threshold used only to count converged pairs in diagnostics.
  double tol = 1e-6;
  /// Measure ||K V_m - V_{m+1} H|| / ||H|| after the run.
  bool check_relation = false;
  std::uint64_t seed = 0;
};

struct IarResult {
  /// Every Ritz pair (optionally restricted to the target), Err measured on
  /// the problem passed in.
  std::vector<EigenPair> pairs;
  Matrix H;  // (m+1) x m
  int iterations = 0;
  bool happy_breakdown = false;
  double relation_residual = 0.0;
  std::vector<std::string> diagnostics;
};

/// Infinite Arnoldi on a small dense problem: Arnoldi with full two-pass
/// Gram-Schmidt on the companion operator, vectors grow by one block per
/// step. Ritz values theta of H give lambda = 1/theta.
/// Throws projected_m0_singular when M(0) is singular.
IarResult iar(const SpmfNep& nep, const IarOptions& options = {});

}  // namespace ilan
