#pragma once

#include "ilan/infinite_lanczos.hpp"
#include "ilan/linearization.hpp"

namespace ilan {

/// Maximum relative deviations between the block-structured iteration and
/// the dense indefinite Lanczos process on the truncated pencil ([SA]_N, [SB]_N).
struct EquivalenceReport {
  int iterations = 0;
  int depth = 0;
  double t_deviation = 0.0;      // max |dT| / max |T|
  double omega_deviation = 0.0;  // max |d omega_j| / |omega_j|
  double block_deviation = 0.0;  // max over vectors of ||dq|| (unit-norm vectors)
  double tail_norm = 0.0;        // dense entries beyond the structured block count
};

/// Runs `k` iterations of both processes from the start vector [q1; 0; ...].
/// Requires depth >= k + 1.
EquivalenceReport compare_with_dense(const SpmfNep& nep, int k, int depth, const Vector& q1,
                                     ZStrategy strategy = ZStrategy::naive);

}  // namespace ilan
