#pragma once

#include <cstdint>
#include <random>

#include "ilan/types.hpp"

namespace ilan {

/// Deterministic generator: std::mt19937_64 (output fully specified by the
/// standard) with explicit mappings, so draws are identical across standard
/// library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1) from the top 53 bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  /// Uniform on [-1, 1).
  double symmetric_uniform() { return 2.0 * uniform() - 1.0; }
  /// Standard normal via Box-Muller (one draw per call, second discarded).
  double normal();

 private:
  std::mt19937_64 engine_;
};

inline constexpr std::uint64_t kDefaultSeed = 20190101;

/// Real unit vector with entries drawn uniformly from [-1, 1).
Vector random_unit_vector(Index n, std::uint64_t seed = kDefaultSeed);

}  // namespace ilan
