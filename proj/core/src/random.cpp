#include "ilan/random.hpp"

#include <cmath>
#include <numbers>

namespace ilan {

double Rng::normal() {
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Vector random_unit_vector(Index n, std::uint64_t seed) {
  Rng rng(seed);
  Vector v(n);
  for (Index i = 0; i < n; ++i) v(i) = rng.symmetric_uniform();
  return v / v.norm();
}

}  // namespace ilan
