#pragma once

#include <vector>

#include "ilan/types.hpp"

namespace ilan {

/// Largest Taylor order supported. Coefficients and factorial-weighted
/// entries are held in long double, whose range covers s! up to s ~ 1750.
inline constexpr int kMaxTaylorOrder = 1600;

/// Truncated Taylor series at the origin: coeff(j) = f^(j)(0) / j!.
class PowerSeries {
 public:
  PowerSeries() = default;
  explicit PowerSeries(std::vector<xcplx> coeffs);

  /// Zero series of the given truncation order.
  static PowerSeries zero(int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  xcplx coeff(int j) const { return j <= order() ? coeffs_[j] : xcplx{0}; }
  const std::vector<xcplx>& coeffs() const { return coeffs_; }

  /// Raw derivative j! * t_j. Overflows to inf for large j unless t_j decays.
  xcplx derivative(int j) const;

  /// Horner evaluation of the truncated polynomial.
  cplx evaluate(cplx x) const;

  PowerSeries truncated(int order) const;

  friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator*(xcplx s, const PowerSeries& a);

  /// Principal square root via the recurrence r_0 = sqrt(p_0),
  /// r_n = (p_n - sum_{i=1}^{n-1} r_i r_{n-i}) / (2 r_0).
  /// Throws branch_point_at_origin when p_0 == 0.
  PowerSeries sqrt() const;

 private:
  std::vector<xcplx> coeffs_;
};

/// n! in long double; valid (finite) for n <= 1754.
long double factorial_ld(int n);

}  // namespace ilan
