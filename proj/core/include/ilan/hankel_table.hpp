#pragma once

#include <vector>

#include "ilan/scalar_function.hpp"

namespace ilan {

/// Defining sequence of the (k+1) x (k+1) Hankel matrix F with
/// F[i,j] = f^(i+j-1)(0), stored as scaled Taylor coefficients t_s for
/// s = 1..2k+1. The Hankel matrix itself is never formed here.
class HankelDescriptor {
 public:
  HankelDescriptor() = default;
  HankelDescriptor(std::vector<xcplx> scaled, int k) : scaled_(std::move(scaled)), k_(k) {}

  int k() const { return k_; }
  int dimension() const { return k_ + 1; }
  /// t_s, s in 1..2k+1.
  xcplx scaled(int s) const { return scaled_[static_cast<std::size_t>(s - 1)]; }
  /// f^(s)(0) = s! t_s.
  xcplx derivative(int s) const;
  /// F[i,j] (1-based).
  xcplx entry(int i, int j) const { return derivative(i + j - 1); }
  /// Raw derivative sequence f^(1..2k+1)(0) in double; throws
  /// numerical_overflow if any value is not representable.
  std::vector<cplx> raw_sequence() const;

 private:
  std::vector<xcplx> scaled_;
  int k_ = 0;
};

HankelDescriptor hankel_table(const ScalarFunction& f, int k);
HankelDescriptor hankel_table(const PowerSeries& series, int k);

}  // namespace ilan
