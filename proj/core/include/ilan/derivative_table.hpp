#pragma once

#include <vector>

#include "ilan/power_series.hpp"
#include "ilan/spmf_nep.hpp"

namespace ilan {

/// Per-term Taylor coefficients of an SPMF problem, grown on demand.
///
/// Holds t_{m,s} = f_m^(s)(0) / s!; raw derivatives are never stored.
class DerivativeTable {
 public:
  DerivativeTable() = default;
  DerivativeTable(const SpmfNep& nep, int order);

  int order() const { return order_; }
  std::size_t num_terms() const { return series_.size(); }
  const PowerSeries& series(std::size_t m) const { return series_[m]; }
  xcplx coeff(std::size_t m, int s) const { return series_[m].coeff(s); }

  /// Grow to at least `order`, doubling to amortize repeated extension.
  void ensure(const SpmfNep& nep, int order);

 private:
  int order_ = -1;
  std::vector<PowerSeries> series_;
};

/// M_j X = sum_m f_m^(j)(0) A_m X without forming M_j.
/// Throws order_overflow when j exceeds the table.
Matrix derivative_matvec(const SpmfNep& nep, const DerivativeTable& table, int j,
                         const Matrix& X);

/// (j-1)! t_j for j = 1..k, i.e. f^(j)(0) / j. Throws numerical_overflow
/// when a weight leaves double range.
Vector scaled_derivative_weights(const PowerSeries& series, int k);

/// Dense M_j; test and oracle use.
Matrix derivative_matrix(const SpmfNep& nep, const DerivativeTable& table, int j);

}  // namespace ilan
