#include "ilan/derivative_table.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "ilan/error.hpp"

namespace ilan {

DerivativeTable::DerivativeTable(const SpmfNep& nep, int order) { ensure(nep, order); }

void DerivativeTable::ensure(const SpmfNep& nep, int order) {
  if (order <= order_ && series_.size() == nep.num_terms()) return;
  if (order > kMaxTaylorOrder) {
    throw Error(ErrorCode::order_overflow, "derivative order " + std::to_string(order) +
                                               " exceeds cap " + std::to_string(kMaxTaylorOrder));
  }
  const int target = std::min(kMaxTaylorOrder, std::max(order, 2 * std::max(order_, 8)));
  series_.clear();
  series_.reserve(nep.num_terms());
  for (const Term& t : nep.terms()) series_.push_back(t.function.taylor(target));
  order_ = target;
}

Matrix derivative_matvec(const SpmfNep& nep, const DerivativeTable& table, int j, const Matrix& X) {
  if (j < 0 || j > table.order()) {
    throw Error(ErrorCode::order_overflow,
                "derivative order " + std::to_string(j) + " exceeds precomputed table order " +
                    std::to_string(table.order()));
  }
  Matrix Y = Matrix::Zero(nep.size(), X.cols());
  for (std::size_t m = 0; m < nep.num_terms(); ++m) {
    const xcplx d = table.series(m).derivative(j);
    if (d == xcplx{0}) continue;
    const cplx dd(static_cast<double>(d.real()), static_cast<double>(d.imag()));
    Y += dd * nep.term(m).matrix.apply(X);
  }
  return Y;
}

Vector scaled_derivative_weights(const PowerSeries& series, int k) {
  Vector c(k);
  constexpr long double dmax = std::numeric_limits<double>::max();
  for (int j = 1; j <= k; ++j) {
    const xcplx v = factorial_ld(j - 1) * series.coeff(j);
    if (!(std::abs(v.real()) <= dmax && std::abs(v.imag()) <= dmax)) {
      throw Error(ErrorCode::numerical_overflow, "derivative weight of order " + std::to_string(j) +
                                                     " overflows; shift and scale the problem");
    }
    c(j - 1) = cplx(static_cast<double>(v.real()), static_cast<double>(v.imag()));
  }
  return c;
}

Matrix derivative_matrix(const SpmfNep& nep, const DerivativeTable& table, int j) {
  if (j < 0 || j > table.order()) {
    throw Error(ErrorCode::order_overflow, "derivative order exceeds precomputed table");
  }
  Matrix M = Matrix::Zero(nep.size(), nep.size());
  for (std::size_t m = 0; m < nep.num_terms(); ++m) {
    const xcplx d = table.series(m).derivative(j);
    if (d == xcplx{0}) continue;
    M += cplx(static_cast<double>(d.real()), static_cast<double>(d.imag())) *
         nep.term(m).matrix.to_dense();
  }
  return M;
}

}  // namespace ilan
