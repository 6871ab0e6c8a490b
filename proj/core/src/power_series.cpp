#include "ilan/power_series.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>

#include "ilan/error.hpp"

namespace ilan {

PowerSeries::PowerSeries(std::vector<xcplx> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) {
    coeffs_.push_back(xcplx{0});
  }
}

PowerSeries PowerSeries::zero(int order) {
  return PowerSeries(std::vector<xcplx>(static_cast<std::size_t>(order) + 1, xcplx{0}));
}

xcplx PowerSeries::derivative(int j) const { return factorial_ld(j) * coeff(j); }

cplx PowerSeries::evaluate(cplx x) const {
  const xcplx xx(x.real(), x.imag());
  xcplx acc{0};
  for (int j = order(); j >= 0; --j) {
    acc = acc * xx + coeffs_[j];
  }
  return {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
}

PowerSeries PowerSeries::truncated(int order) const {
  std::vector<xcplx> c(static_cast<std::size_t>(order) + 1, xcplx{0});
  for (int j = 0; j <= std::min(order, this->order()); ++j) c[j] = coeffs_[j];
  return PowerSeries(std::move(c));
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
  const int L = std::min(a.order(), b.order());
  std::vector<xcplx> c(static_cast<std::size_t>(L) + 1);
  for (int j = 0; j <= L; ++j) c[j] = a.coeffs_[j] + b.coeffs_[j];
  return PowerSeries(std::move(c));
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  const int L = std::min(a.order(), b.order());
  std::vector<xcplx> c(static_cast<std::size_t>(L) + 1, xcplx{0});
  for (int i = 0; i <= L; ++i) {
    if (a.coeffs_[i] == xcplx{0}) continue;
    for (int j = 0; i + j <= L; ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return PowerSeries(std::move(c));
}

PowerSeries operator*(xcplx s, const PowerSeries& a) {
  std::vector<xcplx> c = a.coeffs_;
  for (auto& v : c) v *= s;
  return PowerSeries(std::move(c));
}

PowerSeries PowerSeries::sqrt() const {
  if (coeffs_[0] == xcplx{0}) {
    throw Error(ErrorCode::branch_point_at_origin,
                "square root of a power series with zero constant term");
  }
  const int L = order();
  std::vector<xcplx> r(static_cast<std::size_t>(L) + 1, xcplx{0});
  r[0] = std::sqrt(coeffs_[0]);
  const xcplx two_r0 = xcplx{2} * r[0];
  for (int n = 1; n <= L; ++n) {
    xcplx acc = coeffs_[n];
    for (int i = 1; i < n; ++i) acc -= r[i] * r[n - i];
    r[n] = acc / two_r0;
  }
  return PowerSeries(std::move(r));
}

long double factorial_ld(int n) {
  static std::once_flag once;
  static std::vector<long double> table;
  std::call_once(once, [] {
    table.push_back(1.0L);
    for (int i = 1;; ++i) {
      const long double next = table.back() * static_cast<long double>(i);
      if (!std::isfinite(next)) break;
      table.push_back(next);
    }
  });
  if (n < 0 || n >= static_cast<int>(table.size())) {
    throw Error(ErrorCode::order_overflow, "factorial order out of supported range");
  }
  return table[n];
}

}  // namespace ilan
