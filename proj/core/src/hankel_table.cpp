#include "ilan/hankel_table.hpp"

#include <cmath>
#include <limits>

#include "ilan/error.hpp"

namespace ilan {

xcplx HankelDescriptor::derivative(int s) const { return factorial_ld(s) * scaled(s); }

std::vector<cplx> HankelDescriptor::raw_sequence() const {
  std::vector<cplx> out(scaled_.size());
  constexpr long double dmax = std::numeric_limits<double>::max();
  for (std::size_t i = 0; i < scaled_.size(); ++i) {
    const xcplx d = derivative(static_cast<int>(i) + 1);
    if (!(std::abs(d.real()) <= dmax && std::abs(d.imag()) <= dmax)) {
      throw Error(ErrorCode::numerical_overflow,
                  "derivative of order " + std::to_string(i + 1) +
                      " is not representable in double; shift and scale the problem");
    }
    out[i] = {static_cast<double>(d.real()), static_cast<double>(d.imag())};
  }
  return out;
}

HankelDescriptor hankel_table(const PowerSeries& series, int k) {
  if (k < 0) throw Error(ErrorCode::invalid_argument, "hankel_table: k must be >= 0");
  if (series.order() < 2 * k + 1) {
    throw Error(ErrorCode::order_overflow, "hankel_table: series order below 2k+1");
  }
  std::vector<xcplx> scaled(static_cast<std::size_t>(2 * k + 1));
  for (int s = 1; s <= 2 * k + 1; ++s) scaled[s - 1] = series.coeff(s);
  return HankelDescriptor(std::move(scaled), k);
}

HankelDescriptor hankel_table(const ScalarFunction& f, int k) {
  return hankel_table(f.taylor(2 * k + 1), k);
}

}  // namespace ilan
