#include "ilan/residual.hpp"

#include "ilan/error.hpp"

namespace ilan {

double residual_error(const SpmfNep& nep, cplx lambda, const Vector& x) {
  if (x.size() != nep.size()) throw Error(ErrorCode::dimension_mismatch, "residual_error: vector length mismatch");
  const double xnorm = x.norm();
  if (xnorm == 0.0) throw Error(ErrorCode::invalid_argument, "residual_error: zero vector");
  double denom = 0.0;
  Vector r = Vector::Zero(nep.size());
  for (std::size_t m = 0; m < nep.num_terms(); ++m) {
    const cplx f = nep.term(m).function(lambda);
    denom += std::abs(f) * nep.matrix_norm_inf(m);
    if (f != cplx{0.0}) r += f * nep.term(m).matrix.apply(x);
  }
  if (denom == 0.0) {
    throw Error(ErrorCode::degenerate_point, "residual_error: all |f_m(lambda)| ||A_m|| vanish");
  }
  return r.norm() / (denom * xnorm);
}

}  // namespace ilan
