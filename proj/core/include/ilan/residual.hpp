#pragma once

#include "ilan/spmf_nep.hpp"

namespace ilan {

/// Relative residual ||M(l) x||_2 / (sum_m |f_m(l)| ||A_m||_inf ||x||_2).
/// Throws degenerate_point when every |f_m(l)| vanishes; x must be nonzero.
double residual_error(const SpmfNep& nep, cplx lambda, const Vector& x);

}  // namespace ilan
