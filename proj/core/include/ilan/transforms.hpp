#pragma once

#include "ilan/spmf_nep.hpp"

namespace ilan {

/// M_hat(mu) = M(center + scale * mu). Eigenvalues map back as
/// lambda = center + scale * mu. Low-rank and polynomial tags carry over.
SpmfNep shift_scale(const SpmfNep& nep, cplx center, cplx scale);

/// Map an eigenvalue of the shifted-and-scaled problem back.
inline cplx unshift(cplx mu, cplx center, cplx scale) { return center + scale * mu; }

/// Doubles a (possibly nonsymmetric) problem into a symmetric one with term
/// matrices [[0, A_m], [A_m^T, 0]].
SpmfNep symmetrize_double(const SpmfNep& nep);

/// Lower half of an eigenvector of the doubled problem, which is an
/// eigenvector of the original problem.
Vector unpack_doubled(const Vector& v);

}  // namespace ilan
