#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ilan/spmf_nep.hpp"

namespace ilan {

inline constexpr Index kDenseLinearizationCap = 5000;

/// Dense truncations of the infinite companion pencil (A, B), of its
/// symmetrizer S and of the symmetric pencil (SA, SB), each nN x nN.
///
/// SB = S_wide * B_tall holds exactly, where S_wide is the N x (N+1) block
/// truncation of S and B_tall the (N+1) x N truncation of B (B is block lower
/// Hessenberg, so the square product S*B differs in the last block column).
struct TruncatedLinearization {
  int depth = 0;
  Index n = 0;
  Matrix A, B, S, SA, SB;
  Matrix S_wide, B_tall;
};

/// Oracle/test facility. Throws size_cap_exceeded if n*N > cap.
TruncatedLinearization build_truncated(const SpmfNep& nep, int depth,
                                       Index cap = kDenseLinearizationCap);

/// Symmetric pencil for a polynomial problem sum_{j=0}^d M_j l^j with
/// M_d nonsingular; its eigenvectors are [v; l v; ...; l^{d-1} v].
std::pair<Matrix, Matrix> pep_sym_pencil(const std::vector<Matrix>& coefficients);
/// Same, reading the monomial coefficients off a polynomial SPMF problem.
std::pair<Matrix, Matrix> pep_sym_pencil(const SpmfNep& nep);

/// Eigenvalues of A x = l B x for B nonsingular.
std::vector<cplx> pencil_eigenvalues(const Matrix& A, const Matrix& B);

/// Finite eigenvalues of the truncated companion pencil (A_N, B_N),
/// optionally restricted to a disk. Approximate for non-polynomial f_m,
/// improving with N.
std::vector<cplx> companion_eigs(const SpmfNep& nep, int depth,
                                 std::optional<Disk> target = std::nullopt,
                                 Index cap = kDenseLinearizationCap);

}  // namespace ilan
