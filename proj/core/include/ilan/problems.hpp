#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "ilan/random.hpp"
#include "ilan/spmf_nep.hpp"

namespace ilan {

/// 5-point Dirichlet Laplacian on an N x N interior grid of [0, pi]^2,
/// h = pi / (N + 1), lexicographic ordering (first coordinate fastest).
SparseMatrix fd_laplacian(int N);

/// Delay PDE u_t = Lap u + a u + b u(t - 2), a = 8 sin(x1) sin(x2),
/// b = 100 |sin(x1 + x2)|:
/// M(l) = -l I + (Lap_h + diag a) + exp(-2 l) diag b, size N^2.
SpmfNep gen_delay_pde(int N);

/// M(l) = -l I + A_0 + exp(-l) A_1, A_0 and A_1 dense with entries
/// (g_ij + g_ji) / (2 sqrt(n)), g standard normal from Rng(seed).
SpmfNep gen_random_dep(Index n, std::uint64_t seed = kDefaultSeed);

/// Dense random symmetric problem with mixed functions:
/// A_0 - l A_1 + exp(-l) A_2 + sin(l) A_3 + sqrt(l + 4) A_4, matrices as in
/// gen_random_dep except that A_0 is shifted by 8 I, which keeps M(0)
/// positive definite. Used for oracle comparisons.
SpmfNep gen_random_mixed(Index n, std::uint64_t seed = kDefaultSeed);

/// The nonsymmetric problem A_1 - l I + l sin(l) A_1 / 500 + exp(-l) A_4
/// with A_1 = 500 on both off-diagonals and A_4 = i on the subdiagonal.
SpmfNep gen_nonsymmetric_tridiagonal(Index n);
/// symmetrize_double of the above, size 2n.
SpmfNep gen_symmetrized_random(Index n);

/// A = U U^T factor for a symmetric matrix of numerical rank r, found from
/// a symmetric eigendecomposition of the nonzero-row block. Handles real
/// matrices and complex multiples of real ones; returns nullopt (and fills
/// `note`) when the factor does not reproduce A to rel_tol * ||A||_F.
std::optional<Matrix> detect_low_rank(const TermMatrix& A, double rel_tol = 1e-12,
                                      std::string* note = nullptr);

}  // namespace ilan
