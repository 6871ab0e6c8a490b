#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "ilan/derivative_table.hpp"
#include "ilan/spmf_nep.hpp"

namespace ilan {

// ---------------------------------------------------------------------------
// Low-rank factors of G

/// Best rank-q approximation G_{k+1} ~ U V^T from an SVD, with the singular
/// values split symmetrically between U and V.
struct GFactors {
  RealMatrix U;
  RealMatrix V;
  /// All singular values of G_{k+1}, non-increasing.
  RealVector sigma;
  int k = 0;

  int rank() const { return static_cast<int>(U.cols()); }
  /// sum_{j > q} sigma_j.
  double tail_sum() const;
};

inline constexpr int kMaxAdaptiveRank = 40;

/// q in [1, k+1]; q <= 0 selects the smallest q whose singular-value tail
/// sum is at most 1e-12 sigma_1, capped at kMaxAdaptiveRank.
GFactors g_factors(int k, int q);

/// Singular values of G_size, non-increasing.
RealVector g_singular_values(int size);

// ---------------------------------------------------------------------------
// Hankel products

/// H X where H[i,j] = seq[i+j] (0-based) is the m x m Hankel matrix defined
/// by the 2m-1 values of `seq` and X is m x s. Uses a circulant embedding of
/// length 2^p >= 2m-1 and one FFT pair per column.
Matrix hankel_matmul(std::span<const cplx> seq, const Matrix& X);

/// Dense reference for tests and the oracle path.
Matrix hankel_dense(std::span<const cplx> seq);

// ---------------------------------------------------------------------------
// Z = sum_m A_m W (G_{k+1} o F_m)

enum class ZStrategy { naive, lowrank_fft, dep, poly_lowrank };

std::string_view to_string(ZStrategy s);
std::optional<ZStrategy> parse_z_strategy(std::string_view name);

/// G_{k+1} o F for one function, assembled as (i-1)!(j-1)! t_{i+j-1} in
/// extended precision. Throws numerical_overflow if an entry does not fit
/// in double.
Matrix factorial_weighted_hankel(const PowerSeries& series, int k);

/// Direct evaluation; O(k^2 n) per term. k = W.cols() - 1.
Matrix z_naive(const Matrix& W, const SpmfNep& nep, const DerivativeTable& table);

/// Approximation with G replaced by U V^T and F_m products done by FFT.
Matrix z_lowrank_fft(const Matrix& W, const SpmfNep& nep, const DerivativeTable& table,
                     const GFactors& factors);

/// (sum_m ||A_m W||_F ||F_m||_F) * sum_{j>q} sigma_j.
double lowrank_error_bound(const Matrix& W, const SpmfNep& nep, const DerivativeTable& table,
                           const GFactors& factors);

/// Exact kernel for delay problems: every f_m is a polynomial of degree
/// <= 1 (F_m = f'(0) e_1 e_1^T) or c * exp(a l) (F_m = c a v v^T with
/// v_j = a^{j-1}). Throws dep_structure_violation otherwise.
Matrix z_dep(const Matrix& W, const SpmfNep& nep);

/// Exact split Z = Z_p + Z_lr. Polynomial terms touch only the anti-diagonals
/// s <= degree of G o F_m; low-rank terms evaluate U_m ((U_m^T W)(G o F_m)).
/// Throws untagged_term when a term carries neither tag.
Matrix z_poly_lowrank(const Matrix& W, const SpmfNep& nep, const DerivativeTable& table);

/// Checks the structure a strategy needs; throws on mismatch.
void validate_strategy(const SpmfNep& nep, ZStrategy strategy);

}  // namespace ilan
