#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ilan/infinite_lanczos.hpp"
#include "ilan/spmf_nep.hpp"

namespace ilan {

enum class ExtractionMethod { projected_iar, ritz };

std::string to_string(ExtractionMethod m);
ExtractionMethod parse_extraction_method(const std::string& s);

struct EigenPair {
  cplx lambda{0.0};
  Vector x;
  double err = 0.0;
};

struct Checkpoint {
  int iteration = 0;
  int n_converged = 0;
  double elapsed_s = 0.0;
};

struct EigenResult {
  std::vector<EigenPair> pairs;     // converged, Err < tol
  std::vector<EigenPair> rejected;  // candidates that failed the tolerance
  std::vector<Checkpoint> history;
  ExtractionMethod method = ExtractionMethod::projected_iar;
};

/// Orthonormal basis of the span of `blocks` via column-pivoted QR. Columns
/// whose pivot falls below 1e-12 times the leading one are dropped.
/// Throws zero_subspace when nothing survives.
Matrix orthonormal_basis(const Matrix& blocks);

struct ProjectedNep {
  SpmfNep nep;
  Matrix V;
};

/// Term-by-term V^T A_m V. Low-rank factors become V^T U_m.
ProjectedNep project(const SpmfNep& nep, const Matrix& V);

/// Unit 2-norm, first component above 1e-12 * max rotated onto the positive
/// real axis.
void normalize_eigenvector(Vector& x);

/// Ritz pairs from the first `size` Lanczos vectors: eigenvalues theta of
/// T_size (equivalently of the pencil (Omega T, Omega)) mapped to 1/theta,
/// eigenvector = first block of the Ritz vector. `err` is left at zero.
/// Throws singular_omega when an omega entry vanishes.
std::vector<EigenPair> ritz_pairs(const Matrix& T, std::span<const cplx> omega, const Matrix& first_blocks);
/// Same, using every completed iteration of `state`.
std::vector<EigenPair> ritz_pairs(const KrylovState& state);

/// Recomputes Err on `nep`, keeps pairs with Err < tol (and inside `target`
/// when given), removes duplicates within relative 1e-8 keeping the smaller
/// residual. Pairs that fail go to `rejected`. Output is sorted by |lambda|.
EigenResult filter_converged(std::vector<EigenPair> pairs, const SpmfNep& nep, double tol,
                             std::optional<Disk> target = std::nullopt);

/// Merges `more` into `into` with the same deduplication rule.
void merge_converged(std::vector<EigenPair>& into, const std::vector<EigenPair>& more);

}  // namespace ilan
