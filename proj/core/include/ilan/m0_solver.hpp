#pragma once

#include <memory>

#include "ilan/spmf_nep.hpp"

namespace ilan {

/// Factorization of M(0), computed once and reused for every solve.
///
/// Sparse problems use a sparse LU with COLAMD ordering, otherwise a dense
/// partial-pivoting LU. The reciprocal 1-norm condition estimate is checked
/// against `singular_tol`; solves are const and safe to call concurrently.
class M0Solver {
 public:
  explicit M0Solver(const SpmfNep& nep, double singular_tol = 1e-14);
  explicit M0Solver(const Matrix& m0, double singular_tol = 1e-14);
  explicit M0Solver(const SparseMatrix& m0, double singular_tol = 1e-14);
  ~M0Solver();
  M0Solver(M0Solver&&) noexcept;
  M0Solver& operator=(M0Solver&&) noexcept;

  Matrix apply_inverse(const Matrix& X) const;

  double rcond_estimate() const { return rcond_; }
  bool is_sparse() const;
  Index size() const { return n_; }

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
  Index n_ = 0;
  double rcond_ = 0.0;
};

}  // namespace ilan
