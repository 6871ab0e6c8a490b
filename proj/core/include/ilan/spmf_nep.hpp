#pragma once

#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "ilan/scalar_function.hpp"
#include "ilan/types.hpp"

namespace ilan {

/// Coefficient matrix of one SPMF term, stored sparse or dense.
class TermMatrix {
 public:
  TermMatrix() : storage_(Matrix()) {}
  TermMatrix(SparseMatrix m);  // NOLINT: implicit by design of the term list
  TermMatrix(Matrix m);        // NOLINT

  static TermMatrix identity(Index n);

  Index rows() const;
  Index cols() const;
  bool is_sparse() const { return std::holds_alternative<SparseMatrix>(storage_); }

  const SparseMatrix& sparse() const { return std::get<SparseMatrix>(storage_); }
  const Matrix& dense() const { return std::get<Matrix>(storage_); }

  /// A * X.
  Matrix apply(const Matrix& X) const;
  /// V^T A V (transpose, not conjugate transpose).
  Matrix project(const Matrix& V) const;

  Matrix to_dense() const;
  SparseMatrix to_sparse() const;
  TermMatrix transposed() const;

  /// Maximum absolute row sum.
  double norm_inf() const;
  double norm_frobenius() const;

  /// max |a_ij - a_ji| <= tol.
  bool is_symmetric(double tol = 0.0) const;

 private:
  std::variant<SparseMatrix, Matrix> storage_;
};

/// One SPMF term f(l) * A with optional structure tags.
struct Term {
  ScalarFunction function = ScalarFunction::constant();
  TermMatrix matrix;
  /// A = U U^T when present.
  std::optional<Matrix> low_rank_factor;
  /// Marks a polynomial term; value is the polynomial degree.
  std::optional<int> polynomial_degree;
};

/// Nonlinear eigenvalue problem M(l) = sum_m f_m(l) A_m.
class SpmfNep {
 public:
  SpmfNep() = default;
  SpmfNep(Index n, std::vector<Term> terms);

  Index size() const { return n_; }
  std::size_t num_terms() const { return terms_.size(); }
  const Term& term(std::size_t m) const { return terms_[m]; }
  std::span<const Term> terms() const { return terms_; }

  /// Cached ||A_m||_inf.
  double matrix_norm_inf(std::size_t m) const { return norms_inf_[m]; }

  /// Every A_m symmetric within rel_tol * ||A_m||_inf.
  bool is_symmetric(double rel_tol = 0.0) const;
  /// Throws invalid_argument if not symmetric.
  void require_symmetric(double rel_tol = 1e-14) const;

  /// True when every term matrix is stored sparse.
  bool all_sparse() const;

  Matrix evaluate(cplx lambda) const;
  SparseMatrix evaluate_sparse(cplx lambda) const;
  /// M(l) x without forming M(l).
  Matrix apply(cplx lambda, const Matrix& X) const;

 private:
  Index n_ = 0;
  std::vector<Term> terms_;
  std::vector<double> norms_inf_;
};

/// Convenience: term with a plain function and matrix.
Term make_term(ScalarFunction f, TermMatrix A);

}  // namespace ilan
