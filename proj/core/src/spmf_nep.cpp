#include "ilan/spmf_nep.hpp"

#include <algorithm>
#include <string>

#include "ilan/error.hpp"

namespace ilan {

TermMatrix::TermMatrix(SparseMatrix m) : storage_(std::move(m)) {
  std::get<SparseMatrix>(storage_).makeCompressed();
}

TermMatrix::TermMatrix(Matrix m) : storage_(std::move(m)) {}

TermMatrix TermMatrix::identity(Index n) {
  SparseMatrix I(n, n);
  I.setIdentity();
  return TermMatrix(std::move(I));
}

Index TermMatrix::rows() const {
  return std::visit([](const auto& m) { return m.rows(); }, storage_);
}

Index TermMatrix::cols() const {
  return std::visit([](const auto& m) { return m.cols(); }, storage_);
}

Matrix TermMatrix::apply(const Matrix& X) const {
  return std::visit([&](const auto& m) -> Matrix { return m * X; }, storage_);
}

Matrix TermMatrix::project(const Matrix& V) const {
  const Matrix AV = apply(V);
  return V.transpose() * AV;
}

Matrix TermMatrix::to_dense() const {
  if (is_sparse()) return Matrix(sparse());
  return dense();
}

SparseMatrix TermMatrix::to_sparse() const {
  if (is_sparse()) return sparse();
  return dense().sparseView();
}

TermMatrix TermMatrix::transposed() const {
  if (is_sparse()) return TermMatrix(SparseMatrix(sparse().transpose()));
  return TermMatrix(Matrix(dense().transpose()));
}

double TermMatrix::norm_inf() const {
  if (!is_sparse()) {
    return dense().rows() == 0 ? 0.0 : dense().cwiseAbs().rowwise().sum().maxCoeff();
  }
  const SparseMatrix& A = sparse();
  RealVector row_sums = RealVector::Zero(A.rows());
  for (Index c = 0; c < A.outerSize(); ++c) {
    for (SparseMatrix::InnerIterator it(A, c); it; ++it) row_sums(it.row()) += std::abs(it.value());
  }
  return A.rows() == 0 ? 0.0 : row_sums.maxCoeff();
}

double TermMatrix::norm_frobenius() const {
  return std::visit([](const auto& m) { return m.norm(); }, storage_);
}

bool TermMatrix::is_symmetric(double tol) const {
  if (rows() != cols()) return false;
  if (!is_sparse()) {
    return (dense() - dense().transpose()).cwiseAbs().maxCoeff() <= tol;
  }
  const SparseMatrix diff = sparse() - SparseMatrix(sparse().transpose());
  double worst = 0.0;
  for (Index c = 0; c < diff.outerSize(); ++c) {
    for (SparseMatrix::InnerIterator it(diff, c); it; ++it) worst = std::max(worst, std::abs(it.value()));
  }
  return worst <= tol;
}

Term make_term(ScalarFunction f, TermMatrix A) {
  return Term{std::move(f), std::move(A), std::nullopt, std::nullopt};
}

SpmfNep::SpmfNep(Index n, std::vector<Term> terms) : n_(n), terms_(std::move(terms)) {
  if (n < 1) throw Error(ErrorCode::invalid_argument, "problem dimension must be positive");
  if (terms_.empty()) throw Error(ErrorCode::invalid_argument, "SPMF problem needs at least one term");
  norms_inf_.reserve(terms_.size());
  for (std::size_t m = 0; m < terms_.size(); ++m) {
    const Term& t = terms_[m];
    if (t.matrix.rows() != n || t.matrix.cols() != n) {
      throw Error(ErrorCode::dimension_mismatch,
                  "term " + std::to_string(m) + " matrix is " + std::to_string(t.matrix.rows()) + "x" +
                      std::to_string(t.matrix.cols()) + ", expected " + std::to_string(n));
    }
    if (t.low_rank_factor) {
      const Matrix& U = *t.low_rank_factor;
      if (U.rows() != n) {
        throw Error(ErrorCode::dimension_mismatch, "low-rank factor of term " + std::to_string(m) +
                                                       " has wrong row count");
      }
      const double scale = t.matrix.norm_frobenius();
      const double defect = (t.matrix.to_dense() - U * U.transpose()).norm();
      if (defect > 1e-12 * std::max(scale, 1e-300)) {
        throw Error(ErrorCode::invalid_argument,
                    "low-rank tag of term " + std::to_string(m) + " does not reproduce the matrix");
      }
    }
    norms_inf_.push_back(t.matrix.norm_inf());
  }
}

bool SpmfNep::is_symmetric(double rel_tol) const {
  for (std::size_t m = 0; m < terms_.size(); ++m) {
    if (!terms_[m].matrix.is_symmetric(rel_tol * norms_inf_[m])) return false;
  }
  return true;
}

void SpmfNep::require_symmetric(double rel_tol) const {
  if (!is_symmetric(rel_tol)) {
    throw Error(ErrorCode::invalid_argument,
                "problem is not symmetric; use symmetrize_double for nonsymmetric problems");
  }
}

bool SpmfNep::all_sparse() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.matrix.is_sparse(); });
}

Matrix SpmfNep::evaluate(cplx lambda) const {
  Matrix M = Matrix::Zero(n_, n_);
  for (const Term& t : terms_) {
    const cplx f = t.function(lambda);
    if (f == cplx{0.0}) continue;
    if (t.matrix.is_sparse()) {
      M += f * Matrix(t.matrix.sparse());
    } else {
      M += f * t.matrix.dense();
    }
  }
  return M;
}

SparseMatrix SpmfNep::evaluate_sparse(cplx lambda) const {
  SparseMatrix M(n_, n_);
  for (const Term& t : terms_) {
    const cplx f = t.function(lambda);
    if (f == cplx{0.0}) continue;
    M += f * t.matrix.to_sparse();
  }
  M.makeCompressed();
  return M;
}

Matrix SpmfNep::apply(cplx lambda, const Matrix& X) const {
  Matrix Y = Matrix::Zero(n_, X.cols());
  for (const Term& t : terms_) {
    const cplx f = t.function(lambda);
    if (f == cplx{0.0}) continue;
    Y += f * t.matrix.apply(X);
  }
  return Y;
}

}  // namespace ilan
