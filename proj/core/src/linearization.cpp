#include "ilan/linearization.hpp"

#include <algorithm>
#include <string>

#include "ilan/coeff_tables.hpp"
#include "ilan/derivative_table.hpp"
#include "ilan/error.hpp"

namespace ilan {
namespace {

void check_cap(Index n, int depth, Index cap) {
  if (depth < 1) throw Error(ErrorCode::invalid_argument, "truncation depth must be >= 1");
  if (n * depth > cap) {
    throw Error(ErrorCode::size_cap_exceeded, "dense truncation of size " + std::to_string(n * depth) +
                                                  " exceeds cap " + std::to_string(cap));
  }
}

std::vector<Matrix> derivative_matrices(const SpmfNep& nep, int max_order) {
  const DerivativeTable table(nep, max_order);
  std::vector<Matrix> M;
  M.reserve(static_cast<std::size_t>(max_order) + 1);
  for (int j = 0; j <= max_order; ++j) M.push_back(derivative_matrix(nep, table, j));
  return M;
}

}  // namespace

TruncatedLinearization build_truncated(const SpmfNep& nep, int depth, Index cap) {
  const Index n = nep.size();
  check_cap(n, depth, cap);
  const int N = depth;
  const std::vector<Matrix> M = derivative_matrices(nep, 2 * N - 1);
  const CoeffTables tables = coeff_tables(N);
  const Matrix I = Matrix::Identity(n, n);

  TruncatedLinearization lin;
  lin.depth = N;
  lin.n = n;
  lin.A = Matrix::Zero(n * N, n * N);
  lin.B_tall = Matrix::Zero(n * (N + 1), n * N);
  lin.S_wide = Matrix::Zero(n * N, n * (N + 1));
  lin.SA = Matrix::Zero(n * N, n * N);
  lin.SB = Matrix::Zero(n * N, n * N);

  auto blk = [n](Matrix& X, int i, int j) { return X.block((i - 1) * n, (j - 1) * n, n, n); };

  blk(lin.A, 1, 1) = -M[0];
  for (int i = 2; i <= N; ++i) blk(lin.A, i, i) = I;

  for (int j = 1; j <= N; ++j) blk(lin.B_tall, 1, j) = M[j] / static_cast<double>(j);
  for (int i = 1; i <= N; ++i) blk(lin.B_tall, i + 1, i) = I / static_cast<double>(i);

  blk(lin.S_wide, 1, 1) = I;
  for (int i = 2; i <= N; ++i) {
    for (int j = 2; j <= N + 1; ++j) blk(lin.S_wide, i, j) = tables.c(i - 1, j - 1) * M[i + j - 2];
  }

  blk(lin.SA, 1, 1) = -M[0];
  for (int i = 2; i <= N; ++i) {
    for (int j = 2; j <= N; ++j) blk(lin.SA, i, j) = tables.c(i - 1, j - 1) * M[i + j - 2];
  }
  for (int i = 1; i <= N; ++i) {
    for (int j = 1; j <= N; ++j) blk(lin.SB, i, j) = tables.g(i, j) * M[i + j - 1];
  }

  lin.B = lin.B_tall.topRows(n * N);
  lin.S = lin.S_wide.leftCols(n * N);
  return lin;
}

std::pair<Matrix, Matrix> pep_sym_pencil(const std::vector<Matrix>& P) {
  if (P.size() < 2) throw Error(ErrorCode::invalid_argument, "pep_sym_pencil: degree must be >= 1");
  const int d = static_cast<int>(P.size()) - 1;
  const Index n = P[0].rows();
  Eigen::PartialPivLU<Matrix> lead(P[d]);
  const auto piv = lead.matrixLU().diagonal().cwiseAbs();
  if (!(lead.rcond() >= 1e-14) || !(piv.minCoeff() > 1e-14 * piv.maxCoeff())) {
    throw Error(ErrorCode::singular_leading_coefficient, "pep_sym_pencil: leading coefficient is singular");
  }
  Matrix A = Matrix::Zero(n * d, n * d);
  Matrix B = Matrix::Zero(n * d, n * d);
  auto blk = [n](Matrix& X, int i, int j) { return X.block((i - 1) * n, (j - 1) * n, n, n); };
  blk(A, 1, 1) = -P[0];
  for (int i = 2; i <= d; ++i) {
    for (int j = 2; j <= d; ++j) {
      if (i + j - 2 <= d) blk(A, i, j) = P[i + j - 2];
    }
  }
  for (int i = 1; i <= d; ++i) {
    for (int j = 1; j <= d; ++j) {
      if (i + j - 1 <= d) blk(B, i, j) = P[i + j - 1];
    }
  }
  return {std::move(A), std::move(B)};
}

std::pair<Matrix, Matrix> pep_sym_pencil(const SpmfNep& nep) {
  int degree = 0;
  for (const Term& t : nep.terms()) {
    const auto d = t.function.polynomial_degree();
    if (!d) throw Error(ErrorCode::invalid_argument, "pep_sym_pencil: problem is not polynomial");
    degree = std::max(degree, *d);
  }
  std::vector<Matrix> P(static_cast<std::size_t>(degree) + 1, Matrix::Zero(nep.size(), nep.size()));
  for (const Term& t : nep.terms()) {
    const PowerSeries s = t.function.taylor(degree);
    const Matrix A = t.matrix.to_dense();
    for (int j = 0; j <= degree; ++j) {
      const xcplx c = s.coeff(j);
      if (c != xcplx{0}) P[j] += cplx(static_cast<double>(c.real()), static_cast<double>(c.imag())) * A;
    }
  }
  return pep_sym_pencil(P);
}

std::vector<cplx> pencil_eigenvalues(const Matrix& A, const Matrix& B) {
  Eigen::PartialPivLU<Matrix> lu(B);
  const Matrix K = lu.solve(A);
  Eigen::ComplexEigenSolver<Matrix> es(K, false);
  const Vector ev = es.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

std::vector<cplx> companion_eigs(const SpmfNep& nep, int depth, std::optional<Disk> target, Index cap) {
  const Index n = nep.size();
  check_cap(n, depth, cap);
  const int N = depth;
  const DerivativeTable table(nep, N);
  const Eigen::PartialPivLU<Matrix> m0(nep.evaluate(0.0));

  // K = A_N^{-1} B_N; its eigenvalues are reciprocals of the pencil's.
  Matrix K = Matrix::Zero(n * N, n * N);
  for (int j = 1; j <= N; ++j) {
    K.block(0, (j - 1) * n, n, n) = -m0.solve(derivative_matrix(nep, table, j)) / static_cast<double>(j);
  }
  for (int i = 1; i < N; ++i) {
    K.block(i * n, (i - 1) * n, n, n) = Matrix::Identity(n, n) / static_cast<double>(i);
  }
  Eigen::ComplexEigenSolver<Matrix> es(K, false);
  const Vector theta = es.eigenvalues();
  const double scale = theta.size() ? theta.cwiseAbs().maxCoeff() : 0.0;
  std::vector<cplx> out;
  for (Index i = 0; i < theta.size(); ++i) {
    if (std::abs(theta(i)) <= 1e-13 * scale || theta(i) == cplx{0.0}) continue;
    const cplx lambda = 1.0 / theta(i);
    if (target && !target->contains(lambda)) continue;
    out.push_back(lambda);
  }
  return out;
}

}  // namespace ilan
