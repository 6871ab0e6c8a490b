#include "ilan/problems.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include <Eigen/Eigenvalues>

#include "ilan/error.hpp"
#include "ilan/transforms.hpp"

namespace ilan {
namespace {

using Triplet = Eigen::Triplet<cplx>;

Term tagged(ScalarFunction f, TermMatrix A) {
  Term t = make_term(std::move(f), std::move(A));
  t.polynomial_degree = t.function.polynomial_degree();
  return t;
}

SparseMatrix sparse_identity(Index n) {
  SparseMatrix I(n, n);
  I.setIdentity();
  return I;
}

SparseMatrix sparse_diagonal(const RealVector& d) {
  std::vector<Triplet> trip;
  trip.reserve(static_cast<std::size_t>(d.size()));
  for (Index i = 0; i < d.size(); ++i) trip.emplace_back(i, i, d(i));
  SparseMatrix D(d.size(), d.size());
  D.setFromTriplets(trip.begin(), trip.end());
  return D;
}

Matrix random_symmetric(Index n, Rng& rng) {
  RealMatrix G(n, n);
  for (Index j = 0; j < n; ++j)
    for (Index i = 0; i < n; ++i) G(i, j) = rng.normal();
  const RealMatrix A = (G + G.transpose()) / (2.0 * std::sqrt(static_cast<double>(n)));
  return A.cast<cplx>();
}

}  // namespace

SparseMatrix fd_laplacian(int N) {
  if (N < 1) throw Error(ErrorCode::invalid_argument, "fd_laplacian: N must be positive");
  const double h = std::numbers::pi / (N + 1);
  const double w = 1.0 / (h * h);
  const Index n = static_cast<Index>(N) * N;
  std::vector<Triplet> trip;
  trip.reserve(static_cast<std::size_t>(5 * n));
  for (int j = 0; j < N; ++j) {
    for (int i = 0; i < N; ++i) {
      const Index r = static_cast<Index>(j) * N + i;
      trip.emplace_back(r, r, -4.0 * w);
      if (i > 0) trip.emplace_back(r, r - 1, w);
      if (i + 1 < N) trip.emplace_back(r, r + 1, w);
      if (j > 0) trip.emplace_back(r, r - N, w);
      if (j + 1 < N) trip.emplace_back(r, r + N, w);
    }
  }
  SparseMatrix L(n, n);
  L.setFromTriplets(trip.begin(), trip.end());
  return L;
}

SpmfNep gen_delay_pde(int N) {
  if (N < 2) throw Error(ErrorCode::invalid_argument, "gen_delay_pde: N must be >= 2");
  const double h = std::numbers::pi / (N + 1);
  const Index n = static_cast<Index>(N) * N;
  RealVector a(n), b(n);
  for (int j = 0; j < N; ++j) {
    for (int i = 0; i < N; ++i) {
      const double x1 = (i + 1) * h, x2 = (j + 1) * h;
      a(static_cast<Index>(j) * N + i) = 8.0 * std::sin(x1) * std::sin(x2);
      b(static_cast<Index>(j) * N + i) = 100.0 * std::abs(std::sin(x1 + x2));
    }
  }
  SparseMatrix A2 = fd_laplacian(N) + sparse_diagonal(a);
  A2.makeCompressed();
  std::vector<Term> terms;
  terms.push_back(tagged(ScalarFunction::negated_identity(), sparse_identity(n)));
  terms.push_back(tagged(ScalarFunction::constant(), std::move(A2)));
  terms.push_back(make_term(ScalarFunction::exponential(-2.0), sparse_diagonal(b)));
  return SpmfNep(n, std::move(terms));
}

SpmfNep gen_random_dep(Index n, std::uint64_t seed) {
  if (n < 1) throw Error(ErrorCode::invalid_argument, "gen_random_dep: n must be >= 1");
  Rng rng(seed);
  Matrix A0 = random_symmetric(n, rng);
  Matrix A1 = random_symmetric(n, rng);
  std::vector<Term> terms;
  terms.push_back(tagged(ScalarFunction::negated_identity(), sparse_identity(n)));
  terms.push_back(tagged(ScalarFunction::constant(), std::move(A0)));
  terms.push_back(make_term(ScalarFunction::exponential(-1.0), std::move(A1)));
  return SpmfNep(n, std::move(terms));
}

SpmfNep gen_random_mixed(Index n, std::uint64_t seed) {
  if (n < 1) throw Error(ErrorCode::invalid_argument, "gen_random_mixed: n must be >= 1");
  Rng rng(seed);
  std::vector<Term> terms;
  Matrix A0 = random_symmetric(n, rng);
  A0.diagonal().array() += 8.0;
  terms.push_back(tagged(ScalarFunction::constant(), std::move(A0)));
  terms.push_back(tagged(ScalarFunction::negated_identity(), random_symmetric(n, rng)));
  terms.push_back(make_term(ScalarFunction::exponential(-1.0), random_symmetric(n, rng)));
  terms.push_back(make_term(ScalarFunction::sine(), random_symmetric(n, rng)));
  terms.push_back(make_term(ScalarFunction::sqrt_shift(1.0, 4.0), random_symmetric(n, rng)));
  return SpmfNep(n, std::move(terms));
}

SpmfNep gen_nonsymmetric_tridiagonal(Index n) {
  if (n < 2) throw Error(ErrorCode::invalid_argument, "gen_symmetrized_random: n must be >= 2");
  std::vector<Triplet> t1, t3, t4;
  for (Index i = 0; i + 1 < n; ++i) {
    t1.emplace_back(i, i + 1, 500.0);
    t1.emplace_back(i + 1, i, 500.0);
    t3.emplace_back(i, i + 1, 1.0);
    t3.emplace_back(i + 1, i, 1.0);
    t4.emplace_back(i + 1, i, cplx(0.0, 1.0));
  }
  SparseMatrix A1(n, n), A3(n, n), A4(n, n);
  A1.setFromTriplets(t1.begin(), t1.end());
  A3.setFromTriplets(t3.begin(), t3.end());
  A4.setFromTriplets(t4.begin(), t4.end());
  std::vector<Term> terms;
  terms.push_back(tagged(ScalarFunction::constant(), std::move(A1)));
  terms.push_back(tagged(ScalarFunction::negated_identity(), sparse_identity(n)));
  terms.push_back(make_term(ScalarFunction::lambda_sine(), std::move(A3)));
  terms.push_back(make_term(ScalarFunction::exponential(-1.0), std::move(A4)));
  return SpmfNep(n, std::move(terms));
}

SpmfNep gen_symmetrized_random(Index n) { return symmetrize_double(gen_nonsymmetric_tridiagonal(n)); }

std::optional<Matrix> detect_low_rank(const TermMatrix& A, double rel_tol, std::string* note) {
  auto fail = [&](const std::string& why) -> std::optional<Matrix> {
    if (note) *note = why;
    return std::nullopt;
  };
  const Index n = A.rows();
  if (A.cols() != n) return fail("matrix is not square");
  if (!A.is_symmetric(1e-14 * std::max(1.0, A.norm_inf()))) return fail("matrix is not symmetric");
  const double fro = A.norm_frobenius();
  if (fro == 0.0) return Matrix::Zero(n, 0);

  const Matrix D = A.to_dense();
  std::vector<Index> rows;
  for (Index i = 0; i < n; ++i) {
    if (D.row(i).cwiseAbs().maxCoeff() > 0.0) rows.push_back(i);
  }
  const Index p = static_cast<Index>(rows.size());
  Matrix B(p, p);
  for (Index j = 0; j < p; ++j)
    for (Index i = 0; i < p; ++i) B(i, j) = D(rows[i], rows[j]);

  // A = c R with R real: pick c from the largest entry.
  Index bi = 0, bj = 0;
  B.cwiseAbs().maxCoeff(&bi, &bj);
  const cplx c = B(bi, bj) / std::abs(B(bi, bj));
  const Matrix Bc = B / c;
  if (Bc.imag().cwiseAbs().maxCoeff() > 1e-14 * Bc.cwiseAbs().maxCoeff()) {
    return fail("complex symmetric matrix is not a scalar multiple of a real one");
  }
  Eigen::SelfAdjointEigenSolver<RealMatrix> es(Bc.real());
  const RealVector& ev = es.eigenvalues();
  const double top = ev.cwiseAbs().maxCoeff();
  std::vector<Index> keep;
  for (Index i = 0; i < p; ++i) {
    if (std::abs(ev(i)) > rel_tol * top / std::sqrt(static_cast<double>(p))) keep.push_back(i);
  }
  Matrix Ub(p, static_cast<Index>(keep.size()));
  const cplx sc = std::sqrt(c);
  for (Index j = 0; j < static_cast<Index>(keep.size()); ++j) {
    const cplx s = std::sqrt(cplx(ev(keep[j]), 0.0)) * sc;
    Ub.col(j) = s * es.eigenvectors().col(keep[j]).cast<cplx>();
  }
  Matrix U = Matrix::Zero(n, Ub.cols());
  for (Index i = 0; i < p; ++i) U.row(rows[i]) = Ub.row(i);
  if ((D - U * U.transpose()).norm() > rel_tol * fro) {
    return fail("factor does not reproduce the matrix to tolerance");
  }
  return U;
}

}  // namespace ilan
