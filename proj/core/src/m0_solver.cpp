#include "ilan/m0_solver.hpp"

#include <algorithm>

#include <sstream>
#include <variant>

#include <Eigen/SparseLU>

#include "ilan/error.hpp"

namespace ilan {

using SparseLu = Eigen::SparseLU<SparseMatrix, Eigen::COLAMDOrdering<int>>;

struct M0Solver::Impl {
  std::variant<SparseLu, Eigen::PartialPivLU<Matrix>> lu;
};

namespace {

double norm1(const SparseMatrix& A) {
  double best = 0.0;
  for (Index c = 0; c < A.outerSize(); ++c) {
    double s = 0.0;
    for (SparseMatrix::InnerIterator it(A, c); it; ++it) s += std::abs(it.value());
    best = std::max(best, s);
  }
  return best;
}

// Hager/Higham estimate of ||A^{-1}||_1 using solves with A and A^H.
template <typename Solve, typename SolveAdjoint>
double inverse_norm1_estimate(Index n, Solve solve, SolveAdjoint solve_adjoint) {
  Vector x = Vector::Constant(n, cplx(1.0 / static_cast<double>(n)));
  double estimate = 0.0;
  Index last_j = -1;
  for (int iter = 0; iter < 5; ++iter) {
    const Vector y = solve(x);
    estimate = y.cwiseAbs().sum();
    Vector xi(n);
    for (Index i = 0; i < n; ++i) {
      const double a = std::abs(y(i));
      xi(i) = a == 0.0 ? cplx(1.0) : y(i) / a;
    }
    const Vector z = solve_adjoint(xi);
    Index j = 0;
    const double zmax = z.cwiseAbs().maxCoeff(&j);
    if (zmax <= (z.adjoint() * x)(0).real() || j == last_j) break;
    x.setZero();
    x(j) = 1.0;
    last_j = j;
  }
  return estimate;
}

[[noreturn]] void throw_singular(double rcond) {
  std::ostringstream os;
  os << "M(0) is singular to working precision (reciprocal condition estimate " << rcond
     << "); shift the problem with shift_scale so that 0 is not an eigenvalue";
  throw Error(ErrorCode::singular_m0, os.str());
}

}  // namespace

M0Solver::M0Solver(const SpmfNep& nep, double singular_tol) {
  M0Solver tmp = nep.all_sparse() ? M0Solver(nep.evaluate_sparse(0.0), singular_tol)
                                  : M0Solver(nep.evaluate(0.0), singular_tol);
  *this = std::move(tmp);
}

M0Solver::M0Solver(const Matrix& m0, double singular_tol)
    : impl_(std::make_unique<Impl>()), n_(m0.rows()) {
  auto& lu = impl_->lu.emplace<Eigen::PartialPivLU<Matrix>>(m0);
  // rcond() is not trustworthy once a pivot is exactly zero
  const auto piv = lu.matrixLU().diagonal().cwiseAbs();
  rcond_ = piv.maxCoeff() == 0.0 ? 0.0 : std::min(lu.rcond(), piv.minCoeff() / piv.maxCoeff());
  if (!(rcond_ >= singular_tol)) throw_singular(rcond_);
}

M0Solver::M0Solver(const SparseMatrix& m0, double singular_tol)
    : impl_(std::make_unique<Impl>()), n_(m0.rows()) {
  auto& lu = impl_->lu.emplace<SparseLu>();
  SparseMatrix a = m0;
  a.makeCompressed();
  lu.analyzePattern(a);
  lu.factorize(a);
  if (lu.info() != Eigen::Success) throw_singular(0.0);
  const double inv_norm = inverse_norm1_estimate(
      n_, [&](const Vector& b) -> Vector { return lu.solve(b); },
      [&](const Vector& b) -> Vector { return lu.adjoint().solve(b); });
  const double a_norm = norm1(a);
  rcond_ = (a_norm == 0.0 || inv_norm == 0.0) ? 0.0 : 1.0 / (a_norm * inv_norm);
  if (!(rcond_ >= singular_tol)) throw_singular(rcond_);
}

M0Solver::~M0Solver() = default;
M0Solver::M0Solver(M0Solver&&) noexcept = default;
M0Solver& M0Solver::operator=(M0Solver&&) noexcept = default;

bool M0Solver::is_sparse() const { return std::holds_alternative<SparseLu>(impl_->lu); }

Matrix M0Solver::apply_inverse(const Matrix& X) const {
  if (X.rows() != n_) throw Error(ErrorCode::dimension_mismatch, "apply_inverse: row count mismatch");
  return std::visit([&](const auto& lu) -> Matrix { return lu.solve(X); }, impl_->lu);
}

}  // namespace ilan
