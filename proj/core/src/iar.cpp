#include "ilan/iar.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "ilan/derivative_table.hpp"
#include "ilan/error.hpp"
#include "ilan/m0_solver.hpp"
#include "ilan/random.hpp"
#include "ilan/residual.hpp"

namespace ilan {
namespace {

M0Solver factor_m0(const SpmfNep& nep) {
  try {
    return M0Solver(Matrix(nep.evaluate(cplx(0.0))));
  } catch (const Error& e) {
    throw Error(ErrorCode::projected_m0_singular, std::string("projected problem: ") + e.what());
  }
}

}  // namespace

IarResult iar(const SpmfNep& nep, const IarOptions& options) {
  const Index s = nep.size();
  if (s < 1) throw Error(ErrorCode::invalid_argument, "iar: empty problem");
  const int m = static_cast<int>(std::min<Index>(std::max(1, options.maxiter), std::max<Index>(2 * s, kIarMinCap)));
  const M0Solver m0 = factor_m0(nep);

  const DerivativeTable table(nep, m + 1);
  std::vector<Vector> weights;
  weights.reserve(nep.num_terms());
  for (std::size_t t = 0; t < nep.num_terms(); ++t) weights.push_back(scaled_derivative_weights(table.series(t), m));

  IarResult r;
  Matrix V = Matrix::Zero(s * (m + 1), m + 1);
  Matrix H = Matrix::Zero(m + 1, m);
  V.col(0).head(s) = random_unit_vector(s, options.seed == 0 ? kDefaultSeed : options.seed);

  int done = 0;
  double relation = 0.0;
  for (int j = 0; j < m; ++j) {
    const Index nb = j + 1;  // blocks in V.col(j)
    const Eigen::Map<const Matrix> X(V.col(j).data(), s, nb);
    Vector y = Vector::Zero(s * (nb + 1));
    Vector rhs = Vector::Zero(s);
    for (std::size_t t = 0; t < nep.num_terms(); ++t) {
      const auto c = weights[t].head(nb);
      if (c.cwiseAbs().maxCoeff() == 0.0) continue;
      rhs += nep.term(t).matrix.apply(X * c);
    }
    y.head(s) = -m0.apply_inverse(rhs);
    for (Index i = 1; i <= nb; ++i) y.segment(i * s, s) = X.col(i - 1) / static_cast<double>(i);

    const Index len = y.size();
    const Vector y0 = y;
    Vector h = V.topLeftCorner(len, nb).adjoint() * y;
    y -= V.topLeftCorner(len, nb) * h;
    const Vector h2 = V.topLeftCorner(len, nb).adjoint() * y;
    y -= V.topLeftCorner(len, nb) * h2;
    h += h2;
    const double beta = y.norm();
    H.col(j).head(nb) = h;
    H(j + 1, j) = beta;
    done = j + 1;
    if (options.check_relation) {
      const Vector rebuilt = V.topLeftCorner(len, nb) * h + y;
      relation = std::max(relation, (y0 - rebuilt).norm() / std::max(y0.norm(), 1e-300));
    }
    if (beta <= 1e-14 * std::max(h.norm(), y0.norm())) {
      r.happy_breakdown = true;
      H(j + 1, j) = 0.0;
      break;
    }
    V.col(j + 1).head(len) = y / beta;
  }
  r.iterations = done;
  r.H = H.topLeftCorner(done + 1, done);
  r.relation_residual = relation;

  Eigen::ComplexEigenSolver<Matrix> es(H.topLeftCorner(done, done));
  if (es.info() != Eigen::Success) {
    r.diagnostics.push_back("Hessenberg eigensolver failed");
    return r;
  }
  const double scale = std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff());
  int converged = 0;
  for (Index i = 0; i < done; ++i) {
    const cplx theta = es.eigenvalues()(i);
    if (std::abs(theta) <= 1e-13 * scale) continue;
    EigenPair p;
    p.lambda = 1.0 / theta;
    if (options.target && !options.target->contains(p.lambda)) continue;
    p.x = V.topLeftCorner(s, done) * es.eigenvectors().col(i);
    if (p.x.norm() == 0.0 || !p.x.allFinite()) continue;
    normalize_eigenvector(p.x);
    try {
      p.err = residual_error(nep, p.lambda, p.x);
    } catch (const Error&) {
      continue;
    }
    if (p.err < options.tol) ++converged;
    r.pairs.push_back(std::move(p));
  }
  if (converged == 0) r.diagnostics.push_back("no Ritz pair reached the tolerance on the projected problem");
  return r;
}

}  // namespace ilan
