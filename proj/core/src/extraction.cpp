#include "ilan/extraction.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

#include "ilan/error.hpp"
#include "ilan/residual.hpp"

namespace ilan {

std::string to_string(ExtractionMethod m) {
  return m == ExtractionMethod::ritz ? "ritz" : "projected-iar";
}

ExtractionMethod parse_extraction_method(const std::string& s) {
  if (s == "ritz") return ExtractionMethod::ritz;
  if (s == "projected-iar") return ExtractionMethod::projected_iar;
  throw Error(ErrorCode::invalid_argument, "unknown extraction method '" + s + "'");
}

Matrix orthonormal_basis(const Matrix& blocks) {
  if (blocks.cols() == 0 || blocks.rows() == 0) throw Error(ErrorCode::zero_subspace, "empty subspace");
  Eigen::ColPivHouseholderQR<Matrix> qr(blocks);
  const auto& R = qr.matrixR();
  const double lead = std::abs(R(0, 0));
  if (lead == 0.0) throw Error(ErrorCode::zero_subspace, "subspace vectors are all zero");
  Index s = 0;
  const Index kmax = std::min(blocks.rows(), blocks.cols());
  while (s < kmax && std::abs(R(s, s)) > 1e-12 * lead) ++s;
  Matrix Q = qr.householderQ() * Matrix::Identity(blocks.rows(), s);
  return Q;
}

ProjectedNep project(const SpmfNep& nep, const Matrix& V) {
  if (V.rows() != nep.size()) throw Error(ErrorCode::dimension_mismatch, "project: basis has wrong row count");
  std::vector<Term> terms;
  terms.reserve(nep.num_terms());
  for (const Term& t : nep.terms()) {
    Term p = t;
    p.matrix = TermMatrix(t.matrix.project(V));
    if (t.low_rank_factor) p.low_rank_factor = Matrix(V.transpose() * *t.low_rank_factor);
    terms.push_back(std::move(p));
  }
  return {SpmfNep(V.cols(), std::move(terms)), V};
}

void normalize_eigenvector(Vector& x) {
  const double nrm = x.norm();
  if (nrm == 0.0) return;
  x /= nrm;
  const double big = x.cwiseAbs().maxCoeff();
  for (Index i = 0; i < x.size(); ++i) {
    const double a = std::abs(x(i));
    if (a > 1e-12 * big) {
      x *= std::conj(x(i)) / a;
      x(i) = cplx(a, 0.0);
      break;
    }
  }
}

std::vector<EigenPair> ritz_pairs(const Matrix& T, std::span<const cplx> omega, const Matrix& first_blocks) {
  const Index k = T.rows();
  if (k < 1 || T.cols() != k) throw Error(ErrorCode::invalid_argument, "ritz_pairs: T must be square, k >= 1");
  if (static_cast<Index>(omega.size()) < k || first_blocks.cols() < k) {
    throw Error(ErrorCode::dimension_mismatch, "ritz_pairs: omega or basis shorter than T");
  }
  for (Index j = 0; j < k; ++j) {
    if (omega[j] == cplx(0.0)) throw Error(ErrorCode::singular_omega, "ritz_pairs: omega has a zero entry");
  }
  Eigen::ComplexEigenSolver<Matrix> es(T);
  if (es.info() != Eigen::Success) throw Error(ErrorCode::invalid_argument, "ritz_pairs: eigensolver failed");
  const double scale = std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff());
  std::vector<EigenPair> out;
  for (Index i = 0; i < k; ++i) {
    const cplx theta = es.eigenvalues()(i);
    if (std::abs(theta) <= 1e-13 * scale) continue;
    EigenPair p;
    p.lambda = 1.0 / theta;
    p.x = first_blocks.leftCols(k) * es.eigenvectors().col(i);
    if (p.x.norm() == 0.0) continue;
    normalize_eigenvector(p.x);
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<EigenPair> ritz_pairs(const KrylovState& state) {
  const int size = static_cast<int>(state.t_diag.size());
  return ritz_pairs(state.tridiagonal(size), state.omega, state.first_blocks);
}

namespace {

bool same_eigenvalue(cplx a, cplx b) {
  return std::abs(a - b) <= 1e-8 * std::max({std::abs(a), std::abs(b), 1e-300});
}

void insert_dedup(std::vector<EigenPair>& into, EigenPair p) {
  for (EigenPair& q : into) {
    if (same_eigenvalue(q.lambda, p.lambda)) {
      if (p.err < q.err) q = std::move(p);
      return;
    }
  }
  into.push_back(std::move(p));
}

void sort_pairs(std::vector<EigenPair>& v) {
  std::stable_sort(v.begin(), v.end(), [](const EigenPair& a, const EigenPair& b) {
    const double ma = std::abs(a.lambda), mb = std::abs(b.lambda);
    if (ma != mb) return ma < mb;
    if (a.lambda.real() != b.lambda.real()) return a.lambda.real() < b.lambda.real();
    return a.lambda.imag() < b.lambda.imag();
  });
}

}  // namespace

EigenResult filter_converged(std::vector<EigenPair> pairs, const SpmfNep& nep, double tol,
                             std::optional<Disk> target) {
  EigenResult r;
  for (EigenPair& p : pairs) {
    if (target && !target->contains(p.lambda)) continue;
    if (p.x.size() != nep.size() || !std::isfinite(std::abs(p.lambda)) || !p.x.allFinite()) continue;
    try {
      p.err = residual_error(nep, p.lambda, p.x);
    } catch (const Error&) {
      continue;
    }
    if (std::isfinite(p.err) && p.err < tol) {
      insert_dedup(r.pairs, std::move(p));
    } else {
      r.rejected.push_back(std::move(p));
    }
  }
  sort_pairs(r.pairs);
  return r;
}

void merge_converged(std::vector<EigenPair>& into, const std::vector<EigenPair>& more) {
  for (const EigenPair& p : more) insert_dedup(into, p);
  sort_pairs(into);
}

}  // namespace ilan
