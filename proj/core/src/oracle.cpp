#include "ilan/oracle.hpp"

#include <algorithm>

#include <Eigen/LU>

#include "ilan/derivative_table.hpp"
#include "ilan/error.hpp"

namespace ilan {
namespace {

// Extended-precision reference. [SA]_N is ill-conditioned (its blocks carry
// the factorially scaled coefficients 1/binom(i+j, i)), so the dense process
// runs in long double to keep the reference well below the tolerances it is
// compared against.
using XMatrix = Eigen::Matrix<xcplx, Eigen::Dynamic, Eigen::Dynamic>;
using XVector = Eigen::Matrix<xcplx, Eigen::Dynamic, 1>;

struct XPencil {
  XMatrix SA, SB;
};

XPencil extended_pencil(const SpmfNep& nep, int depth) {
  const Index n = nep.size();
  const DerivativeTable table(nep, 2 * depth + 1);
  std::vector<XMatrix> Md(2 * depth + 1, XMatrix::Zero(n, n));
  for (std::size_t m = 0; m < nep.num_terms(); ++m) {
    const XMatrix A = nep.term(m).matrix.to_dense().cast<xcplx>();
    for (int j = 0; j <= 2 * depth; ++j) {
      const xcplx d = table.series(m).derivative(j);
      if (d != xcplx{0}) Md[j] += d * A;
    }
  }
  auto c = [](int i, int j) { return factorial_ld(i) * factorial_ld(j) / factorial_ld(i + j); };
  auto g = [](int i, int j) { return factorial_ld(i - 1) * factorial_ld(j - 1) / factorial_ld(i + j - 1); };
  XPencil p;
  p.SA = XMatrix::Zero(n * depth, n * depth);
  p.SB = XMatrix::Zero(n * depth, n * depth);
  p.SA.topLeftCorner(n, n) = -Md[0];
  for (int i = 1; i <= depth; ++i) {
    for (int j = 1; j <= depth; ++j) {
      if (i >= 2 && j >= 2) p.SA.block((i - 1) * n, (j - 1) * n, n, n) = c(i - 1, j - 1) * Md[i + j - 2];
      p.SB.block((i - 1) * n, (j - 1) * n, n, n) = g(i, j) * Md[i + j - 1];
    }
  }
  return p;
}

struct XLanczos {
  XMatrix Q, T;
  std::vector<xcplx> omega;
  int steps = 0;
};

XLanczos extended_lanczos(const XPencil& p, const XVector& q1, int k) {
  const Eigen::PartialPivLU<XMatrix> lu(p.SA);
  XLanczos r;
  const Index N = p.SA.rows();
  r.Q = XMatrix::Zero(N, k + 1);
  r.T = XMatrix::Zero(k + 1, k);
  r.Q.col(0) = q1 / q1.norm();
  r.omega.push_back((r.Q.col(0).transpose() * p.SB * r.Q.col(0))(0));
  for (int j = 0; j < k; ++j) {
    const XVector w = lu.solve(p.SB * r.Q.col(j));
    const XVector z = p.SB * w;
    const xcplx alpha = (z.transpose() * r.Q.col(j))(0);
    const xcplx beta = j > 0 ? (z.transpose() * r.Q.col(j - 1))(0) : xcplx{0};
    const xcplx gamma = (z.transpose() * w)(0);
    const xcplx td = alpha / r.omega[j];
    const xcplx ts = j > 0 ? beta / r.omega[j - 1] : xcplx{0};
    XVector wp = w - td * r.Q.col(j);
    if (j > 0) wp -= ts * r.Q.col(j - 1);
    const long double tsub = wp.norm();
    r.T(j, j) = td;
    if (j > 0) r.T(j - 1, j) = ts;
    r.T(j + 1, j) = tsub;
    r.steps = j + 1;
    if (tsub == 0.0L) break;
    r.Q.col(j + 1) = wp / tsub;
    const xcplx om_prev = j > 0 ? r.omega[j - 1] : xcplx{0};
    r.omega.push_back((gamma - 2.0L * td * alpha - 2.0L * ts * beta + td * td * r.omega[j] + ts * ts * om_prev) /
                      (tsub * tsub));
  }
  return r;
}

cplx narrow(xcplx z) { return {static_cast<double>(z.real()), static_cast<double>(z.imag())}; }

}  // namespace

EquivalenceReport compare_with_dense(const SpmfNep& nep, int k, int depth, const Vector& q1, ZStrategy strategy) {
  if (k < 1 || depth < k + 1) throw Error(ErrorCode::invalid_argument, "compare_with_dense: need depth >= k + 1");
  if (nep.size() * depth > kDenseLinearizationCap) {
    throw Error(ErrorCode::size_cap_exceeded, "compare_with_dense: truncated pencil too large");
  }
  const Index n = nep.size();
  const XPencil pencil = extended_pencil(nep, depth);
  XVector start = XVector::Zero(n * depth);
  start.head(n) = q1.cast<xcplx>();
  const XLanczos dense = extended_lanczos(pencil, start, k);

  InfiniteLanczos il(nep, strategy);
  KrylovState s = il.init(q1);
  std::vector<Matrix> vectors{s.q_cur};
  for (int it = 0; it < k; ++it) {
    const StepW sw = il.step_w(s);
    const Matrix Z = il.compute_z(sw.W);
    const LanczosStatus st =
        il.lanczos_update(s, sw.W, InfiniteLanczos::scalar_products(Z, s.q_cur, s.q_prev, sw.W));
    if (st == LanczosStatus::happy_breakdown) break;
    vectors.push_back(s.q_cur);
    if (st != LanczosStatus::completed) break;
  }

  EquivalenceReport r;
  r.depth = depth;
  r.iterations = std::min(static_cast<int>(s.t_diag.size()), dense.steps);
  const int m = r.iterations;
  const Matrix Ts = s.tridiagonal_rect().topLeftCorner(m + 1, m);
  Matrix Td(m + 1, m);
  for (Index j = 0; j < m; ++j)
    for (Index i = 0; i <= m; ++i) Td(i, j) = narrow(dense.T(i, j));
  r.t_deviation = (Ts - Td).cwiseAbs().maxCoeff() / std::max(Td.cwiseAbs().maxCoeff(), 1e-300);
  const std::size_t nom = std::min(s.omega.size(), dense.omega.size());
  for (std::size_t j = 0; j < nom; ++j) {
    const cplx od = narrow(dense.omega[j]);
    r.omega_deviation = std::max(r.omega_deviation, std::abs(s.omega[j] - od) / std::max(std::abs(od), 1e-300));
  }
  const std::size_t nv = std::min(vectors.size(), static_cast<std::size_t>(dense.Q.cols()));
  for (std::size_t j = 0; j < nv; ++j) {
    const Matrix& blocks = vectors[j];
    const Index len = blocks.size();
    const Eigen::Map<const Vector> flat(blocks.data(), len);
    Vector d(dense.Q.rows());
    for (Index i = 0; i < d.size(); ++i) d(i) = narrow(dense.Q(i, static_cast<Index>(j)));
    r.block_deviation = std::max(r.block_deviation, (flat - d.head(len)).norm());
    r.tail_norm = std::max(r.tail_norm, d.tail(d.size() - len).norm());
  }
  return r;
}

}  // namespace ilan
