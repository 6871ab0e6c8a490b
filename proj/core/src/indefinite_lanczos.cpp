#include "ilan/indefinite_lanczos.hpp"

#include <algorithm>

#include "ilan/error.hpp"

namespace ilan {

const char* to_string(LanczosStatus status) {
  switch (status) {
    case LanczosStatus::completed: return "completed";
    case LanczosStatus::happy_breakdown: return "happy-breakdown";
    case LanczosStatus::breakdown_omega: return "breakdown-omega";
  }
  return "unknown";
}

DenseLanczosResult indefinite_lanczos_dense(const Matrix& A, const Matrix& B, const Vector& q1, int k) {
  const Index n = A.rows();
  if (k < 1) throw Error(ErrorCode::invalid_argument, "indefinite_lanczos_dense: k must be >= 1");
  if (q1.norm() == 0.0) throw Error(ErrorCode::invalid_argument, "indefinite_lanczos_dense: zero start vector");
  const Eigen::PartialPivLU<Matrix> lu(A);

  DenseLanczosResult r;
  r.Q = Matrix::Zero(n, k + 1);
  r.T = Matrix::Zero(k + 1, k);
  r.Q.col(0) = q1 / q1.norm();
  r.omega.push_back((r.Q.col(0).transpose() * B * r.Q.col(0))(0));
  double omega_scale = std::max(1.0, std::abs(r.omega[0]));
  if (std::abs(r.omega[0]) <= 1e-14 * omega_scale) {
    throw Error(ErrorCode::breakdown_omega, "indefinite Lanczos: q1^T B q1 vanishes; choose another start");
  }

  for (int j = 0; j < k; ++j) {
    const Vector w = lu.solve(B * r.Q.col(j));
    const Vector z = B * w;
    const cplx alpha = z.transpose() * r.Q.col(j);
    const cplx beta = j > 0 ? cplx(z.transpose() * r.Q.col(j - 1)) : cplx(0.0);
    const cplx gamma = z.transpose() * w;
    const cplx t_diag = alpha / r.omega[j];
    const cplx t_super = j > 0 ? beta / r.omega[j - 1] : cplx(0.0);
    Vector w_perp = w - t_diag * r.Q.col(j);
    if (j > 0) w_perp -= t_super * r.Q.col(j - 1);
    const double t_sub = w_perp.norm();

    r.T(j, j) = t_diag;
    if (j > 0) r.T(j - 1, j) = t_super;
    r.steps = j + 1;
    if (t_sub <= 1e-14 * w.norm()) {
      r.status = LanczosStatus::happy_breakdown;
      break;
    }
    r.T(j + 1, j) = t_sub;
    r.Q.col(j + 1) = w_perp / t_sub;
    const cplx omega_prev = j > 0 ? r.omega[j - 1] : cplx(0.0);
    const cplx omega_next = (gamma - 2.0 * t_diag * alpha - 2.0 * t_super * beta +
                             t_diag * t_diag * r.omega[j] + t_super * t_super * omega_prev) /
                            (t_sub * t_sub);
    r.omega.push_back(omega_next);
    if (std::abs(omega_next) <= 1e-14 * omega_scale) {
      r.status = LanczosStatus::breakdown_omega;
      break;
    }
    omega_scale = std::max(omega_scale, std::abs(omega_next));
  }
  r.Q.conservativeResize(n, static_cast<Index>(r.omega.size()));
  r.T.conservativeResize(static_cast<Index>(r.omega.size()), r.steps);
  return r;
}

}  // namespace ilan
