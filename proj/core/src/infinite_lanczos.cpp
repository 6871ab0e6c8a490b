#include "ilan/infinite_lanczos.hpp"

#include <chrono>
#include <cmath>
#include <sstream>

#include "ilan/error.hpp"

namespace ilan {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

}  // namespace

Matrix KrylovState::tridiagonal(int size) const {
  if (size < 0 || size > static_cast<int>(t_diag.size())) {
    throw Error(ErrorCode::invalid_argument, "tridiagonal: size exceeds completed iterations");
  }
  Matrix T = Matrix::Zero(size, size);
  for (int j = 0; j < size; ++j) {
    T(j, j) = t_diag[j];
    if (j > 0) T(j - 1, j) = t_super[j];
    if (j + 1 < size) T(j + 1, j) = t_sub[j];
  }
  return T;
}

Matrix KrylovState::tridiagonal_rect() const {
  const int cols = static_cast<int>(t_diag.size());
  Matrix T = Matrix::Zero(cols + 1, cols);
  T.topRows(cols) = tridiagonal(cols);
  if (cols > 0 && static_cast<int>(t_sub.size()) >= cols) T(cols, cols - 1) = t_sub[cols - 1];
  return T;
}

InfiniteLanczos::InfiniteLanczos(SpmfNep nep, ZStrategy strategy, int rank)
    : nep_(std::move(nep)), m0_(nep_), strategy_(strategy), rank_(rank), table_(nep_, 16) {
  validate_strategy(nep_, strategy_);
}

KrylovState InfiniteLanczos::init(const Vector& q1) {
  if (q1.size() != nep_.size()) throw Error(ErrorCode::dimension_mismatch, "start vector has wrong length");
  const double nrm = q1.norm();
  if (nrm == 0.0) throw Error(ErrorCode::invalid_argument, "start vector is zero");
  KrylovState s;
  s.k = 1;
  s.q_cur = q1 / nrm;
  s.q_prev = Matrix::Zero(nep_.size(), 0);
  s.first_blocks = s.q_cur;
  const Matrix M1q = derivative_matvec(nep_, table_, 1, s.q_cur);
  const cplx omega = (s.q_cur.transpose() * M1q)(0, 0);
  omega_scale_ = std::max(1.0, std::abs(omega));
  if (std::abs(omega) <= 1e-14 * std::max(1.0, M1q.norm())) {
    throw Error(ErrorCode::breakdown_omega,
                "q1^T M_1 q1 vanishes for this start vector; choose a different start vector");
  }
  s.omega.push_back(omega);
  return s;
}

StepW InfiniteLanczos::step_w(const KrylovState& state) {
  const int k = state.k;
  const Index n = nep_.size();
  table_.ensure(nep_, 2 * k + 1);

  Vector rhs = Vector::Zero(n);
  for (std::size_t m = 0; m < nep_.num_terms(); ++m) {
    const Vector c = scaled_derivative_weights(table_.series(m), k);
    if (c.cwiseAbs().maxCoeff() == 0.0) continue;
    rhs += nep_.term(m).matrix.apply(state.q_cur * c);
  }
  StepW out;
  out.w1 = -m0_.apply_inverse(rhs);
  out.W.resize(n, k + 1);
  out.W.col(0) = out.w1;
  for (int j = 1; j <= k; ++j) out.W.col(j) = state.q_cur.col(j - 1) / static_cast<double>(j);
  return out;
}

Matrix InfiniteLanczos::compute_z(const Matrix& W) {
  const int k = static_cast<int>(W.cols()) - 1;
  table_.ensure(nep_, 2 * k + 1);
  switch (strategy_) {
    case ZStrategy::naive: return z_naive(W, nep_, table_);
    case ZStrategy::dep: return z_dep(W, nep_);
    case ZStrategy::poly_lowrank: return z_poly_lowrank(W, nep_, table_);
    case ZStrategy::lowrank_fft:
      if (!g_cache_ || g_cache_->k != k) g_cache_ = g_factors(k, rank_ > 0 ? std::min(rank_, k + 1) : 0);
      return z_lowrank_fft(W, nep_, table_, *g_cache_);
  }
  return {};
}

ScalarProducts InfiniteLanczos::scalar_products(const Matrix& Z, const Matrix& q_cur, const Matrix& q_prev,
                                                const Matrix& W) {
  if (Z.rows() != W.rows() || Z.cols() != W.cols() || q_cur.cols() > Z.cols() || q_prev.cols() > Z.cols()) {
    throw Error(ErrorCode::dimension_mismatch, "scalar_products: shapes are not conformable");
  }
  ScalarProducts sp;
  sp.alpha = Z.leftCols(q_cur.cols()).cwiseProduct(q_cur).sum();
  sp.beta = q_prev.cols() > 0 ? Z.leftCols(q_prev.cols()).cwiseProduct(q_prev).sum() : cplx(0.0);
  sp.gamma = Z.cwiseProduct(W).sum();
  return sp;
}

LanczosStatus InfiniteLanczos::lanczos_update(KrylovState& s, const Matrix& W, const ScalarProducts& sp) {
  const int k = s.k;
  const cplx omega_k = s.omega[k - 1];
  const cplx omega_km1 = k > 1 ? s.omega[k - 2] : cplx(0.0);
  const cplx t_diag = sp.alpha / omega_k;
  const cplx t_super = k > 1 ? sp.beta / omega_km1 : cplx(0.0);

  Matrix W_perp = W;
  W_perp.leftCols(k) -= t_diag * s.q_cur;
  if (k > 1) W_perp.leftCols(k - 1) -= t_super * s.q_prev;
  const double t_sub = W_perp.norm();

  s.t_diag.push_back(t_diag);
  s.t_super.push_back(t_super);
  if (t_sub <= 1e-14 * W.norm()) {
    s.t_sub.push_back(0.0);
    return LanczosStatus::happy_breakdown;
  }
  s.t_sub.push_back(t_sub);

  const cplx omega_next = (sp.gamma - 2.0 * t_diag * sp.alpha - 2.0 * t_super * sp.beta +
                           t_diag * t_diag * omega_k + t_super * t_super * omega_km1) /
                          (t_sub * t_sub);
  s.q_prev = std::move(s.q_cur);
  s.q_cur = W_perp / t_sub;
  s.first_blocks.conservativeResize(Eigen::NoChange, k + 1);
  s.first_blocks.col(k) = s.q_cur.col(0);
  s.omega.push_back(omega_next);
  s.k = k + 1;
  if (std::abs(omega_next) <= 1e-14 * omega_scale_) return LanczosStatus::breakdown_omega;
  omega_scale_ = std::max(omega_scale_, std::abs(omega_next));
  return LanczosStatus::completed;
}

RunResult InfiniteLanczos::run(const Vector& q1, int maxiter, const RunCallbacks& callbacks) {
  if (maxiter < 1) throw Error(ErrorCode::invalid_argument, "maxiter must be >= 1");
  const auto t_start = Clock::now();
  RunResult result;
  result.state = init(q1);
  KrylovState& s = result.state;
  RunDiagnostics& d = result.diagnostics;
  const int every = std::max(1, callbacks.extraction_every);

  for (int it = 1; it <= maxiter; ++it) {
    const auto t0 = Clock::now();
    LanczosStatus status;
    try {
      const StepW sw = step_w(s);
      const Matrix Z = compute_z(sw.W);
      const ScalarProducts sp = scalar_products(Z, s.q_cur, s.q_prev, sw.W);
      status = lanczos_update(s, sw.W, sp);
    } catch (const Error& e) {
      throw Error(e.code(), "iteration " + std::to_string(it) + ": " + e.what());
    }
    const bool finite = s.q_cur.allFinite() && std::isfinite(std::abs(s.omega.back())) &&
                        std::isfinite(std::abs(s.t_diag.back())) && std::isfinite(s.t_sub.back());
    if (!finite) {
      throw Error(ErrorCode::numerical_overflow,
                  "iteration " + std::to_string(it) +
                      ": non-finite values in the recurrence; shift and scale the problem (shift_scale)");
    }
    const double dt = seconds_since(t0);
    d.iteration_seconds.push_back(dt);
    d.iterations = it;
    d.status = status;
    if (status == LanczosStatus::completed && std::abs(s.omega.back()) <= 1e-10 * omega_scale_) {
      std::ostringstream os;
      os << "iteration " << it << ": near-breakdown, |omega| = " << std::abs(s.omega.back());
      d.warnings.push_back(os.str());
    }
    if (callbacks.progress) callbacks.progress({it, s.t_sub.back(), s.omega.back(), seconds_since(t_start)});

    const bool last = it == maxiter || status != LanczosStatus::completed;
    if (callbacks.extraction && (it % every == 0 || last)) callbacks.extraction(s, it);
    if (status != LanczosStatus::completed) break;
  }
  d.total_seconds = seconds_since(t_start);
  return result;
}

}  // namespace ilan
