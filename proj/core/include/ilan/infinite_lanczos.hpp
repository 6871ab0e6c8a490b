#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ilan/derivative_table.hpp"
#include "ilan/indefinite_lanczos.hpp"
#include "ilan/m0_solver.hpp"
#include "ilan/spmf_nep.hpp"
#include "ilan/structured_kernels.hpp"

namespace ilan {

/// State of the infinite Lanczos recurrence after k - 1 updates.
///
/// The k-th Lanczos vector of the (implicit) infinite linearization has
/// exactly k nonzero blocks; they are the columns of `q_cur`. Only the two
/// trailing vectors are kept, plus the first block of every vector, which
/// spans the extraction subspace.
struct KrylovState {
  int k = 0;
  Matrix q_prev;                  // n x (k-1)
  Matrix q_cur;                   // n x k
  std::vector<cplx> t_diag;       // t_{j,j},   j = 1..k-1
  std::vector<cplx> t_super;      // t_{j-1,j}, j = 1..k-1 (first entry 0)
  std::vector<double> t_sub;      // t_{j+1,j}, j = 1..k-1
  std::vector<cplx> omega;        // omega_1..omega_k
  Matrix first_blocks;            // n x k

  /// Leading square block T_size of the tridiagonal matrix (size <= k-1).
  Matrix tridiagonal(int size) const;
  /// T_{k, k-1}.
  Matrix tridiagonal_rect() const;
};

struct StepW {
  Vector w1;
  Matrix W;  // n x (k+1)
};

struct ScalarProducts {
  cplx alpha{0.0};
  cplx beta{0.0};
  cplx gamma{0.0};
};

struct IterationInfo {
  int iteration = 0;
  double t_sub = 0.0;
  cplx omega{0.0};
  double elapsed_s = 0.0;
};

struct RunCallbacks {
  std::function<void(const IterationInfo&)> progress;
  /// Called with the current state every `extraction_every` iterations and
  /// once at termination.
  std::function<void(const KrylovState&, int iteration)> extraction;
  int extraction_every = 10;
};

struct RunDiagnostics {
  LanczosStatus status = LanczosStatus::completed;
  int iterations = 0;
  std::vector<double> iteration_seconds;
  std::vector<std::string> warnings;
  double total_seconds = 0.0;
};

struct RunResult {
  KrylovState state;
  RunDiagnostics diagnostics;
};

/// Infinite Lanczos for symmetric SPMF problems.
///
/// Applies the indefinite Lanczos process to the symmetrized companion
/// linearization using block-structured vectors, never forming the
/// linearization. M(0) is factorized once at construction.
class InfiniteLanczos {
 public:
  /// `rank` is the G approximation rank for lowrank-fft (0 = adaptive).
  explicit InfiniteLanczos(SpmfNep nep, ZStrategy strategy = ZStrategy::naive, int rank = 0);

  const SpmfNep& problem() const { return nep_; }
  const M0Solver& m0() const { return m0_; }
  ZStrategy strategy() const { return strategy_; }
  const DerivativeTable& derivatives() const { return table_; }

  /// Q_1 = q1/||q1||, omega_1 = Q_1^T M_1 Q_1. Throws breakdown_omega when
  /// omega_1 vanishes.
  KrylovState init(const Vector& q1);

  /// W = w1 e_1^T + Q_cur D with d_{j,j+1} = 1/j and
  /// w1 = -M_0^{-1} sum_j M_j q_j / j.
  StepW step_w(const KrylovState& state);

  /// First k+1 blocks of SB w, using the configured strategy.
  Matrix compute_z(const Matrix& W);

  /// Unconjugated Frobenius products with Q_cur, Q_prev zero-padded to W's
  /// column count.
  static ScalarProducts scalar_products(const Matrix& Z, const Matrix& q_cur, const Matrix& q_prev,
                                        const Matrix& W);

  /// Three-term update; returns happy_breakdown when W_perp vanishes (no
  /// new vector is appended) and breakdown_omega when the new omega does.
  LanczosStatus lanczos_update(KrylovState& state, const Matrix& W, const ScalarProducts& sp);

  RunResult run(const Vector& q1, int maxiter, const RunCallbacks& callbacks = {});

 private:
  SpmfNep nep_;
  M0Solver m0_;
  ZStrategy strategy_;
  int rank_;
  DerivativeTable table_;
  std::optional<GFactors> g_cache_;
  double omega_scale_ = 1.0;
};

}  // namespace ilan
