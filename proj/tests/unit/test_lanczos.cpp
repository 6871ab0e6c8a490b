#include <gtest/gtest.h>

#include "ilan/error.hpp"
#include "ilan/indefinite_lanczos.hpp"
#include "ilan/infinite_lanczos.hpp"
#include "ilan/linearization.hpp"
#include "ilan/oracle.hpp"
#include "ilan/problems.hpp"
#include "oracles.hpp"

using namespace ilan;

namespace {

SpmfNep one_minus_lambda() {
  return SpmfNep(1, {make_term(ScalarFunction::constant(), TermMatrix::identity(1)),
                     make_term(ScalarFunction::negated_identity(), TermMatrix::identity(1))});
}

}  // namespace

TEST(DenseLanczos, RecurrenceAndOmegaOrthogonality) {
  const SpmfNep nep = gen_random_mixed(3, 7);
  const TruncatedLinearization L = build_truncated(nep, 6);
  Vector q1 = Vector::Zero(18);
  q1.head(3) = random_unit_vector(3, 8);
  const DenseLanczosResult r = indefinite_lanczos_dense(L.SA, L.SB, q1, 4);
  ASSERT_EQ(r.steps, 4);
  const Matrix K = L.SA.partialPivLu().solve(L.SB);
  const Matrix lhs = K * r.Q.leftCols(4);
  const Matrix rhs = r.Q * r.T;
  EXPECT_LE((lhs - rhs).norm() / lhs.norm(), 1e-8);
  const Matrix Om = r.Q.transpose() * L.SB * r.Q;
  for (int i = 0; i < 5; ++i) {
    EXPECT_LE(std::abs(Om(i, i) - r.omega[i]) / std::abs(r.omega[i]), 1e-8);
    for (int j = 0; j < 5; ++j)
      if (i != j) EXPECT_LE(std::abs(Om(i, j)), 1e-7 * std::sqrt(std::abs(r.omega[i] * r.omega[j])));
  }
}

TEST(InfiniteLanczos, HandTraceOneMinusLambda) {
  InfiniteLanczos il(one_minus_lambda());
  KrylovState s = il.init(Vector::Ones(1));
  ASSERT_EQ(s.omega.size(), 1u);
  EXPECT_NEAR(std::abs(s.omega[0] - cplx(-1.0)), 0.0, 1e-15);

  const StepW sw = il.step_w(s);
  EXPECT_NEAR(std::abs(sw.w1(0) - 1.0), 0.0, 1e-15);
  ASSERT_EQ(sw.W.cols(), 2);
  EXPECT_NEAR(std::abs(sw.W(0, 1) - 1.0), 0.0, 1e-15);

  const Matrix Z = il.compute_z(sw.W);
  EXPECT_NEAR(std::abs(Z(0, 0) + 1.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(Z(0, 1)), 0.0, 1e-15);

  const ScalarProducts sp = InfiniteLanczos::scalar_products(Z, s.q_cur, s.q_prev, sw.W);
  EXPECT_NEAR(std::abs(sp.alpha + 1.0), 0.0, 1e-15);
  const LanczosStatus st = il.lanczos_update(s, sw.W, sp);
  EXPECT_NEAR(std::abs(s.t_diag[0] - 1.0), 0.0, 1e-15);
  // The problem is linear, so the recurrence terminates at step 1.
  EXPECT_EQ(st, LanczosStatus::breakdown_omega);
}

TEST(InfiniteLanczos, StepWShiftsBlocksByD) {
  // k = 2: d_{1,2} = 1, d_{2,3} = 1/2
  InfiniteLanczos il(gen_random_mixed(4, 2));
  KrylovState s = il.init(random_unit_vector(4, 3));
  const StepW first = il.step_w(s);
  ASSERT_EQ(il.lanczos_update(s, first.W, InfiniteLanczos::scalar_products(il.compute_z(first.W), s.q_cur,
                                                                            s.q_prev, first.W)),
            LanczosStatus::completed);
  ASSERT_EQ(s.q_cur.cols(), 2);
  const StepW sw = il.step_w(s);
  ASSERT_EQ(sw.W.cols(), 3);
  EXPECT_LE((sw.W.col(0) - sw.w1).norm(), 0.0);
  EXPECT_LE((sw.W.col(1) - s.q_cur.col(0)).norm(), 1e-15);
  EXPECT_LE((sw.W.col(2) - 0.5 * s.q_cur.col(1)).norm(), 1e-15);
}

TEST(InfiniteLanczos, MatchesExtendedPrecisionDenseProcess) {
  const SpmfNep nep = gen_random_mixed(6, 3);
  const EquivalenceReport r = compare_with_dense(nep, 8, 10, random_unit_vector(6, 4));
  EXPECT_EQ(r.iterations, 8);
  EXPECT_LE(r.t_deviation, 1e-8);
  EXPECT_LE(r.omega_deviation, 1e-8);
  EXPECT_LE(r.block_deviation, 1e-8);
  EXPECT_LE(r.tail_norm, 1e-8);
}

TEST(InfiniteLanczos, ScalarProductsZeroPad) {
  const Matrix Z = oracle::random_matrix(3, 4, 1);
  const Matrix W = oracle::random_matrix(3, 4, 2);
  const Matrix qc = oracle::random_matrix(3, 3, 3);
  const Matrix qp = oracle::random_matrix(3, 2, 4);
  const ScalarProducts sp = InfiniteLanczos::scalar_products(Z, qc, qp, W);
  cplx a = 0, b = 0, g = 0;
  for (Index j = 0; j < 4; ++j)
    for (Index i = 0; i < 3; ++i) {
      if (j < 3) a += Z(i, j) * qc(i, j);
      if (j < 2) b += Z(i, j) * qp(i, j);
      g += Z(i, j) * W(i, j);
    }
  EXPECT_NEAR(std::abs(sp.alpha - a), 0.0, 1e-13);
  EXPECT_NEAR(std::abs(sp.beta - b), 0.0, 1e-13);
  EXPECT_NEAR(std::abs(sp.gamma - g), 0.0, 1e-13);
  EXPECT_THROW((void)InfiniteLanczos::scalar_products(Z, oracle::random_matrix(3, 5, 1), qp, W), Error);
}

TEST(InfiniteLanczos, StartVectorBreakdown) {
  // M_1 = -diag(1, -1) and q = (1, 1): q^T M_1 q = 0
  Matrix D = Matrix::Zero(2, 2);
  D(0, 0) = 1.0;
  D(1, 1) = -1.0;
  const SpmfNep nep(2, {make_term(ScalarFunction::constant(), TermMatrix::identity(2)),
                        make_term(ScalarFunction::negated_identity(), D)});
  InfiniteLanczos il(nep);
  try {
    (void)il.init(Vector::Ones(2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::breakdown_omega);
  }
}

TEST(InfiniteLanczos, RunReportsTimingsAndCadence) {
  InfiniteLanczos il(gen_delay_pde(4), ZStrategy::dep);
  std::vector<int> seen;
  int progress = 0;
  RunCallbacks cb;
  cb.extraction_every = 4;
  cb.extraction = [&](const KrylovState& s, int it) {
    seen.push_back(it);
    EXPECT_EQ(s.first_blocks.cols(), s.k);
  };
  cb.progress = [&](const IterationInfo&) { ++progress; };
  const RunResult r = il.run(random_unit_vector(16), 10, cb);
  EXPECT_EQ(r.diagnostics.iterations, 10);
  EXPECT_EQ(r.diagnostics.iteration_seconds.size(), 10u);
  EXPECT_EQ(progress, 10);
  EXPECT_EQ(seen, (std::vector<int>{4, 8, 10}));
  EXPECT_EQ(r.state.q_cur.cols(), 11);
  EXPECT_EQ(r.state.q_prev.cols(), 10);
}

TEST(InfiniteLanczos, StrategyMismatchRejected) {
  const SpmfNep nep = gen_random_mixed(3, 1);
  EXPECT_THROW(InfiniteLanczos(nep, ZStrategy::dep), Error);
  EXPECT_THROW(InfiniteLanczos(nep, ZStrategy::poly_lowrank), Error);
}

TEST(InfiniteLanczos, SingularM0Rejected) {
  const SpmfNep nep(1, {make_term(ScalarFunction::negated_identity(), TermMatrix::identity(1))});
  EXPECT_THROW(InfiniteLanczos{nep}, Error);
}
