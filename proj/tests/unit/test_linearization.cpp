#include <gtest/gtest.h>

#include <algorithm>

#include "ilan/coeff_tables.hpp"
#include "ilan/error.hpp"
#include "ilan/hankel_table.hpp"
#include "ilan/linearization.hpp"
#include "ilan/problems.hpp"
#include "oracles.hpp"

using namespace ilan;

namespace {

double nearest(const std::vector<cplx>& v, cplx z) {
  double best = 1e300;
  for (cplx w : v) best = std::min(best, std::abs(w - z));
  return best;
}

}  // namespace

TEST(CoeffTables, MatchClosedForms) {
  const CoeffTables t = coeff_tables(30);
  for (int i = 1; i <= 30; ++i) {
    for (int j = 1; j <= 30; ++j) {
      EXPECT_NEAR(t.c(i, j), oracle::inverse_binomial(i, j), 1e-12 * oracle::inverse_binomial(i, j));
      EXPECT_EQ(t.c(i, j), t.c(j, i));
    }
  }
  for (int i = 1; i <= 31; ++i) {
    for (int j = 1; j <= 31; ++j) {
      EXPECT_NEAR(t.g(i, j), oracle::g_closed(i, j), 1e-12 * oracle::g_closed(i, j));
      EXPECT_EQ(t.g(i, j), t.g(j, i));
    }
  }
}

TEST(CoeffTables, SmallValues) {
  const CoeffTables t = coeff_tables(2);
  EXPECT_DOUBLE_EQ(t.c(1, 1), 0.5);
  EXPECT_DOUBLE_EQ(t.c(2, 1), 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(t.g(1, 3), 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(t.g(2, 2), 1.0 / 6.0);
  EXPECT_THROW((void)coeff_tables(0), Error);
}

TEST(HankelTable, EntriesAreDerivatives) {
  // exp(2 l): f^(s)(0) = 2^s
  const HankelDescriptor h = hankel_table(ScalarFunction::exponential(2.0), 5);
  EXPECT_EQ(h.dimension(), 6);
  for (int i = 1; i <= 6; ++i)
    for (int j = 1; j <= 6; ++j)
      EXPECT_NEAR(static_cast<double>(h.entry(i, j).real()), std::pow(2.0, i + j - 1), 1e-12 * std::pow(2.0, i + j - 1));
  const auto raw = h.raw_sequence();
  ASSERT_EQ(raw.size(), 11u);
  EXPECT_NEAR(raw[10].real(), 2048.0, 1e-9);
}

TEST(HankelTable, DelayAndLinearFunctions) {
  const HankelDescriptor e = hankel_table(ScalarFunction::exponential(-2.0), 4);
  for (int i = 1; i <= 5; ++i)
    for (int j = 1; j <= 5; ++j) {
      const double ref = std::pow(-2.0, i + j - 1);
      EXPECT_NEAR(static_cast<double>(e.entry(i, j).real()), ref, 1e-13 * std::abs(ref));
    }
  const HankelDescriptor l = hankel_table(ScalarFunction::negated_identity(), 3);
  const HankelDescriptor c = hankel_table(ScalarFunction::constant(3.0), 3);
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j) {
      EXPECT_EQ(static_cast<double>(l.entry(i, j).real()), i == 1 && j == 1 ? -1.0 : 0.0);
      EXPECT_EQ(static_cast<double>(std::abs(c.entry(i, j))), 0.0);
    }
}

TEST(HankelTable, SineCycle) {
  const HankelDescriptor h = hankel_table(ScalarFunction::sine(), 3);
  const double d[] = {1, 0, -1, 0, 1, 0, -1};
  for (int s = 1; s <= 7; ++s) EXPECT_NEAR(static_cast<double>(h.derivative(s).real()), d[s - 1], 1e-15);
}

TEST(HankelTable, OverflowDetected) {
  // sqrt(l + 1/100): derivatives grow like s! 100^s
  const HankelDescriptor h = hankel_table(ScalarFunction::sqrt_shift(1.0, 0.01), 100);
  EXPECT_THROW((void)h.raw_sequence(), Error);
}

class TruncationIdentities : public ::testing::TestWithParam<int> {};

TEST_P(TruncationIdentities, SymmetricAndFactorized) {
  const int seed = GetParam();
  const SpmfNep nep = gen_random_mixed(3 + seed % 4, static_cast<std::uint64_t>(seed));
  const TruncatedLinearization L = build_truncated(nep, 6);
  const double na = L.SA.norm(), nb = L.SB.norm();
  EXPECT_LE((L.SA - L.SA.transpose()).norm(), 1e-13 * na);
  EXPECT_LE((L.SB - L.SB.transpose()).norm(), 1e-13 * nb);
  EXPECT_LE((L.S * L.A - L.SA).norm(), 1e-12 * na);
  EXPECT_LE((L.S_wide * L.B_tall - L.SB).norm(), 1e-12 * nb);
}

INSTANTIATE_TEST_SUITE_P(Seeds, TruncationIdentities, ::testing::Range(1, 6));

TEST(Linearization, SizeCap) {
  const SpmfNep nep = gen_random_mixed(10, 1);
  try {
    (void)build_truncated(nep, 20, 100);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::size_cap_exceeded);
  }
}

TEST(PepPencil, DiagonalQuadraticRoots) {
  // diag(l^2 - 3 l + 2, l^2 + 1): roots 1, 2, i, -i
  std::vector<Matrix> P(3, Matrix::Zero(2, 2));
  P[0].diagonal() << 2.0, 1.0;
  P[1].diagonal() << -3.0, 0.0;
  P[2].diagonal() << 1.0, 1.0;
  const auto [A, B] = pep_sym_pencil(P);
  EXPECT_LE((A - A.transpose()).norm(), 0.0);
  EXPECT_LE((B - B.transpose()).norm(), 0.0);
  const auto ev = pencil_eigenvalues(A, B);
  for (cplx r : {cplx(1), cplx(2), cplx(0, 1), cplx(0, -1)}) EXPECT_LE(nearest(ev, r), 1e-12);
}

TEST(PepPencil, SingularLeadingCoefficient) {
  std::vector<Matrix> P(2, Matrix::Identity(2, 2));
  P[1](1, 1) = 0.0;
  EXPECT_THROW((void)pep_sym_pencil(P), Error);
}

TEST(CompanionEigs, PolynomialIsExact) {
  // A0 - l I: eigenvalues of A0
  const Matrix A0 = oracle::random_real_symmetric(5, 3);
  const SpmfNep nep(5, {make_term(ScalarFunction::constant(), A0),
                        make_term(ScalarFunction::negated_identity(), TermMatrix::identity(5))});
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(A0.real());
  const auto ev = companion_eigs(nep, 4);
  for (Index i = 0; i < 5; ++i) EXPECT_LE(nearest(ev, es.eigenvalues()(i)), 1e-12);
}

TEST(CompanionEigs, ScalarDelayRoot) {
  // l - exp(-l) = 0 at the omega constant
  const SpmfNep nep(1, {make_term(ScalarFunction::monomial(1), TermMatrix::identity(1)),
                        make_term(ScalarFunction::exponential(-1.0), Matrix(Matrix::Constant(1, 1, -1.0)))});
  const cplx root = oracle::newton([](cplx l) { return l - std::exp(-l); },
                                   [](cplx l) { return 1.0 + std::exp(-l); }, 0.5);
  EXPECT_NEAR(root.real(), 0.567143290409784, 1e-14);
  EXPECT_LE(nearest(companion_eigs(nep, 30), root), 1e-10);
  const auto in_disk = companion_eigs(nep, 30, Disk{0.0, 1.0});
  ASSERT_EQ(in_disk.size(), 1u);
}
