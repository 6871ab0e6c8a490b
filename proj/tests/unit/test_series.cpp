#include <gtest/gtest.h>

#include <cmath>

#include "ilan/derivative_table.hpp"
#include "ilan/error.hpp"
#include "ilan/power_series.hpp"
#include "ilan/scalar_function.hpp"
#include "oracles.hpp"

using namespace ilan;

namespace {

cplx to_d(xcplx z) { return {static_cast<double>(z.real()), static_cast<double>(z.imag())}; }

void expect_matches_cauchy(const ScalarFunction& f, int order, double r, double tol) {
  const PowerSeries s = f.taylor(order);
  const auto ref = oracle::cauchy_taylor([&](cplx z) { return f(z); }, order, r);
  for (int j = 0; j <= order; ++j) {
    const double scale = std::max(std::abs(ref[j]), std::pow(r, -j));
    EXPECT_LE(std::abs(to_d(s.coeff(j)) - ref[j]), tol * scale) << f.describe() << " j=" << j;
  }
}

}  // namespace

TEST(PowerSeries, SqrtMatchesBinomialSeries) {
  // sqrt(1 + x) = sum binom(1/2, j) x^j
  std::vector<xcplx> p(21, 0.0L);
  p[0] = 1.0L;
  p[1] = 1.0L;
  const PowerSeries r = PowerSeries(p).sqrt();
  long double b = 1.0L;
  for (int j = 0; j <= 20; ++j) {
    EXPECT_NEAR(static_cast<double>(r.coeff(j).real()), static_cast<double>(b), 1e-15) << j;
    b *= (0.5L - j) / (j + 1);
  }
}

TEST(PowerSeries, SqrtSquaresBack) {
  std::vector<xcplx> p{xcplx(2.0L, 1.0L), xcplx(-0.5L, 0.0L), xcplx(0.25L, 0.3L)};
  const PowerSeries s = PowerSeries(p).truncated(12).sqrt();
  const PowerSeries sq = s * s;
  for (int j = 0; j <= 12; ++j) {
    EXPECT_LE(std::abs(to_d(sq.coeff(j) - PowerSeries(p).coeff(j))), 1e-15);
  }
}

TEST(PowerSeries, BranchPointThrows) {
  const PowerSeries p(std::vector<xcplx>{0.0L, 1.0L});
  try {
    (void)p.sqrt();
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::branch_point_at_origin);
  }
}

TEST(PowerSeries, DerivativeAndEvaluate) {
  const PowerSeries e = ScalarFunction::exponential(1.0).taylor(30);
  EXPECT_NEAR(std::abs(to_d(e.derivative(7)) - 1.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(e.evaluate(cplx(0.5, 0.2)) - std::exp(cplx(0.5, 0.2))), 0.0, 1e-15);
}

TEST(PowerSeries, FactorialRange) {
  EXPECT_EQ(factorial_ld(0), 1.0L);
  EXPECT_EQ(factorial_ld(10), 3628800.0L);
  EXPECT_TRUE(std::isfinite(factorial_ld(1700)));
  EXPECT_THROW((void)factorial_ld(-1), Error);
  EXPECT_THROW((void)factorial_ld(5000), Error);
}

TEST(ScalarFunction, TaylorMatchesContourIntegral) {
  expect_matches_cauchy(ScalarFunction::exponential(cplx(-2.0, 0.0)), 25, 1.0, 1e-13);
  expect_matches_cauchy(ScalarFunction::exponential(cplx(0.3, 1.1)), 25, 1.0, 1e-13);
  expect_matches_cauchy(ScalarFunction::sine(), 25, 1.0, 1e-13);
  expect_matches_cauchy(ScalarFunction::lambda_sine(), 25, 1.0, 1e-13);
  expect_matches_cauchy(ScalarFunction::sqrt_shift(1.0, 4.0), 25, 2.0, 1e-12);
  expect_matches_cauchy(ScalarFunction::monomial(3), 6, 1.0, 1e-13);
  expect_matches_cauchy(ScalarFunction::negated_identity(), 4, 1.0, 1e-13);
  expect_matches_cauchy(ScalarFunction::constant(cplx(2.0, -1.0)), 4, 1.0, 1e-13);
}

TEST(ScalarFunction, AffineCompositionMatchesContourIntegral) {
  const auto f = ScalarFunction::affine(ScalarFunction::sqrt_shift(1.0, -4.0), cplx(9.0, 0.0), cplx(2.0, 0.0));
  // f(mu) = sqrt(5 + 2 mu), branch point at mu = -2.5
  expect_matches_cauchy(f, 20, 1.5, 1e-12);
  const auto g = ScalarFunction::affine(ScalarFunction::lambda_sine(), cplx(0.5, 0.5), cplx(0.0, 1.0));
  expect_matches_cauchy(g, 20, 1.0, 1e-12);
  const auto h = ScalarFunction::affine(ScalarFunction::affine(ScalarFunction::exponential(-1.0), 1.0, 2.0), -0.5, 0.5);
  expect_matches_cauchy(h, 20, 1.0, 1e-12);
}

TEST(ScalarFunction, EvaluateAgreesWithStd) {
  const cplx z(0.7, -0.3);
  EXPECT_NEAR(std::abs(ScalarFunction::lambda_sine()(z) - z * std::sin(z)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(ScalarFunction::sqrt_shift(2.0, 1.0)(z) - std::sqrt(2.0 * z + 1.0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(ScalarFunction::monomial(0)(cplx(0.0)) - 1.0), 0.0, 0.0);
}

TEST(ScalarFunction, PolynomialDegree) {
  EXPECT_EQ(ScalarFunction::constant().polynomial_degree(), 0);
  EXPECT_EQ(ScalarFunction::negated_identity().polynomial_degree(), 1);
  EXPECT_EQ(ScalarFunction::monomial(4).polynomial_degree(), 4);
  EXPECT_EQ(ScalarFunction::affine(ScalarFunction::monomial(2), 1.0, 3.0).polynomial_degree(), 2);
  EXPECT_FALSE(ScalarFunction::sine().polynomial_degree().has_value());
}

TEST(ScalarFunction, SqrtBranchPointAtOrigin) {
  try {
    (void)ScalarFunction::sqrt_shift(1.0, 0.0).taylor(5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::branch_point_at_origin);
  }
}

TEST(ScalarFunction, OrderCap) {
  EXPECT_THROW((void)ScalarFunction::sine().taylor(kMaxTaylorOrder + 1), Error);
}

TEST(DerivativeTable, MatvecMatchesFiniteDifferences) {
  const Index n = 5;
  std::vector<Term> terms;
  terms.push_back(make_term(ScalarFunction::constant(), oracle::random_real_symmetric(n, 1)));
  terms.push_back(make_term(ScalarFunction::exponential(-1.0), oracle::random_real_symmetric(n, 2)));
  terms.push_back(make_term(ScalarFunction::sine(), oracle::random_real_symmetric(n, 3)));
  const SpmfNep nep(n, terms);
  const DerivativeTable table(nep, 4);
  const Matrix X = oracle::random_matrix(n, 2, 4);
  // central differences of M(l) X at 0 for j = 1, 2
  const double h = 1e-4;
  const Matrix d1 = (nep.apply(h, X) - nep.apply(-h, X)) / (2 * h);
  const Matrix d2 = (nep.apply(h, X) - 2.0 * nep.apply(0.0, X) + nep.apply(-h, X)) / (h * h);
  EXPECT_LE(oracle::rel_diff(derivative_matvec(nep, table, 1, X), d1), 1e-7);
  EXPECT_LE(oracle::rel_diff(derivative_matvec(nep, table, 2, X), d2), 1e-5);
  EXPECT_LE(oracle::rel_diff(derivative_matrix(nep, table, 3) * X, derivative_matvec(nep, table, 3, X)), 1e-14);
}

TEST(DerivativeTable, GrowsOnDemand) {
  const SpmfNep nep(2, {make_term(ScalarFunction::exponential(1.0), Matrix(Matrix::Identity(2, 2)))});
  DerivativeTable t(nep, 4);
  EXPECT_GE(t.order(), 4);
  EXPECT_THROW((void)derivative_matvec(nep, t, t.order() + 1, Matrix::Identity(2, 2)), Error);
  t.ensure(nep, 40);
  EXPECT_GE(t.order(), 40);
  EXPECT_NEAR(static_cast<double>(t.coeff(0, 40).real()), static_cast<double>(1.0L / factorial_ld(40)), 1e-60);
}

TEST(DerivativeTable, ScaledWeights) {
  // exp(-2 l): (j-1)! t_j = (-2)^j / j
  const Vector w = scaled_derivative_weights(ScalarFunction::exponential(-2.0).taylor(10), 6);
  for (int j = 1; j <= 6; ++j) EXPECT_NEAR(w(j - 1).real(), std::pow(-2.0, j) / j, 1e-13);
}
